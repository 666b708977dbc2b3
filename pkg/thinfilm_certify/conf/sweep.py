# Copyright 2026 The thinfilm-certify Authors.
# All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

from oslo_config import cfg

CONF = cfg.CONF

opts = [
    cfg.MultiStrOpt('axis',
                    default=[],
                    help='Sweep axis as "name:v1,v2,...". Valid names are '
                         'mean_f, mean_g, the [physical] keys and '
                         'f_amplitude/g_amplitude. Repeat for a '
                         'multi-dimensional grid.'),
    cfg.BoolOpt('short_run',
                default=False,
                help='Integrate every grid point and report fitted rates.'),
    cfg.FloatOpt('short_run_t_end',
                 default=0.1,
                 min=0.0,
                 help='Horizon of the optional per-point runs.'),
    cfg.StrOpt('table_file',
               default='sweep.csv',
               help='File name of the sweep table CSV.')
]


def register_opts(conf):
    conf.register_opts(opts, group='sweep')

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
    cfg.IntOpt('levels',
               default=3,
               min=3,
               help='Number of time step halvings, starting at [stepper] dt.'),
    cfg.IntOpt('bandwidth_factor',
               default=2,
               min=2,
               help='Bandwidth multiplier of the refined resolution run.'),
    cfg.FloatOpt('uniqueness_tol',
                 default=1e-6,
                 min=0.0,
                 help='Largest admissible gap in E_0 between the two '
                      'resolutions.'),
    cfg.StrOpt('table_file',
               default='convergence.csv',
               help='File name of the refinement table CSV.')
]


def register_opts(conf):
    conf.register_opts(opts, group='convergence')

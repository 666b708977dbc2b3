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
from oslo_config import types

CONF = cfg.CONF

MODELS = ('muskat_capillary', 'muskat_gravity',
          'stokes_capillary', 'stokes_gravity')

opts = [
    cfg.StrOpt('model',
               default='muskat_capillary',
               choices=MODELS,
               help='Thin-film system to certify and integrate.'),
    cfg.FloatOpt('mean_f',
                 default=1.0,
                 min=0.0,
                 help='Mean height <f0> of the lower film. Must be '
                      'strictly positive.'),
    cfg.FloatOpt('mean_g',
                 default=1.5,
                 min=0.0,
                 help='Mean height <g0> of the upper film. Must be '
                      'strictly positive.'),
    cfg.IntOpt('seed',
               default=20240611,
               help='Seed for random initial data and the randomized '
                    'verification suites. Overridden by --seed.'),
    cfg.StrOpt('output_dir',
               default='.',
               help='Directory receiving series, tables, reports and plot '
                    'scripts. Overridden by --out.'),
    cfg.StrOpt('series_file',
               default='series.csv',
               help='File name of the diagnostics series CSV.'),
    cfg.StrOpt('report_file',
               default='report.json',
               help='File name of the JSON report document.'),
    cfg.StrOpt('plot_script_file',
               default='plot_series.py',
               help='File name of the optional plotting script.'),
    cfg.IntOpt('workers',
               default=1,
               min=1,
               help='Number of sweep points evaluated concurrently.'),
    cfg.ListOpt('required_gates',
                default=['wiener_decay'],
                item_type=types.String(
                    choices=('wiener_decay', 'sobolev_propagation')),
                help='Certificate gates that must pass for check to exit 0 '
                     'and for run to proceed without --force.')
]


def register_opts(conf):
    conf.register_opts(opts)

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
    cfg.ListOpt('sobolev_orders',
                default=['1', '2', '4'],
                help='Orders s of the sampled E_s functionals.'),
    cfg.ListOpt('sup_orders',
                default=['0', '1', '2'],
                help='Derivative orders n of the sampled sup-norm '
                     'functionals.'),
    cfg.IntOpt('oversampling',
               default=8,
               min=2,
               help='Grid oversampling factor for sup norms and minima, '
                    'the grid has more than oversampling * K points.'),
    cfg.FloatOpt('envelope_tol',
                 default=1e-2,
                 min=0.0,
                 help='Relative tolerance of the decay envelope audit.'),
    cfg.FloatOpt('energy_tol',
                 default=1e-3,
                 min=0.0,
                 help='Tolerance of the energy inequality audit.'),
    cfg.FloatOpt('mass_tol',
                 default=1e-13,
                 min=0.0,
                 help='Largest admissible mean of a zero-mean component.'),
    cfg.FloatOpt('transient_fraction',
                 default=0.05,
                 min=0.0,
                 max=1.0,
                 help='Fraction of the horizon excluded from decay fits.'),
    cfg.FloatOpt('sobolev_growth_factor',
                 default=2.0,
                 min=1.0,
                 help='Largest admissible growth of E_(zeta+1)/2 relative '
                      'to its initial value.')
]


def register_opts(conf):
    conf.register_opts(opts, group='diagnostics')

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
    cfg.FloatOpt('mu_minus',
                 default=1.0,
                 help='Viscosity of the lower fluid.'),
    cfg.FloatOpt('mu_plus',
                 default=1.0,
                 help='Viscosity of the upper fluid.'),
    cfg.FloatOpt('rho_minus',
                 default=2.0,
                 help='Density of the lower fluid.'),
    cfg.FloatOpt('rho_plus',
                 default=1.0,
                 help='Density of the upper fluid.'),
    cfg.FloatOpt('gamma_f',
                 default=1.0,
                 help='Surface tension of the fluid-fluid interface. Must be '
                      'zero for gravity driven models.'),
    cfg.FloatOpt('gamma_h',
                 default=1.0,
                 help='Surface tension of the free upper surface. Must be '
                      'zero for gravity driven models.'),
    cfg.FloatOpt('gravity',
                 default=1.0,
                 help='Gravitational acceleration G.')
]


def register_opts(conf):
    conf.register_opts(opts, group='physical')

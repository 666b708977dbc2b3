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

SCHEMES = ('imex_cn_ab2', 'imex_be', 'rk4_explicit')

opts = [
    cfg.StrOpt('scheme',
               default='imex_cn_ab2',
               choices=SCHEMES,
               help='Time integration scheme.'),
    cfg.FloatOpt('dt',
                 default=1e-5,
                 help='Time step in rescaled time units.'),
    cfg.IntOpt('bandwidth',
               default=32,
               min=1,
               help='Galerkin bandwidth K, modes |k| <= K are retained.'),
    cfg.FloatOpt('t_end',
                 default=1.0,
                 min=0.0,
                 help='Final rescaled time.'),
    cfg.IntOpt('sample_every',
               default=100,
               min=1,
               help='Number of steps between diagnostics samples.'),
    cfg.BoolOpt('nonlinear',
                default=True,
                help='Set to false to integrate the linear part only.'),
    cfg.FloatOpt('stability_ratio',
                 default=0.1,
                 help='Warn when dt * |N| / |state| exceeds this value.'),
    cfg.FloatOpt('conditioning_limit',
                 default=1e12,
                 help='Condition number above which a mode is solved with '
                      'pivoting instead of its explicit inverse.')
]


def register_opts(conf):
    conf.register_opts(opts, group='stepper')

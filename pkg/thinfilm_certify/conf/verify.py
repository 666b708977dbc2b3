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
    cfg.IntOpt('inequality_samples',
               default=1000,
               min=1,
               help='Random trigonometric polynomials per inequality suite.'),
    cfg.IntOpt('oracle_samples',
               default=100,
               min=1,
               help='Random states per oracle-equivalence suite.'),
    cfg.IntOpt('max_bandwidth',
               default=16,
               min=1,
               help='Largest bandwidth drawn by the randomized suites.'),
    cfg.FloatOpt('constant_scale',
                 default=1.0,
                 min=0.0,
                 help='Multiplier applied to every inequality constant. '
                      'Only values below 1 are meaningful, they tighten '
                      'the inequalities to exercise the suites.')
]


def register_opts(conf):
    conf.register_opts(opts, group='verify')

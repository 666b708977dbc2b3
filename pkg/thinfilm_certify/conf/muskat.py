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
    cfg.StrOpt('n2b_leading_factor',
               default='gbar',
               choices=('gbar', 'fbar'),
               help='Leading factor of the gravity part of the upper film '
                    'nonlinearity. "gbar" follows the derivation from the '
                    'unsplit system, "fbar" the alternative Galerkin '
                    'display; kept for A/B comparison.')
]


def register_opts(conf):
    conf.register_opts(opts, group='muskat')

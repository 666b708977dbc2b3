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

PRESETS = ('zero', 'coefficients', 'single_mode', 'random_decay',
           'even_cosine')


def _component_opts(name):
    return [
        cfg.StrOpt('%s_preset' % name,
                   default='zero',
                   choices=PRESETS,
                   help='Initial data preset of the zero-mean %s '
                        'perturbation.' % name),
        cfg.ListOpt('%s_coefficients' % name,
                    default=[],
                    help='Explicit Fourier coefficients of %s as a list of '
                         '"k:re:im" entries, k != 0.' % name),
        cfg.FloatOpt('%s_amplitude' % name,
                     default=0.0,
                     help='Wiener norm of the single_mode and random_decay '
                          'presets of %s.' % name),
        cfg.IntOpt('%s_wavenumber' % name,
                   default=1,
                   min=1,
                   help='Wavenumber of the single_mode preset of %s.' % name),
        cfg.FloatOpt('%s_exponent' % name,
                     default=2.0,
                     min=0.0,
                     help='Coefficient decay exponent of the random_decay '
                          'preset of %s.' % name),
        cfg.ListOpt('%s_cosines' % name,
                    default=[],
                    help='Cosine amplitudes a_1, a_2, ... of the even_cosine '
                         'preset of %s.' % name),
    ]


opts = _component_opts('f') + _component_opts('g') + [
    cfg.StrOpt('hermitian_mode',
               default='auto',
               choices=('auto', 'strict'),
               help='"auto" fills the conjugate partner of every explicit '
                    'coefficient, "strict" requires both partners and '
                    'rejects inconsistent pairs.')
]


def register_opts(conf):
    conf.register_opts(opts, group='initial_data')

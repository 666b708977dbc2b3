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

import thinfilm_certify.conf

_opts = [
    ('DEFAULT', thinfilm_certify.conf.default.opts),
    ('physical', thinfilm_certify.conf.physical.opts),
    ('muskat', thinfilm_certify.conf.muskat.opts),
    ('initial_data', thinfilm_certify.conf.initial_data.opts),
    ('stepper', thinfilm_certify.conf.stepper.opts),
    ('diagnostics', thinfilm_certify.conf.diagnostics.opts),
    ('sweep', thinfilm_certify.conf.sweep.opts),
    ('convergence', thinfilm_certify.conf.convergence.opts),
    ('verify', thinfilm_certify.conf.verify.opts)
]


def list_opts():
    """Return a list of oslo.config options available in thinfilm-certify.

    The returned list includes all oslo.config options. Each element of
    the list is a tuple. The first element is the name of the group, the
    second element is the options.

    The function is discoverable via the 'thinfilm-certify' entry point
    under the 'oslo.config.opts' namespace.

    The function is used by the Oslo sample config file generator and by
    the unknown-key check of the harness.

    :returns: a list of (group, options) tuples.
    """
    return _opts

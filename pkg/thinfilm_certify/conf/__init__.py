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

from thinfilm_certify.conf import convergence
from thinfilm_certify.conf import default
from thinfilm_certify.conf import diagnostics
from thinfilm_certify.conf import initial_data
from thinfilm_certify.conf import muskat
from thinfilm_certify.conf import physical
from thinfilm_certify.conf import stepper
from thinfilm_certify.conf import sweep
from thinfilm_certify.conf import verify

CONF = cfg.CONF

default.register_opts(CONF)
physical.register_opts(CONF)
muskat.register_opts(CONF)
initial_data.register_opts(CONF)
stepper.register_opts(CONF)
diagnostics.register_opts(CONF)
sweep.register_opts(CONF)
convergence.register_opts(CONF)
verify.register_opts(CONF)

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


class ThinFilmException(Exception):
    """The base exception class for all exceptions this library raises."""


class NonZeroMeanException(ThinFilmException):
    """A homogeneous norm was requested for a function with nonzero mean."""


class HermitianSymmetryException(ThinFilmException):
    """The coefficients do not describe a real-valued function."""


class InvalidParameterException(ThinFilmException):
    """The physical parameters are inconsistent with the requested model."""


class ConfigurationException(ThinFilmException):
    """The configuration is malformed or carries unknown keys."""


class SingularPropagatorException(ThinFilmException):
    """The implicit system of some mode cannot be inverted."""


class DegenerateWindowException(ThinFilmException):
    """The fitting window holds too few usable samples."""


class NumericalInstabilityException(ThinFilmException):
    """The integration produced non-finite coefficients."""

    def __init__(self, message, t=None):
        super(NumericalInstabilityException, self).__init__(message)
        self.t = t

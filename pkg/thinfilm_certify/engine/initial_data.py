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

import numpy as np

from oslo_log import log

from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import spectral_core

LOG = log.getLogger(__name__)

ZERO = 'zero'
COEFFICIENTS = 'coefficients'
SINGLE_MODE = 'single_mode'
RANDOM_DECAY = 'random_decay'
EVEN_COSINE = 'even_cosine'

HERMITIAN_AUTO = 'auto'
HERMITIAN_STRICT = 'strict'


def parse_coefficient_entries(raw_entries):
    """Turn "k:re:im" strings into (k, re, im) tuples.

    :raise ConfigurationException: on a malformed entry.
    """
    entries = []
    for raw in raw_entries:
        parts = raw.strip().split(':')
        try:
            if len(parts) != 3:
                raise ValueError(raw)
            entries.append((int(parts[0]), float(parts[1]), float(parts[2])))
        except ValueError:
            err_msg = ("Coefficient entry %r is not of the form k:re:im"
                       % raw)
            LOG.error(err_msg)
            raise exceptions.ConfigurationException(err_msg)
    return entries


def from_coefficients(entries, K, hermitian_mode=HERMITIAN_AUTO):
    """Zero-mean TrigPoly from explicit (k, re, im) coefficients.

    In auto mode a missing conjugate partner u_hat(-k) is filled in; in
    strict mode every entry must come with its partner. Partners given
    explicitly must agree in both modes.

    :raise InvalidParameterException: on k = 0, |k| > K or a repeated k.
    :raise HermitianSymmetryException: on a missing or inconsistent partner.
    """
    given = {}
    for k, re, im in entries:
        if k == 0 or abs(k) > K:
            err_msg = ("Coefficient wavenumber %d must satisfy "
                       "0 < |k| <= %d" % (k, K))
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
        if k in given:
            err_msg = "Wavenumber %d given twice" % k
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
        given[k] = complex(re, im)

    coeffs = np.zeros(2 * K + 1, dtype=complex)
    for k, value in given.items():
        partner = given.get(-k)
        if partner is None:
            if hermitian_mode == HERMITIAN_STRICT:
                err_msg = ("Strict Hermitian mode requires the partner of "
                           "wavenumber %d" % k)
                LOG.error(err_msg)
                raise exceptions.HermitianSymmetryException(err_msg)
        elif abs(partner - np.conj(value)) > (
                spectral_core.HERMITIAN_TOL * max(1.0, abs(value))):
            err_msg = ("Coefficients at %(k)d and %(m)d are not complex "
                       "conjugates") % {'k': k, 'm': -k}
            LOG.error(err_msg)
            raise exceptions.HermitianSymmetryException(err_msg)
        coeffs[K + k] = value
        coeffs[K - k] = np.conj(value)
    return spectral_core.TrigPoly(coeffs, zero_mean=True)


def single_mode(amplitude, k, K):
    """amplitude * cos(kx); its Wiener norm of order 0 is |amplitude|."""
    if amplitude == 0:
        return spectral_core.TrigPoly.zeros(K)
    return spectral_core.TrigPoly.from_modes({k: amplitude / 2.0}, K)


def random_decay(seed, exponent, amplitude, K):
    """Random coefficients with |u_hat(k)| ~ |k|^-exponent.

    :param seed: anything numpy.random.default_rng accepts.
    :returns: a zero-mean TrigPoly rescaled to Wiener norm ``amplitude``.
    """
    rng = np.random.default_rng(seed)
    k = np.arange(1, K + 1, dtype=float)
    modulus = k ** (-float(exponent)) * rng.uniform(0.5, 1.0, K)
    phase = rng.uniform(0.0, 2.0 * np.pi, K)
    raw = spectral_core.TrigPoly.from_modes(
        dict(zip(range(1, K + 1), modulus * np.exp(1j * phase))), K)
    norm = spectral_core.wiener_norm(raw, 0)
    if amplitude == 0 or norm == 0:
        return spectral_core.TrigPoly.zeros(K)
    return (amplitude / norm) * raw


def even_cosine(amplitudes, K):
    """sum_j a_j cos(jx), the even extension of a Neumann datum on [0, pi]."""
    if len(amplitudes) > K:
        err_msg = ("%d cosine amplitudes do not fit bandwidth %d"
                   % (len(amplitudes), K))
        LOG.error(err_msg)
        raise exceptions.InvalidParameterException(err_msg)
    modes = dict((j, a / 2.0) for j, a in enumerate(amplitudes, 1) if a)
    return spectral_core.TrigPoly.from_modes(modes, K)


class ComponentSpec(object):
    """How one zero-mean component of the initial datum is built."""

    def __init__(self, preset=ZERO, coefficients=(), amplitude=0.0,
                 wavenumber=1, exponent=2.0, cosines=()):
        self.preset = preset
        self.coefficients = list(coefficients)
        self.amplitude = float(amplitude)
        self.wavenumber = int(wavenumber)
        self.exponent = float(exponent)
        self.cosines = [float(a) for a in cosines]

    def build(self, K, seed, hermitian_mode=HERMITIAN_AUTO):
        if self.preset == ZERO:
            return spectral_core.TrigPoly.zeros(K)
        if self.preset == COEFFICIENTS:
            return from_coefficients(self.coefficients, K, hermitian_mode)
        if self.preset == SINGLE_MODE:
            if self.wavenumber > K:
                err_msg = ("Wavenumber %d exceeds bandwidth %d"
                           % (self.wavenumber, K))
                LOG.error(err_msg)
                raise exceptions.InvalidParameterException(err_msg)
            return single_mode(self.amplitude, self.wavenumber, K)
        if self.preset == RANDOM_DECAY:
            return random_decay(seed, self.exponent, self.amplitude, K)
        if self.preset == EVEN_COSINE:
            return even_cosine(self.cosines, K)
        err_msg = "Unknown initial data preset %r" % self.preset
        LOG.error(err_msg)
        raise exceptions.ConfigurationException(err_msg)

    def to_dict(self):
        return dict(vars(self))


def build_state(f_spec, g_spec, K, mean_f, mean_g, seed,
                hermitian_mode=HERMITIAN_AUTO):
    """Initial SimState at t = 0.

    The two components draw from independent streams spawned from one
    seed, so changing one preset leaves the other component unchanged.
    """
    f_seed, g_seed = np.random.SeedSequence(seed).spawn(2)
    fbar = f_spec.build(K, f_seed, hermitian_mode)
    gbar = g_spec.build(K, g_seed, hermitian_mode)
    LOG.debug("Initial datum: %(f)s / %(g)s presets at K=%(K)d.",
              {'f': f_spec.preset, 'g': g_spec.preset, 'K': K})
    return muskat_model.SimState(fbar, gbar, mean_f, mean_g)

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

"""Two-phase thin-film Muskat system in zero-mean split form.

With f = <f0> + fbar and g = <g0> + gbar the system reads

    d_t fbar = -<f0> [A_gamma d4 fbar + A d4 gbar - b_rho d2 fbar - b d2 gbar]
               + N_1
    d_t gbar = -<g0> [A_mu d4 (fbar + gbar) - b_mu d2 (fbar + gbar)]
               + N_2

in the rescaled time t~ = G t / mu_minus. The gravity variant drops every
A-term.
"""

import numpy as np

from oslo_log import log

from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import spectral_core

LOG = log.getLogger(__name__)

CAPILLARY = 'capillary'
GRAVITY = 'gravity'
VARIANTS = (CAPILLARY, GRAVITY)

LEADING_GBAR = 'gbar'
LEADING_FBAR = 'fbar'


class PhysicalParams(object):
    """Raw fluid parameters shared by the Muskat and Stokes models."""

    def __init__(self, mu_minus, mu_plus, rho_minus, rho_plus,
                 gamma_f, gamma_h, gravity):
        self.mu_minus = float(mu_minus)
        self.mu_plus = float(mu_plus)
        self.rho_minus = float(rho_minus)
        self.rho_plus = float(rho_plus)
        self.gamma_f = float(gamma_f)
        self.gamma_h = float(gamma_h)
        self.gravity = float(gravity)

    def to_dict(self):
        return dict(vars(self))


class MuskatConstants(object):
    def __init__(self, b, b_mu, b_rho, A, A_mu, A_gamma, variant):
        self.b = b
        self.b_mu = b_mu
        self.b_rho = b_rho
        self.A = A
        self.A_mu = A_mu
        self.A_gamma = A_gamma
        self.variant = variant

    @property
    def zeta(self):
        # Order convention shared with the Stokes model: fourth order
        # capillary flow pairs with E_2/E_4, second order gravity flow
        # with E_1/E_2.
        return 3 if self.variant == CAPILLARY else 1

    def to_dict(self):
        return dict(vars(self))


class SimState(object):
    """Zero-mean perturbations together with the conserved means."""

    def __init__(self, fbar, gbar, mean_f, mean_g, t=0.0):
        if fbar.K != gbar.K:
            raise ValueError("Components have bandwidths %d and %d"
                             % (fbar.K, gbar.K))
        if fbar.coeffs[fbar.K] != 0 or gbar.coeffs[gbar.K] != 0:
            err_msg = "State components must have zero mean"
            LOG.error(err_msg)
            raise exceptions.NonZeroMeanException(err_msg)
        if not (mean_f > 0 and mean_g > 0):
            err_msg = ("Means must be positive, got <f0>=%r <g0>=%r"
                       % (mean_f, mean_g))
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
        self.fbar = fbar
        self.gbar = gbar
        self.mean_f = float(mean_f)
        self.mean_g = float(mean_g)
        self.t = float(t)

    @property
    def K(self):
        return self.fbar.K

    def replace(self, fbar=None, gbar=None, t=None):
        return SimState(self.fbar if fbar is None else fbar,
                        self.gbar if gbar is None else gbar,
                        self.mean_f, self.mean_g,
                        self.t if t is None else t)

    def as_array(self):
        """Stacked (2, 2K+1) coefficient array of (fbar, gbar)."""
        return np.vstack([self.fbar.coeffs, self.gbar.coeffs])

    @classmethod
    def from_array(cls, array, mean_f, mean_g, t):
        return cls(spectral_core.TrigPoly(array[0], zero_mean=True),
                   spectral_core.TrigPoly(array[1], zero_mean=True),
                   mean_f, mean_g, t)

    @classmethod
    def zero(cls, K, mean_f, mean_g):
        return cls(spectral_core.TrigPoly.zeros(K),
                   spectral_core.TrigPoly.zeros(K), mean_f, mean_g)


def _validate_physical(p):
    positive = ('mu_minus', 'mu_plus', 'rho_minus', 'rho_plus', 'gravity')
    for name in positive:
        if not getattr(p, name) > 0:
            err_msg = "Parameter %s must be positive, got %r" % (
                name, getattr(p, name))
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
    for name in ('gamma_f', 'gamma_h'):
        if getattr(p, name) < 0:
            err_msg = "Parameter %s must be nonnegative, got %r" % (
                name, getattr(p, name))
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)


def reduce_params(p, variant):
    """Reduced coefficients of the Muskat system.

    :param p: PhysicalParams.
    :param variant: 'capillary' or 'gravity'.
    :returns: MuskatConstants.
    :raise InvalidParameterException: capillary flow without surface
        tension on the free surface, gravity flow with surface tension,
        or non-physical parameters.
    """
    if variant not in VARIANTS:
        raise exceptions.InvalidParameterException(
            "Unknown Muskat variant %r" % variant)
    _validate_physical(p)
    b = p.rho_plus
    b_mu = p.mu_minus / p.mu_plus * b
    b_rho = p.rho_minus / p.rho_plus * b
    if variant == GRAVITY:
        if p.gamma_f != 0 or p.gamma_h != 0:
            err_msg = ("Gravity driven Muskat flow requires gamma_f = "
                       "gamma_h = 0, got %r and %r" % (p.gamma_f, p.gamma_h))
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
        return MuskatConstants(b, b_mu, b_rho, 0.0, 0.0, 0.0, variant)
    if p.gamma_h <= 0:
        err_msg = "Capillary Muskat flow requires gamma_h > 0"
        LOG.error(err_msg)
        raise exceptions.InvalidParameterException(err_msg)
    A = p.gamma_h / p.gravity
    A_mu = p.mu_minus / p.mu_plus * A
    A_gamma = (p.gamma_f + p.gamma_h) / p.gamma_h * A
    return MuskatConstants(b, b_mu, b_rho, A, A_mu, A_gamma, variant)


def time_scale(p):
    """Factor G/mu_minus converting physical into rescaled time."""
    return p.gravity / p.mu_minus


def to_physical_time(t_rescaled, p):
    return t_rescaled / time_scale(p)


def to_rescaled_time(t_physical, p):
    return t_physical * time_scale(p)


def linear_symbol(k, c, mean_f, mean_g):
    """2x2 Fourier symbol of the linear part at wavenumber k."""
    k2 = float(k) ** 2
    k4 = k2 * k2
    return np.array([
        [-mean_f * (c.A_gamma * k4 + c.b_rho * k2),
         -mean_f * (c.A * k4 + c.b * k2)],
        [-mean_g * (c.A_mu * k4 + c.b_mu * k2),
         -mean_g * (c.A_mu * k4 + c.b_mu * k2)]])


def linear_symbols(K, c, mean_f, mean_g):
    """Symbols for k = 0..K stacked into a (K+1, 2, 2) array."""
    return np.array([linear_symbol(k, c, mean_f, mean_g)
                     for k in range(K + 1)])


def _flux(leading, slope, K):
    # d_x P_K [leading * slope], the product is exact before projection.
    bracket = spectral_core.product(leading, slope, K_out=K)
    return spectral_core.derivative(bracket, 1)


def nonlinear_rhs(s, c, n2b_leading_factor=LEADING_GBAR):
    """Galerkin nonlinear terms (N_1, N_2) of the split Muskat system.

    N_1 = d_x P_K[-fbar (A_gamma d3 fbar + A d3 gbar)
                  + fbar (b_rho d fbar + b d gbar)]
    N_2 = d_x P_K[-gbar (A_mu d3 fbar + A_mu d3 gbar)
                  + lead (b_mu d fbar + b_mu d gbar)]

    with lead = gbar, or fbar when n2b_leading_factor is 'fbar'.
    """
    K = s.K
    d = spectral_core.derivative
    df, dg = d(s.fbar, 1), d(s.gbar, 1)
    slope_1 = c.b_rho * df + c.b * dg
    slope_2b = c.b_mu * (df + dg)
    if c.variant == CAPILLARY:
        d3f, d3g = d(s.fbar, 3), d(s.gbar, 3)
        slope_1 = slope_1 - (c.A_gamma * d3f + c.A * d3g)
        slope_2a = -(c.A_mu * (d3f + d3g))
    n1 = _flux(s.fbar, slope_1, K)
    if n2b_leading_factor == LEADING_GBAR:
        slope_2 = slope_2b
        if c.variant == CAPILLARY:
            slope_2 = slope_2 + slope_2a
        n2 = _flux(s.gbar, slope_2, K)
    elif n2b_leading_factor == LEADING_FBAR:
        n2 = _flux(s.fbar, slope_2b, K)
        if c.variant == CAPILLARY:
            n2 = n2 + _flux(s.gbar, slope_2a, K)
    else:
        raise ValueError("Unknown leading factor %r" % n2b_leading_factor)
    return n1, n2


def full_rhs(s, c, n2b_leading_factor=LEADING_GBAR):
    """Linear part plus Galerkin nonlinearity; mode 0 is exactly zero."""
    symbols = linear_symbols(s.K, c, s.mean_f, s.mean_g)
    lf, lg = spectral_core.apply_mode_matrices(symbols, s.fbar, s.gbar)
    n1, n2 = nonlinear_rhs(s, c, n2b_leading_factor)
    return lf + n1, lg + n2


class MuskatModel(object):
    """Muskat right-hand side bound to its constants and means."""

    def __init__(self, constants, mean_f, mean_g,
                 n2b_leading_factor=LEADING_GBAR):
        self.constants = constants
        self.mean_f = mean_f
        self.mean_g = mean_g
        self.n2b_leading_factor = n2b_leading_factor

    @property
    def name(self):
        return 'muskat_%s' % self.constants.variant

    @property
    def zeta(self):
        return self.constants.zeta

    def linear_symbols(self, K):
        return linear_symbols(K, self.constants, self.mean_f, self.mean_g)

    def nonlinear_rhs(self, s):
        return nonlinear_rhs(s, self.constants, self.n2b_leading_factor)

    def full_rhs(self, s):
        return full_rhs(s, self.constants, self.n2b_leading_factor)

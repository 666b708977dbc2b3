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

"""Two-phase thin-film Stokes system, gravity (zeta=1) or capillary (zeta=3).

Unsplit form, with D = d_x for zeta=1 and D = -d_x^3 for zeta=3:

    d_t f = d_x[(2 rho f^3 + 3 f^2 g) D f + (2 f^3 + 3 f^2 g) D g]
    d_t g = d_x[(2 mu g^3 + 3 rho f^2 g + 6 f g^2) D f
                + (2 mu g^3 + 3 f^2 g + 6 f g^2) D g]

Time is rescaled by t~ = Q t, which removes the factor Q from both equations.
"""

import numpy as np

from oslo_log import log

from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import spectral_core

LOG = log.getLogger(__name__)

CAPILLARY = 'capillary'
GRAVITY = 'gravity'
DRIVES = (CAPILLARY, GRAVITY)


class StokesConstants(object):
    def __init__(self, rho, mu, zeta, P=None, Q=None):
        if zeta not in (1, 3):
            raise exceptions.InvalidParameterException(
                "zeta must be 1 or 3, got %r" % zeta)
        self.rho = rho
        self.mu = mu
        self.zeta = zeta
        self.P = P
        self.Q = Q

    @property
    def drive(self):
        return CAPILLARY if self.zeta == 3 else GRAVITY

    def to_dict(self):
        return dict(vars(self))


class StokesCoeffMatrix(object):
    """Constant coefficients of the linear part, evaluated at the means."""

    def __init__(self, c, mean_f, mean_g):
        F, G = mean_f, mean_g
        self.c11 = 2 * c.rho * F ** 3 + 3 * F ** 2 * G
        self.c12 = 2 * F ** 3 + 3 * F ** 2 * G
        self.c21 = 2 * c.mu * G ** 3 + 3 * c.rho * F ** 2 * G + 6 * F * G ** 2
        self.c22 = 2 * c.mu * G ** 3 + 3 * F ** 2 * G + 6 * F * G ** 2

    def as_array(self):
        return np.array([[self.c11, self.c12], [self.c21, self.c22]])


def reduce_params(p, drive):
    """Reduce PhysicalParams to (rho, mu, zeta).

    :param p: PhysicalParams.
    :param drive: 'capillary' or 'gravity'.
    :returns: StokesConstants carrying P and Q for reference.
    :raise InvalidParameterException: gravity drive without a heavier
        lower fluid, capillary drive without surface tension, or mixed
        drives.
    """
    if drive not in DRIVES:
        raise exceptions.InvalidParameterException(
            "Unknown Stokes drive %r" % drive)
    if not (p.mu_minus > 0 and p.mu_plus > 0):
        err_msg = "Viscosities must be positive"
        LOG.error(err_msg)
        raise exceptions.InvalidParameterException(err_msg)
    six_mu = 6.0 * p.mu_minus
    if drive == CAPILLARY:
        if not (p.gamma_f > 0 and p.gamma_h > 0):
            err_msg = ("Capillary Stokes flow requires gamma_f > 0 and "
                       "gamma_h > 0, got %r and %r"
                       % (p.gamma_f, p.gamma_h))
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
        P = p.gamma_f / six_mu
        Q = p.gamma_h / six_mu
        zeta = 3
    else:
        if p.gamma_f != 0 or p.gamma_h != 0:
            err_msg = ("Gravity driven Stokes flow requires gamma_f = "
                       "gamma_h = 0, got %r and %r"
                       % (p.gamma_f, p.gamma_h))
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
        if not (p.gravity > 0 and p.rho_plus > 0):
            err_msg = "Gravity driven Stokes flow requires G > 0, rho+ > 0"
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
        if p.rho_minus <= p.rho_plus:
            err_msg = ("Gravity driven Stokes flow requires the heavier "
                       "fluid below, got rho- = %r <= rho+ = %r"
                       % (p.rho_minus, p.rho_plus))
            LOG.error(err_msg)
            raise exceptions.InvalidParameterException(err_msg)
        P = p.gravity * (p.rho_minus - p.rho_plus) / six_mu
        Q = p.gravity * p.rho_plus / six_mu
        zeta = 1
    return StokesConstants((P + Q) / Q, p.mu_minus / p.mu_plus, zeta, P, Q)


def to_physical_time(t_rescaled, c):
    return t_rescaled / c.Q


def to_rescaled_time(t_physical, c):
    return t_physical * c.Q


def operator_d(u, zeta):
    """D u: d_x u for zeta=1, -d_x^3 u for zeta=3."""
    if zeta == 1:
        return spectral_core.derivative(u, 1)
    return -spectral_core.derivative(u, 3)


def linear_symbol(k, C, zeta):
    """Fourier symbol -k^(zeta+1) C of d_x (C D .)."""
    return -(float(abs(k)) ** (zeta + 1)) * C.as_array()


def linear_symbols(K, C, zeta):
    return np.array([linear_symbol(k, C, zeta) for k in range(K + 1)])


class _Monomials(object):
    """Products of the perturbations, computed once per evaluation."""

    def __init__(self, fbar, gbar):
        prod = spectral_core.product
        self.f = fbar
        self.g = gbar
        self.ff = prod(fbar, fbar)
        self.fg = prod(fbar, gbar)
        self.gg = prod(gbar, gbar)
        self.fff = prod(self.ff, fbar)
        self.ffg = prod(self.ff, gbar)
        self.fgg = prod(self.fg, gbar)
        self.ggg = prod(self.gg, gbar)

    def delta_f3(self, F):
        # (F + fbar)^3 - F^3
        return self.fff + 3 * F * self.ff + 3 * F ** 2 * self.f

    def delta_f2g(self, F, G):
        # (F + fbar)^2 (G + gbar) - F^2 G
        return (self.ffg + 2 * F * self.fg + G * self.ff
                + F ** 2 * self.g + 2 * F * G * self.f)

    def delta_fg2(self, F, G):
        # (F + fbar) (G + gbar)^2 - F G^2
        return (self.fgg + 2 * G * self.fg + F * self.gg
                + G ** 2 * self.f + 2 * F * G * self.g)

    def delta_g3(self, G):
        return self.ggg + 3 * G * self.gg + 3 * G ** 2 * self.g


def nonlinear_rhs(s, c):
    """Galerkin nonlinear terms (N_1 + N_2, N_3 + N_4).

    Each prefactor is the coefficient polynomial at (f, g) minus its value
    at the means; products are exact and the bracket is projected onto
    |k| <= K before the outer derivative.
    """
    K = s.K
    F, G = s.mean_f, s.mean_g
    m = _Monomials(s.fbar, s.gbar)
    f3 = m.delta_f3(F)
    f2g = m.delta_f2g(F, G)
    fg2 = m.delta_fg2(F, G)
    g3 = m.delta_g3(G)

    p11 = 2 * c.rho * f3 + 3 * f2g
    p12 = 2 * f3 + 3 * f2g
    p21 = 2 * c.mu * g3 + 3 * c.rho * f2g + 6 * fg2
    p22 = 2 * c.mu * g3 + 3 * f2g + 6 * fg2

    Df = operator_d(s.fbar, c.zeta)
    Dg = operator_d(s.gbar, c.zeta)
    prod = spectral_core.product
    bracket_f = prod(p11, Df, K_out=K) + prod(p12, Dg, K_out=K)
    bracket_g = prod(p21, Df, K_out=K) + prod(p22, Dg, K_out=K)
    return (spectral_core.derivative(bracket_f, 1),
            spectral_core.derivative(bracket_g, 1))


def full_rhs(s, c):
    """Linear part plus Galerkin nonlinearity; mode 0 is exactly zero."""
    C = StokesCoeffMatrix(c, s.mean_f, s.mean_g)
    lf, lg = spectral_core.apply_mode_matrices(
        linear_symbols(s.K, C, c.zeta), s.fbar, s.gbar)
    n1, n2 = nonlinear_rhs(s, c)
    return lf + n1, lg + n2


class StokesModel(object):
    """Stokes right-hand side bound to its constants and means."""

    def __init__(self, constants, mean_f, mean_g):
        self.constants = constants
        self.mean_f = mean_f
        self.mean_g = mean_g
        self.coeff_matrix = StokesCoeffMatrix(constants, mean_f, mean_g)

    @property
    def name(self):
        return 'stokes_%s' % self.constants.drive

    @property
    def zeta(self):
        return self.constants.zeta

    def linear_symbols(self, K):
        return linear_symbols(K, self.coeff_matrix, self.constants.zeta)

    def nonlinear_rhs(self, s):
        return nonlinear_rhs(s, self.constants)

    def full_rhs(self, s):
        return full_rhs(s, self.constants)

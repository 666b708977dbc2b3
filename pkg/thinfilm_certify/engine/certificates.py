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

"""Explicit smallness hypotheses and predicted decay rates.

All arithmetic is plain double precision; gates require strict positivity.
"""

import math

from oslo_log import log

from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import spectral_core
from thinfilm_certify.engine import stokes_model

LOG = log.getLogger(__name__)

MUSKAT = 'muskat'
STOKES = 'stokes'

WIENER_GATE = 'wiener_decay'
SOBOLEV_GATE = 'sobolev_propagation'


def initial_energy(s):
    """E_0 of a state: |fbar|_{A^0} + |gbar|_{A^0}."""
    return (spectral_core.wiener_norm(s.fbar, 0)
            + spectral_core.wiener_norm(s.gbar, 0))


def muskat_sigmas(c, mean_f, mean_g, e0):
    """Dissipation constants of the Muskat Wiener energy estimate.

    :returns: (sigma_1A, sigma_2A, sigma_1b, sigma_2b, delta_A, delta_b).
        The A-constants vanish identically for the gravity variant.
    """
    F, G, E = mean_f, mean_g, e0
    a_loss = (c.A_mu + 2 * c.A_gamma + 2 * c.A) * E
    b_loss = E * (2 * c.b_rho + 2 * c.b + 4 * c.b_mu)
    sigma_1A = F * c.A_gamma - G * c.A_mu - a_loss
    sigma_2A = G * c.A_mu - F * c.A - a_loss
    sigma_1b = F * c.b_rho - G * c.b_mu - b_loss
    sigma_2b = G * c.b_mu - F * c.b - b_loss
    return (sigma_1A, sigma_2A, sigma_1b, sigma_2b,
            min(sigma_1A, sigma_2A), min(sigma_1b, sigma_2b))


def _capillary_margins(c, F, G, E, coefficient):
    average = (F * c.A + G * c.A_mu) / 2.0
    return (G * c.A_mu - average - coefficient * E,
            F * c.A_gamma - average - coefficient * E)


def muskat_capillary_sobolev_margins(c, mean_f, mean_g, e0):
    """H^2 propagation margins of the capillary Muskat system.

    :returns: ((m1, m2), (p1, p2)), the stated margins with coefficient
        A_gamma + 13/4 A + 17/4 A_mu and the margins carried through the
        energy estimate, with coefficient
        sqrt(2) A_gamma + 9/4 A + (sqrt(2) + 9/4) A_mu.
    """
    stated = c.A_gamma + 13.0 / 4.0 * c.A + 17.0 / 4.0 * c.A_mu
    derived = (math.sqrt(2.0) * c.A_gamma + 9.0 / 4.0 * c.A
               + (math.sqrt(2.0) + 9.0 / 4.0) * c.A_mu)
    return (_capillary_margins(c, mean_f, mean_g, e0, stated),
            _capillary_margins(c, mean_f, mean_g, e0, derived))


def muskat_gravity_sobolev_margins(c, mean_f, mean_g, e0):
    """H^1 propagation margins of the gravity driven Muskat system."""
    F, G, E = mean_f, mean_g, e0
    average = (G * c.b_mu + F * c.b) / 2.0
    loss = (c.b_rho + c.b_mu + 2.5 * c.b_mu + 2.5 * c.b) * E
    return (F * c.b_rho - average - loss, G * c.b_mu - average - loss)


def stokes_sigmas(c, mean_f, mean_g, e0):
    """Dissipation constants of the Stokes Wiener energy estimate.

    :returns: (Sigma_1, Sigma_2, epsilon) with epsilon = min(Sigma_1,
        Sigma_2), the rate bounding dE_0/dt <= -epsilon E_{zeta+1}.
    """
    F, G, E = mean_f, mean_g, e0
    rho, mu = c.rho, c.mu
    sigma_1 = (2 * rho * F ** 3 + 3 * F ** 2 * G * (1 - rho)
               - (2 * mu * G ** 3 + 6 * F * G ** 2)
               - E * ((78 + 20 * rho + 14 * mu) * E ** 2
                      + (F * (36 * rho + 84)
                         + (81 + 30 * mu + 9 * rho) * G) * E)
               - E * ((18 * mu + 18) * G ** 2 + (18 * rho + 18) * F ** 2
                      + (12 * rho + 60) * G * F))
    sigma_2 = (2 * mu * G ** 3 + 6 * F * G ** 2 - 2 * F ** 3
               - E * ((14 * mu + 15 * rho + 83) * E ** 2
                      + ((30 * mu + 6 * rho + 84) * G
                         + (96 + 24 * rho) * F) * E)
               - E * ((18 * mu + 18) * G ** 2 + (27 + 9 * rho) * F ** 2
                      + (6 * rho + 66) * F * G))
    return sigma_1, sigma_2, min(sigma_1, sigma_2)


def stokes_sobolev_constant(c, mean_f, mean_g, e0):
    """C_zeta multiplying E_0 in the Stokes propagation margins."""
    F, G, E = mean_f, mean_g, e0
    rho, mu = c.rho, c.mu
    if c.zeta == 1:
        return 0.5 * (E ** 2 * (23 + 5 * rho + 4 * mu)
                      + E * (F * (36 + 12 * rho) + G * (33 + 3 * rho + 4 * mu))
                      + F ** 2 * (15 + 9 * rho) + G ** 2 * (12 + 12 * mu)
                      + F * G * (42 + 6 * rho))
    return (E ** 2 * (32 + 55.0 / 8.0 * rho + 7.5 * mu)
            + E * (F * (66 + 18 * rho) + G * (36 + 10.5 * rho + 18 * mu))
            + F ** 2 * (57.0 / 4.0 + 39.0 / 4.0 * rho)
            + G ** 2 * (13.5 + 7.5 * mu)
            + F * G * (40.5 + 7.5 * rho))


def stokes_sobolev_margins(c, mean_f, mean_g, e0):
    """Propagation margins of H^((zeta+1)/2) regularity for Stokes flow.

    :returns: (m1, m2, C_zeta). m1, m2 are eta_1, eta_2 for zeta=3 and
        kappa_1, kappa_2 for zeta=1.
    """
    F, G, E = mean_f, mean_g, e0
    rho, mu = c.rho, c.mu
    constant = stokes_sobolev_constant(c, F, G, E)
    mixed = 1.5 * (rho - 1) * F ** 2 * G
    m1 = ((2 * rho - 1) * F ** 3 - mixed - 3 * F * G ** 2 - mu * G ** 3
          - E * constant)
    m2 = mu * G ** 3 + 3 * F * G ** 2 - mixed - F ** 3 - E * constant
    return m1, m2, constant


class CertificateReport(object):
    """Every hypothesis constant, gate and predicted rate of one datum."""

    EMPIRICAL_FIELDS = ('fitted_delta1', 'fitted_delta2', 'fitted_c')

    def __init__(self, model, e0, mean_f, mean_g):
        self.model = model
        self.e0 = e0
        self.smallness_ok = e0 < min(mean_f, mean_g)
        self.sigma = None
        self.delta_A = None
        self.delta_b = None
        self.Sigma = None
        self.epsilon = None
        self.sobolev_margins = None
        self.sobolev_margins_derived = None
        self.sobolev_constant = None
        self.eta = None
        self.kappa = None
        self.structural_conditions = {}
        self.stably_stratified = None
        self.gates = {}
        self.predicted_rate = None
        self.fitted_delta1 = None
        self.fitted_delta2 = None
        self.fitted_c = None

    @property
    def wiener_gate(self):
        return self.gates.get(WIENER_GATE, False)

    @property
    def sobolev_gate(self):
        return self.gates.get(SOBOLEV_GATE, False)

    def to_dict(self):
        result = dict(vars(self))
        result['empirical'] = list(self.EMPIRICAL_FIELDS)
        return result


def _evaluate_muskat(report, s, c):
    F, G, E = s.mean_f, s.mean_g, report.e0
    s1A, s2A, s1b, s2b, delta_A, delta_b = muskat_sigmas(c, F, G, E)
    capillary = c.variant == muskat_model.CAPILLARY
    report.sigma = {'sigma_1A': s1A if capillary else None,
                    'sigma_2A': s2A if capillary else None,
                    'sigma_1b': s1b, 'sigma_2b': s2b}
    report.delta_A = delta_A if capillary else None
    report.delta_b = delta_b
    report.stably_stratified = c.b_rho > c.b
    report.structural_conditions = {
        'gravity_lower': F * c.b_rho - G * c.b_mu,
        'gravity_upper': G * c.b_mu - F * c.b}
    if capillary:
        stated, derived = muskat_capillary_sobolev_margins(c, F, G, E)
        report.structural_conditions.update({
            'capillary_upper': G * c.A_mu - F * c.A,
            'capillary_lower': F * c.A_gamma - G * c.A_mu})
        report.sobolev_margins = list(stated)
        report.sobolev_margins_derived = list(derived)
        wiener = (report.smallness_ok
                  and min(s1A, s2A, s1b, s2b) > 0)
        report.predicted_rate = delta_A + delta_b
    else:
        report.sobolev_margins = list(
            muskat_gravity_sobolev_margins(c, F, G, E))
        wiener = report.smallness_ok and delta_b > 0
        report.predicted_rate = delta_b
    report.gates[WIENER_GATE] = bool(wiener)
    report.gates[SOBOLEV_GATE] = bool(
        wiener and min(report.sobolev_margins) > 0)
    if wiener and not report.stably_stratified:
        LOG.error("Positive gravity constants with a lighter lower fluid, "
                  "the certificate arithmetic is inconsistent.")


def _evaluate_stokes(report, s, c):
    F, G, E = s.mean_f, s.mean_g, report.e0
    sigma_1, sigma_2, epsilon = stokes_sigmas(c, F, G, E)
    m1, m2, constant = stokes_sobolev_margins(c, F, G, E)
    report.Sigma = {'Sigma_1': sigma_1, 'Sigma_2': sigma_2}
    report.epsilon = epsilon
    report.sobolev_margins = [m1, m2]
    report.sobolev_constant = constant
    if c.zeta == 3:
        report.eta = min(m1, m2)
    else:
        report.kappa = min(m1, m2)
    report.predicted_rate = epsilon
    wiener = report.smallness_ok and epsilon > 0
    report.gates[WIENER_GATE] = bool(wiener)
    report.gates[SOBOLEV_GATE] = bool(wiener and min(m1, m2) > 0)


def evaluate(initial, constants, model=None):
    """Evaluate every certificate of an initial datum.

    :param initial: SimState with the zero-mean initial perturbations.
    :param constants: MuskatConstants or StokesConstants.
    :param model: 'muskat' or 'stokes'; inferred from constants if None.
    :returns: CertificateReport.
    """
    if model is None:
        model = (STOKES if isinstance(constants, stokes_model.StokesConstants)
                 else MUSKAT)
    e0 = initial_energy(initial)
    report = CertificateReport(model, e0, initial.mean_f, initial.mean_g)
    if model == MUSKAT:
        _evaluate_muskat(report, initial, constants)
    elif model == STOKES:
        _evaluate_stokes(report, initial, constants)
    else:
        raise ValueError("Unknown model family %r" % model)
    LOG.info("Certificates for %(model)s: E_0=%(e0).6g, gates %(gates)s, "
             "predicted rate %(rate).6g.",
             {'model': model, 'e0': e0, 'gates': report.gates,
              'rate': report.predicted_rate})
    return report

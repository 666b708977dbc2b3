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

"""Randomized checks of the functional inequalities and RHS oracles.

Every suite draws its samples from its own numpy Generator, so a seed
reproduces identical draws. A violation is recorded with the offending
input so it can be replayed.
"""

import numpy as np

from oslo_log import log

from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import spectral_core as sc
from thinfilm_certify.engine import stokes_model

LOG = log.getLogger(__name__)

# Relative slack for rounding in the inequality checks.
ROUNDING_SLACK = 1e-10
SPLIT_FORM_TOL = 1e-12
QUADRATURE_TOL = 1e-10
PARSEVAL_TOL = 1e-10
SUP_OVERSAMPLING = 32
QUADRATURE_FACTOR = 16


def random_trig_poly(rng, K, decay=1.0):
    """Zero-mean TrigPoly with Gaussian coefficients damped by |k|^-decay."""
    k = np.arange(1, K + 1, dtype=float)
    values = (rng.standard_normal(K) + 1j * rng.standard_normal(K))
    return sc.TrigPoly.from_modes(
        dict(zip(range(1, K + 1), values * k ** (-decay))), K)


def _random_bandwidth(rng, max_bandwidth):
    return int(rng.integers(1, max_bandwidth + 1))


def _encode(u):
    return [[float(c.real), float(c.imag)] for c in u.coeffs]


class SuiteResult(object):
    """Outcome of one randomized suite."""

    def __init__(self, name, samples=0):
        self.name = name
        self.samples = samples
        self.violations = 0
        self.worst_ratio = 0.0
        self.counterexample = None

    @property
    def passed(self):
        return self.violations == 0

    def record(self, lhs, rhs, **inputs):
        """Count lhs <= rhs, keeping the first counterexample."""
        self.samples += 1
        if rhs > 0:
            self.worst_ratio = max(self.worst_ratio, lhs / rhs)
        elif lhs > 0:
            self.worst_ratio = float('inf')
        if lhs > rhs + ROUNDING_SLACK * max(abs(rhs), 1e-300):
            self.violations += 1
            if self.counterexample is None:
                example = {'lhs': lhs, 'rhs': rhs}
                for key, value in inputs.items():
                    if isinstance(value, sc.TrigPoly):
                        value = _encode(value)
                    example[key] = value
                self.counterexample = example

    def to_dict(self):
        result = dict(vars(self))
        result['passed'] = self.passed
        return result


def banach_algebra_suite(rng, samples, max_bandwidth, constant_scale=1.0,
                         orders=(0, 1, 2, 4)):
    """|uv - <uv>|_{A^a} <= 2^(a+1) |u|_{A^a} |v|_{A^a}."""
    result = SuiteResult('banach_algebra')
    for _ in range(samples):
        u = random_trig_poly(rng, _random_bandwidth(rng, max_bandwidth))
        v = random_trig_poly(rng, _random_bandwidth(rng, max_bandwidth))
        w = sc.product(u, v).without_mean()
        for alpha in orders:
            bound = (constant_scale * 2.0 ** (alpha + 1)
                     * sc.wiener_norm(u, alpha) * sc.wiener_norm(v, alpha))
            result.record(sc.wiener_norm(w, alpha), bound,
                          alpha=alpha, u=u, v=v)
    return result


def interpolation_suite(rng, samples, max_bandwidth, constant_scale=1.0,
                        thetas=(0.25, 0.5, 0.75), orders=(1, 2)):
    """|u|_{A^a} <= |u|_{A^0}^(1-theta) |u|_{A^(a/theta)}^theta."""
    result = SuiteResult('interpolation')
    for _ in range(samples):
        u = random_trig_poly(rng, _random_bandwidth(rng, max_bandwidth))
        for alpha in orders:
            for theta in thetas:
                bound = (constant_scale
                         * sc.wiener_norm(u, 0) ** (1.0 - theta)
                         * sc.wiener_norm(u, alpha / theta) ** theta)
                result.record(sc.wiener_norm(u, alpha), bound,
                              alpha=alpha, theta=theta, u=u)
    return result


def kolmogorov_landau_suite(rng, samples, max_bandwidth, constant_scale=1.0):
    """Sup norm bounds |u'|^2 <= 2 |u| |u''| and
    |u''| <= 4 |u|^(1/2) |u''''|^(1/2).
    """
    result = SuiteResult('kolmogorov_landau')
    for _ in range(samples):
        u = random_trig_poly(rng, _random_bandwidth(rng, max_bandwidth))
        sup = dict((n, sc.sup_norm_deriv(u, n, SUP_OVERSAMPLING))
                   for n in (0, 1, 2, 4))
        result.record(sup[1] ** 2, constant_scale * 2.0 * sup[0] * sup[2],
                      form='first', u=u)
        result.record(sup[2],
                      constant_scale * 4.0 * np.sqrt(sup[0] * sup[4]),
                      form='iterated', u=u)
    return result


def l4_suite(rng, samples, max_bandwidth, constant_scale=1.0):
    """|u'|_{L^4}^2 <= 3 |u|_inf |u|_{H^2} and
    |u'''|_{L^4}^2 <= 3 |u''|_inf |u|_{H^4}.

    L^4 norms integrate against dx/(2*pi).
    """
    result = SuiteResult('l4')
    for _ in range(samples):
        u = random_trig_poly(rng, _random_bandwidth(rng, max_bandwidth))
        M = sc.oversampled_grid_size(u.K, SUP_OVERSAMPLING)
        d1 = sc.normalized_lp_norm(sc.derivative(u, 1), 4, M)
        d3 = sc.normalized_lp_norm(sc.derivative(u, 3), 4, M)
        result.record(d1 ** 2, constant_scale * 3.0
                      * sc.sup_norm_deriv(u, 0, SUP_OVERSAMPLING)
                      * sc.sobolev_norm(u, 2), form='first', u=u)
        result.record(d3 ** 2, constant_scale * 3.0
                      * sc.sup_norm_deriv(u, 2, SUP_OVERSAMPLING)
                      * sc.sobolev_norm(u, 4), form='third', u=u)
    return result


def embedding_suite(rng, samples, max_bandwidth, constant_scale=1.0):
    """|u|_{H^4} <= sqrt(2 pi) |u|_{A^4}."""
    result = SuiteResult('embedding')
    for _ in range(samples):
        u = random_trig_poly(rng, _random_bandwidth(rng, max_bandwidth))
        result.record(sc.sobolev_norm(u, 4),
                      constant_scale * np.sqrt(2.0 * np.pi)
                      * sc.wiener_norm(u, 4), u=u)
    return result


def parseval_suite(rng, samples, max_bandwidth):
    """Coefficient and quadrature L^2 norms agree."""
    result = SuiteResult('parseval')
    for _ in range(samples):
        u = random_trig_poly(rng, _random_bandwidth(rng, max_bandwidth))
        spectral = np.sqrt(2.0 * np.pi) * sc.sobolev_norm(u, 0)
        defect = abs(spectral - sc.lebesgue_l2_norm(u))
        result.record(defect, PARSEVAL_TOL * max(1.0, spectral), u=u)
    return result


def algebra_suite(rng, samples, max_bandwidth):
    """Commutativity, bilinearity of product and idempotence of project."""
    result = SuiteResult('algebra')
    for _ in range(samples):
        K = _random_bandwidth(rng, max_bandwidth)
        u, v, w = (random_trig_poly(rng, K) for _ in range(3))
        a = float(rng.standard_normal())
        uv, vu = sc.product(u, v), sc.product(v, u)
        result.record(_max_defect(uv, vu), ROUNDING_SLACK * _scale(uv),
                      law='commutative', u=u, v=v)
        lhs = sc.product(a * u + w, v)
        rhs = a * uv + sc.product(w, v)
        result.record(_max_defect(lhs, rhs), ROUNDING_SLACK * _scale(rhs),
                      law='bilinear', u=u, v=v, w=w)
        K_prime = int(rng.integers(0, K + 1))
        once = sc.project(u, K_prime)
        result.record(_max_defect(sc.project(once, K_prime), once), 0.0,
                      law='idempotent', u=u, K_prime=K_prime)
    return result


def _max_defect(u, v):
    K = max(u.K, v.K)
    return float(np.max(np.abs(u.padded(K).coeffs - v.padded(K).coeffs)))


def _scale(u):
    return max(1.0, float(np.max(np.abs(u.coeffs))))


def _pair_defect(got, expected):
    """Max-norm relative defect between two (f, g) coefficient pairs."""
    defect = max(_max_defect(got[0], expected[0]),
                 _max_defect(got[1], expected[1]))
    scale = max(float(np.max(np.abs(expected[0].coeffs))),
                float(np.max(np.abs(expected[1].coeffs))))
    return defect / scale if scale > 0 else defect


def muskat_unsplit_rhs(s, c):
    """Muskat system assembled on the full heights f, g, projected to K.

    d_t f = -d_x[f (A_gamma f''' + A g''' - b_rho f' - b g')]
    d_t g = -d_x[g (A_mu f''' + A_mu g''' - b_mu f' - b_mu g')]
    """
    d = sc.derivative
    f = s.fbar.with_mean(s.mean_f)
    g = s.gbar.with_mean(s.mean_g)
    df, dg = d(s.fbar, 1), d(s.gbar, 1)
    d3f, d3g = d(s.fbar, 3), d(s.gbar, 3)
    slope_f = (c.A_gamma * d3f + c.A * d3g) - (c.b_rho * df + c.b * dg)
    slope_g = c.A_mu * (d3f + d3g) - c.b_mu * (df + dg)
    rhs_f = -d(sc.product(f, slope_f).without_mean(), 1)
    rhs_g = -d(sc.product(g, slope_g).without_mean(), 1)
    return sc.project(rhs_f, s.K), sc.project(rhs_g, s.K)


def stokes_unsplit_rhs(s, c):
    """Stokes system assembled on the full heights f, g, projected to K.

    d_t f = d_x[(2 rho f^3 + 3 f^2 g) D f + (2 f^3 + 3 f^2 g) D g]
    d_t g = d_x[(2 mu g^3 + 3 rho f^2 g + 6 f g^2) D f
                + (2 mu g^3 + 3 f^2 g + 6 f g^2) D g]
    """
    prod = sc.product
    f = s.fbar.with_mean(s.mean_f)
    g = s.gbar.with_mean(s.mean_g)
    ff, gg = prod(f, f), prod(g, g)
    f3, g3 = prod(ff, f), prod(gg, g)
    f2g, fg2 = prod(ff, g), prod(f, gg)
    p11 = 2 * c.rho * f3 + 3 * f2g
    p12 = 2 * f3 + 3 * f2g
    p21 = 2 * c.mu * g3 + 3 * c.rho * f2g + 6 * fg2
    p22 = 2 * c.mu * g3 + 3 * f2g + 6 * fg2
    Df = stokes_model.operator_d(s.fbar, c.zeta)
    Dg = stokes_model.operator_d(s.gbar, c.zeta)
    flux_f = (prod(p11, Df) + prod(p12, Dg)).without_mean()
    flux_g = (prod(p21, Df) + prod(p22, Dg)).without_mean()
    return (sc.project(sc.derivative(flux_f, 1), s.K),
            sc.project(sc.derivative(flux_g, 1), s.K))


def unsplit_rhs(s, model):
    if isinstance(model, stokes_model.StokesModel):
        return stokes_unsplit_rhs(s, model.constants)
    return muskat_unsplit_rhs(s, model.constants)


def _quadrature_flux(bracket_values, K):
    return sc.derivative(sc.from_grid_values(bracket_values, K)
                         .without_mean(), 1)


def quadrature_rhs(s, model):
    """Nonlinear terms evaluated pointwise on a 16K grid.

    The brackets are formed from grid samples of the perturbations and
    their derivatives, then mapped back to modes |k| <= K by FFT before
    the outer derivative.
    """
    K = s.K
    M = max(QUADRATURE_FACTOR * K, 8)

    def at(u, n=0):
        return sc.grid_values(sc.derivative(u, n), M)

    f, g = at(s.fbar), at(s.gbar)
    c = model.constants
    if isinstance(model, stokes_model.StokesModel):
        F, G = s.mean_f, s.mean_g
        hf, hg = F + f, G + g
        f3 = hf ** 3 - F ** 3
        f2g = hf ** 2 * hg - F ** 2 * G
        fg2 = hf * hg ** 2 - F * G ** 2
        g3 = hg ** 3 - G ** 3
        Df = at(stokes_model.operator_d(s.fbar, c.zeta))
        Dg = at(stokes_model.operator_d(s.gbar, c.zeta))
        bracket_f = ((2 * c.rho * f3 + 3 * f2g) * Df
                     + (2 * f3 + 3 * f2g) * Dg)
        bracket_g = ((2 * c.mu * g3 + 3 * c.rho * f2g + 6 * fg2) * Df
                     + (2 * c.mu * g3 + 3 * f2g + 6 * fg2) * Dg)
        return _quadrature_flux(bracket_f, K), _quadrature_flux(bracket_g, K)

    df, dg = at(s.fbar, 1), at(s.gbar, 1)
    d3f, d3g = at(s.fbar, 3), at(s.gbar, 3)
    bracket_f = f * (-(c.A_gamma * d3f + c.A * d3g) + c.b_rho * df
                     + c.b * dg)
    lead = f if model.n2b_leading_factor == muskat_model.LEADING_FBAR else g
    bracket_g = (-g * c.A_mu * (d3f + d3g) + lead * c.b_mu * (df + dg))
    return _quadrature_flux(bracket_f, K), _quadrature_flux(bracket_g, K)


def _random_state(rng, K, mean_f, mean_g):
    scale = 0.1 * min(mean_f, mean_g)
    fbar = random_trig_poly(rng, K)
    gbar = random_trig_poly(rng, K)
    fbar = (scale / max(sc.wiener_norm(fbar, 0), 1e-300)) * fbar
    gbar = (scale / max(sc.wiener_norm(gbar, 0), 1e-300)) * gbar
    return muskat_model.SimState(fbar, gbar, mean_f, mean_g)


def split_form_suite(model, rng, samples, max_bandwidth=8):
    """Split Galerkin RHS against the unsplit system on the full heights.

    Muskat models are compared in the gbar leading-factor form only.
    """
    result = SuiteResult('split_form_%s' % model.name)
    for _ in range(samples):
        s = _random_state(rng, _random_bandwidth(rng, max_bandwidth),
                          model.mean_f, model.mean_g)
        result.record(_pair_defect(model.full_rhs(s), unsplit_rhs(s, model)),
                      SPLIT_FORM_TOL, fbar=s.fbar, gbar=s.gbar)
    return result


def quadrature_suite(model, rng, samples, max_bandwidth=16):
    """Spectral nonlinear terms against physical-space quadrature."""
    result = SuiteResult('quadrature_%s' % model.name)
    for _ in range(samples):
        s = _random_state(rng, _random_bandwidth(rng, max_bandwidth),
                          model.mean_f, model.mean_g)
        result.record(
            _pair_defect(model.nonlinear_rhs(s), quadrature_rhs(s, model)),
            QUADRATURE_TOL, fbar=s.fbar, gbar=s.gbar)
    return result


def reference_models(mean_f=1.0, mean_g=1.5):
    """One model per family with fixed, hypothesis-free constants."""
    capillary = muskat_model.MuskatConstants(
        b=1.0, b_mu=1.5, b_rho=2.0, A=1.0, A_mu=1.5, A_gamma=2.0,
        variant=muskat_model.CAPILLARY)
    gravity = muskat_model.MuskatConstants(
        b=1.0, b_mu=1.5, b_rho=2.0, A=0.0, A_mu=0.0, A_gamma=0.0,
        variant=muskat_model.GRAVITY)
    return [
        muskat_model.MuskatModel(capillary, mean_f, mean_g),
        muskat_model.MuskatModel(gravity, mean_f, mean_g),
        stokes_model.StokesModel(stokes_model.StokesConstants(2.0, 1.5, 3),
                                 mean_f, mean_g),
        stokes_model.StokesModel(stokes_model.StokesConstants(2.0, 1.5, 1),
                                 mean_f, mean_g),
    ]


class VerifyOptions(object):
    def __init__(self, inequality_samples=1000, oracle_samples=100,
                 max_bandwidth=16, constant_scale=1.0):
        self.inequality_samples = inequality_samples
        self.oracle_samples = oracle_samples
        self.max_bandwidth = max_bandwidth
        self.constant_scale = constant_scale


def run_all(seed, options=None, models=None):
    """Run every suite in a fixed order.

    :param seed: integer seed; each suite draws from its own spawned stream.
    :param options: VerifyOptions.
    :param models: models for the oracle suites, reference_models() if None.
    :returns: list of SuiteResult.
    """
    options = options or VerifyOptions()
    models = models if models is not None else reference_models()
    n, K = options.inequality_samples, options.max_bandwidth
    scale = options.constant_scale
    plan = [
        lambda rng: banach_algebra_suite(rng, n, K, scale),
        lambda rng: interpolation_suite(rng, n, K, scale),
        lambda rng: kolmogorov_landau_suite(rng, n, K, scale),
        lambda rng: l4_suite(rng, n, K, scale),
        lambda rng: embedding_suite(rng, n, K, scale),
        lambda rng: parseval_suite(rng, n, K),
        lambda rng: algebra_suite(rng, n, K),
    ]
    for model in models:
        plan.append(lambda rng, m=model: split_form_suite(
            m, rng, options.oracle_samples, min(K, 8)))
        plan.append(lambda rng, m=model: quadrature_suite(
            m, rng, options.oracle_samples, K))

    streams = np.random.SeedSequence(seed).spawn(len(plan))
    results = []
    for suite, stream in zip(plan, streams):
        result = suite(np.random.default_rng(stream))
        level = LOG.info if result.passed else LOG.error
        level("Suite %(name)s: %(violations)d violations in %(samples)d "
              "checks, worst ratio %(ratio).3g.",
              {'name': result.name, 'violations': result.violations,
               'samples': result.samples, 'ratio': result.worst_ratio})
        results.append(result)
    return results

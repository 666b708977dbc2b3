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
from oslotest import base

from thinfilm_certify.engine import certificates
from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import spectral_core as sc
from thinfilm_certify.engine import stokes_model

F, G = 1.0, 1.5


def capillary():
    return muskat_model.MuskatConstants(
        b=1.0, b_mu=1.0, b_rho=2.0, A=1.0, A_mu=1.0, A_gamma=2.0,
        variant=muskat_model.CAPILLARY)


def gravity():
    return muskat_model.MuskatConstants(
        b=1.0, b_mu=1.0, b_rho=2.0, A=0.0, A_mu=0.0, A_gamma=0.0,
        variant=muskat_model.GRAVITY)


def every_margin(c, stokes_c, mean_f, mean_g, e0):
    return np.concatenate([
        certificates.muskat_sigmas(c, mean_f, mean_g, e0),
        np.ravel(certificates.muskat_capillary_sobolev_margins(
            c, mean_f, mean_g, e0)),
        certificates.muskat_gravity_sobolev_margins(c, mean_f, mean_g, e0),
        certificates.stokes_sigmas(stokes_c, mean_f, mean_g, e0),
        certificates.stokes_sobolev_margins(stokes_c, mean_f, mean_g, e0)[:2]])


def example_state(K=4, mean_f=F, mean_g=G):
    fbar = sc.TrigPoly.from_modes({1: 0.005}, K)
    return muskat_model.SimState(fbar, sc.TrigPoly.zeros(K), mean_f, mean_g)


class MuskatSigmasTestCase(base.BaseTestCase):
    def test_example(self):
        result = certificates.muskat_sigmas(capillary(), F, G, 0.01)
        np.testing.assert_allclose((0.43, 0.43, 0.40, 0.40, 0.43, 0.40),
                                   result, rtol=0, atol=1e-12)

    def test_unperturbed(self):
        result = certificates.muskat_sigmas(capillary(), F, G, 0.0)
        np.testing.assert_allclose((0.5,) * 6, result, rtol=0, atol=1e-12)

    def test_sigma_2a_along_mean_g(self):
        values = [certificates.muskat_sigmas(capillary(), F, g, 0.01)[1]
                  for g in (0.5, 1.0, 1.5)]
        np.testing.assert_allclose((-0.57, -0.07, 0.43), values,
                                   rtol=0, atol=1e-12)


class MuskatSobolevMarginsTestCase(base.BaseTestCase):
    def test_capillary_unperturbed(self):
        stated, derived = certificates.muskat_capillary_sobolev_margins(
            capillary(), F, G, 0.0)
        np.testing.assert_allclose((0.25, 0.75), stated, atol=1e-12)
        self.assertEqual(stated, derived)

    def test_capillary_perturbed(self):
        stated, derived = certificates.muskat_capillary_sobolev_margins(
            capillary(), F, G, 0.01)
        np.testing.assert_allclose((0.155, 0.655), stated, atol=1e-12)
        coefficient = 2 * np.sqrt(2.0) + 2.25 + np.sqrt(2.0) + 2.25
        np.testing.assert_allclose(
            (0.25 - 0.01 * coefficient, 0.75 - 0.01 * coefficient),
            derived, atol=1e-12)

    def test_gravity(self):
        margins = certificates.muskat_gravity_sobolev_margins(
            gravity(), F, G, 0.0)
        np.testing.assert_allclose((0.75, 0.25), margins, atol=1e-12)
        margins = certificates.muskat_gravity_sobolev_margins(
            gravity(), F, G, 0.01)
        np.testing.assert_allclose((0.67, 0.17), margins, atol=1e-12)


class StokesCertificatesTestCase(base.BaseTestCase):
    def setUp(self):
        super(StokesCertificatesTestCase, self).setUp()
        self.c = stokes_model.StokesConstants(10.0, 30.0, 3)

    def test_sigmas_example(self):
        sigma_1, sigma_2, eps = certificates.stokes_sigmas(
            self.c, 1.0, 0.3, 0.0)
        self.assertAlmostEqual(9.74, sigma_1, 12)
        self.assertAlmostEqual(0.16, sigma_2, 12)
        self.assertAlmostEqual(0.16, eps, 12)

    def test_symmetric_means_fail(self):
        c = stokes_model.StokesConstants(2.0, 1.0, 1)
        sigma_1, _, eps = certificates.stokes_sigmas(c, 1.0, 1.0, 0.0)
        self.assertAlmostEqual(-7.0, sigma_1, 12)
        self.assertLess(eps, 0)

    def test_margins_example(self):
        m1, m2, _ = certificates.stokes_sobolev_margins(
            self.c, 1.0, 0.3, 0.0)
        self.assertAlmostEqual(13.87, m1, 12)
        self.assertAlmostEqual(-3.97, m2, 12)

    def test_margins_differ_only_through_constant(self):
        gravity_c = stokes_model.StokesConstants(10.0, 30.0, 1)
        e0 = 0.02
        m1_3, m2_3, c3 = certificates.stokes_sobolev_margins(
            self.c, 1.0, 0.3, e0)
        m1_1, m2_1, c1 = certificates.stokes_sobolev_margins(
            gravity_c, 1.0, 0.3, e0)
        self.assertAlmostEqual(m1_3 + e0 * c3, m1_1 + e0 * c1, 12)
        self.assertAlmostEqual(m2_3 + e0 * c3, m2_1 + e0 * c1, 12)
        self.assertNotEqual(c1, c3)


class MonotonicityTestCase(base.BaseTestCase):
    def test_nonincreasing_in_energy(self):
        rng = np.random.default_rng(20)
        for _ in range(200):
            b, b_mu, b_rho, A, A_mu, A_gamma = rng.random(6) * 3
            c = muskat_model.MuskatConstants(b, b_mu, b_rho, A, A_mu,
                                             A_gamma, muskat_model.CAPILLARY)
            rho = 1.0 + 5 * rng.random()
            stokes_c = stokes_model.StokesConstants(rho, 5 * rng.random(), 3)
            mf, mg = 0.1 + rng.random(2) * 2
            e_small, e_large = np.sort(rng.random(2))
            self.assertTrue(np.all(
                every_margin(c, stokes_c, mf, mg, e_large)
                <= every_margin(c, stokes_c, mf, mg, e_small)))


class EvaluateTestCase(base.BaseTestCase):
    def test_muskat_example_state(self):
        report = certificates.evaluate(example_state(), capillary())
        self.assertEqual(certificates.MUSKAT, report.model)
        self.assertAlmostEqual(0.01, report.e0, 15)
        self.assertTrue(report.smallness_ok)
        self.assertAlmostEqual(0.43, report.sigma['sigma_1A'], 12)
        self.assertAlmostEqual(0.40, report.sigma['sigma_2b'], 12)
        self.assertAlmostEqual(0.83, report.predicted_rate, 12)
        self.assertTrue(report.wiener_gate)
        self.assertTrue(report.sobolev_gate)
        self.assertTrue(report.stably_stratified)
        self.assertEqual(4, len(report.structural_conditions))

    def test_zero_perturbation(self):
        s = muskat_model.SimState.zero(4, F, G)
        report = certificates.evaluate(s, capillary())
        self.assertEqual(0.0, report.e0)
        self.assertTrue(report.smallness_ok)
        self.assertTrue(report.wiener_gate)

    def test_large_energy_fails_every_gate(self):
        fbar = sc.TrigPoly.from_modes({1: 0.6}, 4)
        s = muskat_model.SimState(fbar, sc.TrigPoly.zeros(4), F, G)
        report = certificates.evaluate(s, capillary())
        self.assertFalse(report.smallness_ok)
        self.assertFalse(any(report.gates.values()))

    def test_gravity_reports_a_block_not_applicable(self):
        report = certificates.evaluate(example_state(), gravity())
        self.assertIsNone(report.sigma['sigma_1A'])
        self.assertIsNone(report.sigma['sigma_2A'])
        self.assertIsNone(report.delta_A)
        self.assertAlmostEqual(0.40, report.predicted_rate, 12)
        self.assertTrue(report.wiener_gate)
        self.assertNotIn('capillary_upper', report.structural_conditions)

    def test_sobolev_gate_implies_wiener_gate(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            mf, mg = 0.2 + rng.random(2) * 2
            report = certificates.evaluate(
                example_state(mean_f=mf, mean_g=mg), capillary())
            if report.sobolev_gate:
                self.assertTrue(report.wiener_gate)

    def test_unstable_stratification(self):
        c = muskat_model.MuskatConstants(
            b=2.0, b_mu=1.0, b_rho=1.0, A=1.0, A_mu=1.0, A_gamma=2.0,
            variant=muskat_model.CAPILLARY)
        report = certificates.evaluate(example_state(), c)
        self.assertFalse(report.stably_stratified)
        self.assertFalse(report.wiener_gate)

    def test_stokes_model_inferred(self):
        c = stokes_model.StokesConstants(10.0, 30.0, 3)
        report = certificates.evaluate(
            example_state(mean_f=1.0, mean_g=0.3), c)
        self.assertEqual(certificates.STOKES, report.model)
        self.assertIsNotNone(report.eta)
        self.assertIsNone(report.kappa)
        self.assertEqual(report.epsilon, report.predicted_rate)
        self.assertFalse(report.sobolev_gate)

    def test_to_dict_marks_empirical_fields(self):
        report = certificates.evaluate(example_state(), capillary())
        result = report.to_dict()
        self.assertEqual(['fitted_delta1', 'fitted_delta2', 'fitted_c'],
                         result['empirical'])
        self.assertIsNone(result['fitted_c'])

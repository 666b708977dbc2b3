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

from thinfilm_certify.engine import diagnostics
from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import spectral_core as sc


def synthetic_series(t, e0, e2=None, e4=None, sob_low=None, sob_high=None,
                     min_f=None):
    """Series with given Wiener and Sobolev columns, zero elsewhere."""
    n = len(t)
    zeros = np.zeros(n)
    e2 = zeros if e2 is None else e2
    e4 = zeros if e4 is None else e4
    sob_low = zeros if sob_low is None else sob_low
    sob_high = zeros if sob_high is None else sob_high
    min_f = np.ones(n) if min_f is None else min_f
    config = diagnostics.DiagnosticsConfig(3)
    series = diagnostics.DiagnosticsSeries(config.columns)
    for i in range(n):
        series.append(diagnostics.DiagnosticsSample(
            t=t[i], mass_f=0.0, mass_g=0.0,
            e_wiener={0: e0[i], 2: e2[i], 4: e4[i]},
            e_sobolev={1: 0.0, 2: sob_low[i], 4: sob_high[i]},
            e_sup={0: 0.0}, min_f=min_f[i], min_g=1.0))
    return series


class ColumnsTestCase(base.BaseTestCase):
    def test_orders_follow_zeta(self):
        capillary = diagnostics.DiagnosticsConfig(3)
        self.assertEqual([0, 2, 4], capillary.wiener_orders)
        self.assertEqual((2, 4), capillary.propagation_orders)
        gravity = diagnostics.DiagnosticsConfig(1, sobolev_orders=(0.5,))
        self.assertEqual([0, 2, 4], gravity.wiener_orders)
        self.assertEqual([0.5, 1, 2], gravity.sobolev_orders)
        self.assertIn('E_sob_0.5', gravity.columns)

    def test_labels(self):
        self.assertEqual('E_wiener_4', diagnostics.wiener_column(4.0))
        self.assertEqual('E_sob_1.5', diagnostics.sobolev_column(1.5))
        self.assertEqual('E_sup_2', diagnostics.sup_column(2))


class SampleTestCase(base.BaseTestCase):
    def setUp(self):
        super(SampleTestCase, self).setUp()
        self.config = diagnostics.DiagnosticsConfig(3)

    def test_zero_state(self):
        row = diagnostics.sample(muskat_model.SimState.zero(4, 1.0, 1.5),
                                 self.config).as_dict()
        for name in self.config.columns:
            if name.startswith('E_'):
                self.assertEqual(0.0, row[name])
        self.assertEqual(1.0, row['min_f'])
        self.assertEqual(1.5, row['min_g'])
        self.assertEqual(set(self.config.columns), set(row))

    def test_single_cosine(self):
        s = muskat_model.SimState(sc.TrigPoly.from_modes({1: 0.005}, 4),
                                  sc.TrigPoly.zeros(4), 1.0, 1.5)
        row = diagnostics.sample(s, self.config).as_dict()
        self.assertAlmostEqual(0.01, row['E_wiener_0'], 15)
        self.assertAlmostEqual(0.01, row['E_wiener_4'], 15)
        self.assertAlmostEqual(5e-5, row['E_sob_2'], 15)
        self.assertAlmostEqual(0.01, row['E_sup_0'], 12)
        self.assertEqual(0.0, row['mass_f'])

    def test_minimum_of_shifted_cosine(self):
        s = muskat_model.SimState(sc.TrigPoly.from_modes({1: -0.25}, 4),
                                  sc.TrigPoly.zeros(4), 1.0, 1.5)
        min_f, min_g, ok = diagnostics.check_positivity(s)
        self.assertAlmostEqual(0.5, min_f, 12)
        self.assertEqual(1.5, min_g)
        self.assertTrue(ok)

    def test_negative_height(self):
        s = muskat_model.SimState(sc.TrigPoly.from_modes({2: -0.6}, 4),
                                  sc.TrigPoly.zeros(4), 1.0, 1.5)
        _, _, ok = diagnostics.check_positivity(s)
        self.assertFalse(ok)


class SeriesTestCase(base.BaseTestCase):
    def test_rejects_time_reversal(self):
        series = synthetic_series([0.0, 1.0], [1.0, 1.0])
        sample = series.samples[0]
        self.assertRaises(ValueError, series.append, sample)

    def test_extend_skips_shared_endpoint(self):
        first = synthetic_series([0.0, 1.0], [1.0, 0.5])
        first.extend(synthetic_series([1.0, 2.0], [0.5, 0.25]))
        np.testing.assert_array_equal([0.0, 1.0, 2.0], first.times())

    def test_uniform(self):
        self.assertTrue(synthetic_series([0.0, 0.1, 0.2],
                                         [1.0] * 3).is_uniform())
        self.assertFalse(synthetic_series([0.0, 0.1, 0.3],
                                          [1.0] * 3).is_uniform())


class DecayEnvelopeTestCase(base.BaseTestCase):
    def setUp(self):
        super(DecayEnvelopeTestCase, self).setUp()
        self.t = np.linspace(0.0, 2.0, 201)

    def test_zero_series(self):
        result = diagnostics.audit_decay_envelope(
            synthetic_series(self.t, np.zeros_like(self.t)), 1.0, 0.01)
        self.assertTrue(result.passed)
        self.assertEqual(float('inf'), result.margin)

    def test_faster_decay_passes(self):
        result = diagnostics.audit_decay_envelope(
            synthetic_series(self.t, np.exp(-2 * self.t)), 1.0, 0.01)
        self.assertTrue(result.passed)
        self.assertIsNone(result.details['first_failure'])

    def test_margin_ignores_initial_sample(self):
        result = diagnostics.audit_decay_envelope(
            synthetic_series(self.t, np.exp(-1.5 * self.t)), 1.0, 0.01)
        self.assertTrue(result.passed)
        # tightest at the first step after t_0
        self.assertAlmostEqual(1.01 * np.exp(0.005) - 1.0, result.margin, 12)
        self.assertGreater(result.margin, 0.01)

    def test_single_sample(self):
        result = diagnostics.audit_decay_envelope(
            synthetic_series([0.0], [1.0]), 1.0, 0.01)
        self.assertTrue(result.passed)
        self.assertEqual(float('inf'), result.margin)

    def test_slower_decay_fails(self):
        result = diagnostics.audit_decay_envelope(
            synthetic_series(self.t, np.exp(-0.5 * self.t)), 1.0, 0.01)
        self.assertFalse(result.passed)
        # first grid time with exp(t/2) > 1.01, i.e. t > 2 log(1.01)
        self.assertAlmostEqual(0.02, result.details['first_failure'], 12)
        self.assertLess(result.margin, 0)

    def test_negative_rate(self):
        self.assertRaises(ValueError, diagnostics.audit_decay_envelope,
                          synthetic_series(self.t, np.ones_like(self.t)),
                          -1.0, 0.01)


class EnergyInequalityTestCase(base.BaseTestCase):
    def test_zero_trajectory(self):
        t = np.linspace(0.0, 1.0, 11)
        zeros = np.zeros_like(t)
        result = diagnostics.audit_energy_inequality(
            synthetic_series(t, zeros), 0.43, 0.40, 1e-3)
        self.assertTrue(result.passed)
        self.assertEqual(9, result.details['intervals'])

    def test_exact_dissipation_passes(self):
        # E_0 = E_2 = E_4 = exp(-t), so dE_0/dt = -E_0.
        t = np.linspace(0.0, 1.0, 1001)
        e = np.exp(-t)
        series = synthetic_series(t, e, e2=e, e4=e)
        self.assertTrue(diagnostics.audit_energy_inequality(
            series, 0.25, 0.25, 1e-3).passed)
        self.assertFalse(diagnostics.audit_energy_inequality(
            series, 1.0, 1.0, 1e-3).passed)

    def test_injected_growth_fails(self):
        t = np.linspace(0.0, 1.0, 101)
        e = np.exp(-t)
        e[50:] *= 1.5
        result = diagnostics.audit_energy_inequality(
            synthetic_series(t, e, e2=e, e4=e), 0.25, 0.25, 1e-3)
        self.assertFalse(result.passed)
        np.testing.assert_allclose([0.49, 0.5], result.details['failures'])

    def test_short_series(self):
        result = diagnostics.audit_energy_inequality(
            synthetic_series([0.0, 1.0], [1.0, 2.0]), 1.0, 1.0, 0.0)
        self.assertTrue(result.passed)


class FitTestCase(base.BaseTestCase):
    def setUp(self):
        super(FitTestCase, self).setUp()
        self.t = np.linspace(0.0, 2.0, 401)

    def test_exact_exponential(self):
        rate, residual = diagnostics.fit_decay_rate(
            synthetic_series(self.t, np.exp(-3 * self.t)))
        self.assertAlmostEqual(3.0, rate, 10)
        self.assertLess(residual, 1e-10)

    def test_modulated_exponential(self):
        t = np.linspace(0.0, 20.0, 2001)
        e = np.exp(-3 * t) * (2 + np.cos(t)) / 3.0
        rate, residual = diagnostics.fit_decay_rate(synthetic_series(t, e))
        self.assertAlmostEqual(3.0, rate, delta=0.1)
        self.assertLess(residual, np.log(3.0))

    def test_constant(self):
        rate, _ = diagnostics.fit_decay_rate(
            synthetic_series(self.t, np.full_like(self.t, 0.2)))
        self.assertAlmostEqual(0.0, rate, 12)

    def test_window(self):
        e = np.where(self.t < 1.0, np.exp(-self.t), np.exp(-1 - 2 * (
            self.t - 1.0)))
        rate, _ = diagnostics.fit_decay_rate(synthetic_series(self.t, e),
                                             window=(1.0, 2.0))
        self.assertAlmostEqual(2.0, rate, 10)

    def test_degenerate_window(self):
        series = synthetic_series(self.t, np.exp(-self.t))
        self.assertRaises(exceptions.DegenerateWindowException,
                          diagnostics.fit_decay_rate, series,
                          window=(0.5, 0.502))
        zero = synthetic_series(self.t, np.zeros_like(self.t))
        self.assertRaises(exceptions.DegenerateWindowException,
                          diagnostics.fit_decay_rate, zero)

    def test_dissipation_constant(self):
        e = np.exp(-2 * self.t)
        series = synthetic_series(self.t, e, sob_low=e, sob_high=e)
        delta = diagnostics.fit_dissipation_constant(
            series, diagnostics.sobolev_column(2),
            diagnostics.sobolev_column(4))
        self.assertAlmostEqual(2.0, delta, 4)

    def test_dissipation_constant_without_data(self):
        series = synthetic_series(self.t, np.zeros_like(self.t))
        self.assertIsNone(diagnostics.fit_dissipation_constant(
            series, diagnostics.sobolev_column(2),
            diagnostics.sobolev_column(4)))


class SobolevPropagationTestCase(base.BaseTestCase):
    def setUp(self):
        super(SobolevPropagationTestCase, self).setUp()
        self.t = np.linspace(0.0, 2.0, 201)

    def test_zero_trajectory(self):
        zeros = np.zeros_like(self.t)
        result = diagnostics.audit_sobolev_propagation(
            synthetic_series(self.t, zeros), 1.0, 2, 4)
        self.assertTrue(result.passed)
        self.assertEqual(0.0, result.details['fitted_constant'])

    def test_decaying_trajectory(self):
        e = 0.1 * np.exp(-self.t)
        result = diagnostics.audit_sobolev_propagation(
            synthetic_series(self.t, e, sob_low=e, sob_high=e), 1.0, 2, 4)
        self.assertTrue(result.passed)
        self.assertTrue(result.details['converging'])
        self.assertAlmostEqual(0.1 * (1 - np.exp(-2.0)),
                               result.details['integral'], 4)

    def test_growth_fails(self):
        e = 0.1 * np.exp(3 * self.t)
        result = diagnostics.audit_sobolev_propagation(
            synthetic_series(self.t, e, sob_low=e, sob_high=e), 1.0, 2, 4)
        self.assertFalse(result.passed)
        self.assertFalse(result.details['converging'])
        self.assertLess(result.margin, 0)


class SimpleAuditsTestCase(base.BaseTestCase):
    def test_mass(self):
        series = synthetic_series([0.0, 1.0], [1.0, 1.0])
        self.assertTrue(diagnostics.audit_mass(series, 0.0).passed)

    def test_positivity(self):
        series = synthetic_series([0.0, 1.0], [1.0, 1.0],
                                  min_f=[0.3, -0.1])
        result = diagnostics.audit_positivity(series)
        self.assertFalse(result.passed)
        self.assertEqual(-0.1, result.margin)

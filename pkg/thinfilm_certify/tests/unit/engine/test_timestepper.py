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

import mock
import numpy as np
from oslotest import base
from scipy import linalg

from thinfilm_certify.engine import diagnostics
from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import initial_data
from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import spectral_core as sc
from thinfilm_certify.engine import stokes_model
from thinfilm_certify.engine import timestepper

L1 = np.array([[-4.0, -2.0], [-3.0, -3.0]])


def capillary_model(mean_f=1.0, mean_g=1.5):
    c = muskat_model.MuskatConstants(
        b=1.0, b_mu=1.0, b_rho=2.0, A=1.0, A_mu=1.0, A_gamma=2.0,
        variant=muskat_model.CAPILLARY)
    return muskat_model.MuskatModel(c, mean_f, mean_g)


def random_state(K, seed, amplitude=0.01):
    rng = np.random.default_rng(seed)
    parts = []
    for _ in range(2):
        modes = {}
        for k in range(1, K + 1):
            z = rng.standard_normal(2)
            modes[k] = amplitude * (z[0] + 1j * z[1]) / k ** 2
        parts.append(sc.TrigPoly.from_modes(modes, K))
    return muskat_model.SimState(parts[0], parts[1], 1.0, 1.5)


def single_mode_state(K=4):
    return muskat_model.SimState(sc.TrigPoly.from_modes({1: 0.005}, K),
                                 sc.TrigPoly.zeros(K), 1.0, 1.5)


class StepperConfigTestCase(base.BaseTestCase):
    def test_invalid_values(self):
        for kwargs in (dict(dt=0.0), dict(t_end=-1.0), dict(K=0),
                       dict(scheme='leapfrog'), dict(sample_every=0)):
            values = dict(dt=1e-3, scheme=timestepper.IMEX_CN_AB2, K=4,
                          t_end=1.0)
            values.update(kwargs)
            self.assertRaises(exceptions.InvalidParameterException,
                              timestepper.StepperConfig, **values)

    def test_step_count(self):
        cfg = timestepper.StepperConfig(1e-3, timestepper.IMEX_BE, 4, 0.25)
        self.assertEqual(250, cfg.n_steps)
        self.assertEqual(500, cfg.replace(dt=5e-4).n_steps)


class PropagatorsTestCase(base.BaseTestCase):
    def test_backward_euler_inverse(self):
        symbols = np.array([np.zeros((2, 2)), L1])
        props = timestepper.precompute_propagators(
            symbols, 0.1, timestepper.IMEX_BE)
        expected = np.array([[1.3, -0.2], [-0.3, 1.4]]) / 1.76
        np.testing.assert_allclose(expected, props.inverse[1], rtol=1e-13)
        np.testing.assert_allclose(expected, props.propagator[1],
                                   rtol=1e-13)

    def test_mode_zero_is_identity(self):
        symbols = capillary_model().linear_symbols(4)
        for scheme in timestepper.IMPLICIT_SCHEMES:
            props = timestepper.precompute_propagators(symbols, 0.5, scheme)
            np.testing.assert_array_equal(np.eye(2), props.propagator[0])

    def test_small_step_tends_to_identity(self):
        symbols = np.array([np.zeros((2, 2)), L1])
        props = timestepper.precompute_propagators(
            symbols, 1e-12, timestepper.IMEX_CN_AB2)
        np.testing.assert_allclose(np.eye(2), props.propagator[1],
                                   atol=1e-10)

    def test_crank_nicolson_matches_exponential(self):
        symbols = np.array([np.zeros((2, 2)), L1])
        for dt in (1e-2, 1e-3):
            props = timestepper.precompute_propagators(
                symbols, dt, timestepper.IMEX_CN_AB2)
            error = np.linalg.norm(props.propagator[1] - linalg.expm(dt * L1))
            self.assertLess(error, dt ** 3 * np.linalg.norm(L1) ** 3)

    def test_singular_system(self):
        symbols = np.array([np.zeros((2, 2)), np.eye(2) * 10.0])
        self.assertRaises(exceptions.SingularPropagatorException,
                          timestepper.precompute_propagators, symbols, 0.1,
                          timestepper.IMEX_BE)

    def test_backward_euler_is_linearly_stable(self):
        rng = np.random.default_rng(11)
        symbols = capillary_model().linear_symbols(16)
        for dt in 10.0 ** rng.uniform(-6, 1, size=20):
            props = timestepper.precompute_propagators(
                symbols, dt, timestepper.IMEX_BE)
            radius = np.max(np.abs(np.linalg.eigvals(props.propagator)),
                            axis=1)
            self.assertTrue(np.all(radius <= 1.0 + 1e-12))

    def test_not_implicit(self):
        self.assertRaises(ValueError, timestepper.precompute_propagators,
                          np.zeros((2, 2, 2)), 0.1, timestepper.RK4_EXPLICIT)


class StepTestCase(base.BaseTestCase):
    def test_zero_state_is_fixed(self):
        model = capillary_model()
        for scheme in timestepper.SCHEMES:
            cfg = timestepper.StepperConfig(1e-3, scheme, 4, 1.0)
            s = timestepper.TimeStepper(model, cfg).step(
                muskat_model.SimState.zero(4, 1.0, 1.5))
            self.assertEqual(0.0, float(np.max(np.abs(s.as_array()))))
            self.assertAlmostEqual(1e-3, s.t, 15)

    def test_mass_stays_zero(self):
        model = capillary_model()
        cfg = timestepper.StepperConfig(1e-4, timestepper.IMEX_CN_AB2, 8,
                                        1.0)
        stepper = timestepper.TimeStepper(model, cfg)
        s = random_state(8, 5)
        for _ in range(20):
            s = stepper.step(s)
            self.assertEqual(0, s.fbar.coefficient(0))
            self.assertEqual(0, s.gbar.coefficient(0))

    def test_linear_single_mode_matches_exponential(self):
        model = capillary_model()
        dt, n = 1e-3, 50
        cfg = timestepper.StepperConfig(dt, timestepper.IMEX_CN_AB2, 4,
                                        dt * n, nonlinear=False)
        stepper = timestepper.TimeStepper(model, cfg)
        s = single_mode_state()
        for _ in range(n):
            s = stepper.step(s)
        expected = linalg.expm(dt * n * L1).dot([0.005, 0.0])
        actual = [s.fbar.coefficient(1), s.gbar.coefficient(1)]
        np.testing.assert_allclose(expected, np.real(actual), atol=5e-8)

    def test_rk4_agrees_with_imex(self):
        model = capillary_model()
        s0 = random_state(8, 7)
        dcfg = diagnostics.DiagnosticsConfig(3)
        finals = []
        for scheme in (timestepper.RK4_EXPLICIT, timestepper.IMEX_CN_AB2):
            cfg = timestepper.StepperConfig(1e-5, scheme, 8, 0.01,
                                            sample_every=1000)
            final, _ = timestepper.integrate(s0, cfg, model, dcfg)
            finals.append(final.as_array())
        np.testing.assert_allclose(finals[0], finals[1], rtol=0, atol=1e-8)

    def test_blow_up_is_reported(self):
        model = capillary_model()
        cfg = timestepper.StepperConfig(1.0, timestepper.RK4_EXPLICIT, 8,
                                        100.0, nonlinear=False)
        with np.errstate(all='ignore'):
            exc = self.assertRaises(
                exceptions.NumericalInstabilityException,
                timestepper.integrate, random_state(8, 1), cfg, model,
                diagnostics.DiagnosticsConfig(3))
        self.assertIsNotNone(exc.t)

    def test_nonlinear_overflow_is_reported(self):
        model = capillary_model()

        def overflowing(s):
            return np.float64(1e308) * np.float64(10.0)

        cfg = timestepper.StepperConfig(1e-3, timestepper.IMEX_CN_AB2, 4,
                                        0.01)
        with mock.patch.object(model, 'nonlinear_rhs',
                               side_effect=overflowing):
            exc = self.assertRaises(
                exceptions.NumericalInstabilityException,
                timestepper.integrate, single_mode_state(), cfg, model,
                diagnostics.DiagnosticsConfig(3))
        self.assertEqual(0.0, exc.t)

    def test_nonlinear_blow_up_is_reported(self):
        c = stokes_model.StokesConstants(10.0, 30.0, 3)
        model = stokes_model.StokesModel(c, 1.0, 0.3)
        s0 = muskat_model.SimState(initial_data.single_mode(0.9, 1, 16),
                                   sc.TrigPoly.zeros(16), 1.0, 0.3)
        cfg = timestepper.StepperConfig(1e-2, timestepper.IMEX_CN_AB2, 16,
                                        10.0, sample_every=100)
        with np.errstate(all='ignore'):
            exc = self.assertRaises(
                exceptions.NumericalInstabilityException,
                timestepper.integrate, s0, cfg, model,
                diagnostics.DiagnosticsConfig(3))
        self.assertIsNotNone(exc.t)
        self.assertLess(exc.t, 10.0)


class IntegrateTestCase(base.BaseTestCase):
    def setUp(self):
        super(IntegrateTestCase, self).setUp()
        self.model = capillary_model()
        self.dcfg = diagnostics.DiagnosticsConfig(3)

    def test_zero_horizon(self):
        s0 = single_mode_state()
        cfg = timestepper.StepperConfig(1e-3, timestepper.IMEX_CN_AB2, 4, 0.0)
        final, series = timestepper.integrate(s0, cfg, self.model, self.dcfg)
        self.assertIs(s0, final)
        self.assertEqual(1, len(series))

    def test_sample_counts(self):
        s0 = single_mode_state()
        counts = []
        for every in (1, 2):
            cfg = timestepper.StepperConfig(1e-3, timestepper.IMEX_CN_AB2,
                                            4, 0.01, sample_every=every)
            _, series = timestepper.integrate(s0, cfg, self.model, self.dcfg)
            counts.append(len(series))
            self.assertEqual(self.dcfg.columns, series.columns)
        self.assertEqual([11, 6], counts)

    def test_observers_see_every_sample(self):
        seen = []
        cfg = timestepper.StepperConfig(1e-3, timestepper.IMEX_BE, 4, 0.005)
        timestepper.integrate(single_mode_state(), cfg, self.model,
                              self.dcfg, observers=[seen.append])
        self.assertEqual(6, len(seen))

    def test_restart_matches_single_run(self):
        s0 = random_state(6, 3)
        cfg = timestepper.StepperConfig(1e-4, timestepper.IMEX_CN_AB2, 6,
                                        0.002)
        single, _ = timestepper.integrate(s0, cfg, self.model, self.dcfg)

        half = cfg.replace(t_end=0.001)
        stepper = timestepper.TimeStepper(self.model, half)
        stepper.setup()
        middle, first = timestepper.integrate(s0, half, self.model,
                                              self.dcfg, stepper=stepper)
        final, second = timestepper.integrate(middle, half, self.model,
                                              self.dcfg, stepper=stepper)
        np.testing.assert_array_equal(single.as_array(), final.as_array())
        self.assertEqual(single.t, final.t)
        first.extend(second)
        self.assertEqual(21, len(first))

    def test_resume_rejects_other_step(self):
        cfg = timestepper.StepperConfig(1e-4, timestepper.IMEX_CN_AB2, 4,
                                        0.001)
        stepper = timestepper.TimeStepper(self.model, cfg)
        self.assertRaises(ValueError, timestepper.integrate,
                          single_mode_state(), cfg.replace(dt=2e-4),
                          self.model, self.dcfg, stepper=stepper)

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

import os

import fixtures
from oslo_config import fixture as config_fixture
from oslotest import base

from thinfilm_certify.conf import CONF
from thinfilm_certify.engine import common
from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import spectral_core as sc
from thinfilm_certify.engine import stokes_model


class CommonTestCase(base.BaseTestCase):
    def setUp(self):
        super(CommonTestCase, self).setUp()
        self.conf = self.useFixture(config_fixture.Config(CONF))
        self.conf.config(f_preset='single_mode', f_amplitude=0.01,
                         group='initial_data')
        self.conf.config(bandwidth=8, group='stepper')
        self.tmpdir = self.useFixture(fixtures.TempDir()).path

    def settings(self):
        return common.RunSettings.from_conf(CONF)

    def write_conf(self, text):
        path = os.path.join(self.tmpdir, 'thinfilm.conf')
        with open(path, 'w') as handle:
            handle.write(text)
        return path

    def test_snapshot(self):
        settings = self.settings()
        self.assertEqual('muskat_capillary', settings.model)
        self.assertEqual('muskat', settings.family)
        self.assertEqual(8, settings.get('stepper', 'bandwidth'))
        self.conf.config(bandwidth=16, group='stepper')
        self.assertEqual(8, settings.get('stepper', 'bandwidth'))

    def test_replace_leaves_original(self):
        settings = self.settings()
        changed = settings.replace({('DEFAULT', 'mean_g'): 0.5,
                                    ('physical', 'gravity'): 2.0})
        self.assertEqual(0.5, changed.get('DEFAULT', 'mean_g'))
        self.assertEqual(2.0, changed.get('physical', 'gravity'))
        self.assertEqual(1.5, settings.get('DEFAULT', 'mean_g'))

    def test_build_default_model(self):
        constants, model = common.build_model(self.settings())
        self.assertIsInstance(model, muskat_model.MuskatModel)
        self.assertEqual((1.0, 1.0, 2.0, 1.0, 1.0, 2.0),
                         (constants.b, constants.b_mu, constants.b_rho,
                          constants.A, constants.A_mu, constants.A_gamma))
        self.assertEqual(1.5, model.mean_g)
        self.assertEqual('gbar', model.n2b_leading_factor)
        self.assertEqual(1.0, common.time_scale(self.settings(), constants))

    def test_build_stokes_model(self):
        self.conf.config(model='stokes_capillary')
        self.conf.config(gamma_f=3.0, gamma_h=3.0, group='physical')
        constants, model = common.build_model(self.settings())
        self.assertIsInstance(model, stokes_model.StokesModel)
        self.assertEqual(3, constants.zeta)
        self.assertAlmostEqual(2.0,
                               common.time_scale(self.settings(), constants))

    def test_inconsistent_physics(self):
        self.conf.config(model='muskat_gravity')
        self.assertRaises(exceptions.InvalidParameterException,
                          common.build_model, self.settings())

    def test_stepper_and_diagnostics(self):
        settings = self.settings()
        cfg = common.stepper_config(settings)
        self.assertEqual(8, cfg.K)
        self.assertEqual('imex_cn_ab2', cfg.scheme)
        dcfg = common.diagnostics_config(settings, 3)
        self.assertIn('E_sob_2', dcfg.columns)

    def test_bad_orders(self):
        self.conf.config(sobolev_orders=['one'], group='diagnostics')
        self.assertRaises(exceptions.ConfigurationException,
                          common.diagnostics_config, self.settings(), 3)

    def test_initial_state(self):
        s = common.initial_state(self.settings())
        self.assertEqual(8, s.K)
        self.assertAlmostEqual(0.01, sc.wiener_norm(s.fbar, 0), 15)
        self.assertEqual(32, common.initial_state(self.settings(), K=32).K)

    def test_explicit_coefficients(self):
        self.conf.config(g_preset='coefficients',
                         g_coefficients=['1:0.001:0', '2:0:0.002'],
                         group='initial_data')
        s = common.initial_state(self.settings())
        self.assertEqual(0.002j, s.gbar.coefficient(2))

    def test_known_keys_pass(self):
        path = self.write_conf('[DEFAULT]\nmodel = muskat_gravity\n'
                               '[physical]\ngamma_f = 0\n')
        common.check_unknown_keys([path], CONF)

    def test_unknown_keys_rejected(self):
        path = self.write_conf('[DEFAULT]\nmodle = muskat_gravity\n'
                               '[physical]\ngama_f = 0\n[phisical]\nx = 1\n')
        exc = self.assertRaises(exceptions.ConfigurationException,
                                common.check_unknown_keys, [path], CONF)
        self.assertIn('modle', str(exc))
        self.assertIn('gama_f', str(exc))
        self.assertIn('phisical', str(exc))


class SweepAxesTestCase(base.BaseTestCase):
    def test_bare_and_qualified_names(self):
        axes = common.parse_axes(['mean_g:0.5,1.0,1.5',
                                  'physical.gravity:1,2'])
        self.assertEqual(('DEFAULT', 'mean_g', [0.5, 1.0, 1.5]),
                         (axes[0].group, axes[0].key, axes[0].values))
        self.assertEqual(('physical', 'gravity', [1.0, 2.0]),
                         (axes[1].group, axes[1].key, axes[1].values))

    def test_initial_data_axis(self):
        axes = common.parse_axes(['f_amplitude:0.01, 0.02'])
        self.assertEqual('initial_data', axes[0].group)
        self.assertEqual([0.01, 0.02], axes[0].values)

    def test_invalid_axes(self):
        for raw in ('mean_g', 'mean_g:', 'viscosity:1,2',
                    'mean_g:a,b', 'f_coefficients:1:0:0',
                    'stepper.dt:1e-3'):
            self.assertRaises(exceptions.ConfigurationException,
                              common.parse_axes, [raw])

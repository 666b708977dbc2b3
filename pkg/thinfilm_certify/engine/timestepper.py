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

"""IMEX time integration of the split thin-film systems.

The linear part is constant-coefficient and diagonal over wavenumbers, so
every implicit solve is a 2x2 system per mode. The nonlinearity is always
treated explicitly.
"""

import numpy as np
from oslo_log import log

from thinfilm_certify.engine import diagnostics
from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import spectral_core

LOG = log.getLogger(__name__)

IMEX_CN_AB2 = 'imex_cn_ab2'
IMEX_BE = 'imex_be'
RK4_EXPLICIT = 'rk4_explicit'
SCHEMES = (IMEX_CN_AB2, IMEX_BE, RK4_EXPLICIT)
IMPLICIT_SCHEMES = (IMEX_CN_AB2, IMEX_BE)


class StepperConfig(object):
    def __init__(self, dt, scheme, K, t_end, sample_every=1, nonlinear=True,
                 stability_ratio=0.1, conditioning_limit=1e12):
        if not dt > 0:
            raise exceptions.InvalidParameterException(
                "Time step must be positive, got %r" % dt)
        if t_end < 0:
            raise exceptions.InvalidParameterException(
                "Final time must be nonnegative, got %r" % t_end)
        if K < 1:
            raise exceptions.InvalidParameterException(
                "Bandwidth must be at least 1, got %r" % K)
        if scheme not in SCHEMES:
            raise exceptions.InvalidParameterException(
                "Unknown scheme %r" % scheme)
        if sample_every < 1:
            raise exceptions.InvalidParameterException(
                "sample_every must be at least 1, got %r" % sample_every)
        self.dt = float(dt)
        self.scheme = scheme
        self.K = int(K)
        self.t_end = float(t_end)
        self.sample_every = int(sample_every)
        self.nonlinear = nonlinear
        self.stability_ratio = stability_ratio
        self.conditioning_limit = conditioning_limit

    @property
    def n_steps(self):
        return int(round(self.t_end / self.dt))

    def replace(self, **kwargs):
        values = dict(dt=self.dt, scheme=self.scheme, K=self.K,
                      t_end=self.t_end, sample_every=self.sample_every,
                      nonlinear=self.nonlinear,
                      stability_ratio=self.stability_ratio,
                      conditioning_limit=self.conditioning_limit)
        values.update(kwargs)
        return StepperConfig(**values)

    def to_dict(self):
        return dict(vars(self))


class Propagators(object):
    """Per-mode factorized solves of one implicit scheme.

    ``apply(u, rhs)`` returns (I - theta dt L)^-1 (E u + rhs) with
    E = I + (1 - theta) dt L, mode by mode.
    """

    def __init__(self, scheme, dt, system, inverse, explicit,
                 ill_conditioned):
        self.scheme = scheme
        self.dt = dt
        self.system = system
        self.inverse = inverse
        self.explicit = explicit
        self.propagator = np.einsum('kij,kjl->kil', inverse, explicit)
        self.ill_conditioned = ill_conditioned

    @staticmethod
    def _apply(mats, array):
        K = (array.shape[1] - 1) // 2
        per_mode = mats[np.abs(np.arange(-K, K + 1))]
        return np.einsum('kij,jk->ik', per_mode, array)

    def apply(self, u, rhs=None):
        """Advance the (2, 2K+1) coefficient array u by one implicit step."""
        if rhs is None:
            result = self._apply(self.propagator, u)
        else:
            result = self._apply(self.inverse,
                                 self._apply(self.explicit, u) + rhs)
        if np.any(self.ill_conditioned):
            K = (u.shape[1] - 1) // 2
            full = self._apply(self.explicit, u)
            if rhs is not None:
                full = full + rhs
            for k in np.nonzero(self.ill_conditioned)[0]:
                for col in {K + k, K - k}:
                    result[:, col] = np.linalg.solve(self.system[k],
                                                     full[:, col])
        return result


def precompute_propagators(symbols, dt, scheme, conditioning_limit=1e12):
    """Factor the implicit 2x2 systems of every mode.

    :param symbols: (K+1, 2, 2) array of linear symbols L(k), k = 0..K.
    :param dt: time step.
    :param scheme: 'imex_be' or 'imex_cn_ab2'.
    :param conditioning_limit: modes whose system exceeds this condition
        number are solved with pivoting instead of the explicit inverse.
    :returns: Propagators.
    :raise SingularPropagatorException: a mode has a singular system.
    """
    if scheme not in IMPLICIT_SCHEMES:
        raise ValueError("Scheme %r has no implicit part" % scheme)
    theta = 1.0 if scheme == IMEX_BE else 0.5
    identity = np.eye(2)[np.newaxis, :, :]
    system = identity - theta * dt * symbols
    explicit = identity + (1.0 - theta) * dt * symbols
    det = (system[:, 0, 0] * system[:, 1, 1]
           - system[:, 0, 1] * system[:, 1, 0])
    singular = ~np.isfinite(det) | (det == 0)
    if np.any(singular):
        err_msg = ("Implicit system is singular for modes %s at dt=%g, "
                   "check the constants and the time step"
                   % (np.nonzero(singular)[0].tolist(), dt))
        LOG.error(err_msg)
        raise exceptions.SingularPropagatorException(err_msg)
    adjugate = np.empty_like(system)
    adjugate[:, 0, 0] = system[:, 1, 1]
    adjugate[:, 1, 1] = system[:, 0, 0]
    adjugate[:, 0, 1] = -system[:, 0, 1]
    adjugate[:, 1, 0] = -system[:, 1, 0]
    inverse = adjugate / det[:, np.newaxis, np.newaxis]
    ill_conditioned = np.linalg.cond(system) > conditioning_limit
    if np.any(ill_conditioned):
        LOG.warning("Implicit systems of modes %s are ill conditioned, "
                    "solving them with pivoting.",
                    np.nonzero(ill_conditioned)[0].tolist())
    return Propagators(scheme, dt, system, inverse, explicit,
                       ill_conditioned)


class TimeStepper(object):
    """Stateful stepper; keeps the Adams-Bashforth history between calls."""

    def __init__(self, model, cfg):
        self.model = model
        self.cfg = cfg
        self.propagators = None
        self._symbols = None
        self._previous_nonlinear = None
        self._warned = False

    def setup(self):
        self._symbols = self.model.linear_symbols(self.cfg.K)
        if self.cfg.scheme in IMPLICIT_SCHEMES:
            self.propagators = precompute_propagators(
                self._symbols, self.cfg.dt, self.cfg.scheme,
                self.cfg.conditioning_limit)
        self._previous_nonlinear = None

    @staticmethod
    def _guarded(evaluate, s):
        """Run a right-hand side evaluation; overflow aborts at s.t."""
        try:
            with np.errstate(over='raise', invalid='raise'):
                result = evaluate(s)
        except (FloatingPointError,
                exceptions.NumericalInstabilityException) as e:
            err_msg = ("Right-hand side overflowed at t=%(t)g, the "
                       "integration is unstable: %(error)s"
                       % {'t': s.t, 'error': e})
            LOG.error(err_msg)
            raise exceptions.NumericalInstabilityException(err_msg, t=s.t)
        if not np.all(np.isfinite(result)):
            err_msg = ("Non-finite right-hand side at t=%g, the "
                       "integration is unstable" % s.t)
            LOG.error(err_msg)
            raise exceptions.NumericalInstabilityException(err_msg, t=s.t)
        return result

    def _nonlinear_terms(self, s):
        n1, n2 = self.model.nonlinear_rhs(s)
        return np.vstack([n1.coeffs, n2.coeffs])

    def _nonlinear(self, s):
        if not self.cfg.nonlinear:
            return np.zeros((2, 2 * s.K + 1), dtype=complex)
        return self._guarded(self._nonlinear_terms, s)

    def _linear(self, s):
        lf, lg = spectral_core.apply_mode_matrices(self._symbols,
                                                   s.fbar, s.gbar)
        return np.vstack([lf.coeffs, lg.coeffs])

    def _rhs(self, s):
        return self._guarded(self._linear, s) + self._nonlinear(s)

    def _watch_resolution(self, u, nonlinear, t):
        if self._warned or not self.cfg.nonlinear:
            return
        size = np.sum(np.abs(u))
        if size == 0:
            return
        ratio = self.cfg.dt * np.sum(np.abs(nonlinear)) / size
        if ratio > self.cfg.stability_ratio:
            LOG.warning("dt * |N| / |state| = %(ratio).3g exceeds "
                        "%(limit)g at t=%(t)g, the time step may be too "
                        "large.", {'ratio': ratio,
                                   'limit': self.cfg.stability_ratio,
                                   't': t})
            self._warned = True

    def _state(self, array, s, t):
        if not np.all(np.isfinite(array)):
            err_msg = ("Non-finite coefficients after the step ending at "
                       "t=%g, the integration is unstable" % t)
            LOG.error(err_msg)
            raise exceptions.NumericalInstabilityException(err_msg, t=t)
        return muskat_model.SimState.from_array(array, s.mean_f, s.mean_g, t)

    def step(self, s):
        """Advance one step of the configured scheme."""
        if self._symbols is None:
            self.setup()
        dt = self.cfg.dt
        t = s.t + dt
        u = s.as_array()
        scheme = self.cfg.scheme
        if scheme == RK4_EXPLICIT:
            k1 = self._rhs(s)
            k2 = self._rhs(self._state(u + 0.5 * dt * k1, s, s.t))
            k3 = self._rhs(self._state(u + 0.5 * dt * k2, s, s.t))
            k4 = self._rhs(self._state(u + dt * k3, s, s.t))
            new = u + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            return self._state(new, s, t)

        nonlinear = self._nonlinear(s)
        self._watch_resolution(u, nonlinear, s.t)
        if scheme == IMEX_BE or self._previous_nonlinear is None:
            explicit = dt * nonlinear
        else:
            explicit = dt * (1.5 * nonlinear - 0.5 * self._previous_nonlinear)
        if scheme == IMEX_CN_AB2:
            self._previous_nonlinear = nonlinear
        return self._state(self.propagators.apply(u, explicit), s, t)


def integrate(s0, cfg, model, diagnostics_config, observers=(),
              stepper=None):
    """Integrate to cfg.t_end, sampling every cfg.sample_every steps.

    :param s0: initial SimState.
    :param cfg: StepperConfig.
    :param model: MuskatModel or StokesModel.
    :param diagnostics_config: DiagnosticsConfig of the sampled functionals.
    :param observers: callables invoked with every sampled state.
    :param stepper: a TimeStepper to continue from; passing the stepper of
        a previous call resumes its multistep history exactly.
    :returns: (final SimState, DiagnosticsSeries).
    :raise NumericalInstabilityException: with the failing time attached.
    """
    if stepper is None:
        stepper = TimeStepper(model, cfg)
        stepper.setup()
    elif stepper.cfg.dt != cfg.dt or stepper.cfg.scheme != cfg.scheme:
        raise ValueError("Cannot resume a stepper with a different time "
                         "step or scheme")
    series = diagnostics.DiagnosticsSeries(
        diagnostics_config.columns,
        metadata={'scheme': cfg.scheme, 'dt': cfg.dt, 'K': cfg.K,
                  'model': model.name, 'sample_every': cfg.sample_every})
    n_steps = cfg.n_steps
    LOG.info("Integrating %(model)s with %(scheme)s: K=%(K)d dt=%(dt)g "
             "steps=%(steps)d.", {'model': model.name, 'scheme': cfg.scheme,
                                  'K': cfg.K, 'dt': cfg.dt,
                                  'steps': n_steps})

    def _observe(state):
        series.append(diagnostics.sample(state, diagnostics_config))
        for observer in observers:
            observer(state)

    state = s0
    _observe(state)
    for i in range(1, n_steps + 1):
        state = stepper.step(state)
        if i % cfg.sample_every == 0:
            LOG.debug("Sampled step %(i)d at t=%(t)g.", {'i': i, 't': state.t})
            _observe(state)
    return state, series

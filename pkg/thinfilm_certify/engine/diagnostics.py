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

"""Energy functionals sampled along trajectories and the audits run on them.

Column names follow the functional and its order: ``E_wiener_s`` is
|fbar|_{A^s} + |gbar|_{A^s}, ``E_sob_s`` is |fbar|^2_{H^s} + |gbar|^2_{H^s}
and ``E_sup_n`` is |d^n fbar|_inf + |d^n gbar|_inf.
"""

import numpy as np
from oslo_log import log
from scipy import integrate

from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import spectral_core

LOG = log.getLogger(__name__)

BASE_WIENER_ORDERS = (0, 2, 4)
MIN_FIT_SAMPLES = 3


def order_label(order):
    order = float(order)
    if order.is_integer():
        return '%d' % order
    return '%g' % order


def wiener_column(order):
    return 'E_wiener_%s' % order_label(order)


def sobolev_column(order):
    return 'E_sob_%s' % order_label(order)


def sup_column(order):
    return 'E_sup_%s' % order_label(order)


def _as_number(order):
    order = float(order)
    return int(order) if order.is_integer() else order


class DiagnosticsConfig(object):
    """Which functionals are sampled.

    The Wiener orders always include 0, 2, 4 and zeta + 1; the Sobolev
    orders always include (zeta + 1) / 2 and zeta + 1.
    """

    def __init__(self, zeta, sobolev_orders=(1, 2, 4), sup_orders=(0, 1, 2),
                 oversampling=spectral_core.DEFAULT_OVERSAMPLING):
        self.zeta = zeta
        self.wiener_orders = sorted(
            set(BASE_WIENER_ORDERS) | {zeta + 1})
        self.sobolev_orders = sorted(
            {_as_number(s) for s in sobolev_orders}
            | {_as_number((zeta + 1) / 2.0), zeta + 1})
        self.sup_orders = sorted({int(n) for n in sup_orders})
        self.oversampling = oversampling

    @property
    def propagation_orders(self):
        """Sobolev pair (low, high) of the regularity propagation audit."""
        return _as_number((self.zeta + 1) / 2.0), self.zeta + 1

    @property
    def columns(self):
        return (['t', 'mass_f', 'mass_g']
                + [wiener_column(s) for s in self.wiener_orders]
                + [sobolev_column(s) for s in self.sobolev_orders]
                + [sup_column(n) for n in self.sup_orders]
                + ['min_f', 'min_g'])


class DiagnosticsSample(object):
    def __init__(self, t, mass_f, mass_g, e_wiener, e_sobolev, e_sup,
                 min_f, min_g):
        self.t = t
        self.mass_f = mass_f
        self.mass_g = mass_g
        self.e_wiener = e_wiener
        self.e_sobolev = e_sobolev
        self.e_sup = e_sup
        self.min_f = min_f
        self.min_g = min_g

    def as_dict(self):
        row = {'t': self.t, 'mass_f': self.mass_f, 'mass_g': self.mass_g,
               'min_f': self.min_f, 'min_g': self.min_g}
        row.update((wiener_column(s), v) for s, v in self.e_wiener.items())
        row.update((sobolev_column(s), v) for s, v in self.e_sobolev.items())
        row.update((sup_column(n), v) for n, v in self.e_sup.items())
        return row


class DiagnosticsSeries(object):
    """Time ordered samples plus run metadata."""

    def __init__(self, columns, metadata=None, samples=None):
        self.columns = list(columns)
        self.metadata = dict(metadata or {})
        self.samples = []
        for sample in samples or []:
            self.append(sample)

    def __len__(self):
        return len(self.samples)

    def append(self, sample):
        if self.samples and sample.t < self.samples[-1].t:
            raise ValueError("Sample at t=%g precedes t=%g"
                             % (sample.t, self.samples[-1].t))
        self.samples.append(sample)

    def extend(self, other):
        for sample in other.samples:
            if self.samples and sample.t == self.samples[-1].t:
                continue
            self.append(sample)

    def rows(self):
        return [sample.as_dict() for sample in self.samples]

    def times(self):
        return np.array([sample.t for sample in self.samples])

    def column(self, name):
        return np.array([sample.as_dict()[name] for sample in self.samples])

    def is_uniform(self, rtol=1e-9):
        t = self.times()
        if t.size < 3:
            return True
        steps = np.diff(t)
        return bool(np.allclose(steps, steps[0], rtol=rtol, atol=0.0))


def check_positivity(s, oversampling=spectral_core.DEFAULT_OVERSAMPLING):
    """Grid minima of the film heights f = fbar + <f0>, g = gbar + <g0>.

    :returns: (min_f, min_g, ok) with ok true iff both minima are positive.
    """
    min_f = spectral_core.grid_minimum(s.fbar, oversampling) + s.mean_f
    min_g = spectral_core.grid_minimum(s.gbar, oversampling) + s.mean_g
    return min_f, min_g, bool(min_f > 0 and min_g > 0)


def sample(s, config):
    """Evaluate every configured functional on a state."""
    wiener = spectral_core.wiener_norm
    sobolev = spectral_core.sobolev_norm
    sup = spectral_core.sup_norm_deriv
    e_wiener = dict((a, wiener(s.fbar, a) + wiener(s.gbar, a))
                    for a in config.wiener_orders)
    e_sobolev = dict((r, sobolev(s.fbar, r) ** 2 + sobolev(s.gbar, r) ** 2)
                     for r in config.sobolev_orders)
    e_sup = dict((n, sup(s.fbar, n, config.oversampling)
                  + sup(s.gbar, n, config.oversampling))
                 for n in config.sup_orders)
    min_f, min_g, _ok = check_positivity(s, config.oversampling)
    return DiagnosticsSample(
        t=s.t,
        mass_f=float(abs(s.fbar.coeffs[s.K])),
        mass_g=float(abs(s.gbar.coeffs[s.K])),
        e_wiener=e_wiener, e_sobolev=e_sobolev, e_sup=e_sup,
        min_f=min_f, min_g=min_g)


class AuditResult(object):
    def __init__(self, name, passed, margin, **details):
        self.name = name
        self.passed = bool(passed)
        self.margin = margin
        self.details = details

    def to_dict(self):
        result = {'name': self.name, 'passed': self.passed,
                  'margin': self.margin}
        result.update(self.details)
        return result


def audit_decay_envelope(series, rate, tol,
                         functional=wiener_column(0)):
    """Check E(t) <= E(0) exp(-rate (t - t_0)) (1 + tol) at every sample.

    The margin is the smallest relative slack bound / E(t) - 1 over the
    samples after t_0 with E(t) > 0, infinite when there are none. The
    t_0 sample has slack tol by construction and is left out.
    """
    if rate < 0:
        raise ValueError("Decay rate must be nonnegative, got %r" % rate)
    t = series.times()[1:]
    values = series.column(functional)
    bound = values[0] * np.exp(-rate * (t - series.times()[0])) * (1.0 + tol)
    values = values[1:]
    positive = values > 0
    if not np.any(positive):
        return AuditResult('decay_envelope', True, float('inf'), rate=rate,
                           first_failure=None)
    slack = bound[positive] / values[positive] - 1.0
    failing = t[positive][slack < 0]
    first_failure = float(failing[0]) if failing.size else None
    return AuditResult('decay_envelope', failing.size == 0,
                       float(np.min(slack)), rate=rate,
                       first_failure=first_failure)


def audit_energy_inequality(series, delta_A, delta_b, tol,
                            order_A=4, order_b=2):
    """Discrete check of dE_0/dt + delta_A E_A + delta_b E_b <= 0.

    Central differences at interior samples, with the additive tolerance
    tol * (1 + E_A). The margin is minus the largest residual.
    """
    if not series.is_uniform():
        LOG.warning("Energy inequality audit on a non uniform series.")
    t = series.times()
    if t.size < 3:
        return AuditResult('energy_inequality', True, float('inf'),
                           intervals=0, failures=[])
    e0 = series.column(wiener_column(0))
    e_a = series.column(wiener_column(order_A))
    e_b = series.column(wiener_column(order_b))
    rate = (e0[2:] - e0[:-2]) / (t[2:] - t[:-2])
    residual = (rate + delta_A * e_a[1:-1] + delta_b * e_b[1:-1]
                - tol * (1.0 + e_a[1:-1]))
    failing = t[1:-1][residual > 0]
    return AuditResult('energy_inequality', failing.size == 0,
                       float(-np.max(residual)),
                       intervals=int(residual.size),
                       failures=[float(x) for x in failing[:10]])


def transient_window(series, fraction):
    t = series.times()
    return t[0] + fraction * (t[-1] - t[0]), t[-1]


def fit_decay_rate(series, window=None, functional=wiener_column(0)):
    """Least-squares exponential rate of a functional over a time window.

    :param series: DiagnosticsSeries.
    :param window: (t_start, t_stop), inclusive; the whole series when None.
    :param functional: column name of the fitted functional.
    :returns: (rate, residual), the negated slope of log E(t) and the root
        mean square deviation of log E(t) from the fitted line.
    :raise DegenerateWindowException: fewer than three samples in the
        window or a nonpositive value in it.
    """
    t = series.times()
    values = series.column(functional)
    if window is not None:
        inside = (t >= window[0]) & (t <= window[1])
        t, values = t[inside], values[inside]
    if t.size < MIN_FIT_SAMPLES:
        err_msg = ("Decay fit needs at least %d samples, the window holds "
                   "%d" % (MIN_FIT_SAMPLES, t.size))
        LOG.error(err_msg)
        raise exceptions.DegenerateWindowException(err_msg)
    if np.any(values <= 0):
        err_msg = "Decay fit of %s needs positive values" % functional
        LOG.error(err_msg)
        raise exceptions.DegenerateWindowException(err_msg)
    logs = np.log(values)
    slope, intercept = np.polyfit(t, logs, 1)
    residual = float(np.sqrt(np.mean((logs - (slope * t + intercept)) ** 2)))
    return float(-slope), residual


def fit_dissipation_constant(series, low_column, high_column):
    """Largest delta with dE_low/dt + delta E_high <= 0 at all samples.

    Interior samples with E_high = 0 are skipped; returns None when no
    sample is usable.
    """
    t = series.times()
    if t.size < 3:
        return None
    low = series.column(low_column)
    high = series.column(high_column)[1:-1]
    rate = (low[2:] - low[:-2]) / (t[2:] - t[:-2])
    usable = high > 0
    if not np.any(usable):
        return None
    return float(np.min(-rate[usable] / high[usable]))


def audit_sobolev_propagation(series, s_bound, low_order, high_order):
    """Bounded E_low and converging running integral of E_high.

    The integral counts as converging when its increment over the second
    half of the horizon does not exceed the increment over the first half.
    """
    e_low = series.column(sobolev_column(low_order))
    sup_low = float(np.max(e_low))
    bounded = sup_low <= s_bound
    t = series.times()
    integral_total = 0.0
    converging = True
    if t.size >= 2:
        running = integrate.cumulative_trapezoid(
            series.column(sobolev_column(high_order)), t, initial=0.0)
        integral_total = float(running[-1])
        half = running[np.searchsorted(t, 0.5 * (t[0] + t[-1]))]
        converging = (running[-1] - half) <= half * (1.0 + 1e-12)
    constant = sup_low / (e_low[0] + 1.0)
    return AuditResult('sobolev_propagation', bounded and converging,
                       float(s_bound - sup_low), sup_low=sup_low,
                       integral=integral_total, converging=bool(converging),
                       fitted_constant=float(constant))


def audit_mass(series, tol):
    worst = max(float(np.max(series.column('mass_f'))),
                float(np.max(series.column('mass_g'))))
    return AuditResult('mass', worst <= tol, float(tol - worst), worst=worst)


def audit_positivity(series):
    worst = min(float(np.min(series.column('min_f'))),
                float(np.min(series.column('min_g'))))
    return AuditResult('positivity', worst > 0, worst)


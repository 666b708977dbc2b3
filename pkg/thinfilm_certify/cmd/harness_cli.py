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

"""Command line harness: check | run | sweep | convergence | verify.

Exit codes: 0 success, 1 failed gate, audit or property suite,
2 configuration error, 3 numerical failure.
"""

from concurrent import futures
import itertools
import math
import sys

import numpy as np
from oslo_config import cfg
from oslo_log import log

import thinfilm_certify
from thinfilm_certify import conf
from thinfilm_certify.engine import certificates
from thinfilm_certify.engine import common
from thinfilm_certify.engine import diagnostics
from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import reporting
from thinfilm_certify.engine import timestepper
from thinfilm_certify.engine import verification

CONF = conf.CONF
LOG = log.getLogger(__name__)

PROJECT = 'thinfilm-certify'

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

CONFIG_ERRORS = (cfg.Error,
                 exceptions.ConfigurationException,
                 exceptions.InvalidParameterException,
                 exceptions.HermitianSymmetryException,
                 exceptions.NonZeroMeanException)
NUMERICAL_ERRORS = (exceptions.NumericalInstabilityException,
                    exceptions.SingularPropagatorException)

# Observed temporal order expected per scheme.
ORDER_BANDS = {
    timestepper.IMEX_CN_AB2: (1.7, 2.3),
    timestepper.IMEX_BE: (0.8, 1.2),
}

SWEEP_COLUMNS = [
    'e0', 'smallness_ok', 'sigma_1A', 'sigma_2A', 'sigma_1b', 'sigma_2b',
    'delta_A', 'delta_b', 'Sigma_1', 'Sigma_2', 'epsilon',
    'sobolev_margin_1', 'sobolev_margin_2', 'derived_margin_1',
    'derived_margin_2', 'sobolev_constant', 'eta', 'kappa',
    'stably_stratified', certificates.WIENER_GATE,
    certificates.SOBOLEV_GATE, 'predicted_rate', 'fitted_rate', 'error']

CONVERGENCE_COLUMNS = [
    'run', 'level', 'dt', 'K', 'E_wiener_0_final', 'difference',
    'observed_order', 'energy_gap']


def _build(settings):
    constants, model = common.build_model(settings)
    state = common.initial_state(settings)
    return state, constants, model


def _document(command, settings, constants):
    return {
        'command': command,
        'model': settings.model,
        'physical': common.physical_params(settings),
        'constants': constants,
        'mean_f': settings.get('DEFAULT', 'mean_f'),
        'mean_g': settings.get('DEFAULT', 'mean_g'),
        'seed': settings.get('DEFAULT', 'seed'),
        'time_scale': common.time_scale(settings, constants),
        'version': thinfilm_certify.__version__,
    }


def _gates_pass(report, settings):
    required = settings.get('DEFAULT', 'required_gates')
    return all(report.gates.get(gate, False) for gate in required)


def _output_dir(settings):
    return settings.get('DEFAULT', 'output_dir')


def _write_report(document, settings):
    return reporting.write_report(document, _output_dir(settings),
                                  settings.get('DEFAULT', 'report_file'))


def cmd_check(settings, args):
    """Evaluate the certificates of the configured datum."""
    state, constants, _model = _build(settings)
    report = certificates.evaluate(state, constants, settings.family)
    passed = _gates_pass(report, settings)
    document = _document('check', settings, constants)
    document.update(certificates=report, passed=passed)
    _write_report(document, settings)
    if not passed:
        LOG.warning("Required gates %(gates)s do not all pass for %(model)s.",
                    {'gates': settings.get('DEFAULT', 'required_gates'),
                     'model': settings.model})
        return EXIT_FAILED
    return EXIT_OK


def _energy_rates(report, zeta):
    """(delta_A, delta_b, order_A, order_b) of the discrete energy audit."""
    if report.model == certificates.STOKES:
        return max(report.epsilon, 0.0), 0.0, zeta + 1, 2
    delta_b = max(report.delta_b, 0.0)
    if report.delta_A is None:
        return 0.0, delta_b, 2, 2
    return max(report.delta_A, 0.0), delta_b, 4, 2


def _fit_or_none(series, window, column):
    try:
        return diagnostics.fit_decay_rate(series, window, column)
    except exceptions.DegenerateWindowException:
        LOG.info("No decay fit for %s, the window is degenerate.", column)
        return None, None


def audit_run(series, report, diag, settings):
    """Run every audit on a series and fill the report's fitted fields.

    :returns: (list of AuditResult, dict of fitted quantities).
    """
    d = settings.values['diagnostics']
    low, high = diag.propagation_orders
    window = diagnostics.transient_window(series, d['transient_fraction'])
    delta_A, delta_b, order_A, order_b = _energy_rates(report, diag.zeta)

    e_low = series.column(diagnostics.sobolev_column(low))
    audits = [
        diagnostics.audit_mass(series, d['mass_tol']),
        diagnostics.audit_positivity(series),
        diagnostics.audit_decay_envelope(
            series, max(report.predicted_rate, 0.0), d['envelope_tol']),
        diagnostics.audit_energy_inequality(
            series, delta_A, delta_b, d['energy_tol'], order_A, order_b),
        diagnostics.audit_sobolev_propagation(
            series, d['sobolev_growth_factor'] * e_low[0], low, high),
    ]

    decay_order = 1 if 1 in diag.sobolev_orders else low
    fitted_c, _residual = _fit_or_none(
        series, window, diagnostics.sobolev_column(decay_order))
    gated = report.sobolev_gate and fitted_c is not None
    audits.append(diagnostics.AuditResult(
        'sobolev_decay', fitted_c > 0 if gated else True,
        fitted_c, order=decay_order, gated=bool(gated)))

    fitted_rate, residual = _fit_or_none(
        series, window, diagnostics.wiener_column(0))
    report.fitted_c = fitted_c
    report.fitted_delta1 = diagnostics.fit_dissipation_constant(
        series, diagnostics.sobolev_column(low),
        diagnostics.sobolev_column(high))
    report.fitted_delta2 = diagnostics.fit_dissipation_constant(
        series, diagnostics.wiener_column(0),
        diagnostics.wiener_column(diag.zeta + 1))
    return audits, {'fitted_rate': fitted_rate, 'fit_residual': residual,
                    'transient_window': list(window)}


def cmd_run(settings, args):
    """Integrate the configured datum and audit the trajectory."""
    state, constants, model = _build(settings)
    report = certificates.evaluate(state, constants, settings.family)
    passed = _gates_pass(report, settings)
    document = _document('run', settings, constants)
    document.update(certificates=report, gates_passed=passed,
                    forced=bool(args.force))
    if not passed and not args.force:
        LOG.error("Required gates fail for %s, not integrating without "
                  "--force.", settings.model)
        _write_report(document, settings)
        return EXIT_FAILED

    stepper_cfg = common.stepper_config(settings)
    diag = common.diagnostics_config(settings, model.zeta)
    document['stepper'] = stepper_cfg
    try:
        _final, series = timestepper.integrate(state, stepper_cfg, model,
                                               diag)
    except NUMERICAL_ERRORS as e:
        document['failure'] = {'t': getattr(e, 't', None),
                               'message': str(e)}
        _write_report(document, settings)
        return EXIT_NUMERICAL

    audits, fits = audit_run(series, report, diag, settings)
    all_passed = all(audit.passed for audit in audits)
    document.update(audits=audits, fits=fits, metadata=series.metadata,
                    passed=all_passed)
    series_file = settings.get('DEFAULT', 'series_file')
    reporting.write_series_csv(series, _output_dir(settings), series_file)
    _write_report(document, settings)
    if args.emit_plot_script:
        reporting.write_plot_script(
            series_file, max(report.predicted_rate, 0.0),
            _output_dir(settings),
            settings.get('DEFAULT', 'plot_script_file'))
    for audit in audits:
        if not audit.passed:
            LOG.warning("Audit %(name)s failed with margin %(margin)s.",
                        {'name': audit.name, 'margin': audit.margin})
    return EXIT_OK if all_passed else EXIT_FAILED


def certificate_row(report):
    """Flat sweep row of a CertificateReport."""
    row = {'e0': report.e0, 'smallness_ok': report.smallness_ok,
           'delta_A': report.delta_A, 'delta_b': report.delta_b,
           'epsilon': report.epsilon, 'eta': report.eta,
           'kappa': report.kappa,
           'sobolev_constant': report.sobolev_constant,
           'stably_stratified': report.stably_stratified,
           'predicted_rate': report.predicted_rate}
    row.update(report.sigma or {})
    row.update(report.Sigma or {})
    row.update(report.gates)
    for prefix, margins in (('sobolev_margin', report.sobolev_margins),
                            ('derived_margin',
                             report.sobolev_margins_derived)):
        for i, value in enumerate(margins or [], 1):
            row['%s_%d' % (prefix, i)] = value
    return row


def _short_run(settings, state, model):
    stepper_cfg = common.stepper_config(settings).replace(
        t_end=settings.get('sweep', 'short_run_t_end'))
    diag = common.diagnostics_config(settings, model.zeta)
    _final, series = timestepper.integrate(state, stepper_cfg, model, diag)
    window = diagnostics.transient_window(
        series, settings.get('diagnostics', 'transient_fraction'))
    rate, _residual = _fit_or_none(series, window,
                                   diagnostics.wiener_column(0))
    return rate


def sweep_point(settings, axes, index):
    """Certificates of one grid point; failures are recorded in the row."""
    row = dict((axis.name, axis.values[i]) for axis, i in zip(axes, index))
    overrides = dict(((axis.group, axis.key), axis.values[i])
                     for axis, i in zip(axes, index))
    try:
        point = settings.replace(overrides)
        state, constants, model = _build(point)
        report = certificates.evaluate(state, constants, point.family)
        row.update(certificate_row(report))
        if point.get('sweep', 'short_run'):
            row['fitted_rate'] = _short_run(point, state, model)
    except (exceptions.ThinFilmException, ValueError) as e:
        LOG.warning("Sweep point %(row)s failed: %(error)s",
                    {'row': row, 'error': e})
        row['error'] = str(e)
    return row


def cmd_sweep(settings, args):
    """Certificates over the lexicographic grid of the [sweep] axes."""
    axes = common.parse_axes(settings.get('sweep', 'axis'))
    grid = list(itertools.product(*[range(len(a.values)) for a in axes]))
    LOG.info("Sweeping %(n)d points over %(axes)s.",
             {'n': len(grid), 'axes': [a.name for a in axes]})
    workers = settings.get('DEFAULT', 'workers')
    with futures.ThreadPoolExecutor(max_workers=workers) as executor:
        rows = list(executor.map(
            lambda index: sweep_point(settings, axes, index), grid))
    columns = [axis.name for axis in axes] + SWEEP_COLUMNS
    reporting.write_table_csv(rows, columns, _output_dir(settings),
                              settings.get('sweep', 'table_file'))
    document = {'command': 'sweep', 'model': settings.model,
                'axes': dict((a.name, a.values) for a in axes),
                'points': len(rows),
                'failed_points': sum(1 for row in rows if 'error' in row)}
    _write_report(document, settings)
    return EXIT_OK


def _state_gap(a, b):
    K = max(a.K, b.K)
    return float(max(
        np.max(np.abs(a.fbar.padded(K).coeffs - b.fbar.padded(K).coeffs)),
        np.max(np.abs(a.gbar.padded(K).coeffs - b.gbar.padded(K).coeffs))))


def observed_orders(differences):
    """log2 ratios of successive refinement differences."""
    orders = []
    for coarse, fine in zip(differences, differences[1:]):
        if coarse > 0 and fine > 0:
            orders.append(math.log(coarse / fine, 2))
        else:
            orders.append(None)
    return orders


def cmd_convergence(settings, args):
    """Time step halvings and a bandwidth refinement of one datum."""
    state, constants, model = _build(settings)
    base = common.stepper_config(settings)
    diag = common.diagnostics_config(settings, model.zeta)
    c = settings.values['convergence']
    e0 = diagnostics.wiener_column(0)

    finals, energies = [], []
    for level in range(c['levels']):
        factor = 2 ** level
        final, series = timestepper.integrate(
            state, base.replace(dt=base.dt / factor,
                                sample_every=base.sample_every * factor),
            model, diag)
        finals.append(final)
        energies.append(series.column(e0))
    differences = [_state_gap(a, b) for a, b in zip(finals, finals[1:])]
    orders = observed_orders(differences)

    K_fine = base.K * c['bandwidth_factor']
    fine_state = muskat_model.SimState(
        state.fbar.padded(K_fine), state.gbar.padded(K_fine),
        state.mean_f, state.mean_g)
    fine_final, fine_series = timestepper.integrate(
        fine_state, base.replace(K=K_fine), model, diag)
    energy_gap = float(np.max(np.abs(fine_series.column(e0) - energies[0])))
    spectral_gap = _state_gap(finals[0], fine_final)

    rows = []
    for level, final in enumerate(finals):
        rows.append({
            'run': 'dt', 'level': level, 'dt': base.dt / 2 ** level,
            'K': base.K, 'E_wiener_0_final': energies[level][-1],
            'difference': (differences[level]
                           if level < len(differences) else None),
            'observed_order': orders[level] if level < len(orders) else None})
    rows.append({'run': 'bandwidth', 'level': 0, 'dt': base.dt, 'K': K_fine,
                 'E_wiener_0_final': fine_series.column(e0)[-1],
                 'difference': spectral_gap, 'energy_gap': energy_gap})
    reporting.write_table_csv(rows, CONVERGENCE_COLUMNS,
                              _output_dir(settings), c['table_file'])

    band = ORDER_BANDS.get(base.scheme)
    measured = [o for o in orders if o is not None]
    order_ok = None
    if band is not None and measured:
        order_ok = all(band[0] <= o <= band[1] for o in measured)
    document = _document('convergence', settings, constants)
    document.update(
        differences=differences, observed_orders=orders,
        expected_order_band=band, order_ok=order_ok,
        spectral_gap=spectral_gap, energy_gap=energy_gap,
        two_resolution_ok=energy_gap <= c['uniqueness_tol'])
    _write_report(document, settings)
    LOG.info("Observed orders %(orders)s, two-resolution E_0 gap %(gap)g.",
             {'orders': orders, 'gap': energy_gap})
    return EXIT_OK


def cmd_verify(settings, args):
    """Randomized inequality suites and RHS oracle suites."""
    seed = settings.get('DEFAULT', 'seed')
    results = verification.run_all(seed, common.verify_options(settings))
    violations = sum(result.violations for result in results)
    document = {'command': 'verify', 'seed': seed, 'suites': results,
                'violations': violations, 'passed': violations == 0,
                'version': thinfilm_certify.__version__}
    _write_report(document, settings)
    return EXIT_OK if violations == 0 else EXIT_FAILED


COMMANDS = (
    ('check', cmd_check),
    ('run', cmd_run),
    ('sweep', cmd_sweep),
    ('convergence', cmd_convergence),
    ('verify', cmd_verify),
)


def add_command_parsers(subparsers):
    for name, func in COMMANDS:
        parser = subparsers.add_parser(name, help=func.__doc__)
        parser.set_defaults(func=func)
        parser.add_argument('--out', default=None,
                            help='Output directory, overrides output_dir.')
        parser.add_argument('--force', action='store_true',
                            help='Integrate even if required gates fail.')
        parser.add_argument('--seed', type=int, default=None,
                            help='Seed override for random data and suites.')
        parser.add_argument('--emit-plot-script', action='store_true',
                            help='Write a matplotlib script next to the '
                                 'series CSV.')


command_opt = cfg.SubCommandOpt('command',
                                title='Commands',
                                help='Available commands',
                                handler=add_command_parsers)


def normalize_argv(argv):
    """Accept --config as an alias of --config-file."""
    normalized = []
    for arg in argv:
        if arg == '--config':
            arg = '--config-file'
        elif arg.startswith('--config='):
            arg = '--config-file=' + arg[len('--config='):]
        normalized.append(arg)
    return normalized


def apply_args(settings, args):
    overrides = {}
    if args.seed is not None:
        overrides[('DEFAULT', 'seed')] = args.seed
    if args.out:
        overrides[('DEFAULT', 'output_dir')] = args.out
    return settings.replace(overrides) if overrides else settings


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    CONF.register_cli_opt(command_opt)
    log.register_options(CONF)
    try:
        CONF(normalize_argv(argv), project=PROJECT,
             version=thinfilm_certify.__version__)
    except cfg.Error as e:
        sys.stderr.write("%s\n" % e)
        return EXIT_CONFIG
    log.setup(CONF, PROJECT)

    try:
        common.check_unknown_keys(CONF.config_file, CONF)
        settings = apply_args(common.RunSettings.from_conf(CONF),
                              CONF.command)
        LOG.info("Running %(command)s for %(model)s.",
                 {'command': CONF.command.name, 'model': settings.model})
        return CONF.command.func(settings, CONF.command)
    except CONFIG_ERRORS as e:
        LOG.error("Configuration error: %s", e)
        return EXIT_CONFIG
    except NUMERICAL_ERRORS as e:
        LOG.error("Numerical failure at t=%(t)s: %(error)s",
                  {'t': getattr(e, 't', None), 'error': e})
        return EXIT_NUMERICAL

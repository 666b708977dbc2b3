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

"""Conversion of the oslo.config options into plain domain objects.

The numerical library never reads CONF; the harness snapshots it once into
a RunSettings and every command works from that snapshot.
"""

import copy

from oslo_config import cfg
from oslo_log import log

from thinfilm_certify.conf import opts as conf_opts
from thinfilm_certify.engine import diagnostics
from thinfilm_certify.engine import exceptions
from thinfilm_certify.engine import initial_data
from thinfilm_certify.engine import muskat_model
from thinfilm_certify.engine import stokes_model
from thinfilm_certify.engine import timestepper
from thinfilm_certify.engine import verification

LOG = log.getLogger(__name__)

DEFAULT_GROUP = 'DEFAULT'

# model option -> (family, variant or drive)
MODELS = {
    'muskat_capillary': ('muskat', muskat_model.CAPILLARY),
    'muskat_gravity': ('muskat', muskat_model.GRAVITY),
    'stokes_capillary': ('stokes', stokes_model.CAPILLARY),
    'stokes_gravity': ('stokes', stokes_model.GRAVITY),
}

# Groups whose scalar keys may serve as sweep axes.
SWEEP_GROUPS = (DEFAULT_GROUP, 'physical', 'initial_data')


def _find_opt(group, key):
    for opt_group, group_opts in conf_opts.list_opts():
        if opt_group != group:
            continue
        for opt in group_opts:
            if opt.dest == key:
                return opt
    return None


class RunSettings(object):
    """Snapshot of every registered option, grouped as in the config file."""

    def __init__(self, values):
        self.values = values

    @classmethod
    def from_conf(cls, conf):
        values = {}
        for group, group_opts in conf_opts.list_opts():
            source = conf if group == DEFAULT_GROUP else conf[group]
            values[group] = dict((opt.dest, copy.deepcopy(source[opt.dest]))
                                 for opt in group_opts)
        return cls(values)

    def get(self, group, key):
        return self.values[group][key]

    def replace(self, overrides):
        """Copy with {(group, key): value} applied."""
        values = copy.deepcopy(self.values)
        for (group, key), value in overrides.items():
            values[group][key] = value
        return RunSettings(values)

    @property
    def model(self):
        return self.get(DEFAULT_GROUP, 'model')

    @property
    def family(self):
        return MODELS[self.model][0]


def physical_params(settings):
    p = settings.values['physical']
    return muskat_model.PhysicalParams(
        p['mu_minus'], p['mu_plus'], p['rho_minus'], p['rho_plus'],
        p['gamma_f'], p['gamma_h'], p['gravity'])


def build_model(settings):
    """Reduced constants and bound model of the configured system.

    :returns: (constants, model).
    :raise InvalidParameterException: if the physical parameters do not
        fit the model.
    """
    family, kind = MODELS[settings.model]
    p = physical_params(settings)
    mean_f = settings.get(DEFAULT_GROUP, 'mean_f')
    mean_g = settings.get(DEFAULT_GROUP, 'mean_g')
    if family == 'muskat':
        constants = muskat_model.reduce_params(p, kind)
        model = muskat_model.MuskatModel(
            constants, mean_f, mean_g,
            settings.get('muskat', 'n2b_leading_factor'))
    else:
        constants = stokes_model.reduce_params(p, kind)
        model = stokes_model.StokesModel(constants, mean_f, mean_g)
    return constants, model


def time_scale(settings, constants):
    """Physical time per unit of rescaled time."""
    if settings.family == 'muskat':
        return muskat_model.to_physical_time(1.0, physical_params(settings))
    return stokes_model.to_physical_time(1.0, constants)


def stepper_config(settings):
    s = settings.values['stepper']
    return timestepper.StepperConfig(
        dt=s['dt'], scheme=s['scheme'], K=s['bandwidth'], t_end=s['t_end'],
        sample_every=s['sample_every'], nonlinear=s['nonlinear'],
        stability_ratio=s['stability_ratio'],
        conditioning_limit=s['conditioning_limit'])


def _orders(raw, name):
    try:
        return [float(order) for order in raw]
    except ValueError:
        err_msg = "[diagnostics] %s must list numbers, got %r" % (name, raw)
        LOG.error(err_msg)
        raise exceptions.ConfigurationException(err_msg)


def diagnostics_config(settings, zeta):
    d = settings.values['diagnostics']
    return diagnostics.DiagnosticsConfig(
        zeta,
        sobolev_orders=_orders(d['sobolev_orders'], 'sobolev_orders'),
        sup_orders=[int(n) for n in _orders(d['sup_orders'], 'sup_orders')],
        oversampling=d['oversampling'])


def component_spec(settings, name):
    i = settings.values['initial_data']
    return initial_data.ComponentSpec(
        preset=i['%s_preset' % name],
        coefficients=initial_data.parse_coefficient_entries(
            i['%s_coefficients' % name]),
        amplitude=i['%s_amplitude' % name],
        wavenumber=i['%s_wavenumber' % name],
        exponent=i['%s_exponent' % name],
        cosines=_orders(i['%s_cosines' % name], '%s_cosines' % name))


def initial_state(settings, K=None):
    """Initial SimState at the configured bandwidth, or at K if given."""
    if K is None:
        K = settings.get('stepper', 'bandwidth')
    return initial_data.build_state(
        component_spec(settings, 'f'), component_spec(settings, 'g'), K,
        settings.get(DEFAULT_GROUP, 'mean_f'),
        settings.get(DEFAULT_GROUP, 'mean_g'),
        settings.get(DEFAULT_GROUP, 'seed'),
        settings.get('initial_data', 'hermitian_mode'))


def verify_options(settings):
    v = settings.values['verify']
    return verification.VerifyOptions(
        inequality_samples=v['inequality_samples'],
        oracle_samples=v['oracle_samples'],
        max_bandwidth=v['max_bandwidth'],
        constant_scale=v['constant_scale'])


def _registered_keys(conf, group):
    if group == DEFAULT_GROUP:
        groups = set(name for name, _opts in conf_opts.list_opts())
        return set(key for key in conf if key not in groups)
    return set(conf[group])


def check_unknown_keys(config_files, conf):
    """Reject sections and keys that no registered option claims.

    :param config_files: paths given with --config-file.
    :param conf: the ConfigOpts the files were parsed into.
    :raise ConfigurationException: listing every unknown section and key.
    """
    errors = {"sections": [], "keys": []}
    for path in config_files or []:
        sections = {}
        cfg.ConfigParser(path, sections).parse()
        for section, entries in sections.items():
            group = DEFAULT_GROUP if section == DEFAULT_GROUP else section
            if group != DEFAULT_GROUP and group not in conf:
                errors["sections"].append("%s in %s" % (section, path))
                continue
            known = _registered_keys(conf, group)
            for key in entries:
                if key not in known:
                    errors["keys"].append("[%s] %s in %s"
                                          % (section, key, path))

    if errors["sections"] or errors["keys"]:
        err_msg = 'The configuration carries unknown settings:'
        if errors["sections"]:
            err_msg += "\nUnknown sections: {err[sections]}"
        if errors["keys"]:
            err_msg += "\nUnknown keys: {err[keys]}"
        err_msg = err_msg.format(err=errors)
        LOG.error(err_msg)
        raise exceptions.ConfigurationException(err_msg)


class SweepAxis(object):
    def __init__(self, group, key, values):
        self.group = group
        self.key = key
        self.values = values

    @property
    def name(self):
        return self.key


def _resolve_axis_key(name):
    if '.' in name:
        group, key = name.split('.', 1)
        candidates = [(group, key)] if group in SWEEP_GROUPS else []
    else:
        candidates = [(group, name) for group in SWEEP_GROUPS]
    for group, key in candidates:
        opt = _find_opt(group, key)
        if opt is not None and not isinstance(opt, (cfg.ListOpt,
                                                    cfg.MultiStrOpt)):
            return group, key, opt
    err_msg = "Sweep axis %r does not name a scalar setting" % name
    LOG.error(err_msg)
    raise exceptions.ConfigurationException(err_msg)


def parse_axes(raw_axes):
    """Parse "name:v1,v2,..." sweep axes, converting with the option type.

    :raise ConfigurationException: on an unknown name, an empty range or
        a value the option rejects.
    """
    axes = []
    for raw in raw_axes:
        name, sep, listing = raw.partition(':')
        values = [v.strip() for v in listing.split(',') if v.strip()]
        if not sep or not values:
            err_msg = "Sweep axis %r has an empty range" % raw
            LOG.error(err_msg)
            raise exceptions.ConfigurationException(err_msg)
        group, key, opt = _resolve_axis_key(name.strip())
        try:
            converted = [opt.type(v) for v in values]
        except ValueError as e:
            err_msg = "Sweep axis %(raw)r: %(error)s" % {'raw': raw,
                                                         'error': e}
            LOG.error(err_msg)
            raise exceptions.ConfigurationException(err_msg)
        axes.append(SweepAxis(group, key, converted))
    return axes

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

"""Emission of series, tables, report documents and plot scripts."""

import csv
import math
import os

import numpy as np
from oslo_log import log
from oslo_serialization import jsonutils
from oslo_utils import fileutils

LOG = log.getLogger(__name__)

SCHEMA_VERSION = '1.0'
FLOAT_FORMAT = '%.17g'

PLOT_TEMPLATE = '''\
"""Semilog decay of E_wiener_0 against the predicted envelope."""

import csv
import math

import matplotlib.pyplot as plt

SERIES = %(series)r
RATE = %(rate)r

with open(SERIES) as handle:
    rows = list(csv.DictReader(handle))
t = [float(row['t']) for row in rows]
energy = [float(row['E_wiener_0']) for row in rows]

plt.semilogy(t, energy, label='E_wiener_0')
if RATE is not None and energy and energy[0] > 0:
    plt.semilogy(t, [energy[0] * math.exp(-RATE * (s - t[0])) for s in t],
                 '--', label='envelope, rate %%g' %% RATE)
plt.xlabel('t')
plt.legend()
plt.show()
'''


def format_value(value):
    """CSV cell text; floats keep 17 significant digits."""
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (float, np.floating)):
        return FLOAT_FORMAT % value
    return str(value)


def to_document(value):
    """Plain JSON-compatible structure; non-finite floats become strings."""
    if hasattr(value, 'to_dict'):
        value = value.to_dict()
    if isinstance(value, dict):
        return dict((str(k), to_document(v)) for k, v in value.items())
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_document(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return repr(value)
        return value
    return value


def _target(directory, name):
    fileutils.ensure_tree(directory)
    return os.path.join(directory, name)


def write_table_csv(rows, columns, directory, name):
    """Write dict rows under a fixed column order.

    :returns: the path written.
    """
    path = _target(directory, name)
    with open(path, 'w', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(row.get(c)) for c in columns])
    LOG.info("Wrote %(n)d rows to %(path)s.", {'n': len(rows), 'path': path})
    return path


def write_series_csv(series, directory, name):
    return write_table_csv(series.rows(), series.columns, directory, name)


def write_report(document, directory, name):
    """Write a JSON report carrying the schema version."""
    body = to_document(document)
    body['schema_version'] = SCHEMA_VERSION
    path = _target(directory, name)
    with open(path, 'w') as handle:
        handle.write(jsonutils.dumps(body, sort_keys=True, indent=2))
        handle.write('\n')
    LOG.info("Wrote report %s.", path)
    return path


def write_plot_script(series_name, rate, directory, name):
    """Write a matplotlib script plotting the series next to its envelope.

    The script is never executed here.
    """
    if rate is not None:
        rate = float(rate)
    path = _target(directory, name)
    with open(path, 'w') as handle:
        handle.write(PLOT_TEMPLATE % {'series': series_name,
                                      'rate': rate})
    LOG.info("Wrote plot script %s.", path)
    return path

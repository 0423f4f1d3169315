#
# Copyright (c) 2024 - present.  The kpcheck authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""
Report rendering: human tables from Jinja2 templates, JSON, CSV and YAML.
Every structured document starts with the ReportHeading fields and keeps
wall-clock timings under its own 'timings' key.
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
import csv
import io
import json
import os
from collections import OrderedDict

import jinja2
import yaml

from .errors import UsageError
from .exact_arith import format_exact
from .versions import ReportHeading

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'templates')
FORMATS = ('table', 'json', 'csv', 'yaml')


def represent_dictionary_order(self, dict_data):
    return self.represent_mapping('tag:yaml.org,2002:map', dict_data.items())


def setup_yaml():
    yaml.add_representer(OrderedDict, represent_dictionary_order)
    yaml.add_representer(OrderedDict, represent_dictionary_order, Dumper=yaml.SafeDumper)


def yes_no(value):
    return 'yes' if value else 'no'


def rounded_seconds(value):
    return '{:.4f}s'.format(value)


def degree_list(degrees):
    return ', '.join('{} {}'.format(name, degree) for name, degree in degrees.items())


def template_environment(searchpath=TEMPLATE_DIR):
    loader = jinja2.FileSystemLoader(searchpath=searchpath)
    env = jinja2.Environment(loader=loader,
                             extensions=['jinja2.ext.loopcontrols'],
                             trim_blocks=True,
                             lstrip_blocks=True,
                             keep_trailing_newline=True)
    env.filters['exact'] = format_exact
    env.filters['yes_no'] = yes_no
    env.filters['seconds'] = rounded_seconds
    env.filters['degree_list'] = degree_list
    return env


def to_json(document):
    return json.dumps(document, indent=2, separators=(',', ': ')) + '\n'


def to_yaml(document):
    setup_yaml()
    return yaml.safe_dump(document, default_flow_style=False, sort_keys=False)


def to_csv(header, rows):
    output = io.StringIO()
    writer = csv.writer(output, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return output.getvalue()


class Renderer(object):
    """ Turns library results into text in one of FORMATS """
    def __init__(self, fmt='table', heading=None, templates=TEMPLATE_DIR):
        if fmt not in FORMATS:
            raise UsageError("unknown format '{}', expected one of: {}".format(fmt, ', '.join(FORMATS)))
        self.fmt = fmt
        self.heading = heading if heading is not None else ReportHeading()
        self.templateEnv = template_environment(templates)

    def document(self, body, timings=None):
        doc = self.heading.to_dict()
        doc.update(body)
        if timings is not None:
            doc['timings'] = timings
        return doc

    def _structured(self, body, timings):
        if self.fmt == 'json':
            return to_json(self.document(body, timings))
        return to_yaml(self.document(body, timings))

    def _table(self, template_name, **context):
        template = self.templateEnv.get_template(template_name)
        return template.render(heading=str(self.heading), **context)

    def sweep(self, report, sequence_name=None):
        """
        :param report: (SweepReport) sweep outcome
        :param sequence_name: (str) value listed as a sequence (verify-main's 'det')
        """
        sequence = report.values(sequence_name) if sequence_name else None
        if self.fmt == 'table':
            return self._table('sweep.txt.jinja', report=report, summary=report.summary(),
                               sequence=sequence, timings=report.timings)
        if self.fmt == 'csv':
            value_names = list(OrderedDict((k, None) for o in report for k in o.values))
            check_names = list(OrderedDict((k, None) for o in report for k in o.checks))
            header = ['n', 'm', 'a', 'b', 'verdict'] + value_names + check_names + ['note']
            rows = [list(o.params) + [o.verdict.tag] +
                    [o.values.get(k, '') for k in value_names] +
                    [yes_no(o.checks[k]) if k in o.checks else '' for k in check_names] +
                    [o.note or ''] for o in report]
            return to_csv(header, rows)

        body = report.to_dict()
        if sequence is not None:
            body['sequence'] = sequence
        return self._structured(body, OrderedDict(report.timings))

    def proof(self, report):
        data = report.to_dict()
        if self.fmt == 'table':
            return self._table('proof.txt.jinja', proof=data)
        if self.fmt == 'csv':
            header = ['mode', 'case', 'status', 'ground', 'superfactorial', 'factorial',
                      'rounds', 'total_degree']
            rows = [[data['mode'], case['case'], case['status']] +
                    list(case['rewrite_steps'].values()) +
                    [case.get('total_degree', '')] for case in data['cases']]
            return to_csv(header, rows)
        return self._structured(data, report.timings())

    def bench(self, records, timings):
        if self.fmt == 'table':
            return self._table('bench.txt.jinja', records=records)
        if self.fmt == 'csv':
            header = ['engine', 'order', 'family', 'value', 'peak_bits', 'fallback_used', 'refused']
            rows = [list(r.to_dict().values()) for r in records]
            return to_csv(header, rows)
        return self._structured(OrderedDict([('records', [r.to_dict() for r in records])]), timings)

    def det(self, result, tableau=None):
        """
        :param result: (DetResult) determinant
        :param tableau: (CondensationTableau) layers to show, optional
        """
        if self.fmt == 'table':
            return self._table('det.txt.jinja', result=result, tableau=tableau)
        if self.fmt == 'csv':
            return to_csv(['value', 'engine', 'fallback_used'], [list(result.to_dict().values())])
        body = result.to_dict()
        if tableau is not None:
            body['tableau'] = tableau.to_dict()
        return self._structured(body, None)

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
import csv
import io
import json

import pytest
import yaml

from kp_lib.bench import cmd_bench, timings
from kp_lib.det_engines import condensation_tableau, det_condense
from kp_lib.errors import UsageError
from kp_lib.kp_matrix import ExactMatrix
from kp_lib.prover import ProofMode, prove
from kp_lib.report import Renderer, to_yaml
from kp_lib.sweep import cmd_verify_main, cmd_verify_rabbit
from kp_lib.versions import ReportHeading, get_version


class TestHeading(object):
    def test_version_file(self):
        assert get_version() == '0.1.0'
        assert get_version('/nonexistent/VERSION') == 'unknown'

    def test_fields(self):
        heading = ReportHeading()
        assert str(heading) == 'kpcheck 0.1.0 (schema 1)'
        assert list(heading.to_dict()) == ['name', 'version', 'schema_version']


class TestRenderer(object):
    def test_unknown_format(self):
        with pytest.raises(UsageError):
            Renderer('xml')

    def test_sweep_json(self):
        text = Renderer('json').sweep(cmd_verify_main(2), sequence_name='det')
        data = json.loads(text)
        assert data['name'] == 'kpcheck'
        assert data['schema_version'] == 1
        assert data['sequence'] == ['1', '3', '50']
        assert data['summary'] == {'total': 3, 'pass': 3, 'fail': 0, 'out_of_domain': 0}
        assert set(data['timings']) == {'condense', 'bareiss', 'special_rhs'}

    def test_sweep_csv(self):
        rows = list(csv.reader(io.StringIO(Renderer('csv').sweep(cmd_verify_rabbit(1)))))
        assert rows[0][:5] == ['n', 'm', 'a', 'b', 'verdict']
        assert 'L' in rows[0] and 'shift' in rows[0]
        assert len(rows) == 1 + 1 + 5
        assert all(row[4] == 'pass' for row in rows[1:])

    def test_sweep_table(self):
        text = Renderer('table').sweep(cmd_verify_main(3), sequence_name='det')
        assert 'values: 1, 3, 50, 5145' in text
        assert 'total 4: pass 4, fail 0, out-of-domain 0' in text
        assert '   3   3   0   0  pass' in text

    def test_structured_output_is_deterministic(self):
        first = json.loads(Renderer('json').sweep(cmd_verify_rabbit(2)))
        second = json.loads(Renderer('json').sweep(cmd_verify_rabbit(2)))
        first.pop('timings')
        second.pop('timings')
        assert first == second

    def test_proof_yaml_and_table(self):
        report = prove(ProofMode.base())
        data = yaml.safe_load(Renderer('yaml').proof(report))
        assert data['status'] == 'proven'
        assert [case['case'] for case in data['cases']] == ['m=0', 'm=1']

        text = Renderer('table').proof(report)
        assert 'prove base: proven' in text
        assert 'case m=1: proven' in text
        assert 'degrees: numerator n ' in text
        assert 'total degree: 0' in text

        term = data['cases'][1]['terms'][0]
        assert list(term['degrees']['numerator']) == ['n', 'm', 'a', 'b', 'total']

    def test_bench_outputs(self):
        records = cmd_bench([2, 9], ['bareiss', 'cofactor'])
        rows = list(csv.reader(io.StringIO(Renderer('csv').bench(records, timings(records)))))
        assert rows[0] == ['engine', 'order', 'family', 'value', 'peak_bits', 'fallback_used', 'refused']
        assert len(rows) == 5
        assert 'refused' in Renderer('table').bench(records, timings(records))
        data = json.loads(Renderer('json').bench(records, timings(records)))
        assert len(data['records']) == 4
        assert len(data['timings']) == 4

    def test_det_outputs(self):
        matrix = ExactMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        result = det_condense(matrix)
        text = Renderer('table').det(result, condensation_tableau(matrix))
        assert text.startswith('2\nfallback: yes\n')
        assert 'layer 2:' in text
        assert '  -1 1' in text
        assert 'zero divisor stopped condensation at layer 3' in text

        data = json.loads(Renderer('json').det(result))
        assert data['value'] == '2' and data['fallback_used']

    def test_ordered_yaml(self):
        text = to_yaml(ReportHeading().to_dict())
        assert text.splitlines()[0].startswith('name:')

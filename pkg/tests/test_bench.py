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
import pytest

from kp_lib.bench import cmd_bench
from kp_lib.det_engines import Engine
from kp_lib.errors import UsageError


class TestBench(object):
    def test_kp_family_engines_agree(self):
        records = cmd_bench([4], ['bareiss', 'condense'], family='kp')
        assert [r.engine for r in records] == [Engine.Bareiss, Engine.Condense]
        assert records[0].value == records[1].value == 5145
        assert all(r.seconds >= 0 for r in records)
        assert all(r.peak_bits > 0 for r in records)

    def test_cofactor_refused_above_guard(self):
        records = cmd_bench([9], ['cofactor'])
        assert len(records) == 1
        assert records[0].refused is not None
        assert records[0].value is None

    @pytest.mark.parametrize('engine', ['condense', 'bareiss', 'cofactor'])
    def test_order_one_is_the_entry(self, engine):
        records = cmd_bench([1], [engine], family='random', seed=8)
        kp = cmd_bench([1], [engine], family='kp')
        assert kp[0].value == 1
        assert -9 <= records[0].value <= 9

    def test_deterministic_given_seed(self):
        first = cmd_bench([3, 5], ['bareiss'], family='random', seed=42)
        second = cmd_bench([3, 5], ['bareiss'], family='random', seed=42)
        assert [r.to_dict() for r in first] == [r.to_dict() for r in second]

    @pytest.mark.parametrize('kwargs', [
        {'orders': [2], 'engines': ['gauss']},
        {'orders': [2], 'engines': ['bareiss'], 'family': 'hilbert'},
        {'orders': [0], 'engines': ['bareiss']},
        {'orders': [2], 'engines': []},
    ])
    def test_usage_errors(self, kwargs):
        with pytest.raises(UsageError):
            cmd_bench(**kwargs)

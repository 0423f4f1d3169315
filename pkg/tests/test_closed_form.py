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

from kp_lib.closed_form import RABBIT_FACTORS, rabbit_rhs, special_rhs, specialization_check
from kp_lib.det_engines import det_bareiss
from kp_lib.errors import DomainError
from kp_lib.kp_matrix import KPParams, build_matrix, domain_points


class TestSpecialRhs(object):
    @pytest.mark.parametrize('n, expected', [(0, 1), (1, 3), (2, 50), (3, 5145)])
    def test_sequence(self, n, expected):
        assert special_rhs(n) == expected

    @pytest.mark.parametrize('n', [-1, 1.0, True])
    def test_bad_argument(self, n):
        with pytest.raises(DomainError):
            special_rhs(n)

    @pytest.mark.parametrize('n', range(0, 11))
    def test_specialization(self, n):
        assert specialization_check(n)


class TestRabbitRhs(object):
    def test_factor_table(self):
        assert len(RABBIT_FACTORS) == 19
        assert sum(1 for f in RABBIT_FACTORS if f.exponent(0, 0, 0, 0) < 0) == 9

    @pytest.mark.parametrize('params, expected', [
        ((0, 0, 0, 0), 1),
        ((1, 0, 1, 0), 1),
        ((1, 1, 0, 0), 3),
        ((2, 1, 1, 0), 5),
        ((2, 1, 1, 1), 15),
        ((2, 2, 0, 0), 50),
    ])
    def test_hand_values(self, params, expected):
        value = rabbit_rhs(KPParams(*params))
        assert value.value == expected
        assert value.integral

    def test_equals_determinant_on_domain(self):
        for p in domain_points(5):
            value = rabbit_rhs(p)
            assert value.integral and value.value > 0
            assert value.value == det_bareiss(build_matrix(p))

    def test_symmetric_in_a_and_b(self):
        for p in domain_points(6):
            assert rabbit_rhs(p).value == rabbit_rhs(p.swapped()).value

    def test_outside_domain_names_factor(self):
        with pytest.raises(DomainError) as excinfo:
            rabbit_rhs(KPParams(2, 2, 1, 0))
        assert excinfo.value.factor == '(n-m-a-1)!!'
        assert excinfo.value.argument == -2
        assert '(n-m-a-1)!! with argument -2' in str(excinfo.value)

    def test_to_dict(self):
        data = rabbit_rhs(KPParams(2, 1, 1, 0)).to_dict()
        assert data['value'] == '5'
        assert data['params'] == {'n': 2, 'm': 1, 'a': 1, 'b': 0}

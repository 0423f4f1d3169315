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
from fractions import Fraction

import pytest

from kp_lib.det_engines import (
    COFACTOR_MAX_ORDER, BitTracker, Engine, KPRecurrence, condensation_tableau, det_bareiss,
    det_cofactor, det_condense, det_condense_kp, determinant
)
from kp_lib.errors import RefusalError, UsageError
from kp_lib.kp_matrix import ExactMatrix, KPParams, build_matrix, domain_points
from kp_lib.randgen import SplitMix64, random_matrix

ZERO_INTERIOR = ExactMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


class TestSmallDeterminants(object):
    @pytest.mark.parametrize('engine', list(Engine))
    @pytest.mark.parametrize('rows, expected', [
        ([[2, 1], [1, 2]], 3),
        ([[1, 2], [2, 4]], 0),
        ([[7]], 7),
        ([[6, 3, 1], [3, 4, 3], [1, 3, 6]], 50),
        ([[0, 1, 1], [1, 0, 1], [1, 1, 0]], 2),
        ([['1/2', '1/3'], ['1/4', 1]], Fraction(5, 12)),
    ])
    def test_value(self, engine, rows, expected):
        assert determinant(ExactMatrix(rows), engine).value == expected

    def test_bareiss_needs_row_swap(self):
        assert det_bareiss(ExactMatrix([[0, 2], [3, 1]])) == -6

    def test_cofactor_order_guard(self):
        matrix = ExactMatrix([[1 if i == j else 0 for j in range(COFACTOR_MAX_ORDER + 1)]
                              for i in range(COFACTOR_MAX_ORDER + 1)])
        with pytest.raises(RefusalError) as excinfo:
            det_cofactor(matrix)
        assert excinfo.value.order == COFACTOR_MAX_ORDER + 1
        assert det_bareiss(matrix) == 1

    def test_engine_tags(self):
        assert Engine.from_tag('Bareiss') == Engine.Bareiss
        with pytest.raises(UsageError):
            Engine.from_tag('gauss')


class TestCondensation(object):
    def test_tableau_layers(self):
        tableau = condensation_tableau(build_matrix(KPParams(2, 2, 0, 0)))
        assert tableau.complete
        assert tableau[2] == [[15, 5], [5, 15]]
        assert tableau.value == 50

    def test_zero_interior_divisor_falls_back(self):
        result = det_condense(ZERO_INTERIOR)
        assert result.fallback_used
        assert result.engine == Engine.Condense
        assert result.value == 2

        tableau = condensation_tableau(ZERO_INTERIOR)
        assert not tableau.complete
        assert tableau.broken_at == 3
        assert tableau[2] == [[-1, 1], [1, -1]]

    def test_no_fallback_on_kp_matrices(self):
        for p in domain_points(5):
            assert not det_condense(build_matrix(p)).fallback_used

    def test_bit_tracker(self):
        tracker = BitTracker()
        det_condense(build_matrix(KPParams(6, 6, 0, 0)), tracker)
        assert tracker.observations > 0
        assert tracker.peak_bits >= (det_bareiss(build_matrix(KPParams(6, 6, 0, 0)))).numerator.bit_length()


class TestEngineAgreement(object):
    def test_random_matrices(self):
        rng = SplitMix64(2024)
        for case in range(200):
            order = 1 + case % 7
            matrix = random_matrix(order, rng)
            reference = det_bareiss(matrix)
            assert det_condense(matrix).value == reference
            if order <= 6:
                assert det_cofactor(matrix) == reference

    def test_singular_rows(self):
        matrix = ExactMatrix([[1, 2, 3], [2, 4, 6], [0, 1, 5]])
        for engine in Engine:
            assert determinant(matrix, engine).value == 0


class TestDeterminantProperties(object):
    @pytest.mark.parametrize('engine', list(Engine))
    def test_row_scaling(self, engine):
        rng = SplitMix64(4242)
        for _ in range(100):
            matrix = random_matrix(rng.randint(1, 5), rng)
            row = rng.randint(0, matrix.order - 1)
            factor = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
            scaled = matrix.scale_row(row, factor)
            assert determinant(scaled, engine).value == factor * determinant(matrix, engine).value

    @pytest.mark.parametrize('engine', list(Engine))
    def test_transpose(self, engine):
        rng = SplitMix64(8080)
        for _ in range(100):
            matrix = random_matrix(rng.randint(1, 5), rng)
            assert determinant(matrix.transpose(), engine).value == determinant(matrix, engine).value

    def test_rational_entries_after_scaling(self):
        matrix = build_matrix(KPParams(3, 3, 0, 0)).scale_row(1, Fraction(2, 3))
        assert not matrix.is_integral
        for engine in Engine:
            assert determinant(matrix, engine).value == Fraction(2, 3) * 5145


class TestKPRecurrence(object):
    def test_matches_bareiss(self):
        for p in domain_points(6):
            assert det_condense_kp(p) == det_bareiss(build_matrix(p))

    def test_memo_and_divisions(self):
        recurrence = KPRecurrence(4)
        assert recurrence.value(4, 0, 0) == det_bareiss(build_matrix(KPParams(4, 4, 0, 0)))
        assert recurrence.divisions > 0
        assert (2, 1, 1) in recurrence.memo

    def test_base_values(self):
        recurrence = KPRecurrence(2)
        assert recurrence.value(0, 1, 1) == 4
        assert recurrence.value(1, 1, 0) == 5
        assert recurrence.value(2, 0, 0) == 50

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

from kp_lib.errors import DomainError, UsageError
from kp_lib.exact_arith import FactorKind
from kp_lib.fac_product import FacFactor, FacProduct, SignedTerm
from kp_lib.linear_form import symbols
from kp_lib.prover import (
    ModeKind, ProofMode, ProofRun, ProofStatus, base_terms, prove, prove_base_cases,
    prove_recurrence, recurrence_terms, sample_point
)
from kp_lib.randgen import SplitMix64

n, m, a, b = symbols()


def rational_value(run, index, point):
    numerator, denominator = run.rational[index]
    return Fraction(numerator.evaluate(point), denominator.evaluate(point))


def point(n_value, m_value, a_value, b_value):
    return {'n': n_value, 'm': m_value, 'a': a_value, 'b': b_value}


class TestProofMode(object):
    def test_parse(self):
        assert ProofMode.parse('base').kind == ModeKind.Base
        mode = ProofMode.parse('fixed-m', 3)
        assert mode.kind == ModeKind.FixedM and mode.m == 3
        assert str(mode) == 'fixed-m 3'
        assert ProofMode.parse('generic-m').m is None

    def test_fixed_m_bounds(self):
        with pytest.raises(DomainError):
            ProofMode.fixed_m(1)
        with pytest.raises(UsageError):
            ProofMode.parse('fixed-m')
        with pytest.raises(UsageError):
            ProofMode.parse('wz')


class TestBaseCases(object):
    def test_proven(self):
        report = prove_base_cases()
        assert report.status == ProofStatus.Proven
        assert [run.name for run in report] == ['m=0', 'm=1']
        assert report['m=0'].reduced_to_one
        assert report.to_dict()['cases'][0]['reduced_to_one'] is True
        assert report.to_dict()['cases'][1]['reduced_to_one'] is False
        assert report['m=1'].spot_checks == 20

    def test_m1_terms(self):
        run = prove_base_cases()['m=1']
        # (a+b+2)(2n-a-b)/(2n+1) and (a+b+1)(2n-a-b-1)/(2n+1)
        assert rational_value(run, 0, point(3, 1, 1, 2)) == Fraction(15, 7)
        assert rational_value(run, 1, point(3, 1, 1, 2)) == Fraction(8, 7)

    def test_m0_exact_at_point(self):
        terms = base_terms(0)
        assert len(terms) == 1
        assert terms[0].product.evaluate(point(3, 0, 1, 2)) == 1


class TestRecurrence(object):
    @pytest.mark.parametrize('k', [2, 3, 4, 5])
    def test_fixed_m(self, k):
        report = prove_recurrence(ProofMode.fixed_m(k))
        assert report.status == ProofStatus.Proven
        run = report['m={}'.format(k)]
        assert run.stats.superfactorial > 0
        assert run.stats.factorial > 0
        for degrees in run.degrees():
            assert degrees['numerator']['m'] == 0
            assert degrees['denominator']['m'] == 0

    def test_fixed_m2_terms(self):
        run = prove_recurrence(ProofMode.fixed_m(2))['m=2']
        assert rational_value(run, 0, point(5, 2, 1, 1)) == Fraction(7, 4)
        assert rational_value(run, 1, point(5, 2, 1, 1)) == Fraction(3, 4)

    def test_generic_m(self):
        report = prove_recurrence(ProofMode.generic_m())
        run = report['generic']
        assert report.status == ProofStatus.Proven
        # (m+a+b+1)(2n-m-a-b+1) / (m(2n-m+2)) and (a+b+1)(2n-2m-a-b+1) / (m(2n-m+2))
        assert rational_value(run, 0, point(5, 2, 1, 1)) == Fraction(7, 4)
        assert rational_value(run, 0, point(9, 4, 2, 0)) == Fraction(7 * 13, 4 * 16)
        assert rational_value(run, 1, point(9, 4, 2, 0)) == Fraction(3 * 9, 4 * 16)

    def test_symbolic_exponent_cancels_on_assembly(self):
        t1, t2 = recurrence_terms(None)
        assert t1.product.exponent(FactorKind.Factorial, 2 * n + 1) == 0
        assert t2.product.exponent(FactorKind.Factorial, 2 * n + 1) == 0

    def test_numeric_values_of_terms(self):
        t1, t2 = recurrence_terms(3)
        x = point(6, 3, 1, 2)
        assert t1.product.evaluate(x) - t2.product.evaluate(x) == 1

    def test_base_mode_dispatch(self):
        assert prove(ProofMode.base()).status == ProofStatus.Proven
        with pytest.raises(UsageError):
            prove_recurrence(ProofMode.base())


class TestVerdicts(object):
    def sampler(self, rng):
        return sample_point(rng, m=2)

    def test_refuted_with_witness(self):
        terms = [SignedTerm(1, FacProduct([FacFactor(FactorKind.Linear, n + 1, 1),
                                           FacFactor(FactorKind.Linear, n, -1)]))]
        run = ProofRun('wrong', terms, self.sampler).run()
        assert run.state == 'refuted'
        assert run.status == ProofStatus.Refuted
        assert 'value' in run.witness
        assert run.to_dict()['witness'] == run.witness

    def test_stalled(self):
        terms = [SignedTerm(1, FacProduct([FacFactor(FactorKind.Factorial, n, m)]))]
        run = ProofRun('stuck', terms, self.sampler).run()
        assert run.state == 'stalled'
        assert run.status == ProofStatus.Stalled
        assert run.residual is not None
        assert 'residual' in run.to_dict()

    def test_sample_points_in_domain(self):
        rng = SplitMix64(3)
        for _ in range(100):
            x = sample_point(rng, m_min=2)
            assert 2 <= x['m'] <= x['n']
            assert x['m'] + x['a'] <= x['n'] and x['m'] + x['b'] <= x['n']

    def test_report_dict(self):
        data = prove_recurrence(ProofMode.fixed_m(2)).to_dict()
        assert data['mode'] == 'fixed-m'
        assert data['status'] == 'proven'
        case = data['cases'][0]
        assert case['spot_checks'] == 20
        assert list(case['rewrite_steps']) == ['ground', 'superfactorial', 'factorial', 'rounds']
        assert case['total_degree'] >= 2
        assert case['terms'][0]['degrees']['numerator']['total'] >= 2

    def test_term_degrees_follow_the_reduced_terms(self):
        run = prove_base_cases()['m=1']
        degrees = run.degrees()
        assert len(degrees) == 2
        for term in degrees:
            # both m=1 terms depend on a and b
            assert max(term['numerator']['a'], term['denominator']['a']) >= 1
            assert max(term['numerator']['b'], term['denominator']['b']) >= 1
            assert term['numerator']['m'] == 0
        assert run.total_degree == max(d[part]['total'] for d in degrees
                                       for part in ('numerator', 'denominator'))

    def test_degrees_absent_when_stalled(self):
        terms = [SignedTerm(1, FacProduct([FacFactor(FactorKind.Factorial, n, m)]))]
        run = ProofRun('stuck', terms, self.sampler).run()
        assert run.degrees() is None
        assert 'total_degree' not in run.to_dict()

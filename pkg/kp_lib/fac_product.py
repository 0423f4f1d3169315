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
Products and quotients of factorial-type factors with linear-form
arguments and linear-form exponents, plus the expression builders for
R_m(a, b) and the small base-case determinants.
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
from collections import namedtuple, OrderedDict
from fractions import Fraction

from .closed_form import RABBIT_FACTORS
from .exact_arith import FactorKind, evaluate_factor
from .linear_form import LinearForm, symbols


class FacFactor(namedtuple('FacFactor', ['kind', 'argument', 'exponent'])):
    """ One factor  kind(argument) ^ exponent """
    __slots__ = ()

    def __new__(cls, kind, argument, exponent=1):
        return super(FacFactor, cls).__new__(cls, FactorKind(kind),
                                             LinearForm.coerce(argument),
                                             LinearForm.coerce(exponent))

    def __str__(self):
        return format_factor(self.kind, self.argument, self.exponent)


def format_factor(kind, argument, exponent):
    name = {FactorKind.Linear: '({})', FactorKind.Factorial: '({})!',
            FactorKind.Superfactorial: '({})!!'}[kind].format(argument)
    if exponent == 1:
        return name
    if exponent.is_constant:
        return '{}^{}'.format(name, exponent.value)
    return '{}^({})'.format(name, exponent)


class FacProduct(object):
    """
    Canonical multiset of factors: factors with equal (kind, argument) are
    merged by adding exponents and zero exponents are dropped.  Instances
    are immutable.
    """
    def __init__(self, factors=None):
        merged = dict()             # (kind, argument) -> exponent
        for factor in factors or ():
            if not isinstance(factor, FacFactor):
                factor = FacFactor(*factor)
            key = (factor.kind, factor.argument)
            merged[key] = merged.get(key, LinearForm.const(0)) + factor.exponent

        self._factors = OrderedDict(
            (key, merged[key])
            for key in sorted(merged, key=lambda k: (-int(k[0]), k[1].sort_key()))
            if not merged[key].is_zero)

    def __iter__(self):
        for (kind, argument), exponent in self._factors.items():
            yield FacFactor(kind, argument, exponent)

    def __len__(self):
        return len(self._factors)

    def __eq__(self, other):
        if isinstance(other, FacProduct):
            return self._factors == other._factors
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(tuple(self._factors.items()))

    def __mul__(self, other):
        assert isinstance(other, FacProduct), 'Invalid type'
        return FacProduct(list(self) + list(other))

    def __truediv__(self, other):
        return ratio(self, other)

    __div__ = __truediv__

    def __str__(self):
        if len(self._factors) == 0:
            return '1'
        return ' * '.join(str(f) for f in self)

    def __repr__(self):
        return 'FacProduct({})'.format(str(self))

    @property
    def is_empty(self):
        return len(self._factors) == 0

    def exponent(self, kind, argument):
        """ Exponent of kind(argument), zero form when absent """
        return self._factors.get((FactorKind(kind), LinearForm.coerce(argument)), LinearForm.const(0))

    def count(self, kind=None):
        if kind is None:
            return len(self._factors)
        return sum(1 for k, _ in self._factors if k == kind)

    def of_kind(self, kind):
        return [f for f in self if f.kind == kind]

    def inverse(self):
        return FacProduct(FacFactor(f.kind, f.argument, -f.exponent) for f in self)

    def substitute(self, mapping):
        return FacProduct(FacFactor(f.kind, f.argument.substitute(mapping), f.exponent.substitute(mapping))
                          for f in self)

    def evaluate(self, assignment):
        """
        Exact value under an integer assignment of the symbols

        :param assignment: (dict) symbol -> int
        :return: (Fraction)
        """
        result = Fraction(1)
        for factor in self:
            value = evaluate_factor(factor.kind, factor.argument.evaluate(assignment))
            exponent = factor.exponent.evaluate(assignment)
            result *= Fraction(value) ** exponent
        return result


def canonicalize(product):
    """ Canonical form of a FacProduct or of a raw iterable of factors """
    return FacProduct(list(product))


def ratio(num, den):
    """ num merged with the exponent-negated den """
    assert isinstance(num, FacProduct) and isinstance(den, FacProduct), 'Invalid type'
    return num * den.inverse()


class SignedTerm(namedtuple('SignedTerm', ['sign', 'product'])):
    """ A FacProduct with an explicit +1 / -1 coefficient kept outside it """
    __slots__ = ()

    def __str__(self):
        return '{} {}'.format('+' if self.sign > 0 else '-', self.product)


def build_R_expr(shift_m, shift_a, shift_b, numeric_m=None):
    """
    FacProduct for R_{m+shift_m}(a+shift_a, b+shift_b)

    :param shift_m: (int) shift applied to m, normally in -2..0
    :param shift_a: (int) shift applied to a, normally 0 or 1
    :param shift_b: (int) shift applied to b, normally 0 or 1
    :param numeric_m: (int) substitute m := numeric_m before building, None keeps m symbolic
    """
    n, m, a, b = symbols()
    if numeric_m is not None:
        m = LinearForm.const(numeric_m)
    big_m, big_a, big_b = m + shift_m, a + shift_a, b + shift_b
    return FacProduct(FacFactor(f.kind, f.argument(n, big_m, big_a, big_b),
                                f.exponent(n, big_m, big_a, big_b))
                      for f in RABBIT_FACTORS)


def entry_expr(i, j):
    """
    KP entry (i, j) with symbolic n, a, b written as factorial ratios:
    (i+j+a+b)! (2n-i-j-a-b)! / ((i+a)! (j+b)! (n-i-a)! (n-j-b)!)
    """
    n, _, a, b = symbols()
    f = FactorKind.Factorial
    return FacProduct([
        FacFactor(f, a + b + i + j, 1),
        FacFactor(f, 2 * n - a - b - i - j, 1),
        FacFactor(f, a + i, -1),
        FacFactor(f, b + j, -1),
        FacFactor(f, n - a - i, -1),
        FacFactor(f, n - b - j, -1),
    ])


def build_L_base_expr(m_value):
    """
    The m = 0 and m = 1 KP determinants as signed factorial products

    :param m_value: (int) 0 or 1
    :return: (list) of SignedTerm; one term for m = 0, two for m = 1
    """
    if m_value == 0:
        return [SignedTerm(1, entry_expr(0, 0))]
    if m_value == 1:
        return [SignedTerm(1, entry_expr(0, 0) * entry_expr(1, 1)),
                SignedTerm(-1, entry_expr(0, 1) * entry_expr(1, 0))]
    raise ValueError('base expressions exist only for m = 0 or 1, got {}'.format(m_value))

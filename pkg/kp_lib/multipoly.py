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
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
from collections import OrderedDict
from numbers import Integral

from .errors import StallError
from .exact_arith import FactorKind
from .linear_form import SYMBOLS, LinearForm

_ZERO_MONOMIAL = (0,) * len(SYMBOLS)


class MultiPoly(object):
    """
    Sparse polynomial in n, m, a, b with integer coefficients.

    Terms are held as  {exponent tuple: coefficient}; zero coefficients are
    never stored, so the zero polynomial has no terms.
    """
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = dict()
        for monomial, coefficient in (terms or dict()).items():
            monomial = tuple(int(e) for e in monomial)
            assert len(monomial) == len(SYMBOLS) and min(monomial) >= 0, 'Invalid monomial'
            self._add_term(monomial, int(coefficient))

    def _add_term(self, monomial, coefficient):
        if coefficient == 0:
            return
        total = self._terms.get(monomial, 0) + coefficient
        if total == 0:
            del self._terms[monomial]
        else:
            self._terms[monomial] = total

    @staticmethod
    def constant(value):
        return MultiPoly({_ZERO_MONOMIAL: value})

    @staticmethod
    def symbol(name):
        monomial = tuple(1 if s == name else 0 for s in SYMBOLS)
        return MultiPoly({monomial: 1})

    @staticmethod
    def from_linear(form):
        """ Polynomial of a LinearForm """
        form = LinearForm.coerce(form)
        result = MultiPoly.constant(form.constant)
        for index, coefficient in enumerate(form.coefficients):
            if coefficient != 0:
                monomial = tuple(1 if i == index else 0 for i in range(len(SYMBOLS)))
                result._add_term(monomial, coefficient)
        return result

    @staticmethod
    def coerce(value):
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, Integral) and not isinstance(value, bool):
            return MultiPoly.constant(value)
        if isinstance(value, LinearForm):
            return MultiPoly.from_linear(value)
        raise TypeError('cannot use {!r} as a polynomial'.format(value))

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def is_zero(self):
        return len(self._terms) == 0

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __add__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        result = MultiPoly(self._terms)
        for monomial, coefficient in other._terms.items():
            result._add_term(monomial, coefficient)
        return result

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        result = MultiPoly()
        for mono1, coeff1 in self._terms.items():
            for mono2, coeff2 in other._terms.items():
                result._add_term(tuple(x + y for x, y in zip(mono1, mono2)), coeff1 * coeff2)
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent):
        assert isinstance(exponent, Integral) and exponent >= 0, 'Invalid exponent'
        result = MultiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def degree(self, name=None):
        """ Degree in one symbol, or total degree when name is None (-1 for zero) """
        if self.is_zero:
            return -1
        if name is None:
            return max(sum(monomial) for monomial in self._terms)
        index = SYMBOLS.index(name)
        return max(monomial[index] for monomial in self._terms)

    def degrees(self):
        """ Degree in each symbol, then the total degree under 'total' """
        result = OrderedDict((name, self.degree(name)) for name in SYMBOLS)
        result['total'] = self.degree()
        return result

    def evaluate(self, assignment):
        """
        Value at an integer (or rational) point

        :param assignment: (dict) symbol -> value; symbols absent from every term may be omitted
        """
        total = 0
        for monomial, coefficient in self._terms.items():
            term = coefficient
            for name, power in zip(SYMBOLS, monomial):
                if power:
                    term *= assignment[name] ** power
            total += term
        return total

    def __str__(self):
        if self.is_zero:
            return '0'
        text = ''
        for monomial in sorted(self._terms, key=lambda mono: (sum(mono), mono), reverse=True):
            coefficient = self._terms[monomial]
            variables = '*'.join(name if power == 1 else '{}^{}'.format(name, power)
                                 for name, power in zip(SYMBOLS, monomial) if power)
            magnitude = abs(coefficient)
            if len(variables) == 0:
                body = str(magnitude)
            elif magnitude == 1:
                body = variables
            else:
                body = '{}*{}'.format(magnitude, variables)
            if len(text) == 0:
                text = body if coefficient > 0 else '-' + body
            else:
                text += (' + ' if coefficient > 0 else ' - ') + body
        return text

    def __repr__(self):
        return 'MultiPoly({!r})'.format(str(self))


def to_rational_function(fac_product):
    """
    Expand a fully reduced product into (numerator, denominator) polynomials

    :param fac_product: (FacProduct) only linear factors with constant exponents
    :return: (tuple) (MultiPoly, MultiPoly)
    :raises StallError: when a factorial-type factor or a symbolic exponent remains
    """
    numerator = MultiPoly.constant(1)
    denominator = MultiPoly.constant(1)
    leftovers = [f for f in fac_product
                 if f.kind != FactorKind.Linear or not f.exponent.is_constant]
    if len(leftovers) > 0:
        raise StallError('rewriting stalled, unreduced factors: {}'.format(
            ', '.join(str(f) for f in leftovers)), residual=fac_product)

    for factor in fac_product:
        power = factor.exponent.value
        base = MultiPoly.from_linear(factor.argument)
        if power > 0:
            numerator = numerator * base ** power
        else:
            denominator = denominator * base ** -power
    return numerator, denominator

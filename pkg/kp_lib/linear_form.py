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
from numbers import Integral

SYMBOLS = ('n', 'm', 'a', 'b')


class LinearForm(object):
    """
    Integer affine form  c_n n + c_m m + c_a a + c_b b + c_0  over the
    symbols n, m, a, b.  Immutable; equality is coefficientwise and a
    constant form compares equal to the matching int.
    """
    __slots__ = ('_coefficients', '_constant')

    def __init__(self, coefficients=None, constant=0):
        if coefficients is None:
            coefficients = (0,) * len(SYMBOLS)
        elif isinstance(coefficients, dict):
            unknown = set(coefficients) - set(SYMBOLS)
            assert len(unknown) == 0, 'Unknown symbols: {}'.format(sorted(unknown))
            coefficients = tuple(int(coefficients.get(s, 0)) for s in SYMBOLS)
        else:
            coefficients = tuple(int(c) for c in coefficients)
        assert len(coefficients) == len(SYMBOLS), 'Invalid coefficient count'
        self._coefficients = coefficients
        self._constant = int(constant)

    @staticmethod
    def symbol(name, coefficient=1):
        return LinearForm({name: coefficient})

    @staticmethod
    def const(value):
        return LinearForm(constant=value)

    @staticmethod
    def coerce(value):
        if isinstance(value, LinearForm):
            return value
        if isinstance(value, Integral) and not isinstance(value, bool):
            return LinearForm.const(value)
        raise TypeError('cannot use {!r} as a linear form'.format(value))

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def constant(self):
        return self._constant

    @property
    def is_constant(self):
        return not any(self._coefficients)

    @property
    def is_zero(self):
        return self.is_constant and self._constant == 0

    @property
    def value(self):
        assert self.is_constant, 'Linear form {} is not constant'.format(self)
        return self._constant

    def coefficient(self, name):
        return self._coefficients[SYMBOLS.index(name)]

    def sort_key(self):
        return self._coefficients, self._constant

    def __add__(self, other):
        try:
            other = LinearForm.coerce(other)
        except TypeError:
            return NotImplemented
        return LinearForm(tuple(x + y for x, y in zip(self._coefficients, other._coefficients)),
                          self._constant + other._constant)

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(tuple(-x for x in self._coefficients), -self._constant)

    def __sub__(self, other):
        try:
            other = LinearForm.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LinearForm) and other.is_constant:
            other = other.value
        if isinstance(other, bool) or not isinstance(other, Integral):
            return NotImplemented
        return LinearForm(tuple(x * other for x in self._coefficients), self._constant * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LinearForm):
            return self._coefficients == other._coefficients and self._constant == other._constant
        if isinstance(other, Integral) and not isinstance(other, bool):
            return self.is_constant and self._constant == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self.is_constant:
            return hash(self._constant)
        return hash((self._coefficients, self._constant))

    def __repr__(self):
        return 'LinearForm({!r})'.format(str(self))

    def __str__(self):
        text = ''
        for name, coefficient in zip(SYMBOLS, self._coefficients):
            if coefficient == 0:
                continue
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            term = name if magnitude == 1 else '{}{}'.format(magnitude, name)
            text += term if len(text) == 0 and sign == '+' else sign + term
        if self._constant != 0 or len(text) == 0:
            if len(text) == 0:
                text = str(self._constant)
            else:
                text += '{:+d}'.format(self._constant)
        return text

    def substitute(self, mapping):
        """
        Replace symbols by ints or other linear forms

        :param mapping: (dict) symbol name -> int | LinearForm
        :return: (LinearForm)
        """
        result = LinearForm.const(self._constant)
        for name, coefficient in zip(SYMBOLS, self._coefficients):
            if coefficient == 0:
                continue
            replacement = mapping.get(name, LinearForm.symbol(name))
            result = result + LinearForm.coerce(replacement) * coefficient
        return result

    def evaluate(self, assignment):
        """
        Integer value under a full assignment

        :param assignment: (dict) symbol name -> int (only symbols that occur are needed)
        :return: (int)
        """
        total = self._constant
        for name, coefficient in zip(SYMBOLS, self._coefficients):
            if coefficient != 0:
                total += coefficient * assignment[name]
        return total


def symbols():
    """ The four symbols as linear forms, in (n, m, a, b) order """
    return tuple(LinearForm.symbol(name) for name in SYMBOLS)

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
Exact integer / rational primitives.

Integers are Python ints and rationals are fractions.Fraction, so every
value is exact and always held in lowest terms with a positive denominator.
Factorials and superfactorials (0!.1!...k!, written k!! elsewhere in this
package) are memoized in tables that only ever grow.
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
import logging
import threading
from enum import IntEnum
from fractions import Fraction
from numbers import Integral, Rational

from .errors import DomainError

log = logging.getLogger(__name__)


class ProductTable(object):
    """
    Memo table for a running product  t(k) = step(k) * t(k-1), t(0) = 1.

    Entries are appended under a lock and never removed, so concurrent
    readers see either a missing entry (and extend the table) or a final one.
    """
    def __init__(self, name, step):
        self.name = name
        self._step = step
        self._values = [1]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def get(self, k):
        values = self._values
        if k < len(values):
            return values[k]

        with self._lock:
            start = len(self._values)
            for index in range(start, k + 1):
                self._values.append(self._step(index) * self._values[index - 1])
            if k + 1 - start > 64:
                log.debug('%s table grown to %d entries', self.name, k + 1)
            return self._values[k]

    def clear(self):
        with self._lock:
            self._values = [1]


_factorials = ProductTable('factorial', lambda k: k)
_superfactorials = ProductTable('superfactorial', lambda k: _factorials.get(k))


def _as_int(value, what):
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise DomainError('{} requires an integer, got {!r}'.format(what, value),
                          factor=what, argument=value)
    return int(value)


def factorial(k):
    """
    k! = 1 * 2 * ... * k

    :param k: (int) k >= 0
    :return: (int) k!
    """
    k = _as_int(k, 'factorial')
    if k < 0:
        raise DomainError('factorial of negative argument {}'.format(k),
                          factor='factorial', argument=k)
    return _factorials.get(k)


def superfactorial(k):
    """
    k!! = 0! * 1! * ... * k!   with (-1)!! = 1 as the empty product

    :param k: (int) k >= -1
    :return: (int) superfactorial of k
    """
    k = _as_int(k, 'superfactorial')
    if k == -1:
        return 1
    if k < -1:
        raise DomainError('superfactorial of argument {} (must be >= -1)'.format(k),
                          factor='superfactorial', argument=k)
    return _superfactorials.get(k)


def binomial(p, q):
    """
    C(p, q) with the vanishing convention: 0 when q < 0 or q > p

    :param p: (int) upper index, p >= 0
    :param q: (int) lower index, any integer
    :return: (int) binomial coefficient
    """
    p = _as_int(p, 'binomial')
    q = _as_int(q, 'binomial')
    if p < 0:
        raise DomainError('binomial with negative upper index {}'.format(p),
                          factor='binomial', argument=p)
    if q < 0 or q > p:
        return 0
    return factorial(p) // (factorial(q) * factorial(p - q))


def clear_caches():
    """ Drop every memo table (mostly for tests that compare against recomputation) """
    _factorials.clear()
    _superfactorials.clear()


def cache_sizes():
    return {'factorial': len(_factorials), 'superfactorial': len(_superfactorials)}


def rational(value):
    """ Coerce an int / Fraction / 'p/q' string into a Fraction """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('boolean is not a rational value')
    if isinstance(value, (Integral, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError('cannot convert {!r} to an exact rational'.format(value))


def format_exact(value):
    """ Integer text when the denominator is 1, else 'p/q' """
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def bit_length(value):
    """ Bits of the larger of numerator and denominator magnitude """
    value = rational(value)
    return max(abs(value.numerator).bit_length(), value.denominator.bit_length())


class FactorKind(IntEnum):
    """ The factorial-type functions the closed form and the rewriter deal in """
    Linear = 0          # x itself
    Factorial = 1       # x!
    Superfactorial = 2  # x!! = 0! 1! ... x!

    @property
    def symbol(self):
        return {FactorKind.Linear: '', FactorKind.Factorial: '!',
                FactorKind.Superfactorial: '!!'}[self]


def evaluate_factor(kind, argument):
    """
    Value of one factorial-type factor at an integer argument

    :param kind: (FactorKind) function
    :param argument: (int) argument
    :return: (int) value
    """
    if kind == FactorKind.Superfactorial:
        return superfactorial(argument)
    if kind == FactorKind.Factorial:
        return factorial(argument)
    return _as_int(argument, 'linear')

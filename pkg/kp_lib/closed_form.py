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
Closed-form right side R_m(a, b) of the two-parameter KP identity:

      (a+b)! (2n+1)!^(m+1) (2n-m)!! m!! (m+a+b)!! (2n-m-a-b)!! a!! b!! (n-m-a-1)!! (n-m-b-1)!!
    -------------------------------------------------------------------------------------------
          a! b! (2n+1)!! (n-a)!! (n-b)!! (m+a)!! (m+b)!! (a+b)!! (2n-2m-a-b-1)!!

with x!! the superfactorial 0! 1! ... x! and (-1)!! = 1.

The factor table is written with plain callables of (n, m, a, b) so the same
table evaluates integers here and builds linear forms in the rewriter.
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
from collections import namedtuple, OrderedDict
from fractions import Fraction

from .errors import ConsistencyError, DomainError
from .exact_arith import FactorKind, evaluate_factor, factorial, superfactorial, format_exact
from .kp_matrix import KPParams

RabbitFactor = namedtuple('RabbitFactor', ['label', 'kind', 'argument', 'exponent'])

_F = FactorKind.Factorial
_SF = FactorKind.Superfactorial


def _num(_n, _m, _a, _b):
    return 1


def _den(_n, _m, _a, _b):
    return -1


RABBIT_FACTORS = (
    # Numerator
    RabbitFactor('(a+b)!', _F, lambda n, m, a, b: a + b, _num),
    RabbitFactor('(2n+1)!^(m+1)', _F, lambda n, m, a, b: 2 * n + 1, lambda n, m, a, b: m + 1),
    RabbitFactor('(2n-m)!!', _SF, lambda n, m, a, b: 2 * n - m, _num),
    RabbitFactor('m!!', _SF, lambda n, m, a, b: m, _num),
    RabbitFactor('(m+a+b)!!', _SF, lambda n, m, a, b: m + a + b, _num),
    RabbitFactor('(2n-m-a-b)!!', _SF, lambda n, m, a, b: 2 * n - m - a - b, _num),
    RabbitFactor('a!!', _SF, lambda n, m, a, b: a, _num),
    RabbitFactor('b!!', _SF, lambda n, m, a, b: b, _num),
    RabbitFactor('(n-m-a-1)!!', _SF, lambda n, m, a, b: n - m - a - 1, _num),
    RabbitFactor('(n-m-b-1)!!', _SF, lambda n, m, a, b: n - m - b - 1, _num),
    # Denominator
    RabbitFactor('a!', _F, lambda n, m, a, b: a, _den),
    RabbitFactor('b!', _F, lambda n, m, a, b: b, _den),
    RabbitFactor('(2n+1)!!', _SF, lambda n, m, a, b: 2 * n + 1, _den),
    RabbitFactor('(n-a)!!', _SF, lambda n, m, a, b: n - a, _den),
    RabbitFactor('(n-b)!!', _SF, lambda n, m, a, b: n - b, _den),
    RabbitFactor('(m+a)!!', _SF, lambda n, m, a, b: m + a, _den),
    RabbitFactor('(m+b)!!', _SF, lambda n, m, a, b: m + b, _den),
    RabbitFactor('(a+b)!!', _SF, lambda n, m, a, b: a + b, _den),
    RabbitFactor('(2n-2m-a-b-1)!!', _SF, lambda n, m, a, b: 2 * n - 2 * m - a - b - 1, _den),
)


class RabbitValue(object):
    """ Exact value of R_m(a, b) """
    def __init__(self, params, numerator, denominator):
        self.params = params
        self.numerator = numerator          # Product of the numerator factors
        self.denominator = denominator      # Product of the denominator factors
        self.value = Fraction(numerator, denominator)

    def __str__(self):
        return 'R{} = {}'.format(self.params, format_exact(self.value))

    @property
    def integral(self):
        return self.value.denominator == 1

    def to_dict(self):
        return OrderedDict([('params', self.params.to_dict()),
                            ('value', format_exact(self.value)),
                            ('integral', self.integral)])


def rabbit_rhs(p):
    """
    Evaluate R_m(a, b) as one exact rational (numerator product over
    denominator product, then reduced).

    :param p: (KPParams) parameters; every factorial argument must be >= 0 and
              every superfactorial argument >= -1
    :return: (RabbitValue)
    """
    p = KPParams(*p)
    numerator = 1
    denominator = 1
    for factor in RABBIT_FACTORS:
        argument = factor.argument(*p)
        exponent = factor.exponent(*p)
        try:
            value = evaluate_factor(factor.kind, argument)
        except DomainError:
            raise DomainError('{} with argument {} at {}'.format(factor.label, argument, p),
                              factor=factor.label, argument=argument)
        if exponent >= 0:
            numerator *= value ** exponent
        else:
            denominator *= value ** -exponent

    return RabbitValue(p, numerator, denominator)


def special_rhs(n):
    """
    (2n+1)!^(n+1) / (2n+1)!!, the right side of the one-parameter identity

    :param n: (int) n >= 0
    :return: (int) exact quotient
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError('special_rhs needs an integer n >= 0, got {!r}'.format(n),
                          factor='n', argument=n)
    value, remainder = divmod(factorial(2 * n + 1) ** (n + 1), superfactorial(2 * n + 1))
    if remainder != 0:
        raise ConsistencyError('(2n+1)!^(n+1) / (2n+1)!! is not exact at n = {}'.format(n))
    return value


def specialization_check(n):
    """ True when R_n(0, 0) at m = n matches the one-parameter closed form exactly """
    return rabbit_rhs(KPParams(n, n, 0, 0)).value == special_rhs(n)

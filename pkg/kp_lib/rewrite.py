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
Cancellation rules for factorial-type products:

    r!! / (r-k)!!  ->  r! (r-1)! ... (r-k+1)!
    r!  / (r-k)!   ->  r (r-1) ... (r-k+1)

plus folding of factors whose argument and exponent are both constants into
a single rational constant.
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
import logging
from collections import OrderedDict
from fractions import Fraction

from .errors import DomainError
from .exact_arith import FactorKind, evaluate_factor
from .fac_product import FacFactor, FacProduct

log = logging.getLogger(__name__)

_LOWER = {
    FactorKind.Superfactorial: FactorKind.Factorial,
    FactorKind.Factorial: FactorKind.Linear,
}


class RewriteStats(object):
    """ Rule firing counters for one or more simplify() calls """
    def __init__(self):
        self.ground = 0
        self.superfactorial = 0
        self.factorial = 0
        self.rounds = 0

    def __iadd__(self, other):
        assert isinstance(other, RewriteStats), 'Invalid type'
        self.ground += other.ground
        self.superfactorial += other.superfactorial
        self.factorial += other.factorial
        self.rounds += other.rounds
        return self

    @property
    def total(self):
        return self.ground + self.superfactorial + self.factorial

    def to_dict(self):
        return OrderedDict([('ground', self.ground),
                            ('superfactorial', self.superfactorial),
                            ('factorial', self.factorial),
                            ('rounds', self.rounds)])


def _is_constant_linear(factor):
    return factor.kind == FactorKind.Linear and factor.argument.is_constant \
        and factor.exponent.is_constant and factor.argument.value != 0


def _constant_factors(value):
    """ Reduced rational 'value' as at most two linear factors p^1 q^-1 """
    factors = []
    if value.numerator != 1:
        factors.append(FacFactor(FactorKind.Linear, value.numerator, 1))
    if value.denominator != 1:
        factors.append(FacFactor(FactorKind.Linear, value.denominator, -1))
    return factors


def fold_ground(fp):
    """
    Evaluate factorial-type factors with constant argument and constant
    exponent, and merge all nonzero constant linear factors into one
    rational constant

    :param fp: (FacProduct) input
    :return: (tuple) (FacProduct, number of factors folded)
    """
    kept = []
    constants = []
    folded = 0
    constant = Fraction(1)
    for factor in fp:
        if _is_constant_linear(factor):
            constants.append(factor)
            constant *= Fraction(factor.argument.value) ** factor.exponent.value
            continue
        if factor.kind == FactorKind.Linear or not factor.argument.is_constant \
                or not factor.exponent.is_constant:
            kept.append(factor)
            continue
        try:
            value = evaluate_factor(factor.kind, factor.argument.value)
        except DomainError:
            kept.append(factor)
            continue

        folded += 1
        constant *= Fraction(value) ** factor.exponent.value

    merged = _constant_factors(constant)
    if FacProduct(merged) != FacProduct(constants):
        folded += len(constants)
    elif folded == 0:
        return fp, 0
    return FacProduct(kept + merged), folded


def _cancellation(hi, lo):
    """
    Exponent t that moves from the pair (hi, lo) into the expanded chain,
    or None when the pair cannot cancel.  hi.argument - lo.argument > 0.
    """
    e_hi, e_lo = hi.exponent, lo.exponent
    if e_hi.is_constant and e_lo.is_constant:
        x, y = e_hi.value, e_lo.value
        if x * y >= 0:
            return None
        magnitude = min(abs(x), abs(y))
        return magnitude if x > 0 else -magnitude

    if (e_hi + e_lo).is_zero:
        return e_hi
    return None


def find_pair(fp, kind):
    """
    Closest cancellable pair of 'kind' factors sharing an argument class

    :return: (tuple) (hi, lo, gap, t) or None
    """
    classes = OrderedDict()
    for factor in fp.of_kind(kind):
        classes.setdefault(factor.argument.coefficients, []).append(factor)

    best = None
    for members in classes.values():
        for hi in members:
            for lo in members:
                gap = hi.argument.constant - lo.argument.constant
                if gap <= 0:
                    continue
                t = _cancellation(hi, lo)
                if t is None:
                    continue
                key = (gap, hi.argument.sort_key())
                if best is None or key < best[0]:
                    best = (key, (hi, lo, gap, t))

    return best[1] if best is not None else None


def apply_pair(fp, hi, lo, gap, t):
    """ Replace kind(H)^t kind(H-gap)^(-t) by the product of the next lower kind """
    lower = _LOWER[hi.kind]
    rest = [f for f in fp if f != hi and f != lo]
    rest.append(FacFactor(hi.kind, hi.argument, hi.exponent - t))
    rest.append(FacFactor(lo.kind, lo.argument, lo.exponent + t))
    rest.extend(FacFactor(lower, hi.argument - i, t) for i in range(gap))
    return FacProduct(rest)


def _rule_to_fixpoint(fp, kind):
    steps = 0
    while True:
        pair = find_pair(fp, kind)
        if pair is None:
            return fp, steps
        hi, lo, gap, t = pair
        log.debug('%s rule: %s / %s (gap %d, exponent %s)',
                  kind.name.lower(), hi, lo, gap, t)
        fp = apply_pair(fp, hi, lo, gap, t)
        steps += 1


def simplify(fp, stats=None):
    """
    Rewrite a FacProduct to fixpoint: ground folding, then the superfactorial
    rule until it no longer applies, then the factorial rule, repeated until
    a full round changes nothing.

    :param fp: (FacProduct) input product
    :param stats: (RewriteStats) optional counters to update
    :return: (FacProduct) the simplified product
    """
    assert isinstance(fp, FacProduct), 'Invalid type'
    stats = stats if stats is not None else RewriteStats()

    while True:
        stats.rounds += 1
        fp, ground = fold_ground(fp)
        fp, sf_steps = _rule_to_fixpoint(fp, FactorKind.Superfactorial)
        fp, f_steps = _rule_to_fixpoint(fp, FactorKind.Factorial)

        stats.ground += ground
        stats.superfactorial += sf_steps
        stats.factorial += f_steps

        if ground + sf_steps + f_steps == 0:
            return fp

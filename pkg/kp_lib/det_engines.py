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
Exact determinant engines.

  condense   Dodgson condensation, layer by layer through all connected minors
  bareiss    fraction-free Gaussian elimination (the general-purpose oracle)
  cofactor   first-row Laplace expansion (second oracle, small orders only)

plus KPRecurrence, which evaluates the KP determinants through the
condensation recurrence on the (m, a, b) lattice without ever building a
matrix of order greater than 2.
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
import logging
from collections import OrderedDict
from enum import IntEnum
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import RefusalError, RecurrenceDivisionError, UsageError
from .exact_arith import bit_length, format_exact
from .kp_matrix import ExactMatrix, KPParams, build_matrix

log = logging.getLogger(__name__)

COFACTOR_MAX_ORDER = 8


class Engine(IntEnum):
    Condense = 1
    Bareiss = 2
    Cofactor = 3

    @property
    def tag(self):
        return self.name.lower()

    @staticmethod
    def from_tag(tag):
        for engine in Engine:
            if engine.tag == str(tag).strip().lower():
                return engine
        raise UsageError("unknown engine '{}', expected one of: {}".format(
            tag, ', '.join(e.tag for e in Engine)))


class BitTracker(object):
    """ Records the largest bit length of any intermediate value observed """
    def __init__(self):
        self.peak_bits = 0
        self.observations = 0

    def observe(self, value):
        self.observations += 1
        bits = bit_length(value)
        if bits > self.peak_bits:
            self.peak_bits = bits
        return value


class DetResult(object):
    """ Determinant value plus how it was obtained """
    def __init__(self, value, engine, fallback_used=False):
        assert isinstance(engine, Engine), 'Invalid type'
        assert not fallback_used or engine == Engine.Condense, \
            'Only condensation can fall back'
        self.value = Fraction(value)
        self.engine = engine
        self.fallback_used = fallback_used

    def __str__(self):
        return '{} ({}{})'.format(format_exact(self.value), self.engine.tag,
                                  ', fallback' if self.fallback_used else '')

    def to_dict(self):
        return OrderedDict([('value', format_exact(self.value)),
                            ('engine', self.engine.tag),
                            ('fallback_used', self.fallback_used)])


def _observe(tracker, value):
    return tracker.observe(value) if tracker is not None else value


def det_cofactor(matrix, tracker=None):
    """
    Determinant by first-row Laplace expansion

    :param matrix: (ExactMatrix) order <= 8
    :return: (Fraction) determinant
    """
    assert isinstance(matrix, ExactMatrix), 'Invalid type'
    if matrix.order > COFACTOR_MAX_ORDER:
        raise RefusalError(Engine.Cofactor.tag, matrix.order, COFACTOR_MAX_ORDER)

    def expand(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = Fraction(0)
        for col, pivot in enumerate(rows[0]):
            if pivot == 0:
                continue
            sub = [row[:col] + row[col + 1:] for row in rows[1:]]
            term = pivot * expand(sub)
            total += term if col % 2 == 0 else -term
            _observe(tracker, total)
        return total

    return Fraction(expand(matrix.rows))


def _lcm(x, y):
    return x * y // gcd(x, y)


def det_bareiss(matrix, tracker=None):
    """
    Fraction-free (Bareiss) elimination.  Rational input is scaled by the
    common denominator D to an integer matrix and the result divided by D^r.

    :param matrix: (ExactMatrix) any order
    :return: (Fraction) determinant
    """
    assert isinstance(matrix, ExactMatrix), 'Invalid type'
    order = matrix.order
    scale = 1 if matrix.is_integral else reduce(_lcm, (x.denominator for row in matrix for x in row), 1)
    work = [[int(x * scale) for x in row] for row in matrix]

    sign = 1
    previous = 1
    for k in range(order - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, order) if work[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign

        pivot = work[k][k]
        for i in range(k + 1, order):
            for j in range(k + 1, order):
                value, remainder = divmod(work[i][j] * pivot - work[i][k] * work[k][j], previous)
                assert remainder == 0, 'Bareiss division must be exact'
                work[i][j] = _observe(tracker, value)
            work[i][k] = 0
        previous = pivot

    return Fraction(sign * work[order - 1][order - 1], scale ** order)


class CondensationTableau(object):
    """
    Every layer of a condensation run.  Layer r (1-based) holds the
    determinants of all r x r connected minors, (order - r + 1)^2 of them.
    """
    def __init__(self, matrix):
        self.order = matrix.order
        self.layers = list()           # layers[r - 1] -> list of rows
        self.broken_at = None          # Layer whose divisor hit zero (if any)

    def __len__(self):
        return len(self.layers)

    def __getitem__(self, r):
        return self.layers[r - 1]

    @property
    def complete(self):
        return self.broken_at is None and len(self.layers) == self.order

    @property
    def value(self):
        return self.layers[-1][0][0] if self.complete else None

    def to_dict(self):
        return OrderedDict([
            ('order', self.order),
            ('broken_at', self.broken_at),
            ('layers', [[[format_exact(x) for x in row] for row in layer] for layer in self.layers]),
        ])


def _condense_step(current, divisor, tracker):
    """ One condensation layer; None when a needed divisor is zero """
    size = len(current) - 1
    if divisor is not None:
        if any(divisor[i + 1][j + 1] == 0 for i in range(size) for j in range(size)):
            return None
    layer = list()
    for i in range(size):
        row = list()
        for j in range(size):
            cross = current[i][j] * current[i + 1][j + 1] - current[i][j + 1] * current[i + 1][j]
            if divisor is not None:
                cross = cross / divisor[i + 1][j + 1]
            row.append(_observe(tracker, cross))
        layer.append(row)
    return layer


def condensation_tableau(matrix, tracker=None):
    """
    Run condensation keeping every layer

    :param matrix: (ExactMatrix) input
    :return: (CondensationTableau)
    """
    assert isinstance(matrix, ExactMatrix), 'Invalid type'
    tableau = CondensationTableau(matrix)
    tableau.layers.append([list(row) for row in matrix])
    previous = None
    while len(tableau.layers) < matrix.order:
        current = tableau.layers[-1]
        layer = _condense_step(current, previous, tracker)
        if layer is None:
            tableau.broken_at = len(tableau.layers) + 1
            break
        previous = current
        tableau.layers.append(layer)
    return tableau


def det_condense(matrix, tracker=None):
    """
    Dodgson condensation with two rolling layers.  If an interior divisor is
    zero, the whole computation is delegated to det_bareiss and the result is
    flagged with fallback_used.

    :param matrix: (ExactMatrix) input
    :return: (DetResult)
    """
    assert isinstance(matrix, ExactMatrix), 'Invalid type'
    current = [list(row) for row in matrix]
    previous = None
    for r in range(2, matrix.order + 1):
        layer = _condense_step(current, previous, tracker)
        if layer is None:
            log.debug('zero interior divisor at layer %d of order %d, falling back to bareiss',
                      r, matrix.order)
            return DetResult(det_bareiss(matrix, tracker), Engine.Condense, fallback_used=True)
        previous, current = current, layer

    return DetResult(current[0][0], Engine.Condense)


def determinant(matrix, engine, tracker=None):
    """
    Run one engine by tag or Engine value

    :return: (DetResult)
    """
    engine = engine if isinstance(engine, Engine) else Engine.from_tag(engine)
    if engine == Engine.Condense:
        return det_condense(matrix, tracker)
    if engine == Engine.Bareiss:
        return DetResult(det_bareiss(matrix, tracker), engine)
    return DetResult(det_cofactor(matrix, tracker), engine)


class KPRecurrence(object):
    """
    L_m(a, b) for fixed n computed only through

        X_m(a,b) = (X_{m-1}(a,b) X_{m-1}(a+1,b+1) - X_{m-1}(a+1,b) X_{m-1}(a,b+1))
                   / X_{m-2}(a+1,b+1)

    bottoming out at the explicit 1x1 (m = 0) and 2x2 (m = 1) determinants.
    The memo table is keyed by (m, a, b) and belongs to this instance only.
    """
    def __init__(self, n, tracker=None):
        self.n = n
        self.memo = dict()
        self.tracker = tracker
        self.divisions = 0

    def __len__(self):
        return len(self.memo)

    def value(self, m, a, b):
        key = (m, a, b)
        if key in self.memo:
            return self.memo[key]

        if m <= 1:
            small = build_matrix(KPParams(self.n, m, a, b))
            if m == 0:
                result = int(small[0, 0])
            else:
                result = int(small[0, 0] * small[1, 1] - small[0, 1] * small[1, 0])
        else:
            cross = self.value(m - 1, a, b) * self.value(m - 1, a + 1, b + 1) - \
                self.value(m - 1, a + 1, b) * self.value(m - 1, a, b + 1)
            divisor = self.value(m - 2, a + 1, b + 1)
            if divisor == 0:
                raise RecurrenceDivisionError(self.n, m, a, b)
            result, remainder = divmod(cross, divisor)
            assert remainder == 0, 'non-exact recurrence division at {}'.format(key)
            self.divisions += 1

        self.memo[key] = _observe(self.tracker, result)
        return result


def det_condense_kp(p, tracker=None):
    """
    The KP determinant by the condensation recurrence run forward

    :param p: (KPParams) validated-domain parameters
    :return: (int) L_m(a, b)
    """
    p = KPParams(*p).validate()
    recurrence = KPRecurrence(p.n, tracker)
    value = recurrence.value(p.m, p.a, p.b)
    log.debug('recurrence for %s used %d memo entries', p, len(recurrence))
    return value

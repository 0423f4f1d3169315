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
from collections import namedtuple, OrderedDict
from fractions import Fraction

from .errors import DomainError
from .exact_arith import binomial, rational, format_exact


class KPParams(namedtuple('KPParams', ['n', 'm', 'a', 'b'])):
    """
    Parameters (n, m, a, b) of the Kuperberg-Propp matrix family.

    The validated domain is  0 <= m,  m + a <= n,  m + b <= n  with all four
    values nonnegative.  Inside it every binomial upper index of the matrix is
    nonnegative and every superfactorial argument of the closed form is >= -1.
    """
    __slots__ = ()

    def __str__(self):
        return '(n={}, m={}, a={}, b={})'.format(*self)

    def domain_violation(self):
        """ Text describing why the point is outside the domain, None if inside """
        for name, value in zip(self._fields, self):
            if isinstance(value, bool) or not isinstance(value, int):
                return '{} must be an integer, got {!r}'.format(name, value)
            if value < 0:
                return '{} = {} is negative'.format(name, value)
        if self.m > self.n:
            return 'm = {} exceeds n = {}'.format(self.m, self.n)
        if self.m + self.a > self.n:
            return 'm + a = {} exceeds n = {}'.format(self.m + self.a, self.n)
        if self.m + self.b > self.n:
            return 'm + b = {} exceeds n = {}'.format(self.m + self.b, self.n)
        return None

    @property
    def in_domain(self):
        return self.domain_violation() is None

    def validate(self):
        problem = self.domain_violation()
        if problem is not None:
            raise DomainError('parameters {} outside the validated domain: {}'.format(self, problem),
                              factor='params', argument=tuple(self))
        return self

    def shifted(self, dm=0, da=0, db=0):
        return KPParams(self.n, self.m + dm, self.a + da, self.b + db)

    def swapped(self):
        """ The a <-> b mirror point (transpose family) """
        return KPParams(self.n, self.m, self.b, self.a)

    @property
    def order(self):
        return self.m + 1

    def to_dict(self):
        return OrderedDict(zip(self._fields, self))


def domain_points(n_max, n_min=0):
    """
    All validated-domain points with n_min <= n <= n_max in (n, m, a, b)
    lexicographic order.
    """
    for n in range(n_min, n_max + 1):
        for m in range(0, n + 1):
            for a in range(0, n - m + 1):
                for b in range(0, n - m + 1):
                    yield KPParams(n, m, a, b)


def probe_points(n_max):
    """ Points with 0 <= m <= n and 0 <= a, b <= n that lie outside the domain """
    for n in range(0, n_max + 1):
        for m in range(0, n + 1):
            for a in range(0, n + 1):
                for b in range(0, n + 1):
                    p = KPParams(n, m, a, b)
                    if not p.in_domain:
                        yield p


class ExactMatrix(object):
    """
    Dense square matrix of exact rationals, immutable after construction.

    Entries are addressed 0-based through  matrix[i, j]; connected minors use
    the 1-based (k, l) corner convention of  minor(r, k, l).
    """
    def __init__(self, rows):
        rows = [tuple(rational(x) for x in row) for row in rows]
        if len(rows) == 0:
            raise ValueError('matrix must have order >= 1')
        order = len(rows)
        for index, row in enumerate(rows):
            if len(row) != order:
                raise ValueError('matrix is not square: row {} has {} entries, expected {}'.
                                 format(index + 1, len(row), order))
        self._rows = tuple(rows)

    def __getitem__(self, item):
        i, j = item
        return self._rows[i][j]

    def __iter__(self):
        for row in self._rows:
            yield row

    def __len__(self):
        return len(self._rows)

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return self._rows == other._rows
        if isinstance(other, (list, tuple)):
            try:
                return self == ExactMatrix(other)
            except (ValueError, TypeError):
                return False
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return 'ExactMatrix({})'.format(self.as_lists(text=True))

    @property
    def order(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    @property
    def is_integral(self):
        return all(x.denominator == 1 for row in self._rows for x in row)

    def as_lists(self, text=False):
        if text:
            return [[format_exact(x) for x in row] for row in self._rows]
        return [list(row) for row in self._rows]

    def transpose(self):
        return ExactMatrix(zip(*self._rows))

    def scale_row(self, index, factor):
        factor = rational(factor)
        return ExactMatrix([tuple(x * factor for x in row) if i == index else row
                            for i, row in enumerate(self._rows)])

    def is_symmetric(self):
        return all(self._rows[i][j] == self._rows[j][i]
                   for i in range(self.order) for j in range(i))

    def minor(self, r, k, l):
        return connected_minor(self, r, k, l)


def entry(p, i, j):
    """
    Entry (i, j), 0-based, of the KP matrix:
        C(i+j+a+b, i+a) * C(2n-i-j-a-b, n-i-a)

    :param p: (KPParams) validated-domain parameters
    :param i: (int) row index, 0 <= i <= m
    :param j: (int) column index, 0 <= j <= m
    :return: (int) exact entry value
    """
    p = KPParams(*p).validate()
    if not (0 <= i <= p.m and 0 <= j <= p.m):
        raise DomainError('index ({}, {}) outside 0..{}'.format(i, j, p.m),
                          factor='index', argument=(i, j))
    return _raw_entry(p, i, j)


def _raw_entry(p, i, j):
    n, _, a, b = p
    return binomial(i + j + a + b, i + a) * binomial(2 * n - i - j - a - b, n - i - a)


def build_matrix(p, check=True):
    """
    The (m+1) x (m+1) KP matrix for the parameters.

    :param p: (KPParams) parameters
    :param check: (bool) reject points outside the validated domain. With False
                  the raw binomial definition is used and a DomainError only
                  surfaces if an upper index goes negative
    """
    p = KPParams(*p)
    if check:
        p.validate()
    elif p.m < 0:
        raise DomainError('m = {} is negative'.format(p.m), factor='params', argument=tuple(p))
    return ExactMatrix([[_raw_entry(p, i, j) for j in range(p.m + 1)]
                        for i in range(p.m + 1)])


def connected_minor(matrix, r, k, l):
    """
    The r x r contiguous submatrix whose upper-left entry is at 1-based (k, l)

    :param matrix: (ExactMatrix) source
    :param r: (int) minor order, >= 1
    :param k: (int) 1-based row of the upper-left corner
    :param l: (int) 1-based column of the upper-left corner
    """
    assert isinstance(matrix, ExactMatrix), 'Invalid type'
    order = matrix.order
    if r < 1 or k < 1 or l < 1 or k + r - 1 > order or l + r - 1 > order:
        raise DomainError('minor window r={}, (k, l)=({}, {}) outside order {}'.format(r, k, l, order),
                          factor='minor', argument=(r, k, l))
    return ExactMatrix([matrix.rows[i][l - 1:l - 1 + r] for i in range(k - 1, k - 1 + r)])


class ShiftReport(object):
    """ Outcome of comparing the four corner minors with the shifted family """
    CORNERS = (
        # (label, (k, l), (dm, da, db))
        ('A(1,1)', (1, 1), (-1, 0, 0)),
        ('A(2,2)', (2, 2), (-1, 1, 1)),
        ('A(2,1)', (2, 1), (-1, 1, 0)),
        ('A(1,2)', (1, 2), (-1, 0, 1)),
    )

    def __init__(self, params):
        self.params = params
        self.checks = OrderedDict()     # label -> bool

    def __str__(self):
        return 'Shift correspondence {}: {}'.format(
            self.params, ', '.join('{}={}'.format(k, v) for k, v in self.checks.items()))

    @property
    def all_hold(self):
        return len(self.checks) == 4 and all(self.checks.values())

    def to_dict(self):
        return OrderedDict([('params', self.params.to_dict()),
                            ('checks', OrderedDict(self.checks)),
                            ('all_hold', self.all_hold)])


def shift_correspondence(p):
    """
    Compare the four m x m corner minors of build_matrix(p) entrywise with the
    matrices of the shifted parameter tuples that the recurrence uses.

    :param p: (KPParams) validated-domain parameters with m >= 1
    :return: (ShiftReport)
    """
    p = KPParams(*p).validate()
    if p.m < 1:
        raise DomainError('shift correspondence needs m >= 1, got m = {}'.format(p.m),
                          factor='m', argument=p.m)
    full = build_matrix(p)
    report = ShiftReport(p)
    for label, (k, l), (dm, da, db) in ShiftReport.CORNERS:
        corner = connected_minor(full, p.m, k, l)
        report.checks[label] = corner == build_matrix(p.shifted(dm, da, db))
    return report

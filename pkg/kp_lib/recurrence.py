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
Numeric check of

    X_m(a,b) X_{m-2}(a+1,b+1) = X_{m-1}(a,b) X_{m-1}(a+1,b+1) - X_{m-1}(a+1,b) X_{m-1}(a,b+1)

for X = L (determinants) and X = R (closed form) at every eligible point.
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
import logging
import time
from collections import OrderedDict

from .closed_form import rabbit_rhs
from .det_engines import det_bareiss
from .exact_arith import format_exact
from .kp_matrix import KPParams, build_matrix, domain_points
from .outcome import PointOutcome, SweepReport

log = logging.getLogger(__name__)

# (dm, da, db) of the five recurrence terms: target, divisor, then the cross terms
SHIFTS = {
    'X_m(a,b)': (0, 0, 0),
    'X_m-2(a+1,b+1)': (-2, 1, 1),
    'X_m-1(a,b)': (-1, 0, 0),
    'X_m-1(a+1,b+1)': (-1, 1, 1),
    'X_m-1(a+1,b)': (-1, 1, 0),
    'X_m-1(a,b+1)': (-1, 0, 1),
}


class _Cached(object):
    """ Memoized X evaluator """
    def __init__(self, evaluate):
        self._evaluate = evaluate
        self._values = dict()
        self.elapsed = 0.0

    def __call__(self, params):
        key = tuple(params)
        if key not in self._values:
            started = time.perf_counter()
            self._values[key] = self._evaluate(KPParams(*params))
            self.elapsed += time.perf_counter() - started
        return self._values[key]


def eligible_points(n_max, n_min=0):
    """ Validated-domain points with m >= 2; all five shifted tuples stay in the domain """
    return (p for p in domain_points(n_max, n_min) if p.m >= 2)


def recurrence_holds(x, p):
    """
    :param x: (callable) KPParams -> exact value
    :param p: (KPParams) point with m >= 2
    :return: (tuple) (holds, lhs, rhs) with the cross-multiplied sides
    """
    v = {name: x(p.shifted(*shift)) for name, shift in SHIFTS.items()}
    lhs = v['X_m(a,b)'] * v['X_m-2(a+1,b+1)']
    rhs = v['X_m-1(a,b)'] * v['X_m-1(a+1,b+1)'] - v['X_m-1(a+1,b)'] * v['X_m-1(a,b+1)']
    return v['X_m-2(a+1,b+1)'] != 0 and lhs == rhs, lhs, rhs


def check_level(n):
    """
    Recurrence outcomes at every eligible point with this n; shifted points
    keep n, so each level has its own memo tables

    :param n: (int) matrix parameter n
    :return: (tuple) (list of PointOutcome, OrderedDict engine -> seconds)
    """
    x_l = _Cached(lambda p: det_bareiss(build_matrix(p)))
    x_r = _Cached(lambda p: rabbit_rhs(p).value)
    outcomes = list()

    for p in eligible_points(n, n_min=n):
        outcome = PointOutcome(p)
        for tag, x in (('L', x_l), ('R', x_r)):
            holds, lhs, rhs = recurrence_holds(x, p)
            outcome.check('recurrence_{}'.format(tag), holds)
            outcome.values['{}_lhs'.format(tag)] = format_exact(lhs)
            outcome.values['{}_rhs'.format(tag)] = format_exact(rhs)
        if not outcome.checks['recurrence_L'] or not outcome.checks['recurrence_R']:
            log.warning('recurrence fails at %s', p)
        outcomes.append(outcome)

    return outcomes, OrderedDict([('bareiss', x_l.elapsed), ('rabbit_rhs', x_r.elapsed)])


def numeric_recurrence_check(n_max, mapper=None):
    """
    Verify the recurrence exactly for X = L and X = R at every validated-domain
    point with n <= n_max and m >= 2.  n_max < 2 yields an empty report.

    :param n_max: (int) largest n
    :param mapper: (callable) (worker, levels) -> results in level order; None runs serially
    :return: (SweepReport)
    """
    report = SweepReport('verify-recurrence', [('n_max', n_max)])
    levels = range(2, n_max + 1)
    results = mapper(check_level, levels) if mapper is not None else [check_level(n) for n in levels]

    for outcomes, timings in results:
        for outcome in outcomes:
            report.add(outcome)
        for engine, seconds in timings.items():
            report.timings[engine] = report.timings.get(engine, 0.0) + seconds

    log.debug('recurrence check: %d points', len(report))
    return report

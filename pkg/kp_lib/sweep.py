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
import logging
import time
from concurrent.futures import ProcessPoolExecutor

from more_itertools import chunked

from .closed_form import rabbit_rhs, special_rhs, specialization_check
from .det_engines import det_bareiss, det_condense, det_condense_kp
from .errors import DomainError, RecurrenceDivisionError
from .exact_arith import format_exact
from .kp_matrix import KPParams, build_matrix, domain_points, probe_points, shift_correspondence
from .outcome import PointOutcome, SweepReport, Verdict
from .recurrence import numeric_recurrence_check

log = logging.getLogger(__name__)

CHUNK_SIZE = 64


def _timed(outcome, engine, func, *args):
    started = time.perf_counter()
    result = func(*args)
    outcome.timings[engine] = outcome.timings.get(engine, 0.0) + time.perf_counter() - started
    return result


def main_point(n):
    """ det(build_matrix(n, n, 0, 0)) against (2n+1)!^(n+1) / (2n+1)!! """
    p = KPParams(n, n, 0, 0)
    outcome = PointOutcome(p)
    matrix = build_matrix(p)
    condensed = _timed(outcome, 'condense', det_condense, matrix)
    bareiss = _timed(outcome, 'bareiss', det_bareiss, matrix)
    expected = _timed(outcome, 'special_rhs', special_rhs, n)

    outcome.values['det'] = format_exact(condensed.value)
    outcome.values['special_rhs'] = format_exact(expected)
    outcome.check('condense', condensed.value == expected)
    outcome.check('bareiss', bareiss == expected)
    outcome.check('specialization', specialization_check(n))
    if condensed.fallback_used:
        outcome.add_note('condensation fell back to bareiss')
    return outcome


def rabbit_point(p):
    """ Every determinant engine, the KP recurrence and the closed form at one domain point """
    p = KPParams(*p)
    outcome = PointOutcome(p)
    matrix = build_matrix(p)
    condensed = _timed(outcome, 'condense', det_condense, matrix)
    bareiss = _timed(outcome, 'bareiss', det_bareiss, matrix)
    try:
        recurrence = _timed(outcome, 'condense_kp', det_condense_kp, p)
    except RecurrenceDivisionError as e:
        recurrence = None
        outcome.add_note(str(e))
    rhs = _timed(outcome, 'rabbit_rhs', rabbit_rhs, p)

    outcome.values['L'] = format_exact(condensed.value)
    outcome.values['R'] = format_exact(rhs.value)
    outcome.check('condense', condensed.value == rhs.value)
    outcome.check('bareiss', bareiss == rhs.value)
    outcome.check('condense_kp', recurrence == bareiss)
    outcome.check('integral', rhs.integral)
    outcome.check('positive', rhs.value > 0)
    if p.m >= 1:
        outcome.check('shift', shift_correspondence(p).all_hold)
    if condensed.fallback_used:
        outcome.add_note('condensation fell back to bareiss')
    return outcome


def probe_point(p):
    """
    An out-of-domain point: note whether both sides are defined and agree.
    Never a failure.
    """
    p = KPParams(*p)
    outcome = PointOutcome(p, Verdict.OutOfDomain)
    lhs = rhs = None
    try:
        lhs = det_bareiss(build_matrix(p, check=False))
        outcome.values['L'] = format_exact(lhs)
    except DomainError as e:
        outcome.values['L'] = 'undefined'
        log.debug('L undefined at %s: %s', p, e)
    try:
        rhs = rabbit_rhs(p).value
        outcome.values['R'] = format_exact(rhs)
    except DomainError as e:
        outcome.values['R'] = 'undefined'
        log.debug('R undefined at %s: %s', p, e)

    if lhs is None or rhs is None:
        outcome.note = 'not both defined'
    else:
        outcome.note = 'L = R' if lhs == rhs else 'L != R'
    outcome.note = '{} ({})'.format(outcome.note, p.domain_violation())
    return outcome


def run_points(worker, points, jobs=1):
    """
    Apply a top-level worker to every point, serially or over a process pool

    :param worker: (callable) picklable top-level function of one point
    :param points: (iterable) parameter tuples or n levels
    :param jobs: (int) process count, 1 runs in this process
    :return: (list) worker results in input order
    """
    points = list(points)
    if jobs is None or jobs <= 1 or len(points) < 2:
        return [worker(p) for p in points]

    outcomes = list()
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        for chunk in chunked(points, CHUNK_SIZE):
            outcomes.extend(executor.map(worker, chunk))
            log.debug('%d of %d points done', len(outcomes), len(points))
    return outcomes


def cmd_verify_main(n_max, jobs=1):
    """
    :param n_max: (int) largest n, >= 0
    :return: (SweepReport) one point (n, n, 0, 0) per n; values('det') is the sequence
    """
    if n_max < 0:
        raise DomainError('n_max must be >= 0, got {}'.format(n_max), factor='n_max', argument=n_max)
    report = SweepReport('verify-main', [('n_max', n_max)])
    for outcome in run_points(main_point, range(n_max + 1), jobs):
        report.add(outcome)
    return report


def cmd_verify_rabbit(n_max, probe=False, jobs=1):
    """
    :param n_max: (int) largest n, >= 0
    :param probe: (bool) also visit out-of-domain points with m <= n and a, b <= n
    :param jobs: (int) worker processes
    :return: (SweepReport)
    """
    if n_max < 0:
        raise DomainError('n_max must be >= 0, got {}'.format(n_max), factor='n_max', argument=n_max)
    report = SweepReport('verify-rabbit', [('n_max', n_max), ('probe', probe)])
    for outcome in run_points(rabbit_point, domain_points(n_max), jobs):
        report.add(outcome)
    if probe:
        for outcome in run_points(probe_point, probe_points(n_max), jobs):
            report.add(outcome)
    return report


def cmd_verify_recurrence(n_max, jobs=1):
    """
    :param n_max: (int) largest n
    :param jobs: (int) worker processes, one n level per task
    :return: (SweepReport)
    """
    if n_max < 0:
        raise DomainError('n_max must be >= 0, got {}'.format(n_max), factor='n_max', argument=n_max)
    return numeric_recurrence_check(n_max, mapper=lambda worker, levels: run_points(worker, levels, jobs))

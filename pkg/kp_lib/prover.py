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
from collections import OrderedDict
from enum import IntEnum
from fractions import Fraction

from transitions import Machine

from .errors import DomainError, StallError, UsageError
from .fac_product import SignedTerm, build_L_base_expr, build_R_expr, ratio
from .linear_form import SYMBOLS
from .multipoly import MultiPoly, to_rational_function
from .randgen import DEFAULT_SEED, SplitMix64
from .rewrite import RewriteStats, simplify

log = logging.getLogger(__name__)

SPOT_CHECKS = 20
PRECHECK_POINTS = 8
WITNESS_ATTEMPTS = 500


class ProofStatus(IntEnum):
    Proven = 0
    Refuted = 1
    Stalled = 3         # value doubles as the CLI exit code

    @property
    def tag(self):
        return self.name.lower()


class ModeKind(IntEnum):
    Base = 1
    FixedM = 2
    GenericM = 3


class ProofMode(object):
    """ What to prove: the base cases, the recurrence at one m, or the recurrence for symbolic m """
    TAGS = {'base': ModeKind.Base, 'fixed-m': ModeKind.FixedM, 'generic-m': ModeKind.GenericM}

    def __init__(self, kind, m=None):
        assert isinstance(kind, ModeKind), 'Invalid type'
        if kind == ModeKind.FixedM:
            if m is None or int(m) < 2:
                raise DomainError('fixed-m mode needs m >= 2, got {}'.format(m),
                                  factor='m', argument=m)
            m = int(m)
        else:
            m = None
        self.kind = kind
        self.m = m

    @staticmethod
    def base():
        return ProofMode(ModeKind.Base)

    @staticmethod
    def fixed_m(m):
        return ProofMode(ModeKind.FixedM, m)

    @staticmethod
    def generic_m():
        return ProofMode(ModeKind.GenericM)

    @staticmethod
    def parse(tag, m=None):
        kind = ProofMode.TAGS.get(tag)
        if kind is None:
            raise UsageError("unknown proof mode '{}', expected one of {}".format(
                tag, ', '.join(ProofMode.TAGS)))
        if kind == ModeKind.FixedM and m is None:
            raise UsageError('--mode fixed-m requires --m')
        return ProofMode(kind, m)

    @property
    def tag(self):
        return {v: k for k, v in ProofMode.TAGS.items()}[self.kind]

    def __str__(self):
        return self.tag if self.m is None else '{} {}'.format(self.tag, self.m)


def recurrence_terms(numeric_m=None):
    """
    T1 and T2 of the R-recurrence divided through by R_{m-2}(a+1,b+1) R_m(a,b);
    the recurrence holds iff T1 - T2 = 1.

    :param numeric_m: (int) substitute m, or None for symbolic m
    :return: (list) [SignedTerm(+1, T1), SignedTerm(-1, T2)]
    """
    def r(dm, da, db):
        return build_R_expr(dm, da, db, numeric_m=numeric_m)

    divisor = r(-2, 1, 1) * r(0, 0, 0)
    t1 = ratio(r(-1, 0, 0) * r(-1, 1, 1), divisor)
    t2 = ratio(r(-1, 1, 0) * r(-1, 0, 1), divisor)
    return [SignedTerm(1, t1), SignedTerm(-1, t2)]


def base_terms(m_value):
    """ The terms of L_m(a,b), each divided by R_m(a,b) """
    rhs = build_R_expr(0, 0, 0, numeric_m=m_value)
    return [SignedTerm(term.sign, ratio(term.product, rhs)) for term in build_L_base_expr(m_value)]


def sample_point(rng, m=None, m_min=0, m_max=6, span=6):
    """
    Random validated-domain point

    :param rng: (SplitMix64) generator
    :param m: (int) fixed m, or None to draw m from [m_min, m_max]
    :param span: (int) n - m is drawn from [0, span]
    :return: (OrderedDict) symbol -> int
    """
    if m is None:
        m = rng.randint(m_min, m_max)
    n = m + rng.randint(0, span)
    a = rng.randint(0, n - m)
    b = rng.randint(0, n - m)
    return OrderedDict(zip(SYMBOLS, (n, m, a, b)))


def _rational_value(numerator, denominator, point):
    q = denominator.evaluate(point)
    if q == 0:
        return None
    return Fraction(numerator.evaluate(point), q)


class ProofRun(object):
    """
    One identity  sum(sign_i * term_i) == 1  taken from assembled factorial
    products through rewriting and polynomial expansion to a verdict.
    """
    STATES = ['initial', 'assembled', 'rewritten', 'expanded', 'proven', 'stalled', 'refuted']

    TRANSITIONS = [
        {'trigger': 'terms_built', 'source': 'initial', 'dest': 'assembled'},
        {'trigger': 'rewrite_done', 'source': 'assembled', 'dest': 'rewritten'},
        {'trigger': 'expansion_done', 'source': 'rewritten', 'dest': 'expanded'},
        {'trigger': 'identity_holds', 'source': 'expanded', 'dest': 'proven'},

        # Wildcard triggers last so they cover every earlier state
        {'trigger': 'stall', 'source': '*', 'dest': 'stalled'},
        {'trigger': 'refute', 'source': '*', 'dest': 'refuted'},
    ]

    def __init__(self, name, terms, sampler, seed=DEFAULT_SEED):
        """
        :param name: (str) case label, e.g. 'm=2'
        :param terms: (list) SignedTerm
        :param sampler: (callable) rng -> validated-domain point for spot checks
        :param seed: (int) SplitMix64 seed for pre-checks, witnesses and spot checks
        """
        assert all(isinstance(t, SignedTerm) for t in terms), 'Invalid type'
        self.name = name
        self.terms = list(terms)
        self.sampler = sampler
        self.seed = seed

        self.stats = RewriteStats()
        self.simplified = list()        # FacProduct per term
        self.rational = list()          # (numerator, denominator) per term
        self.residual = None            # FacProduct when stalled
        self.witness = None             # OrderedDict when refuted
        self.reason = None
        self.identity = None            # sum of cross-multiplied numerators
        self.common = None              # product of denominators
        self.spot_checks = 0
        self.timings = OrderedDict()

        self.machine = Machine(model=self, states=ProofRun.STATES,
                               transitions=ProofRun.TRANSITIONS,
                               initial='initial',
                               queued=True,
                               name=name)

    @property
    def status(self):
        return {'proven': ProofStatus.Proven,
                'stalled': ProofStatus.Stalled,
                'refuted': ProofStatus.Refuted}.get(self.state)

    @property
    def reduced_to_one(self):
        """ Single-term identity whose product cancelled completely """
        return len(self.simplified) == 1 and self.simplified[0].is_empty

    def run(self):
        started = time.perf_counter()
        self.terms_built()   # pylint: disable=no-member

        try:
            self.simplified = [simplify(t.product, self.stats) for t in self.terms]
            self.rewrite_done()   # pylint: disable=no-member
            self.rational = [to_rational_function(fp) for fp in self.simplified]

        except StallError as e:
            self.stall(str(e), e.residual)   # pylint: disable=no-member
            self.timings['total'] = time.perf_counter() - started
            return self

        self.timings['rewrite'] = time.perf_counter() - started
        rng = SplitMix64(self.seed)

        witness = self._precheck(rng)
        if witness is not None:
            self.refute('randomized pre-check failed', witness)   # pylint: disable=no-member
            self.timings['total'] = time.perf_counter() - started
            return self

        self._expand()
        self.expansion_done()   # pylint: disable=no-member
        self.timings['expand'] = time.perf_counter() - started - self.timings['rewrite']

        if not (self.identity - self.common).is_zero:
            self.refute('polynomial identity does not hold', self._find_witness(rng))   # pylint: disable=no-member

        else:
            bad = self._spot_check(rng)
            if bad is not None:
                self.refute('numeric spot check failed', bad)   # pylint: disable=no-member
            else:
                self.identity_holds()   # pylint: disable=no-member

        self.timings['total'] = time.perf_counter() - started
        return self

    def on_enter_stalled(self, reason, residual):
        self.reason = reason
        self.residual = residual
        log.info('%s: stalled: %s', self.name, reason)

    def on_enter_refuted(self, reason, witness):
        self.reason = reason
        self.witness = witness
        log.info('%s: refuted (%s) at %s', self.name, reason, dict(witness or {}))

    def on_enter_proven(self):
        log.info('%s: proven after %d rewrite steps', self.name, self.stats.total)

    def _sum_at(self, point):
        total = Fraction(0)
        for term, (p, q) in zip(self.terms, self.rational):
            value = _rational_value(p, q, point)
            if value is None:
                return None
            total += term.sign * value
        return total

    def _random_point(self, rng, bound=40):
        return OrderedDict((s, rng.randint(-bound, bound)) for s in SYMBOLS)

    def _precheck(self, rng):
        for _ in range(PRECHECK_POINTS):
            point = self._random_point(rng)
            total = self._sum_at(point)
            if total is not None and total != 1:
                point['value'] = str(total)
                return point
        return None

    def _expand(self):
        common = MultiPoly.constant(1)
        for _, q in self.rational:
            common = common * q

        identity = MultiPoly()
        for index, (term, (p, _)) in enumerate(zip(self.terms, self.rational)):
            cross = p * term.sign
            for other, (_, q) in enumerate(self.rational):
                if other != index:
                    cross = cross * q
            identity = identity + cross

        self.identity = identity
        self.common = common

    def _find_witness(self, rng):
        for _ in range(WITNESS_ATTEMPTS):
            point = self._random_point(rng)
            total = self._sum_at(point)
            if total is not None and total != 1:
                point['value'] = str(total)
                return point
        return None

    def _spot_check(self, rng):
        """ Exact evaluation of the assembled, unsimplified products """
        for _ in range(SPOT_CHECKS):
            point = self.sampler(rng)
            total = sum(t.sign * t.product.evaluate(point) for t in self.terms)
            self.spot_checks += 1
            if total != 1:
                point['value'] = str(total)
                return point
        return None

    def degrees(self):
        """ Numerator and denominator degrees of each reduced term, None before rewriting completes """
        if len(self.rational) == 0:
            return None
        return [OrderedDict([('numerator', p.degrees()), ('denominator', q.degrees())])
                for p, q in self.rational]

    @property
    def total_degree(self):
        degrees = self.degrees()
        if degrees is None:
            return None
        return max(d[part]['total'] for d in degrees for part in ('numerator', 'denominator'))

    def to_dict(self):
        data = OrderedDict([('case', self.name),
                            ('status', self.state),
                            ('rewrite_steps', self.stats.to_dict())])
        terms = list()
        for index, term in enumerate(self.terms):
            entry = OrderedDict([('sign', '+' if term.sign > 0 else '-'),
                                 ('factors', len(term.product))])
            if index < len(self.simplified):
                entry['simplified'] = str(self.simplified[index])
            if index < len(self.rational):
                entry['numerator'] = str(self.rational[index][0])
                entry['denominator'] = str(self.rational[index][1])
                entry['degrees'] = self.degrees()[index]
            terms.append(entry)
        data['terms'] = terms

        if self.total_degree is not None:
            data['total_degree'] = self.total_degree
        if self.state == 'proven':
            data['spot_checks'] = self.spot_checks
            data['reduced_to_one'] = self.reduced_to_one
        if self.reason is not None:
            data['reason'] = self.reason
        if self.residual is not None:
            data['residual'] = str(self.residual)
        if self.witness is not None:
            data['witness'] = self.witness
        return data


class ProofReport(object):
    """ Outcome of one prove invocation, one ProofRun per case """
    def __init__(self, mode):
        assert isinstance(mode, ProofMode), 'Invalid type'
        self.mode = mode
        self._cases = OrderedDict()

    def add(self, run):
        assert isinstance(run, ProofRun), 'Invalid type'
        assert run.name not in self._cases, 'Case {} already exists'.format(run.name)
        self._cases[run.name] = run
        return self

    def __getitem__(self, name):
        return self._cases[name]

    def __iter__(self):
        return iter(self._cases.values())

    def __len__(self):
        return len(self._cases)

    @property
    def status(self):
        statuses = [run.status for run in self]
        if any(s == ProofStatus.Refuted for s in statuses):
            return ProofStatus.Refuted
        if all(s == ProofStatus.Proven for s in statuses):
            return ProofStatus.Proven
        return ProofStatus.Stalled

    @property
    def proven(self):
        return self.status == ProofStatus.Proven

    def to_dict(self):
        return OrderedDict([('mode', self.mode.tag),
                            ('m', self.mode.m),
                            ('status', self.status.tag),
                            ('cases', [run.to_dict() for run in self])])

    def timings(self):
        return OrderedDict((run.name, run.timings) for run in self)


def prove_recurrence(mode, seed=DEFAULT_SEED):
    """
    Prove the R-recurrence T1 - T2 = 1 at a fixed m, or for symbolic m

    :param mode: (ProofMode) fixed-m or generic-m
    :param seed: (int) generator seed
    :return: (ProofReport)
    """
    assert isinstance(mode, ProofMode), 'Invalid type'
    report = ProofReport(mode)

    if mode.kind == ModeKind.FixedM:
        name = 'm={}'.format(mode.m)
        terms = recurrence_terms(mode.m)
        sampler = lambda rng: sample_point(rng, m=mode.m)

    elif mode.kind == ModeKind.GenericM:
        name = 'generic'
        terms = recurrence_terms(None)
        sampler = lambda rng: sample_point(rng, m_min=2)

    else:
        raise UsageError('prove_recurrence does not handle mode {}'.format(mode))

    return report.add(ProofRun(name, terms, sampler, seed).run())


def prove_base_cases(seed=DEFAULT_SEED):
    """
    Prove L_m(a,b) = R_m(a,b) for m = 0 and m = 1 with n, a, b symbolic

    :return: (ProofReport) cases 'm=0' and 'm=1'
    """
    report = ProofReport(ProofMode.base())
    for m_value in (0, 1):
        sampler = (lambda m: lambda rng: sample_point(rng, m=m))(m_value)
        report.add(ProofRun('m={}'.format(m_value), base_terms(m_value), sampler, seed).run())
    return report


def prove(mode, seed=DEFAULT_SEED):
    """ Dispatch on the mode kind """
    if mode.kind == ModeKind.Base:
        return prove_base_cases(seed)
    return prove_recurrence(mode, seed)

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
from enum import IntEnum

from .kp_matrix import KPParams


class Verdict(IntEnum):
    Pass = 0
    Fail = 1
    OutOfDomain = 2

    @property
    def tag(self):
        return {Verdict.Pass: 'pass', Verdict.Fail: 'fail',
                Verdict.OutOfDomain: 'out-of-domain'}[self]


class PointOutcome(object):
    """ Result of every check run at one parameter point """
    def __init__(self, params, verdict=Verdict.Pass):
        self.params = KPParams(*params)
        self.verdict = verdict
        self.values = OrderedDict()     # name -> exact value text
        self.checks = OrderedDict()     # name -> bool
        self.note = None
        self.timings = OrderedDict()    # engine -> seconds

    def __str__(self):
        return '{} {}'.format(self.params, self.verdict.tag)

    @property
    def key(self):
        return tuple(self.params)

    def check(self, name, holds):
        """ Record one check; any failed check fails an in-domain point """
        self.checks[name] = bool(holds)
        if not holds and self.verdict == Verdict.Pass:
            self.verdict = Verdict.Fail
        return holds

    def add_note(self, text):
        """ Append to the note; earlier notes are kept, separated by '; ' """
        self.note = text if self.note is None else '{}; {}'.format(self.note, text)

    def to_dict(self):
        data = OrderedDict([('params', self.params.to_dict()),
                            ('verdict', self.verdict.tag),
                            ('values', OrderedDict(self.values)),
                            ('checks', OrderedDict(self.checks))])
        if self.note is not None:
            data['note'] = self.note
        return data


class SweepReport(object):
    """
    Outcomes of a parameter sweep.  Points are kept sorted by (n, m, a, b)
    no matter in which order workers hand them back.
    """
    def __init__(self, command, ranges=None):
        self.command = command
        self.ranges = OrderedDict(ranges or ())
        self._outcomes = OrderedDict()      # key -> PointOutcome
        self.timings = OrderedDict()        # engine -> accumulated seconds

    def __getitem__(self, params):
        return self._outcomes[tuple(params)]

    def __contains__(self, params):
        return tuple(params) in self._outcomes

    def __iter__(self):
        for key in sorted(self._outcomes):
            yield self._outcomes[key]

    def __len__(self):
        return len(self._outcomes)

    def add(self, outcome):
        assert isinstance(outcome, PointOutcome), 'Invalid type'
        assert outcome.key not in self._outcomes, 'Point {} already recorded'.format(outcome.params)
        self._outcomes[outcome.key] = outcome
        for engine, seconds in outcome.timings.items():
            self.timings[engine] = self.timings.get(engine, 0.0) + seconds
        return self

    def count(self, verdict):
        return sum(1 for o in self._outcomes.values() if o.verdict == verdict)

    @property
    def passed(self):
        return self.count(Verdict.Pass)

    @property
    def failed(self):
        return self.count(Verdict.Fail)

    @property
    def out_of_domain(self):
        return self.count(Verdict.OutOfDomain)

    @property
    def ok(self):
        return self.failed == 0

    @property
    def counterexamples(self):
        return [o for o in self if o.verdict == Verdict.Fail]

    def values(self, name):
        """ The named value at every point, in point order """
        return [o.values[name] for o in self if name in o.values]

    def summary(self):
        return OrderedDict([('total', len(self)),
                            ('pass', self.passed),
                            ('fail', self.failed),
                            ('out_of_domain', self.out_of_domain)])

    def to_dict(self):
        return OrderedDict([('command', self.command),
                            ('ranges', OrderedDict(self.ranges)),
                            ('summary', self.summary()),
                            ('counterexamples', [o.to_dict() for o in self.counterexamples]),
                            ('points', [o.to_dict() for o in self])])

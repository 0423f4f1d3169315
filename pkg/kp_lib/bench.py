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

from .det_engines import BitTracker, Engine, determinant
from .errors import RefusalError, UsageError
from .exact_arith import format_exact
from .kp_matrix import KPParams, build_matrix
from .randgen import DEFAULT_SEED, SplitMix64, random_matrix

log = logging.getLogger(__name__)

FAMILIES = ('kp', 'random')


class BenchRecord(object):
    """ One engine run on one matrix """
    def __init__(self, engine, order, family):
        assert isinstance(engine, Engine), 'Invalid type'
        self.engine = engine
        self.order = order
        self.family = family
        self.seconds = 0.0
        self.peak_bits = 0
        self.value = None
        self.fallback_used = False
        self.refused = None             # Refusal text when the engine declined

    def __str__(self):
        return '{} order {}: {}'.format(self.engine.tag, self.order,
                                        self.refused or format_exact(self.value))

    def to_dict(self):
        return OrderedDict([('engine', self.engine.tag),
                            ('order', self.order),
                            ('family', self.family),
                            ('value', None if self.value is None else format_exact(self.value)),
                            ('peak_bits', self.peak_bits),
                            ('fallback_used', self.fallback_used),
                            ('refused', self.refused)])


def bench_matrix(order, family, rng):
    if family == 'kp':
        return build_matrix(KPParams(order - 1, order - 1, 0, 0))
    return random_matrix(order, rng)


def cmd_bench(orders, engines, family='kp', seed=DEFAULT_SEED):
    """
    Time each engine on one matrix per order

    :param orders: (list) matrix orders, each >= 1
    :param engines: (list) engine tags or Engine values
    :param family: (str) 'kp' for build_matrix(r-1, r-1, 0, 0), 'random' for SplitMix64 entries in [-9, 9]
    :param seed: (int) generator seed for the random family
    :return: (list) BenchRecord, orders outer and engines inner
    """
    if family not in FAMILIES:
        raise UsageError("unknown family '{}', expected one of: {}".format(family, ', '.join(FAMILIES)))
    engines = [e if isinstance(e, Engine) else Engine.from_tag(e) for e in engines]
    if len(engines) == 0:
        raise UsageError('no engines selected')
    for order in orders:
        if order < 1:
            raise UsageError('matrix order must be >= 1, got {}'.format(order))

    rng = SplitMix64(seed)
    records = list()
    for order in orders:
        matrix = bench_matrix(order, family, rng)
        for engine in engines:
            record = BenchRecord(engine, order, family)
            tracker = BitTracker()
            started = time.perf_counter()
            try:
                result = determinant(matrix, engine, tracker)
                record.value = result.value
                record.fallback_used = result.fallback_used
            except RefusalError as e:
                record.refused = str(e)
            record.seconds = time.perf_counter() - started
            record.peak_bits = tracker.peak_bits
            records.append(record)
            log.debug('bench %s', record)
    return records


def timings(records):
    """ Wall time per (engine, order), kept apart from the deterministic record fields """
    return [OrderedDict([('engine', r.engine.tag), ('order', r.order), ('seconds', r.seconds)])
            for r in records]

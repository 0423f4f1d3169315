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
Portable seeded generator.  SplitMix64 is used instead of the 'random'
module so that bench inputs and proof sample points are reproducible by
any other implementation given the same seed.

    state  += 0x9E3779B97F4A7C15
    z       = state
    z       = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z       = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output  = z ^ (z >> 31)                (all mod 2**64)

randint(lo, hi) = lo + output % (hi - lo + 1)
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
from .kp_matrix import ExactMatrix

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

DEFAULT_SEED = 20240229


class SplitMix64(object):
    def __init__(self, seed=DEFAULT_SEED):
        self._state = int(seed) & _MASK64

    @property
    def state(self):
        return self._state

    def next(self):
        """ Next 64-bit unsigned output """
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    __next__ = next

    def __iter__(self):
        return self

    def randint(self, lo, hi):
        """ Integer in [lo, hi] inclusive """
        assert hi >= lo, 'Empty range [{}, {}]'.format(lo, hi)
        return lo + self.next() % (hi - lo + 1)


def random_matrix(order, rng, lo=-9, hi=9):
    """
    Square integer matrix with entries drawn row by row from rng

    :param order: (int) matrix order >= 1
    :param rng: (SplitMix64) generator, advanced order*order times
    :param lo: (int) smallest entry
    :param hi: (int) largest entry
    :return: (ExactMatrix)
    """
    assert order >= 1, 'Invalid order'
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(order)]
                        for _ in range(order)])

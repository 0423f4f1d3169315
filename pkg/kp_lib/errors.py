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


class KPError(Exception):
    """ Base of all errors raised by the library """


class DomainError(KPError, ValueError):
    """ An argument lies outside the domain where a quantity is defined """
    def __init__(self, message, factor=None, argument=None):
        super(DomainError, self).__init__(message)
        self.factor = factor            # Label of the offending factor (if any)
        self.argument = argument        # Offending argument value


class RefusalError(KPError):
    """ An engine declined the input (cost guard) """
    def __init__(self, engine, order, limit):
        super(RefusalError, self).__init__(
            "engine '{}' refuses order {} (limit {})".format(engine, order, limit))
        self.engine = engine
        self.order = order
        self.limit = limit


class RecurrenceDivisionError(KPError, ZeroDivisionError):
    """ Zero divisor met while running the KP recurrence forward """
    def __init__(self, n, m, a, b):
        super(RecurrenceDivisionError, self).__init__(
            'zero divisor in recurrence at n={}, (m, a, b)=({}, {}, {})'.format(n, m, a, b))
        self.n = n
        self.m = m
        self.a = a
        self.b = b


class StallError(KPError):
    """ Rewriting stopped with factorial-type factors still present """
    def __init__(self, message, residual=None):
        super(StallError, self).__init__(message)
        self.residual = residual        # (FacProduct) what was left over


class MatrixFormatError(KPError, ValueError):
    """ Matrix input could not be parsed """
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = 'line {}, column {}: {}'.format(line, column or 1, message)
        super(MatrixFormatError, self).__init__(message)
        self.line = line
        self.column = column


class UsageError(KPError):
    """ Bad command-line usage (unknown engine, family, ...) """


class ConsistencyError(KPError, ArithmeticError):
    """ An internal exactness check failed (never expected to fire) """

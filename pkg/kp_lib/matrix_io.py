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
Matrix file formats.

  text        UTF-8, one row per line, entries separated by whitespace, each
              a decimal integer or a 'p/q' rational.  Blank lines and
              everything after '#' are ignored.

  structured  YAML (or JSON, which YAML reads as well) mapping with the
              fields 'order' and 'rows'; rows are lists of integers or
              'p/q' strings.
"""
from __future__ import (
    absolute_import, division, print_function, unicode_literals
)
import os
import re
from fractions import Fraction

import yaml

from .errors import MatrixFormatError
from .kp_matrix import ExactMatrix

_TOKEN = re.compile(r'\S+')
_EXACT = re.compile(r'^[+-]?\d+(/\d+)?$')
STRUCTURED_EXTENSIONS = ('.yaml', '.yml', '.json')


def _parse_token(text, line, column):
    if _EXACT.match(text) is None:
        raise MatrixFormatError("'{}' is not an integer or p/q rational".format(text),
                                line, column)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise MatrixFormatError("'{}' has a zero denominator".format(text), line, column)


def parse_text(text):
    """
    Parse the plain-text matrix format

    :param text: (str) file contents
    :return: (ExactMatrix)
    """
    rows = list()
    row_lines = list()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0]
        tokens = [(match.group(0), match.start() + 1) for match in _TOKEN.finditer(line)]
        if len(tokens) == 0:
            continue
        rows.append([_parse_token(tok, line_no, col) for tok, col in tokens])
        row_lines.append((line_no, tokens))

    if len(rows) == 0:
        raise MatrixFormatError('no matrix rows found', 1, 1)

    width = len(rows[0])
    for row, (line_no, tokens) in zip(rows, row_lines):
        if len(row) != width:
            column = tokens[width][1] if len(row) > width else len(raw_line(text, line_no)) + 1
            raise MatrixFormatError('row has {} entries, expected {}'.format(len(row), width),
                                    line_no, column)
    if width != len(rows):
        raise MatrixFormatError('matrix is not square: {} rows of {} entries'.format(len(rows), width),
                                row_lines[-1][0], 1)
    return ExactMatrix(rows)


def raw_line(text, line_no):
    return text.splitlines()[line_no - 1].split('#', 1)[0].rstrip()


def parse_structured(text):
    """
    Parse the structured (YAML / JSON) matrix format

    :param text: (str) file contents
    :return: (ExactMatrix)
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        if mark is not None:
            raise MatrixFormatError('invalid structured matrix: {}'.format(getattr(e, 'problem', e)),
                                    mark.line + 1, mark.column + 1)
        raise MatrixFormatError('invalid structured matrix: {}'.format(e))

    if not isinstance(data, dict) or 'rows' not in data:
        raise MatrixFormatError("structured matrix needs a mapping with a 'rows' field", 1, 1)

    rows = data['rows']
    if not isinstance(rows, list) or len(rows) == 0:
        raise MatrixFormatError("'rows' must be a non-empty list", 1, 1)

    parsed = list()
    for index, row in enumerate(rows, start=1):
        if not isinstance(row, list):
            raise MatrixFormatError('row {} is not a list'.format(index), index, 1)
        values = list()
        for col, item in enumerate(row, start=1):
            if isinstance(item, bool) or not isinstance(item, (int, str)):
                raise MatrixFormatError('row {} entry {} is not exact: {!r}'.format(index, col, item),
                                        index, col)
            values.append(_parse_token(str(item).strip(), index, col))
        parsed.append(values)

    order = data.get('order', len(parsed))
    for index, row in enumerate(parsed, start=1):
        if len(row) != len(parsed):
            raise MatrixFormatError('row {} has {} entries, expected {}'.format(index, len(row), len(parsed)),
                                    index, 1)
    if order != len(parsed):
        raise MatrixFormatError("'order' is {} but {} rows were given".format(order, len(parsed)), 1, 1)
    return ExactMatrix(parsed)


def looks_structured(text):
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if len(line) == 0:
            continue
        return line.startswith('{') or ':' in line
    return False


def decode(data):
    """
    UTF-8 text of a matrix file

    :param data: (bytes) raw file contents
    :raises MatrixFormatError: at the line and column of the first undecodable byte
    """
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        line_start = data.rfind(b'\n', 0, e.start) + 1
        raise MatrixFormatError('not valid UTF-8: byte 0x{:02x}'.format(data[e.start]),
                                data.count(b'\n', 0, e.start) + 1,
                                len(data[line_start:e.start].decode('utf-8')) + 1)


def load_matrix(filepath):
    """ Read a matrix file, choosing the format from the extension or the content """
    with open(filepath, 'rb') as matrix_file:
        text = decode(matrix_file.read())

    if os.path.splitext(filepath)[1].lower() in STRUCTURED_EXTENSIONS or looks_structured(text):
        return parse_structured(text)
    return parse_text(text)

#!/usr/bin/env python
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
import argparse
import logging
import sys

import yaml

from kp_lib.bench import cmd_bench, timings as bench_timings
from kp_lib.det_engines import Engine, condensation_tableau, determinant
from kp_lib.errors import DomainError, KPError, MatrixFormatError, RefusalError, StallError, UsageError
from kp_lib.matrix_io import load_matrix
from kp_lib.prover import ProofMode, ProofStatus, prove
from kp_lib.randgen import DEFAULT_SEED
from kp_lib.report import FORMATS, Renderer
from kp_lib.sweep import cmd_verify_main, cmd_verify_rabbit, cmd_verify_recurrence
from kp_lib.versions import ReportHeading

#
#  Exact verification of the Kuperberg-Propp determinant evaluation
#
#   verify-main        det of the (n+1)x(n+1) matrix at m = n, a = b = 0 against (2n+1)!^(n+1) / (2n+1)!!
#   verify-rabbit      every validated-domain (n, m, a, b): all engines against the closed form
#   verify-recurrence  the condensation recurrence for the determinants and for the closed form
#   prove              symbolic proof of the base cases and of the recurrence for the closed form
#   bench              engine timings and intermediate bit growth
#   det                determinant of a matrix read from a file
#
#  Exit status: 0 all checks pass, 1 identity violated or proof refuted,
#               2 usage or parse error, 3 symbolic rewriting stalled
#
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_STALL = 3

# Built-in defaults, applied after --config values for anything not given on the command line
DEFAULTS = {
    'format': 'table',
    'jobs': 1,
    'seed': DEFAULT_SEED,
    'verbose': False,
    'n_max': None,              # per command, see N_MAX_DEFAULTS
    'probe': False,
    'mode': 'base',
    'm': None,
    'orders': '1,2,3,4,5,6,7,8',
    'engines': 'condense,bareiss,cofactor',
    'family': 'kp',
    'engine': 'condense',
    'show_tableau': False,
}

N_MAX_DEFAULTS = {
    'verify-main': 8,
    'verify-rabbit': 6,
    'verify-recurrence': 6,
}


def parse_args(argv=None):
    common = argparse.ArgumentParser(add_help=False)

    common.add_argument('--format', '-f', action='store', choices=FORMATS, default=None,
                        help='Output format, default: table')

    common.add_argument('--jobs', '-j', action='store', type=int, default=None,
                        help='Worker processes for sweeps, default: 1')

    common.add_argument('--seed', '-s', action='store', type=int, default=None,
                        help='SplitMix64 seed for bench matrices and proof sample points')

    common.add_argument('--config', '-c', action='store', default=None,
                        help='YAML file whose top-level keys supply option defaults')

    common.add_argument('--verbose', '-v', action='store_true', default=None,
                        help='Debug logging')

    parser = argparse.ArgumentParser(description='Kuperberg-Propp determinant checker')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    for name, text in (('verify-main', 'Check det(n, n, 0, 0) against the one-parameter closed form'),
                       ('verify-rabbit', 'Check every validated-domain point against the closed form'),
                       ('verify-recurrence', 'Check the condensation recurrence for L and R')):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('--n-max', '-n', dest='n_max', action='store', type=int, default=None,
                         help='Largest n, default: {}'.format(N_MAX_DEFAULTS[name]))
        if name == 'verify-rabbit':
            sub.add_argument('--probe', action='store_true', default=None,
                             help='Also visit out-of-domain points (reported, never failures)')

    sub = commands.add_parser('prove', parents=[common], help='Symbolic proof by rewriting')
    sub.add_argument('--mode', action='store', choices=sorted(ProofMode.TAGS), default=None,
                     help='base, fixed-m or generic-m, default: base')
    sub.add_argument('--m', action='store', type=int, default=None,
                     help='Value of m for --mode fixed-m (>= 2)')

    sub = commands.add_parser('bench', parents=[common], help='Time determinant engines')
    sub.add_argument('--orders', action='store', default=None,
                     help='Comma separated matrix orders, default: 1,...,8')
    sub.add_argument('--engines', action='store', default=None,
                     help='Comma separated engines, default: condense,bareiss,cofactor')
    sub.add_argument('--family', action='store', default=None,
                     help='kp or random, default: kp')

    sub = commands.add_parser('det', parents=[common], help='Determinant of a matrix file')
    sub.add_argument('input', action='store', help='Matrix file (text, .yaml or .json)')
    sub.add_argument('--engine', '-e', action='store', default=None,
                     help='condense, bareiss or cofactor, default: condense')
    sub.add_argument('--show-tableau', dest='show_tableau', action='store_true', default=None,
                     help='Print every condensation layer')

    return parser.parse_args(argv)


def _boolean(value):
    if isinstance(value, bool):
        return value
    raise ValueError('expected true or false')


def _integer(value):
    if isinstance(value, bool):
        raise ValueError('expected an integer')
    return int(value)


def _text(value):
    if isinstance(value, (list, tuple)):
        return ','.join(str(v) for v in value)
    return str(value)


# Converters for --config values, matching the argparse types of the flags
CONFIG_TYPES = {
    'format': str,
    'jobs': _integer,
    'seed': _integer,
    'verbose': _boolean,
    'n_max': _integer,
    'probe': _boolean,
    'mode': str,
    'm': _integer,
    'orders': _text,
    'engines': _text,
    'family': str,
    'engine': str,
    'show_tableau': _boolean,
}


def load_config(filepath):
    """
    Option defaults from a YAML mapping; keys use option names with '-' or '_'

    :raises UsageError: unreadable file, not a mapping, unknown keys or values of the wrong type
    """
    try:
        with open(filepath, 'r', encoding='utf-8') as yaml_file:
            data = yaml.safe_load(yaml_file)
    except (IOError, OSError, UnicodeDecodeError, yaml.YAMLError) as e:
        raise UsageError("cannot read config '{}': {}".format(filepath, e))

    data = data or dict()
    if not isinstance(data, dict):
        raise UsageError("config '{}' must be a mapping".format(filepath))

    config = {str(k).replace('-', '_'): v for k, v in data.items()}
    unknown = sorted(set(config) - set(DEFAULTS))
    if len(unknown) > 0:
        raise UsageError("unknown config keys in '{}': {}".format(filepath, ', '.join(unknown)))

    for key, value in config.items():
        if value is None:
            continue
        try:
            config[key] = CONFIG_TYPES[key](value)
        except (TypeError, ValueError) as e:
            raise UsageError("config '{}': bad value {!r} for '{}': {}".format(filepath, value, key, e))
    return config


def resolve_options(args):
    """ Fill every option left unset on the command line: config file first, then DEFAULTS """
    config = load_config(args.config) if args.config else dict()
    for key, default in DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, config.get(key, default))
    if args.n_max is None:
        args.n_max = N_MAX_DEFAULTS.get(args.command)
    if args.format not in FORMATS:
        raise UsageError("unknown format '{}'".format(args.format))
    return args


def int_list(text):
    if isinstance(text, (list, tuple)):
        return [int(v) for v in text]
    try:
        return [int(v) for v in str(text).split(',') if len(v.strip()) > 0]
    except ValueError:
        raise UsageError("expected a comma separated integer list, got '{}'".format(text))


def name_list(text):
    if isinstance(text, (list, tuple)):
        return [str(v).strip() for v in text]
    return [v.strip() for v in str(text).split(',') if len(v.strip()) > 0]


class Main(object):
    """ Main program """
    def __init__(self, argv=None):
        self.args = parse_args(argv)
        self.renderer = None
        self.heading = ReportHeading()

    def start(self):
        try:
            resolve_options(self.args)
            logging.basicConfig(level=logging.DEBUG if self.args.verbose else logging.WARNING,
                                format='%(levelname)s %(name)s: %(message)s')
            self.renderer = Renderer(self.args.format, self.heading)

            handler = {
                'verify-main': self.verify_main,
                'verify-rabbit': self.verify_rabbit,
                'verify-recurrence': self.verify_recurrence,
                'prove': self.prove,
                'bench': self.bench,
                'det': self.det,
            }[self.args.command]
            return handler()

        except StallError as e:
            print('STALLED: {}'.format(e), file=sys.stderr)
            return EXIT_STALL

        except (UsageError, MatrixFormatError, DomainError, RefusalError) as e:
            print('ERROR: {}'.format(e), file=sys.stderr)
            return EXIT_USAGE

        except KPError as e:
            print('FAILURE: {}'.format(e), file=sys.stderr)
            return EXIT_VIOLATION

    def emit(self, text):
        print(text, end='')

    def verify_main(self):
        report = cmd_verify_main(self.args.n_max, jobs=self.args.jobs)
        self.emit(self.renderer.sweep(report, sequence_name='det'))
        return EXIT_OK if report.ok else EXIT_VIOLATION

    def verify_rabbit(self):
        report = cmd_verify_rabbit(self.args.n_max, probe=self.args.probe, jobs=self.args.jobs)
        self.emit(self.renderer.sweep(report))
        return EXIT_OK if report.ok else EXIT_VIOLATION

    def verify_recurrence(self):
        report = cmd_verify_recurrence(self.args.n_max, jobs=self.args.jobs)
        self.emit(self.renderer.sweep(report))
        return EXIT_OK if report.ok else EXIT_VIOLATION

    def prove(self):
        mode = ProofMode.parse(self.args.mode, self.args.m)
        report = prove(mode, seed=self.args.seed)
        self.emit(self.renderer.proof(report))
        return {ProofStatus.Proven: EXIT_OK,
                ProofStatus.Refuted: EXIT_VIOLATION,
                ProofStatus.Stalled: EXIT_STALL}[report.status]

    def bench(self):
        records = cmd_bench(int_list(self.args.orders), name_list(self.args.engines),
                            family=self.args.family, seed=self.args.seed)
        self.emit(self.renderer.bench(records, bench_timings(records)))

        values = dict()
        for record in records:
            if record.value is not None:
                values.setdefault(record.order, set()).add(record.value)
        disagree = sorted(order for order, seen in values.items() if len(seen) > 1)
        if len(disagree) > 0:
            print('FAILURE: engines disagree at orders {}'.format(disagree), file=sys.stderr)
            return EXIT_VIOLATION
        return EXIT_OK

    def det(self):
        engine = Engine.from_tag(self.args.engine)
        try:
            matrix = load_matrix(self.args.input)
        except (IOError, OSError) as e:
            raise UsageError("cannot read '{}': {}".format(self.args.input, e))

        result = determinant(matrix, engine)
        tableau = condensation_tableau(matrix) if self.args.show_tableau else None
        self.emit(self.renderer.det(result, tableau))
        return EXIT_OK


if __name__ == '__main__':
    sys.exit(Main().start())

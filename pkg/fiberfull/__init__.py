#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright (c) 2026 by the fiberfull authors
#
#    This file is part of fiberfull.
#
#    fiberfull is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    fiberfull is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    long with fiberfull. If not, see <http://www.gnu.org/licenses/>.


"""
fiberfull computes local cohomology of graded modules through graded
local duality, decides fiber-fullness over the parameter line and checks
square-free Groebner degenerations.
"""

import argparse
import logging
import sys

from .commalg import (FiberfullException, InvalidArgumentException,
    ProblemImporter, TheoremViolationException)
from .commands import COMMANDS, CommandRunner, run_command
from .constants import (EXIT_FAILURE, EXIT_SUCCESS, EXIT_THEOREM_VIOLATION,
    FORMAT_CSV, FORMAT_JSON, Storage, register_defaults)
from .reports import EXPORTERS, JsonExporter

__version__ = '1.0.0'

class ArgumentParser(argparse.ArgumentParser):
    """An argument parser raising an exception instead of exiting."""
    def error(self, message):
        raise InvalidArgumentException("Error, %s" % message)

def add_options(parser):
    suppress = argparse.SUPPRESS
    parser.add_argument('--order', default=suppress,
        help='lex, grevlex, block or weights:<w1>,...,<wr>')
    parser.add_argument('--field', default=suppress,
        help='QQ or Fp:<p>, replaces the field of the ring')
    parser.add_argument('--window', default=suppress,
        help='the degrees <lo>:<hi> of Hilbert tables')
    parser.add_argument('--json-out', dest='json_out', default=suppress,
        help='write the report to this file')
    parser.add_argument('--at', default=suppress,
        help='the point c of the prime (t - c)')
    parser.add_argument('--points', default=suppress,
        help='comma separated fiber points, generic or random')
    parser.add_argument('--threads', type=int, default=suppress)
    parser.add_argument('--format', choices=(FORMAT_JSON, FORMAT_CSV),
        default=suppress)
    parser.add_argument('--i', dest='i', type=int, default=suppress,
        help='the cohomological index')
    parser.add_argument('--target', default=suppress,
        help='the ideal or module to work on')
    parser.add_argument('--cross-check', dest='cross_check',
        action='store_true', default=suppress,
        help='rerun cv-verify over the other field')
    parser.add_argument('--verbose', action='store_true', default=suppress)

    return parser

VALUE_OPTIONS = ('--window', '--at', '--points')

def join_values(args):
    """Write '--window -5:0' as '--window=-5:0' for the options whose
    values may start with a minus sign."""
    joined = []
    args = list(args)
    while args:
        arg = args.pop(0)
        if arg in VALUE_OPTIONS and args and args[0].startswith('-') \
                and not args[0].startswith('--'):
            arg = '%s=%s' % (arg, args.pop(0))
        joined.append(arg)

    return joined

def build_parser():
    parser = ArgumentParser(prog='fiberfull', description=__doc__)
    parser.add_argument('input', help='the problem file, - for stdin')
    parser.add_argument('command', nargs='?', default=None,
        help='one of %s, overrides the command directive' %
        ', '.join(COMMANDS))
    parser.add_argument('--version', action='version', version=__version__)

    return add_options(parser)

def read_problem(path):
    if path == '-':
        stdin = getattr(sys.stdin, 'buffer', sys.stdin)
        return ProblemImporter.import_from_data(stdin.read())

    return ProblemImporter.import_from_file(path)

def collect_flags(spec, arguments):
    """Merge the arguments of the command directive with the ones given
    on the command line, the latter taking precedence."""
    flags = {}
    if spec.command:
        directive = add_options(ArgumentParser(prog=spec.command[0]))
        flags.update(vars(directive.parse_args(
            join_values(spec.command[1:]))))
        flags['command'] = spec.command[0]
    for key, value in arguments.items():
        if key != 'input' and value is not None:
            flags[key] = value

    return flags

def main(argv=None):
    """Run the command line tool.

    Returns:
        int: 0 on success, 2 if a theorem violation was detected and 1
            for every other error
    """
    logging.basicConfig(stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s')
    storage = Storage.get(CommandRunner)
    flags = {}
    spec = None
    try:
        register_defaults(storage)
        if argv is None:
            argv = sys.argv[1:]
        arguments = vars(build_parser().parse_args(join_values(argv)))
        spec = read_problem(arguments['input'])
        flags = collect_flags(spec, arguments)
        if flags.get('verbose'):
            storage['log_level'] = logging.DEBUG
        document = run_command(spec, flags)
        output_format = flags.get('format', storage['format'])
        exporter = EXPORTERS[output_format](document)
        data = exporter.export_to_data()
        exit_code = EXIT_SUCCESS
    except TheoremViolationException as e:
        exporter = JsonExporter({'error': e.to_dict()})
        data = exporter.export_to_data()
        exit_code = EXIT_THEOREM_VIOLATION
    except FiberfullException as e:
        exporter = JsonExporter({'error': e.to_dict()})
        data = exporter.export_to_data()
        exit_code = EXIT_FAILURE
    except OSError as e:
        exporter = JsonExporter({'error': {'type': type(e).__name__,
            'message': str(e)}})
        data = exporter.export_to_data()
        exit_code = EXIT_FAILURE

    path = flags.get('json_out') or (spec.output if spec else None)
    if path:
        exporter.export_to_file(path)
    else:
        sys.stdout.write(data)

    return exit_code

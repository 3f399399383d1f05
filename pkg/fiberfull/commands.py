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
The commands of the command line tool. Every command turns a problem
into a report document made of ordered dictionaries, lists and plain
values, so that two runs on the same input give identical reports.
"""

import collections
import concurrent.futures
import contextlib
import logging

from .commalg import (CoefficientField, TermOrder, UnknownCommandException,
    InvalidArgumentException, buchberger, default_window, ext_hilbert,
    fiber_full_check, fiber_full_locus, fiber_hilbert_compare,
    free_resolution, betti_table, depth_and_regularity, hilbert_function,
    local_cohomology_hilbert, local_cohomology_tables, cv_verify,
    monomial_to_string, parse_input, resolve_fiber_points)
from .constants import Storage, register_defaults

logger = logging.getLogger(__name__)

COMMANDS = ('gb', 'resolve', 'betti', 'hilbert', 'localcohom', 'ext',
    'fiberfull', 'locus', 'fibers', 'cv-verify')

def parse_window(text):
    """Read a window written as '<lo>:<hi>'.

    Raises:
        InvalidArgumentException: if the window is not a finite interval
    """
    try:
        low, high = (int(part) for part in text.split(':'))
    except ValueError:
        raise InvalidArgumentException(
            "Error, the window %s is not of the form <lo>:<hi>" % text)
    if low > high:
        raise InvalidArgumentException(
            "Error, the window %s is empty" % text)

    return low, high

def parse_point(field, text):
    """Read a field element written as an integer or a fraction."""
    if isinstance(text, int):
        return field(text)
    try:
        if '/' in text:
            numerator, denominator = text.split('/')
            return field(int(numerator), int(denominator))
        return field(int(text))
    except ValueError:
        raise InvalidArgumentException(
            "Error, %s is not an element of %s" % (text, field))

class CommandRunner(object):
    """Runs the commands on a problem.

    Args:
        spec (ProblemSpec): The parsed problem
        flags (dict): Settings of this run overriding the defaults in
            the storage of the class; None values are ignored
    """
    def __init__(self, spec, flags):
        self.__storage = Storage.get(self)
        register_defaults(self.__storage)
        self.__flags = {k: v for k, v in flags.items() if v is not None}
        field = self.__flags.get('field')
        if field is not None and spec.ring is not None:
            spec = parse_input(spec.to_text(),
                CoefficientField.from_string(field))
        self.__spec = spec

    def __setting(self, key):
        if key in self.__flags:
            return self.__flags[key]
        return self.__storage[key]

    def __target_name(self):
        name = self.__flags.get('target')
        if name is None and self.__spec.modules:
            name = next(reversed(self.__spec.modules))

        return name

    def __target(self):
        return self.__spec.target(self.__flags.get('target'))

    def __window(self, ring):
        if 'window' in self.__flags:
            return parse_window(self.__flags['window'])
        if self.__spec.window is not None:
            return self.__spec.window

        return default_window(ring, self.__setting('window_padding'))

    def __order(self, ring):
        text = self.__flags.get('order') or self.__spec.order or \
            self.__setting('default_order')

        return TermOrder.from_string(ring, text)

    def __executor(self):
        threads = self.__setting('threads')
        if threads and threads > 1:
            return concurrent.futures.ThreadPoolExecutor(threads)

        return contextlib.nullcontext()

    def __document(self, command, M):
        return collections.OrderedDict([
            ('command', command),
            ('ring', str(M.ring)),
            ('target', self.__target_name()),
        ])

    def run(self, command):
        """Run a command.

        Returns:
            OrderedDict: The report document

        Raises:
            UnknownCommandException: if there is no such command
        """
        if command not in COMMANDS:
            raise UnknownCommandException(
                "Error, unknown command %s" % command)
        logger.info("Running %s", command)
        method = getattr(self, '_CommandRunner__run_' +
            command.replace('-', '_'))

        return method(command)

    def __run_gb(self, command):
        M = self.__target()
        order = self.__order(M.ring)
        G = buchberger(M, order)
        document = self.__document(command, M)
        document['order'] = str(order)
        document['basis'] = [str(g) for g in G]
        document['leading_terms'] = [
            _lead_to_string(M, i, m) for i, m in G.leading_terms]

        return document

    def __run_resolve(self, command):
        M = self.__target()
        document = self.__document(command, M)
        document['resolution'] = free_resolution(M).to_dict()

        return document

    def __run_betti(self, command):
        M = self.__target()
        table = betti_table(free_resolution(M))
        depth, regularity = depth_and_regularity(table, M.ring.num_vars)
        document = self.__document(command, M)
        document['betti'] = table.to_dict()
        document['depth'] = depth
        document['regularity'] = regularity

        return document

    def __run_hilbert(self, command):
        M = self.__target()
        document = self.__document(command, M)
        table = hilbert_function(M, self.__window(M.ring))
        document['tables'] = [_table('HF', table)]

        return document

    def __indices(self, M):
        index = self.__flags.get('i')
        if index is not None:
            return [index]
        return list(range(M.ring.num_vars + 1))

    def __run_localcohom(self, command):
        M = self.__target()
        window = self.__window(M.ring)
        document = self.__document(command, M)
        indices = self.__indices(M)
        if len(indices) == 1:
            tables = [local_cohomology_hilbert(M, indices[0], window)]
        else:
            with self.__executor() as executor:
                tables = local_cohomology_tables(M, window, executor)
        document['tables'] = [_table('H^%d' % i, t)
            for i, t in zip(indices, tables)]

        return document

    def __run_ext(self, command):
        M = self.__target()
        window = self.__window(M.ring)
        document = self.__document(command, M)
        document['tables'] = [_table('Ext^%d' % i, ext_hilbert(M, i, window))
            for i in self.__indices(M)]

        return document

    def __run_fiberfull(self, command):
        M = self.__target()
        point = parse_point(M.ring.field, self.__flags.get('at', 0))
        with self.__executor() as executor:
            report = fiber_full_check(M, point, executor)
        document = self.__document(command, M)
        document['report'] = report.to_dict()

        return document

    def __run_locus(self, command):
        M = self.__target()
        with self.__executor() as executor:
            locus = fiber_full_locus(M, executor)
        document = self.__document(command, M)
        document['locus'] = str(locus)

        return document

    def __run_fibers(self, command):
        M = self.__target()
        window = self.__window(M.ring)
        tokens = []
        for token in self.__flags.get('points', '0,generic').split(','):
            token = token.strip()
            tokens.append(token if token in ('generic', 'random') else
                parse_point(M.ring.field, token))
        seed = self.__setting('seed')
        points = resolve_fiber_points(M, tokens, seed)
        document = self.__document(command, M)
        document['points'] = [M.ring.field.to_string(c) for c in points]
        document['tables'] = []
        for i in self.__indices(M):
            tables = fiber_hilbert_compare(M, points, i, window, seed)
            for c, table in zip(points, tables):
                label = 'H^%d(%s=%s)' % (i, M.ring.parameter_name,
                    M.ring.field.to_string(c))
                document['tables'].append(_table(label, table))

        return document

    def __cv_verify(self, spec):
        I = spec.target(self.__flags.get('target'))
        order = self.__order(I.ring)
        with self.__executor() as executor:
            return cv_verify(I, order, self.__window(I.ring), executor)

    def __run_cv_verify(self, command):
        spec = self.__spec
        if 'field' not in self.__flags:
            spec = parse_input(spec.to_text(),
                CoefficientField.prime_field(self.__setting('prime')))
        report = self.__cv_verify(spec)
        document = self.__document(command, report.ideal)
        document['field'] = str(report.ideal.ring.field)
        document.update(report.to_dict())

        if self.__flags.get('cross_check'):
            field = report.ideal.ring.field
            other = CoefficientField.rationals() if field.p is not None \
                else CoefficientField.prime_field(self.__setting('prime'))
            other_report = self.__cv_verify(
                parse_input(spec.to_text(), other))
            warnings = []
            if _comparable(report) != _comparable(other_report):
                message = "Results over %s and %s differ" % (field, other)
                logger.warning(message)
                warnings.append(message)
            document['cross_check'] = collections.OrderedDict([
                ('field', str(other)),
                ('equal', other_report.equal),
                ('warnings', warnings),
            ])

        return document

def _table(label, table):
    data = table.to_dict()
    data['label'] = label
    data.move_to_end('label', last=False)

    return data

def _lead_to_string(M, component, monomial):
    text = monomial_to_string(M.ring, monomial)
    if M.is_ideal:
        return text

    return '%s*e%d' % (text, component + 1)

def _comparable(report):
    """The parts of a degeneration report that must not depend on the
    characteristic for a well behaved instance."""
    return (report.squarefree, report.equal,
        [t.dims for t in report.tables],
        [t.dims for t in report.initial_tables],
        report.betti, report.initial_betti)

def run_command(spec, flags):
    """Run the command of a problem.

    Args:
        spec (ProblemSpec): The parsed problem
        flags (dict): The settings of the run. The command is taken from
            flags['command'] or else from the command directive.

    Returns:
        OrderedDict: The report document

    Raises:
        UnknownCommandException: if the command is missing or unknown
    """
    command = flags.get('command')
    if command is None and spec.command:
        command = spec.command[0]
    if command is None:
        raise UnknownCommandException("Error, no command given")

    return CommandRunner(spec, flags).run(command)

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
This module provides a parser for problem files. A problem file declares
a graded ring, ideals and modules over it and directives telling the
command line tool what to compute, for example

    ring S vars (x, y, z) weights (1, 1, 1) field QQ;
    ideal I = (x*z - y^2);
    order lex;
    window -10:5;
    command cv-verify;
"""

import collections
import re
from abc import ABC, abstractmethod

from .errors import (InvalidArgumentException, ParseException,
    UndeclaredVariableException)
from .groebner import SubmodulePresentation
from .polyutils import (CoefficientField, GradedFreeModule, GradedRing,
    PolyVector, Polynomial)

Token = collections.namedtuple('Token', 'kind value line column offset')

class ProblemSpec(object):
    """Everything declared in a problem file.

    Args:
        ring (GradedRing): The declared ring, None if there is none
        ring_name (str): The name of the ring
        modules (OrderedDict): Maps names to SubmodulePresentations in
            declaration order
        order (str) (optional): The text of the order directive
        window (tuple) (optional): The window directive
        command (list) (optional): The command name and its arguments
        output (str) (optional): The output path
    """
    def __init__(self, ring=None, ring_name=None, modules=None, order=None,
                 window=None, command=None, output=None):
        self.ring = ring
        self.ring_name = ring_name
        self.modules = modules if modules is not None else \
            collections.OrderedDict()
        self.order = order
        self.window = window
        self.command = command
        self.output = output

    @property
    def num_vars(self):
        return self.ring.num_vars if self.ring is not None else 0

    def target(self, name=None):
        """Get the module a command works on, the last declared one by
        default.

        Raises:
            InvalidArgumentException: if there is no such module
        """
        if name is not None:
            if name not in self.modules:
                raise InvalidArgumentException(
                    "Error, there is no ideal or module %s" % name)
            return self.modules[name]
        if not self.modules:
            raise InvalidArgumentException(
                "Error, the problem declares no ideal or module")

        return next(reversed(self.modules.values()))

    def to_text(self):
        """Get the canonical text of the problem, which parses back to
        an equal ProblemSpec."""
        lines = []
        ring = self.ring
        if ring is not None:
            field = ring.field
            field_text = 'QQ' if field.p is None else 'Fp %d' % field.p
            line = 'ring %s vars (%s) weights (%s) field %s' % (
                self.ring_name, ', '.join(ring.names),
                ', '.join(map(str, ring.weights)), field_text)
            if ring.has_parameter:
                line += ' param %s' % ring.parameter_name
            lines.append(line + ';')
        for name, module in self.modules.items():
            if module.is_ideal:
                lines.append('ideal %s = (%s);' % (name, ', '.join(
                    str(g.component(0)) for g in module.generators)))
            else:
                vectors = ', '.join('[%s]' % ', '.join(
                    str(p) for p in g.components())
                    for g in module.generators)
                lines.append('module %s twists (%s) = (%s);' % (name,
                    ', '.join(map(str, module.ambient.twists)), vectors))
        if self.order is not None:
            lines.append('order %s;' % self.order)
        if self.window is not None:
            lines.append('window %d:%d;' % self.window)
        if self.command is not None:
            lines.append('command %s;' % ' '.join(self.command))
        if self.output is not None:
            lines.append('output "%s";' % self.output)

        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return (type(other) == type(self) and
            self.ring == other.ring and
            self.ring_name == other.ring_name and
            list(self.modules.items()) == list(other.modules.items()) and
            (self.order, self.window, self.command, self.output) ==
            (other.order, other.window, other.command, other.output))

    def __str__(self):
        return self.to_text()

class ProblemParser(object):
    """This class parses the text of a problem file.

    Args:
        text (str): The problem text
        field (CoefficientField) (optional): A field replacing the one
            declared in the text

    Raises:
        ParseException: on syntax errors, with line and column
        UndeclaredVariableException: if an expression uses a name that
            is not a variable of the ring
    """
    __TOKEN_EXPR = re.compile(r'''
        (?P<space>[ \t\r\n]+)
      | (?P<comment>\#[^\n]*)
      | (?P<number>[0-9]+)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<string>"[^"\n]*")
      | (?P<op>--|[()\[\],;=+\-*/^:])
    ''', re.VERBOSE)
    __ORDER_EXPR = re.compile(r'^(lex|grevlex|block|weights:\d+(,\d+)*)$')
    __COMMAND_EXPR = re.compile(r'^[a-z][a-z\-]*$')
    __DIRECTIVES = ('ring', 'ideal', 'module', 'order', 'window',
        'command', 'output')

    def __init__(self, text, field=None):
        self.__text = text
        self.__field = field
        self.__tokens = self.__tokenize(text)
        self.__position = 0
        self.__spec = ProblemSpec()
        self.__parse()

    def get_spec(self):
        return self.__spec

    def __tokenize(self, text):
        tokens = []
        line, line_start, offset = 1, 0, 0
        while offset < len(text):
            match = self.__TOKEN_EXPR.match(text, offset)
            if match is None:
                raise ParseException(
                    "Error, unexpected character %r" % text[offset],
                    line, offset - line_start + 1)
            kind = match.lastgroup
            if kind not in ('space', 'comment'):
                tokens.append(Token(kind, match.group(), line,
                    offset - line_start + 1, offset))
            for k, char in enumerate(match.group()):
                if char == '\n':
                    line += 1
                    line_start = offset + k + 1
            offset = match.end()
        tokens.append(Token('end', '', line, offset - line_start + 1,
            offset))

        return tokens

    def __peek(self):
        return self.__tokens[self.__position]

    def __next(self):
        token = self.__tokens[self.__position]
        if token.kind != 'end':
            self.__position += 1

        return token

    def __error(self, token, expected):
        found = token.value if token.kind != 'end' else 'end of input'
        return ParseException("Error, expected %s but found %r" % (
            expected, found), token.line, token.column)

    def __expect(self, value=None, kind=None):
        token = self.__next()
        if (value is not None and token.value != value) or \
                (kind is not None and token.kind != kind):
            raise self.__error(token, repr(value) if value else kind)

        return token

    def __accept(self, value):
        if self.__peek().value == value and self.__peek().kind != 'string':
            return self.__next()
        return None

    def __raw_until_semicolon(self):
        """Get the source text up to the next semicolon."""
        start = self.__peek()
        while self.__peek().value != ';':
            if self.__peek().kind == 'end':
                raise self.__error(self.__peek(), "';'")
            self.__next()
        end = self.__peek()
        self.__next()

        return start, ' '.join(self.__text[start.offset:end.offset].split())

    def __parse(self):
        while self.__peek().kind != 'end':
            token = self.__next()
            if token.kind != 'name' or token.value not in self.__DIRECTIVES:
                raise self.__error(token, 'a directive')
            getattr(self, '_ProblemParser__parse_' + token.value)(token)

    def __parse_ring(self, token):
        if self.__spec.ring is not None:
            raise ParseException("Error, the ring is declared twice",
                token.line, token.column)
        name = self.__expect(kind='name').value
        self.__expect('vars')
        names = [t.value for t in self.__list(
            lambda: self.__expect(kind='name'))]
        self.__expect('weights')
        weights = [int(t.value) for t in self.__list(self.__signed_token)]
        self.__expect('field')
        field_token = self.__expect(kind='name')
        if field_token.value == CoefficientField.RATIONALS:
            field = CoefficientField.rationals()
        elif field_token.value == CoefficientField.PRIME_FIELD:
            self.__accept(':')
            field = CoefficientField.prime_field(
                int(self.__expect(kind='number').value))
        else:
            raise self.__error(field_token, 'QQ or Fp')
        has_parameter, parameter = False, 't'
        if self.__accept('param'):
            has_parameter = True
            parameter = self.__expect(kind='name').value
        self.__expect(';')
        self.__spec.ring = GradedRing(weights, has_parameter,
            self.__field or field, names, parameter)
        self.__spec.ring_name = name

    def __signed_token(self):
        negative = self.__accept('-') is not None
        token = self.__expect(kind='number')
        if negative:
            return token._replace(value='-' + token.value)

        return token

    def __list(self, item, opening='(', closing=')'):
        self.__expect(opening)
        items = []
        if self.__accept(closing):
            return items
        while True:
            items.append(item())
            if self.__accept(closing):
                return items
            self.__expect(',')

    def __check_ring(self, token):
        """Report the first name of the declaration as undeclared if
        there is no ring yet."""
        if self.__spec.ring is not None:
            return
        position = self.__position
        while self.__tokens[position].kind != 'end':
            candidate = self.__tokens[position]
            if candidate.value == ';':
                break
            if (candidate.kind == 'name' and position > self.__position and
                    candidate.value != 'twists'):
                raise UndeclaredVariableException(
                    "Error, undeclared variable %s" % candidate.value,
                    candidate.line, candidate.column)
            position += 1
        raise ParseException("Error, no ring declared", token.line,
            token.column)

    def __declare(self, token, name, module):
        if name in self.__spec.modules:
            raise ParseException("Error, %s is declared twice" % name,
                token.line, token.column)
        self.__spec.modules[name] = module

    def __parse_ideal(self, token):
        self.__check_ring(token)
        name = self.__expect(kind='name').value
        self.__expect('=')
        polynomials = self.__list(self.__expression)
        self.__expect(';')
        ring = self.__spec.ring
        self.__declare(token, name,
            SubmodulePresentation.ideal(ring, polynomials))

    def __parse_module(self, token):
        self.__check_ring(token)
        name = self.__expect(kind='name').value
        self.__expect('twists')
        twists = [int(t.value) for t in self.__list(self.__signed_token)]
        self.__expect('=')
        ambient = GradedFreeModule(self.__spec.ring, twists)
        vectors = []
        for start, components in self.__list(lambda: (self.__peek(),
                self.__list(self.__expression, '[', ']'))):
            if len(components) != ambient.rank:
                raise ParseException("Error, expected %d components" %
                    ambient.rank, start.line, start.column)
            vectors.append(PolyVector.from_components(ambient, components))
        self.__expect(';')
        self.__declare(token, name, SubmodulePresentation(ambient, vectors))

    def __parse_order(self, token):
        start, text = self.__raw_until_semicolon()
        text = text.replace(' ', '')
        if not self.__ORDER_EXPR.match(text):
            raise self.__error(start, 'a term order')
        self.__spec.order = text

    def __parse_window(self, token):
        low = int(self.__signed_token().value)
        self.__expect(':')
        high_token = self.__signed_token()
        high = int(high_token.value)
        self.__expect(';')
        if low > high:
            raise ParseException("Error, the window %d:%d is empty" % (
                low, high), high_token.line, high_token.column)
        self.__spec.window = (low, high)

    def __parse_command(self, token):
        start, text = self.__raw_until_semicolon()
        words = text.split()
        if not words or not self.__COMMAND_EXPR.match(words[0]):
            raise self.__error(start, 'a command')
        self.__spec.command = words

    def __parse_output(self, token):
        path = self.__expect(kind='string').value[1:-1]
        self.__expect(';')
        self.__spec.output = path

    def __expression(self):
        """expression := ['+'|'-'] term (('+'|'-') term)*"""
        sign = 1
        if self.__accept('-'):
            sign = -1
        else:
            self.__accept('+')
        result = self.__term() * sign
        while self.__peek().value in ('+', '-') and \
                self.__peek().kind == 'op':
            if self.__next().value == '+':
                result = result + self.__term()
            else:
                result = result - self.__term()

        return result

    def __term(self):
        """term := factor (('*'|'/') factor)*"""
        result = self.__factor()
        while self.__peek().value in ('*', '/'):
            operator = self.__next()
            factor = self.__factor()
            if operator.value == '*':
                result = result * factor
            elif not factor.is_constant() or not factor:
                raise ParseException(
                    "Error, can only divide by nonzero constants",
                    operator.line, operator.column)
            else:
                constant = factor.terms[self.__spec.ring.unit_monomial]
                result = result * (self.__spec.ring.field.one / constant)

        return result

    def __factor(self):
        """factor := atom ['^' number]"""
        result = self.__atom()
        if self.__accept('^'):
            result = result ** int(self.__expect(kind='number').value)

        return result

    def __atom(self):
        ring = self.__spec.ring
        token = self.__next()
        if token.kind == 'number':
            return ring.constant(ring.field(int(token.value)))
        if token.kind == 'name':
            if token.value in ring.names:
                return ring.variable(ring.names.index(token.value))
            if ring.has_parameter and token.value == ring.parameter_name:
                return ring.parameter()
            raise UndeclaredVariableException(
                "Error, undeclared variable %s" % token.value,
                token.line, token.column)
        if token.value == '(':
            result = self.__expression()
            self.__expect(')')
            return result

        raise self.__error(token, 'a number, a variable or (')

def parse_input(text, field=None):
    """Parse the text of a problem file.

    Args:
        text (str): The problem text
        field (CoefficientField) (optional): Overrides the declared field

    Returns:
        ProblemSpec
    """
    return ProblemParser(text, field).get_spec()

class Importer(ABC):
    """Base class of an importer for problems.

    Args:
        data: The data to import the problem from
    """
    def __init__(self, data, field=None):
        self._data = data
        self._field = field

    @classmethod
    def import_from_data(cls, data, field=None):
        """Build a problem from given data

        Returns:
            ProblemSpec: The problem built from the data
        """
        return cls(data, field)._build_problem()

    @classmethod
    def import_from_file(cls, file_path, field=None):
        """Build a problem from the data in a file

        Args:
            file_path (str): The path to the file to read the data from

        Returns:
            ProblemSpec: The problem built from the data in the file
        """
        return cls.import_from_data(cls._read_data(file_path), field)

    @staticmethod
    @abstractmethod
    def _read_data(file_path):
        pass

    @abstractmethod
    def _build_problem(self):
        pass

class ProblemImporter(Importer):
    """Imports problems written in the text syntax.

    The data may be given as text or as UTF-8 encoded bytes.
    """
    @staticmethod
    def _read_data(file_path):
        with open(file_path, 'rb') as f:
            return f.read()

    def _decode(self):
        if isinstance(self._data, str):
            return self._data
        try:
            return self._data.decode('utf-8')
        except UnicodeDecodeError as e:
            line = self._data.count(b'\n', 0, e.start) + 1
            column = e.start - (self._data.rfind(b'\n', 0, e.start) + 1) + 1
            raise ParseException("Error, the input is not valid UTF-8",
                line, column)

    def _build_problem(self):
        return parse_input(self._decode(), self._field)

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


import os
import tempfile
import unittest

from ... import commalg
from . import data_for_testing as data

EXAMPLE = """# the conic and its initial ideal
ring S vars (x, y, z) weights (1, 1, 1) field QQ;
ideal I = (x*z - y^2);
order lex;
window -10:5;
command cv-verify;
"""

class TestProblemParser(unittest.TestCase):
    def test_example(self):
        spec = commalg.parse_input(EXAMPLE)
        self.assertEqual(spec.num_vars, 3)
        self.assertEqual(spec.ring_name, 'S')
        self.assertEqual(list(spec.modules), ['I'])
        self.assertEqual(spec.order, 'lex')
        self.assertEqual(spec.window, (-10, 5))
        self.assertEqual(spec.command, ['cv-verify'])
        self.assertIsNone(spec.output)

    def test_directives(self):
        spec = commalg.parse_input(
            'ring R vars (a, b) weights (1, 3) field Fp 101 param s;\n'
            'module M twists (0, 2) = ([a^2, 1], [s*b, a]);\n'
            'order weights: 1, 2;\n'
            'command localcohom --i 1;\n'
            'output "out.json";\n')
        ring = spec.ring
        self.assertEqual(ring.weights, (1, 3))
        self.assertEqual(ring.field, commalg.CoefficientField.prime_field(
            101))
        self.assertTrue(ring.has_parameter)
        self.assertEqual(ring.parameter_name, 's')
        self.assertEqual(spec.target().ambient.twists, (0, 2))
        self.assertEqual(len(spec.target()), 2)
        self.assertEqual(spec.order, 'weights:1,2')
        self.assertEqual(spec.command, ['localcohom', '--i', '1'])
        self.assertEqual(spec.output, 'out.json')

    def test_rational_coefficients(self):
        spec = commalg.parse_input(
            'ring S vars (x, y) weights (1, 1) field QQ;'
            'ideal I = (1/2*x^2 - 3*(x + y)*y);')
        ring = spec.ring
        x, y = ring.variable(0), ring.variable(1)
        self.assertEqual(spec.target().polynomials(),
            [x * x * ring.field(1, 2) - 3 * x * y - 3 * y * y])

    def test_field_override(self):
        field = commalg.CoefficientField.prime_field(7)
        spec = commalg.parse_input(EXAMPLE, field)
        self.assertEqual(spec.ring.field, field)

    def test_target(self):
        spec = commalg.parse_input(
            'ring S vars (x) weights (1) field QQ;'
            'ideal I = (x); ideal J = (x^2);')
        self.assertEqual(spec.target(), spec.modules['J'])
        self.assertEqual(spec.target('I'), spec.modules['I'])
        with self.assertRaises(commalg.InvalidArgumentException):
            spec.target('K')

    def test_round_trip(self):
        texts = [EXAMPLE, data.TWISTED_CUBIC, data.MINORS, data.CONIC,
            'ring S vars (x, y) weights (1, 2) field QQ param u;\n'
            'module M twists (0, 1) = ([u*x^3 - y*x, -7/3*x^2*u]);\n'
            'window -3:3;\noutput "a b.json";\n']
        for text in texts:
            with self.subTest(text=text):
                spec = commalg.parse_input(text)
                self.assertEqual(commalg.parse_input(spec.to_text()), spec)

class TestParseErrors(unittest.TestCase):
    def test_undeclared_variable(self):
        with self.assertRaises(commalg.UndeclaredVariableException) as cm:
            commalg.parse_input('ideal I = (x*w);')
        self.assertEqual((cm.exception.line, cm.exception.column), (1, 12))

    def test_unknown_name_in_ring(self):
        with self.assertRaises(commalg.UndeclaredVariableException) as cm:
            commalg.parse_input('ring S vars (x) weights (1) field QQ;\n'
                'ideal I = (x + q);')
        self.assertEqual((cm.exception.line, cm.exception.column), (2, 16))

    def test_invalid_grading(self):
        with self.assertRaises(commalg.InvalidGradingException):
            commalg.parse_input('ring S vars (x, y) weights (1, 0) '
                'field QQ;')

    def test_invalid_field(self):
        with self.assertRaises(commalg.InvalidFieldException):
            commalg.parse_input('ring S vars (x) weights (1) field Fp 4;')

    def test_syntax_errors(self):
        for text, position in (
                ('ring S vars (x y) weights (1, 1) field QQ;', (1, 16)),
                ('ring S vars (x) weights (1) field QQ;\nideal = (x);',
                    (2, 7)),
                ('ring S vars (x) weights (1) field QQ;\nfoo;', (2, 1)),
                ('ring S vars (x) weights (1) field QQ;\nwindow 3:1;',
                    (2, 10)),
                ('ring S vars (x) weights (1) field QQ;\nideal I = (x/x);',
                    (2, 13)),
                ('ring S vars (x) weights (1) field QQ;\nideal I = (x);\n'
                    'ideal I = (x^2);', (3, 1)),
                ('ring S vars (x) weights (1) field QQ;\norder revlex;',
                    (2, 7)),
                ('ring S vars (x) weights (1) field QQ;\nideal I = (x$);',
                    (2, 13))):
            with self.subTest(text=text):
                with self.assertRaises(commalg.ParseException) as cm:
                    commalg.parse_input(text)
                self.assertNotIsInstance(cm.exception,
                    commalg.UndeclaredVariableException)
                self.assertEqual((cm.exception.line, cm.exception.column),
                    position)

    def test_error_document(self):
        try:
            commalg.parse_input('ring S vars (x y) weights (1) field QQ;')
        except commalg.ParseException as e:
            document = e.to_dict()
        self.assertEqual(document['type'], 'ParseException')
        self.assertEqual((document['line'], document['column']), (1, 16))

class TestProblemImporter(unittest.TestCase):
    def test_import_from_file(self):
        handle, path = tempfile.mkstemp(suffix='.ff')
        try:
            with os.fdopen(handle, 'w', encoding='utf-8') as f:
                f.write(EXAMPLE)
            spec = commalg.ProblemImporter.import_from_file(path)
        finally:
            os.remove(path)
        self.assertEqual(spec, commalg.parse_input(EXAMPLE))

    def test_import_from_data(self):
        spec = commalg.ProblemImporter.import_from_data(data.CONIC)
        self.assertEqual(spec.order, 'lex')

    def test_import_from_bytes(self):
        spec = commalg.ProblemImporter.import_from_data(
            data.CONIC.encode('utf-8'))
        self.assertEqual(spec, commalg.parse_input(data.CONIC))

    def test_invalid_encoding(self):
        for raw, position in ((b'\xff', (1, 1)),
                (b'ring S vars (x) weights (1) field QQ;\n  \xfe', (2, 3))):
            with self.subTest(raw=raw):
                with self.assertRaises(commalg.ParseException) as context:
                    commalg.ProblemImporter.import_from_data(raw)
                self.assertEqual((context.exception.line,
                    context.exception.column), position)

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
This module contains problems and helpers shared by the tests of the
commalg package.
"""

from ... import commalg

TWISTED_CUBIC = """
ring S vars (x, y, z, w) weights (1, 1, 1, 1) field QQ;
ideal I = (x*z - y^2, y*w - z^2, x*w - y*z);
"""

CONIC = """
ring S vars (x, y, z) weights (1, 1, 1) field QQ;
ideal I = (x*z - y^2);
order lex;
"""

# The 2x2 minors of [[x1, x2, x3], [y1, y2, y3]]. Under lex the diagonal
# terms x1*y2, x1*y3 and x2*y3 lead.
MINORS = """
ring S vars (x1, x2, x3, y1, y2, y3) weights (1, 1, 1, 1, 1, 1) field Fp 32003;
ideal I = (x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2);
order lex;
"""

# Square-free monomial ideals in at most four variables
SQUAREFREE_SUITE = [
    ('x, y', 'x'),
    ('x, y', 'x*y'),
    ('x, y', 'x, y'),
    ('x, y, z', 'x*y'),
    ('x, y, z', 'x*y, y*z'),
    ('x, y, z', 'x*y*z'),
    ('x, y, z', 'x*y, x*z, y*z'),
    ('x, y, z', 'x, y*z'),
    ('x, y, z', 'x*y, z'),
    ('x, y, z, w', 'x*y, z*w'),
    ('x, y, z, w', 'x*y, y*z, z*w'),
    ('x, y, z, w', 'x*y*z'),
    ('x, y, z, w', 'x*y, x*z, x*w, y*z, y*w, z*w'),
    ('x, y, z, w', 'x*y, y*z, z*w, w*x'),
    ('x, y, z, w', 'x*z, y*w'),
    ('x, y, z, w', 'x*y*z*w'),
    ('x, y, z, w', 'x, y'),
    ('x, y, z, w', 'x*y, x*z'),
    ('x, y, z, w', 'x*y*z, y*z*w'),
    ('x, y, z, w', 'x*y, y*z*w'),
]

def problem(text):
    return commalg.parse_input(text)

def ideal(variables, generators, weights=None, field='QQ', param=False):
    """Build an ideal from the names of the variables and the text of
    its generators."""
    count = len(variables.split(','))
    weights = weights or (1,) * count
    text = 'ring S vars (%s) weights (%s) field %s%s; ideal I = (%s);' % (
        variables, ', '.join(map(str, weights)), field,
        ' param t' if param else '', generators)

    return commalg.parse_input(text).target()

def squarefree_suite():
    return [ideal(variables, generators)
        for variables, generators in SQUAREFREE_SUITE]

def polynomial(ring, text):
    """Parse a homogeneous polynomial of a ring."""
    declaration = 'ring S vars (%s) weights (%s) field %s%s;' % (
        ', '.join(ring.names), ', '.join(map(str, ring.weights)),
        'QQ' if ring.field.p is None else 'Fp %d' % ring.field.p,
        ' param %s' % ring.parameter_name if ring.has_parameter else '')
    spec = commalg.parse_input(declaration + ' ideal P = (%s);' % text)
    generators = spec.target().generators
    if not generators:
        return ring.zero()

    return generators[0].component(0)

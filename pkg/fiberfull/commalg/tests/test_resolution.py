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


import unittest

from ... import commalg
from . import data_for_testing as data

class TestFreeResolution(unittest.TestCase):
    def test_koszul_complex(self):
        I = data.ideal('x, y', 'x, y')
        F = commalg.free_resolution(I)
        self.assertEqual(F.ranks(), [1, 2, 1])
        self.assertEqual([M.twists for M in F.modules],
            [(0,), (1, 1), (2,)])
        self.assertTrue(F.minimal)

    def test_hypersurface(self):
        I = data.ideal('x, y, z', 'x^3 + y^2*z')
        F = commalg.free_resolution(I)
        self.assertEqual([M.twists for M in F.modules], [(0,), (3,)])

    def test_twisted_cubic(self):
        I = data.problem(data.TWISTED_CUBIC).target()
        F = commalg.free_resolution(I)
        self.assertEqual(F.ranks(), [1, 3, 2])
        self.assertEqual(F.module(2).twists, (3, 3))

    def test_unit_ideal(self):
        I = data.ideal('x, y', '1')
        F = commalg.free_resolution(I)
        self.assertEqual(F.ranks(), [0])
        self.assertTrue(commalg.betti_table(F).is_zero())

    def test_differentials_compose_to_zero(self):
        problems = [data.problem(data.TWISTED_CUBIC).target(),
            data.ideal('x, y, z', 'x*y, y*z, x*z')]
        for I in problems:
            for minimize in (True, False):
                F = commalg.free_resolution(I, minimize)
                for i in range(F.length + 2):
                    with self.subTest(ideal=str(I), minimize=minimize, i=i):
                        self.assertTrue(F.composition_vanishes(i))

    def test_exactness(self):
        I = data.problem(data.TWISTED_CUBIC).target()
        F = commalg.free_resolution(I)
        hilbert = commalg.hilbert_function(I, (0, 5))
        for degree in range(6):
            with self.subTest(degree=degree):
                self.assertEqual(F.homology_dimension(0, degree),
                    hilbert[degree])
                for i in range(1, F.length + 1):
                    self.assertEqual(F.homology_dimension(i, degree), 0)

    def test_minimal_entries(self):
        for I in data.squarefree_suite():
            F = commalg.free_resolution(I)
            with self.subTest(ideal=str(I)):
                self.assertLessEqual(F.length, I.ring.num_vars)
                for i in range(1, F.length + 1):
                    for column in F.differential(i):
                        self.assertFalse(any(not any(m)
                            for _, m in column.terms))

    def test_parameter_ring(self):
        I = data.ideal('x, y', 't*x, y', param=True)
        F = commalg.free_resolution(I)
        self.assertFalse(F.minimal)
        self.assertEqual(F.ranks(), [1, 2, 1])
        with self.assertRaises(commalg.InfiniteDimensionException):
            F.homology_dimension(0, 0)
        with self.assertRaises(commalg.InvalidArgumentException):
            commalg.betti_table(F)

class TestBettiTable(unittest.TestCase):
    def table(self, I):
        return commalg.betti_table(commalg.free_resolution(I))

    def test_koszul(self):
        table = self.table(data.ideal('x, y', 'x, y'))
        self.assertEqual(table.entries, {(0, 0): 1, (1, 0): 2, (2, 0): 1})
        self.assertEqual(commalg.extremal_betti(table), [(2, 0, 1)])

    def test_twisted_cubic(self):
        table = self.table(data.problem(data.TWISTED_CUBIC).target())
        self.assertEqual(table.entries, {(0, 0): 1, (1, 1): 3, (2, 1): 2})
        self.assertEqual(table.extremal(), [(2, 1, 2)])
        self.assertEqual(commalg.depth_and_regularity(table, 4), (2, 1))

    def test_polynomial_ring(self):
        ring = commalg.make_ring([1, 1, 1])
        S = commalg.SubmodulePresentation.ideal(ring, [])
        table = self.table(S)
        self.assertEqual(table.entries, {(0, 0): 1})
        self.assertEqual(table.extremal(), [(0, 0, 1)])
        self.assertEqual(commalg.depth_and_regularity(table, 3), (3, 0))

    def test_residue_field(self):
        table = self.table(data.ideal('x, y, z', 'x, y, z'))
        self.assertEqual(commalg.depth_and_regularity(table, 3), (0, 0))

    def test_hypersurface(self):
        for degree in (2, 3, 4):
            with self.subTest(degree=degree):
                I = data.ideal('x, y, z', 'x^%d - y^%d' % (degree, degree))
                table = self.table(I)
                self.assertEqual(commalg.depth_and_regularity(table, 3),
                    (2, degree - 1))

    def test_minimal_generators(self):
        I = data.ideal('x, y, z', 'x*y, y*z, x*y*z, x^3')
        table = self.table(I)
        self.assertEqual(table[(1, 1)], 2)
        self.assertEqual(table[(1, 2)], 1)

    def test_zero_table(self):
        table = commalg.BettiTable({})
        self.assertTrue(table.is_zero())
        self.assertEqual(commalg.depth_and_regularity(table, 3),
            (None, None))
        self.assertEqual(str(table), 'total: 0')

    def test_to_dict(self):
        table = self.table(data.ideal('x, y', 'x, y'))
        self.assertEqual(table.to_dict(), {
            'table': {'0': {'0': 1}, '1': {'0': 2}, '2': {'0': 1}},
            'extremal': [[2, 0, 1]],
        })

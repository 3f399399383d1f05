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


import random
import unittest

from ... import commalg
from . import data_for_testing as data
from .data_for_testing import polynomial

def conic_family():
    return data.ideal('x, y, z', 'x*z - t*y^2', param=True)

class TestParameterTorsion(unittest.TestCase):
    def test_torsion_generators(self):
        for generators, annihilator in (('t*x', 't'),
                ('t^2*x - t*x', 't^2 - t')):
            with self.subTest(generators=generators):
                M = data.ideal('x', generators, param=True)
                certificate = commalg.parameter_torsion(M)
                self.assertFalse(certificate.is_torsion_free())
                self.assertEqual([g.component(0) for g in
                    certificate.generators], [polynomial(M.ring, 'x')])
                self.assertEqual(certificate.annihilator,
                    polynomial(M.ring, annihilator))

    def test_annihilator_kills_torsion(self):
        M = data.ideal('x, y', 't^2*x*y - t*x*y, t*y^2', param=True)
        certificate = commalg.parameter_torsion(M)
        G = commalg.buchberger(M, M.ring.canonical_order)
        for v in certificate.generators:
            with self.subTest(generator=str(v)):
                self.assertTrue(G.contains(v * certificate.annihilator))

    def test_torsion_free(self):
        for generators in ('x', 'x*z - t*y^2', 'x*y, y*z'):
            variables = 'x' if generators == 'x' else 'x, y, z'
            with self.subTest(generators=generators):
                M = data.ideal(variables, generators, param=True)
                certificate = commalg.parameter_torsion(M)
                self.assertTrue(certificate.is_torsion_free())
                self.assertEqual(certificate.annihilator, M.ring.one())

    def test_free_module(self):
        ring = commalg.make_ring([1, 1], True)
        M = commalg.SubmodulePresentation.ideal(ring, [])
        self.assertTrue(commalg.parameter_torsion(M).is_torsion_free())

    def test_without_parameter(self):
        with self.assertRaises(commalg.InvalidArgumentException):
            commalg.parameter_torsion(data.ideal('x, y', 'x*y'))

class TestFiberFullCheck(unittest.TestCase):
    def test_torsion_at_origin(self):
        M = data.ideal('x', 't*x', param=True)
        report = commalg.fiber_full_check(M, 0)
        self.assertFalse(report.overall)
        self.assertFalse(report.module_free)
        self.assertEqual(report.evaluated_prime, '(t)')
        self.assertEqual(report.verdicts, (True, False))

        report = commalg.fiber_full_check(M, 1)
        self.assertTrue(report.overall)
        self.assertEqual(report.evaluated_prime, '(t - 1)')

    def test_negative_point(self):
        M = data.ideal('x', 't*x', param=True)
        report = commalg.fiber_full_check(M, -2)
        self.assertEqual(report.evaluated_prime, '(t + 2)')

    def test_conic_family(self):
        report = commalg.fiber_full_check(conic_family(), 0)
        self.assertTrue(report.overall)
        self.assertTrue(all(c.is_torsion_free()
            for c in report.certificates))
        self.assertEqual(len(report.certificates), 4)

    def test_squarefree_family(self):
        M = data.ideal('x, y, z', 'x*y, y*z', param=True)
        for point in (0, 3):
            with self.subTest(point=point):
                self.assertTrue(commalg.fiber_full_check(M, point).overall)

    def test_to_dict(self):
        M = data.ideal('x', 't*x', param=True)
        document = commalg.fiber_full_check(M, 0).to_dict()
        self.assertEqual(document['prime'], '(t)')
        self.assertFalse(document['overall'])
        self.assertEqual(document['module_certificate']['annihilator'], 't')
        self.assertEqual([e['index'] for e in document['ext']], [0, 1])

class TestFiberFullLocus(unittest.TestCase):
    def test_examples(self):
        for variables, generators, locus in (
                ('x', 't*x', 't'),
                ('x', 't^2*x - t*x', 't^2 - t'),
                ('x', 'x', '1'),
                ('x, y, z', 'x*z - t*y^2', '1')):
            with self.subTest(generators=generators):
                M = data.ideal(variables, generators, param=True)
                self.assertEqual(commalg.fiber_full_locus(M),
                    polynomial(M.ring, locus))

    def test_planted_torsion(self):
        rng = random.Random(7)
        ring = commalg.make_ring([1, 1], True, names=['x', 'y'])
        t = ring.parameter()
        monomials = [ring.variable(0), ring.variable(1),
            ring.variable(0) * ring.variable(1), ring.variable(1) ** 2]
        for _ in range(10):
            roots = rng.sample(range(5), rng.randrange(1, 3))
            p = ring.one()
            for a in roots:
                p = p * (t - a)
            m = rng.choice(monomials)
            M = commalg.SubmodulePresentation.ideal(ring, [p * m])
            with self.subTest(relation=str(p * m)):
                locus = commalg.fiber_full_locus(M)
                self.assertEqual(locus, p)
                for c in range(5):
                    self.assertEqual(
                        commalg.fiber_full_check(M, c).overall,
                        c not in roots)

class TestFibers(unittest.TestCase):
    def test_flat_family(self):
        window = (-5, 0)
        tables = commalg.fiber_hilbert_compare(conic_family(), [0, 1], 2,
            window)
        dims = {-1: 1, -2: 3, -3: 5, -4: 7, -5: 9}
        self.assertEqual(tables, [commalg.HilbertTable(window, dims)] * 2)

    def test_jump_at_torsion(self):
        M = data.ideal('x', 't*x', param=True)
        special, general = commalg.fiber_hilbert_compare(M, [0, 1], 0,
            (-1, 1))
        self.assertTrue(special.is_zero())
        self.assertEqual(general.support(), [0])

    def test_degeneration_keeps_tables(self):
        M = conic_family()
        window = (-10, 5)
        for i in range(4):
            with self.subTest(i=i):
                tables = commalg.fiber_hilbert_compare(M, [0, 1, 2, 5], i,
                    window)
                self.assertTrue(all(table == tables[0]
                    for table in tables))

    def test_generic_point(self):
        field = commalg.CoefficientField.rationals()
        M = data.ideal('x', 't*x', param=True)
        self.assertEqual(commalg.resolve_fiber_points(M,
            [commalg.GENERIC]), [field(1)])
        self.assertEqual(commalg.resolve_fiber_points(conic_family(),
            [commalg.GENERIC, 3]), [field(0), field(3)])

    def test_random_points(self):
        M = conic_family()
        first = commalg.resolve_fiber_points(M,
            [commalg.RANDOM, commalg.RANDOM], seed=5)
        second = commalg.resolve_fiber_points(M,
            [commalg.RANDOM, commalg.RANDOM], seed=5)
        self.assertEqual(first, second)

    def test_duplicate_points(self):
        with self.assertRaises(commalg.InvalidArgumentException):
            commalg.resolve_fiber_points(conic_family(), [1, 1])

    def test_generic_point_avoids_explicit_points(self):
        field = commalg.CoefficientField.rationals()
        self.assertEqual(commalg.resolve_fiber_points(conic_family(),
            [0, commalg.GENERIC]), [field(0), field(1)])
        M = data.ideal('x', 't*x', param=True)
        self.assertEqual(commalg.resolve_fiber_points(M,
            [commalg.GENERIC, 1, 2]), [field(3), field(1), field(2)])

    def test_random_points_avoid_taken_points(self):
        M = data.ideal('x, y', 'x*y - t*y^2', field='Fp 3', param=True)
        field = M.ring.field
        for seed in range(5):
            with self.subTest(seed=seed):
                points = commalg.resolve_fiber_points(M,
                    [0, commalg.RANDOM, commalg.RANDOM], seed=seed)
                self.assertEqual(set(points),
                    {field(0), field(1), field(2)})
        with self.assertRaises(commalg.InvalidArgumentException):
            commalg.resolve_fiber_points(M,
                [0, 1, 2, commalg.RANDOM])

class TestDegeneration(unittest.TestCase):
    def test_conic(self):
        I = data.problem(data.CONIC).target()
        order = commalg.TermOrder(I.ring, commalg.TermOrder.LEX)
        report = commalg.cv_verify(I, order, (-10, 5))
        self.assertEqual(report.omega, (0, 0, 1))
        self.assertTrue(report.squarefree)
        self.assertTrue(report.fiber_full.overall)
        self.assertTrue(all(c.is_torsion_free()
            for c in report.fiber_full.certificates))
        self.assertTrue(report.equal)
        self.assertTrue(report.semicontinuous)
        self.assertTrue(report.corollary)
        self.assertTrue(report.oracle_agrees)
        self.assertEqual(report.depth_regularity, (2, 1))
        self.assertEqual(report.initial_depth_regularity, (2, 1))
        self.assertEqual(report.tables[2].dims,
            {nu: max(0, -2 * nu - 1) for nu in range(-10, 6)})
        self.assertEqual(report.tables, report.initial_tables)

    def test_squarefree_monomial_ideals(self):
        for I in data.squarefree_suite()[:6]:
            with self.subTest(ideal=str(I)):
                report = commalg.cv_verify(I, commalg.TermOrder(I.ring),
                    (-5, 1))
                self.assertTrue(report.equal)
                self.assertTrue(report.oracle_agrees)

    def test_minors(self):
        I = data.problem(data.MINORS).target()
        order = commalg.TermOrder(I.ring, commalg.TermOrder.LEX)
        report = commalg.cv_verify(I, order, (-8, 1))
        self.assertTrue(report.squarefree)
        self.assertTrue(report.fiber_full.overall)
        self.assertTrue(report.equal)
        self.assertEqual(report.betti.extremal(),
            report.initial_betti.extremal())

    def test_not_squarefree(self):
        I = data.problem(data.TWISTED_CUBIC).target()
        report = commalg.cv_verify(I, commalg.TermOrder(I.ring), (-6, 2))
        self.assertFalse(report.squarefree)
        self.assertIsNone(report.oracle_agrees)
        self.assertTrue(report.semicontinuous)

    def test_report_document(self):
        I = data.problem(data.CONIC).target()
        order = commalg.TermOrder(I.ring, commalg.TermOrder.LEX)
        document = commalg.cv_verify(I, order, (-2, 0)).to_dict()
        self.assertEqual(document['instance']['weights'], [0, 0, 1])
        self.assertEqual(document['initial_ideal'], ['x*z'])
        self.assertEqual(document['family'], ['-t*y^2 + x*z'])
        self.assertEqual(document['depth'], {'ideal': 2, 'initial': 2})

    def test_parameter_ring(self):
        with self.assertRaises(commalg.InvalidArgumentException):
            commalg.cv_verify(conic_family(),
                conic_family().ring.canonical_order)

    def test_violation_document(self):
        error = commalg.TheoremViolationException({'order': 'lex'})
        self.assertEqual(error.to_dict()['instance'], {'order': 'lex'})
        self.assertEqual(error.to_dict()['type'],
            'TheoremViolationException')

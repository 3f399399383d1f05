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
Fiber-fullness over the parameter line k[t].

A graded module M over k[t][x] is fiber-full at the prime (t - c) if M
and all modules Ext^i(M, T) have no (t - c)-torsion. The torsion of each
module is certified by generators and by a monic polynomial g(t)
annihilating it. The lcm of these polynomials cuts out the complement
of the fiber-full locus.
"""

import collections
import logging
import random

from .duality import (GradedModulePresentation, default_window,
    ext_modules, hochster_hilbert, local_cohomology_hilbert,
    local_cohomology_tables)
from .errors import (InvalidArgumentException, TheoremViolationException)
from .groebner import (SubmodulePresentation, buchberger,
    contract_to_parameter, homogenize_omega, initial_module,
    is_squarefree, normal_form, quotient_ideal, saturate_parameter,
    specialize, weight_vector_for)
from .polyutils import (evaluate_parameter_poly, parameter_gcd,
    parameter_lcm)
from .resolution import betti_table, depth_and_regularity, free_resolution

logger = logging.getLogger(__name__)

GENERIC = 'generic'
RANDOM = 'random'

class TorsionCertificate(object):
    """The parameter torsion of a module.

    Args:
        index (int): The index i of Ext^i, None for the module itself
        generators (list): PolyVectors generating the torsion modulo
            the relations
        annihilator (Polynomial): The monic generator of the polynomials
            in t killing the torsion, 1 if there is none
    """
    def __init__(self, index, generators, annihilator):
        self.index = index
        self.generators = tuple(generators)
        self.annihilator = annihilator

    def is_torsion_free(self):
        return not self.generators

    def vanishes_at(self, point):
        """Check whether (t - point) divides the annihilator."""
        return not evaluate_parameter_poly(self.annihilator, point)

    def to_dict(self):
        return collections.OrderedDict([
            ('index', self.index),
            ('torsion_generators', [str(g) for g in self.generators]),
            ('annihilator', str(self.annihilator)),
        ])

class FiberFullReport(object):
    """The result of a fiber-fullness check at one prime of k[t].

    Args:
        point: The field element c of the prime (t - c)
        module_certificate (TorsionCertificate): Torsion of M itself
        certificates (list): One TorsionCertificate per Ext^i
    """
    def __init__(self, ring, point, module_certificate, certificates):
        self.ring = ring
        self.point = point
        self.module_certificate = module_certificate
        self.certificates = tuple(certificates)
        self.module_free = not module_certificate.vanishes_at(point)
        self.verdicts = tuple(not c.vanishes_at(point)
            for c in self.certificates)

    @property
    def overall(self):
        return self.module_free and all(self.verdicts)

    @property
    def evaluated_prime(self):
        name = self.ring.parameter_name
        point = self.ring.field.to_string(self.point)
        if point == '0':
            return '(%s)' % name
        if point.startswith('-'):
            return '(%s + %s)' % (name, point[1:])

        return '(%s - %s)' % (name, point)

    def to_dict(self):
        return collections.OrderedDict([
            ('prime', self.evaluated_prime),
            ('overall', self.overall),
            ('module_free_over_base', self.module_free),
            ('module_certificate', self.module_certificate.to_dict()),
            ('ext', [collections.OrderedDict([
                ('index', c.index),
                ('free_over_base', verdict),
                ('certificate', c.to_dict()),
            ]) for c, verdict in zip(self.certificates, self.verdicts)]),
        ])

def _as_module(N):
    if isinstance(N, SubmodulePresentation):
        return GradedModulePresentation.from_quotient(N)
    return N

def parameter_torsion(N, index=None):
    """Compute the k[t]-torsion of a module over k[t][x].

    The torsion of K/U is U'/U, where U' is the saturation of U by all
    nonzero polynomials in t. The annihilator of each generator is
    intersected with k[t].

    Args:
        N: A GradedModulePresentation or a SubmodulePresentation
        index (int) (optional): The Ext index recorded in the result

    Returns:
        TorsionCertificate

    Raises:
        InvalidArgumentException: if the ring has no parameter
    """
    N = _as_module(N)
    ring = N.ring
    if not ring.has_parameter:
        raise InvalidArgumentException(
            "Error, the ring has no parameter variable")
    saturated, _ = saturate_parameter(N.relations)
    G = N.relation_basis
    torsion = []
    for v in saturated.generators:
        remainder = normal_form(v, G)
        if remainder and remainder not in torsion:
            torsion.append(remainder)
    annihilators = []
    for v in torsion:
        contraction = contract_to_parameter(quotient_ideal(N.relations, v))
        annihilators.append(parameter_gcd(ring, contraction))
    annihilator = parameter_lcm(ring, annihilators)
    logger.debug("Torsion of %s: %d generators, annihilator %s",
        N.provenance, len(torsion), annihilator)

    return TorsionCertificate(index, torsion, annihilator)

def _certificates(M, executor=None):
    ring = M.ring
    if not ring.has_parameter:
        raise InvalidArgumentException(
            "Error, the ring has no parameter variable")
    modules = ext_modules(M)
    if executor is None:
        certificates = [parameter_torsion(E, i)
            for i, E in enumerate(modules)]
    else:
        futures = [executor.submit(parameter_torsion, E, i)
            for i, E in enumerate(modules)]
        certificates = [f.result() for f in futures]

    return parameter_torsion(M), certificates

def fiber_full_check(M, at=0, executor=None):
    """Decide whether a module over k[t][x] is fiber-full at the prime
    (t - at).

    Args:
        M (SubmodulePresentation): The module ambient/<generators>
        at: The point c, a field element or an integer
        executor (concurrent.futures.Executor) (optional): Runs the Ext
            indices in parallel

    Returns:
        FiberFullReport
    """
    point = M.ring.field(at) if isinstance(at, int) else at
    module_certificate, certificates = _certificates(M, executor)

    return FiberFullReport(M.ring, point, module_certificate,
        certificates)

def fiber_full_locus(M, executor=None):
    """Get the monic g(t) whose nonvanishing locus D(g) is the
    fiber-full locus of M."""
    module_certificate, certificates = _certificates(M, executor)

    return parameter_lcm(M.ring, [module_certificate.annihilator] +
        [c.annihilator for c in certificates])

def resolve_fiber_points(M, points, seed=0):
    """Turn the point tokens 'generic' and 'random' into field elements.

    The generic point is the smallest nonnegative integer outside the
    zeros of the locus polynomial and outside the explicit points.
    Random points are drawn from a generator seeded with the given seed
    and differ from the explicit points and from each other.

    Returns:
        list: Field elements, one for every token

    Raises:
        InvalidArgumentException: if explicit points repeat or no free
            field element is left for a token
    """
    field = M.ring.field
    explicit = [field(p) if isinstance(p, int) else p for p in points
        if p not in (GENERIC, RANDOM)]
    if len(set(explicit)) != len(explicit):
        raise InvalidArgumentException("Error, the points are not distinct")
    taken = set(explicit)
    bound = field.p if field.p is not None else 2 ** 16
    if len(taken) + len(points) - len(explicit) > bound:
        raise InvalidArgumentException(
            "Error, not enough field elements for the points")
    rng = random.Random(seed)
    locus = None
    values = []
    for point in points:
        if point == GENERIC:
            if locus is None:
                locus = fiber_full_locus(M)
            c = 0
            while c < bound and (field(c) in taken or
                    not evaluate_parameter_poly(locus, c)):
                c += 1
            if c == bound:
                raise InvalidArgumentException(
                    "Error, every point of the field is taken or special")
            value = field(c)
            taken.add(value)
        elif point == RANDOM:
            value = field(rng.randrange(bound))
            while value in taken:
                value = field(rng.randrange(bound))
            taken.add(value)
        elif isinstance(point, int):
            value = field(point)
        else:
            value = point
        values.append(value)

    return values

def fiber_hilbert_compare(M, points, i, window=None, seed=0):
    """Compute the Hilbert function of H^i of the fibers of M over
    several points of the parameter line.

    Args:
        M (SubmodulePresentation): A module over k[t][x]
        points (list): Field elements, integers or the tokens 'generic'
            and 'random'
        i (int): The cohomological index
        window (tuple) (optional): The degrees to compute
        seed (int): Seed for random points

    Returns:
        list: One HilbertTable per point
    """
    window = window or default_window(M.ring)
    tables = []
    for c in resolve_fiber_points(M, points, seed):
        fiber = specialize(M, c)
        tables.append(local_cohomology_hilbert(fiber, i, window))

    return tables

class DegenerationReport(object):
    """Everything computed when comparing S/I with S/in(I)."""
    def __init__(self, ideal, order, window, omega, family, initial,
                 squarefree, fiber_full, tables, initial_tables, betti,
                 initial_betti, oracle_agrees):
        self.ideal = ideal
        self.order = order
        self.window = window
        self.omega = omega
        self.family = family
        self.initial = initial
        self.squarefree = squarefree
        self.fiber_full = fiber_full
        self.tables = tables
        self.initial_tables = initial_tables
        self.betti = betti
        self.initial_betti = initial_betti
        self.oracle_agrees = oracle_agrees
        r = ideal.ring.num_vars
        self.depth_regularity = depth_and_regularity(betti, r)
        self.initial_depth_regularity = depth_and_regularity(
            initial_betti, r)

    @property
    def equal(self):
        return self.tables == self.initial_tables

    @property
    def semicontinuous(self):
        return all(b.dominates(a)
            for a, b in zip(self.tables, self.initial_tables))

    @property
    def corollary(self):
        """Whether extremal Betti numbers, depth and regularity agree."""
        return (self.betti.extremal() == self.initial_betti.extremal() and
            self.depth_regularity == self.initial_depth_regularity)

    def instance(self):
        """Get the data needed to reproduce the computation."""
        return collections.OrderedDict([
            ('ring', str(self.ideal.ring)),
            ('ideal', [str(g) for g in self.ideal.generators]),
            ('order', str(self.order)),
            ('weights', list(self.omega)),
            ('window', list(self.window)),
        ])

    def to_dict(self):
        depth, reg = self.depth_regularity
        initial_depth, initial_reg = self.initial_depth_regularity

        return collections.OrderedDict([
            ('instance', self.instance()),
            ('initial_ideal', [str(g) for g in self.initial.generators]),
            ('squarefree', self.squarefree),
            ('weights', list(self.omega)),
            ('family', [str(g) for g in self.family.generators]),
            ('fiber_full', self.fiber_full.to_dict()),
            ('equal', self.equal),
            ('semicontinuous', self.semicontinuous),
            ('corollary', self.corollary),
            ('oracle_agrees', self.oracle_agrees),
            ('local_cohomology', collections.OrderedDict([
                ('ideal', [t.to_dict() for t in self.tables]),
                ('initial', [t.to_dict() for t in self.initial_tables]),
            ])),
            ('betti', collections.OrderedDict([
                ('ideal', self.betti.to_dict()),
                ('initial', self.initial_betti.to_dict()),
            ])),
            ('depth', collections.OrderedDict([
                ('ideal', depth), ('initial', initial_depth)])),
            ('regularity', collections.OrderedDict([
                ('ideal', reg), ('initial', initial_reg)])),
        ])

def cv_verify(I, order, window=None, executor=None):
    """Compare the local cohomology of S/I and S/in(I) through the
    Groebner degeneration given by a weight vector.

    Args:
        I (SubmodulePresentation): A homogeneous ideal of k[x]
        order (TermOrder): The term order
        window (tuple) (optional): The degrees to compare
        executor (concurrent.futures.Executor) (optional): Runs the
            cohomological indices in parallel

    Returns:
        DegenerationReport

    Raises:
        InvalidArgumentException: if I is not an ideal of k[x]
        TheoremViolationException: if in(I) is square-free and the
            family is fiber-full but the tables differ
    """
    ring = I.ring
    if ring.has_parameter or not I.is_ideal:
        raise InvalidArgumentException(
            "Error, expected an ideal of a ring without parameter")
    window = window or default_window(ring)
    G = buchberger(I, order)
    initial = initial_module(G)
    squarefree = is_squarefree(initial)
    omega = weight_vector_for(I, order)
    family = homogenize_omega(I, omega, order)
    logger.info("Degeneration with weights %s, square-free %s", omega,
        squarefree)
    fiber_full = fiber_full_check(family, 0, executor)

    tables = local_cohomology_tables(I, window, executor)
    initial_tables = local_cohomology_tables(initial, window, executor)
    oracle_agrees = None
    if squarefree:
        oracle_agrees = all(hochster_hilbert(initial, i, window) == table
            for i, table in enumerate(initial_tables))
    report = DegenerationReport(I, order, window, omega, family, initial,
        squarefree, fiber_full, tables, initial_tables,
        betti_table(free_resolution(I)),
        betti_table(free_resolution(initial)), oracle_agrees)

    if squarefree and fiber_full.overall and not report.equal:
        raise TheoremViolationException(report.instance())

    return report

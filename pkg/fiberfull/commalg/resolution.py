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
Graded free resolutions and the invariants read off from them.

A resolution is built by iterating Schreyer's construction on the
Groebner basis of the relations. Over k[x] it can be pruned to the
minimal resolution, whose twists give the graded Betti numbers.
"""

import collections
import logging

from sympy.polys.matrices import DomainMatrix

from .errors import InfiniteDimensionException, InvalidArgumentException
from .groebner import GroebnerBasis, buchberger, syzygies
from .polyutils import GradedFreeModule, PolyVector

logger = logging.getLogger(__name__)

class Resolution(object):
    """A complex of graded free modules
    0 <- F_0 <- F_1 <- ... <- F_n <- 0.

    Args:
        modules (list): The GradedFreeModules F_0, ..., F_n
        maps (list): For k = 1, ..., n the images of the basis of F_k
            under the differential d_k, as PolyVectors of F_(k-1)
        minimal (bool): Whether no differential has a nonzero scalar
            entry
    """
    def __init__(self, modules, maps, minimal=False):
        self.modules = tuple(modules)
        self.maps = tuple(tuple(columns) for columns in maps)
        self.minimal = minimal

    @property
    def ring(self):
        return self.modules[0].ring

    @property
    def length(self):
        return len(self.modules) - 1

    def ranks(self):
        return [F.rank for F in self.modules]

    def module(self, i):
        if 0 <= i < len(self.modules):
            return self.modules[i]
        return GradedFreeModule(self.ring, [])

    def differential(self, i):
        """Get the images of the basis of F_i in F_(i-1), empty outside
        of 1, ..., n."""
        if 1 <= i <= len(self.maps):
            return self.maps[i - 1]
        return ()

    def entry(self, i, row, column):
        return self.maps[i - 1][column].component(row)

    def composition_vanishes(self, i):
        """Check d_(i-1) o d_i = 0, which holds trivially for i < 2."""
        if i < 2:
            return True
        previous = self.differential(i - 1)
        target = self.module(i - 2)
        for column in self.differential(i):
            image = target.zero()
            for (j, m), c in column.terms.items():
                image = image + previous[j].mul_term(c, m)
            if image:
                return False

        return True

    def homology_dimension(self, i, degree):
        """Get the dimension of the homology of the complex at F_i in
        the given internal degree.

        Raises:
            InfiniteDimensionException: if the ring has a parameter
        """
        if self.ring.has_parameter:
            raise InfiniteDimensionException()
        source = self.module(i)
        dimension = len(graded_piece(source, degree))
        if i >= 1:
            dimension -= graded_rank(self.differential(i), source,
                self.module(i - 1), degree)
        dimension -= graded_rank(self.differential(i + 1),
            self.module(i + 1), source, degree)

        return dimension

    def to_dict(self):
        return {
            'ranks': self.ranks(),
            'twists': [list(F.twists) for F in self.modules],
            'minimal': self.minimal,
            'differentials': [
                [[str(column.component(row)) for column in columns]
                for row in range(self.modules[k].rank)]
                for k, columns in enumerate(self.maps)
            ],
        }

def graded_piece(module, degree):
    """Get the monomial basis of a free module in one degree as a list
    of (component, monomial) pairs."""
    ring = module.ring
    return [(i, m) for i, twist in enumerate(module.twists)
        for m in ring.monomials_of_degree(degree - twist)]

def graded_matrix(columns, source, target, degree):
    """Get the matrix of the map sending the i-th basis vector of
    source to columns[i], restricted to one degree.

    Returns:
        DomainMatrix: The matrix over the coefficient field
    """
    ring = source.ring
    domain = ring.field.domain
    rows = {key: index for index, key in
        enumerate(graded_piece(target, degree))}
    basis = graded_piece(source, degree)
    entries = [[domain.zero] * len(basis) for _ in rows]
    one = ring.field.one
    for index, (i, m) in enumerate(basis):
        for key, c in columns[i].mul_term(one, m).terms.items():
            entries[rows[key]][index] = c

    return DomainMatrix(entries, (len(rows), len(basis)), domain)

def graded_rank(columns, source, target, degree):
    if not columns:
        return 0
    matrix = graded_matrix(columns, source, target, degree)
    if 0 in matrix.shape:
        return 0

    return matrix.rank()

def _sort_by_variable(G, variable):
    """Order a Groebner basis by decreasing exponent of one variable in
    the leading terms. Schreyer's syzygies then have leading terms free
    of this variable."""
    if variable >= G.module.ring.nvars:
        return G
    pairs = sorted(zip(G.elements, G.leading_terms),
        key=lambda pair: -pair[1][1][variable])

    return GroebnerBasis(G.module, G.order, [g for g, _ in pairs], False)

def free_resolution(M, minimize=True):
    """Compute a graded free resolution of ambient/<generators>.

    Args:
        M (SubmodulePresentation): The module to resolve
        minimize (bool): Whether to prune the resolution to the minimal
            one. Resolutions over k[t][x] are never minimized.

    Returns:
        Resolution: A resolution of length at most the number of
            variables
    """
    ring = M.ring
    G = buchberger(M, ring.canonical_order)
    modules = [M.ambient]
    maps = []
    level = 0
    while len(G):
        G = _sort_by_variable(G, level)
        modules.append(GradedFreeModule(ring, [g.degree() for g in G]))
        maps.append(G.elements)
        G = GroebnerBasis.from_presentation(syzygies(G))
        level += 1
    logger.debug("Schreyer resolution with ranks %s",
        [F.rank for F in modules])
    resolution = Resolution(modules, maps, False)
    if minimize and not ring.has_parameter:
        resolution = minimization(resolution)

    return resolution

def _drop_component(vector, module, index):
    return PolyVector(module, {(i if i < index else i - 1, m): c
        for (i, m), c in vector.terms.items() if i != index})

def _find_pivot(modules, maps):
    for k, columns in enumerate(maps):
        positions = [(i, b) for b, column in enumerate(columns)
            for (i, m), _ in column.terms.items() if not any(m)]
        if positions:
            a, b = min(positions)
            return k, a, b

    return None

def minimization(resolution):
    """Prune the scalar entries of a resolution.

    For a unit entry u in row a and column b of d_(k+1), column b is
    used to clear row a, then row a and column b are removed together
    with column a of d_k and row b of d_(k+2). The lowest homological
    degree is processed first, and within a differential the first
    scalar entry in row major order.

    Returns:
        Resolution: The minimal resolution
    """
    modules = list(resolution.modules)
    maps = [list(columns) for columns in resolution.maps]
    ring = resolution.ring
    pivots = 0
    while True:
        pivot = _find_pivot(modules, maps)
        if pivot is None:
            break
        k, a, b = pivot
        pivots += 1
        columns = maps[k]
        pivot_column = columns[b]
        unit = pivot_column.terms[(a, ring.unit_monomial)]
        inverse = ring.field.one / unit
        for c, column in enumerate(columns):
            if c == b:
                continue
            entry = column.component(a)
            if entry:
                columns[c] = column - pivot_column * (entry * inverse)

        target = GradedFreeModule(ring, modules[k].twists[:a] +
            modules[k].twists[a + 1:])
        source = GradedFreeModule(ring, modules[k + 1].twists[:b] +
            modules[k + 1].twists[b + 1:])
        maps[k] = [_drop_component(column, target, a)
            for c, column in enumerate(columns) if c != b]
        if k >= 1:
            maps[k - 1] = [column for c, column in enumerate(maps[k - 1])
                if c != a]
        if k + 1 < len(maps):
            maps[k + 1] = [_drop_component(column, source, b)
                for column in maps[k + 1]]
        modules[k] = target
        modules[k + 1] = source

    while len(modules) > 1 and not modules[-1].rank:
        modules.pop()
        maps.pop()
    logger.debug("Minimization removed %d pivots, ranks %s", pivots,
        [F.rank for F in modules])

    return Resolution(modules, maps, True)

class BettiTable(object):
    """The graded Betti numbers beta_(i,i+j) of a module.

    Args:
        entries (dict): Maps (i, j) to the nonzero beta_(i,i+j)
    """
    def __init__(self, entries):
        self.entries = {key: value for key, value in sorted(entries.items())
            if value}

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return type(other) == type(self) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def is_zero(self):
        return not self.entries

    @property
    def projective_dimension(self):
        if not self.entries:
            return None
        return max(i for i, _ in self.entries)

    @property
    def regularity(self):
        if not self.entries:
            return None
        return max(j for _, j in self.entries)

    def extremal(self):
        """Get the extremal Betti numbers, the nonzero entries with no
        other nonzero entry (h, k) with h >= i and k >= j.

        Returns:
            list: Sorted (i, j, beta_(i,i+j)) triples
        """
        return [(i, j, beta) for (i, j), beta in self.entries.items()
            if not any(h >= i and k >= j and (h, k) != (i, j)
            for h, k in self.entries)]

    def to_dict(self):
        table = collections.OrderedDict()
        for (i, j), beta in self.entries.items():
            table.setdefault(str(i), collections.OrderedDict())[str(j)] = \
                beta

        return collections.OrderedDict([
            ('table', table),
            ('extremal', [list(e) for e in self.extremal()]),
        ])

    def __str__(self):
        if not self.entries:
            return 'total: 0'
        columns = range(self.projective_dimension + 1)
        rows = range(min(j for _, j in self.entries), self.regularity + 1)
        lines = ['       ' + ' '.join('%4d' % i for i in columns)]
        lines.append('total: ' + ' '.join('%4d' % sum(
            self[(i, j)] for j in rows) for i in columns))
        for j in rows:
            lines.append('%5d: ' % j + ' '.join(
                '%4s' % (self[(i, j)] or '.') for i in columns))

        return '\n'.join(lines)

    __repr__ = __str__

def betti_table(resolution):
    """Read the graded Betti numbers off a minimal resolution.

    Raises:
        InvalidArgumentException: if the resolution is not minimal
    """
    if not resolution.minimal:
        raise InvalidArgumentException(
            "Error, Betti numbers need a minimal resolution")
    entries = collections.Counter()
    for i, F in enumerate(resolution.modules):
        for twist in F.twists:
            entries[(i, twist - i)] += 1

    return BettiTable(entries)

def depth_and_regularity(table, num_vars):
    """Get depth and Castelnuovo-Mumford regularity from a Betti table
    using the Auslander-Buchsbaum formula. Both are None for the zero
    module."""
    if table.is_zero():
        return None, None

    return num_vars - table.projective_dimension, table.regularity

def extremal_betti(table):
    return table.extremal()

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
Ext modules, Hilbert functions and local cohomology.

Ext^i(M, T) is computed as the homology of the dual of a free resolution
of M. The Hilbert functions of the local cohomology modules of M then
follow from graded local duality

    dim [H^i(M)]_nu = dim [Ext^(r-i)(M, T)]_(-nu-delta)

where r is the number of variables and delta the sum of their degrees.
For Stanley-Reisner rings the module also implements Hochster's formula,
which computes the same numbers from the reduced cohomology of links.
"""

import collections
import functools
import itertools
import logging

from sympy.polys.matrices import DomainMatrix

from .errors import (CohomologicalIndexException, InfiniteDimensionException,
    InvalidArgumentException)
from .groebner import SubmodulePresentation, buchberger, is_squarefree, \
    syzygies_of
from .polyutils import GradedFreeModule, PolyVector
from .resolution import free_resolution, graded_piece

logger = logging.getLogger(__name__)

DEFAULT_WINDOW_PADDING = 10

EXT = 'Ext^%d'
SUBQUOTIENT = 'subquotient'
QUOTIENT = 'quotient'

def default_window(ring, padding=DEFAULT_WINDOW_PADDING):
    """Get the window [-delta - padding, padding]."""
    return (-ring.delta - padding, padding)

def _check_window(window):
    low, high = window
    if type(low) != int or type(high) != int or low > high:
        raise InvalidArgumentException(
            "Error, %s is not a finite window" % (window,))

    return low, high

class GradedModulePresentation(object):
    """A graded module K/U, where U is contained in K and both are
    submodules of a graded free module F.

    Args:
        ambient (GradedFreeModule): The free module F
        relations (SubmodulePresentation): The submodule U
        kernel (SubmodulePresentation) (optional): The submodule K, the
            whole of F if omitted
        provenance (str): Where the module comes from, for example
            'Ext^2'
    """
    def __init__(self, ambient, relations, kernel=None,
                 provenance=SUBQUOTIENT):
        self.ambient = ambient
        self.relations = relations
        self.kernel = kernel
        self.provenance = provenance

    @classmethod
    def from_quotient(cls, M):
        """Wrap ambient/<generators>."""
        return cls(M.ambient, M, None, QUOTIENT)

    @property
    def ring(self):
        return self.ambient.ring

    @functools.cached_property
    def relation_basis(self):
        return buchberger(self.relations, self.ring.canonical_order)

    @functools.cached_property
    def kernel_basis(self):
        if self.kernel is None:
            return None
        return buchberger(self.kernel, self.ring.canonical_order)

    def as_quotient(self):
        """Present the module as a quotient of a free module.

        K/U is the quotient of the free module with one basis vector
        for each generator k_j of K by the relations
        {a : sum a_j k_j in U}.

        Returns:
            SubmodulePresentation
        """
        if self.kernel is None:
            return self.relations
        generators = list(self.kernel.generators)
        twists = [k.degree() for k in generators]
        vectors = generators + list(self.relations.generators)
        syz = syzygies_of(self.ambient, vectors,
            twists + [u.degree() for u in self.relations.generators])
        free = GradedFreeModule(self.ring, twists)
        relations = [PolyVector(free, {(j, m): c for (j, m), c in
            s.terms.items() if j < len(twists)}) for s in syz]

        return SubmodulePresentation(free, relations)

    def __str__(self):
        return '%s: (%s) / (%s) in %s' % (self.provenance,
            'all' if self.kernel is None else self.kernel,
            self.relations, self.ambient)

    __repr__ = __str__

class HilbertTable(object):
    """Dimensions of the graded pieces of a module on a window of
    degrees.

    Args:
        window (tuple): The lowest and the highest degree
        dims (dict): Maps every degree of the window to a dimension
    """
    def __init__(self, window, dims):
        self.window = tuple(window)
        low, high = self.window
        self.dims = collections.OrderedDict(
            (nu, dims.get(nu, 0)) for nu in range(low, high + 1))

    @classmethod
    def zero(cls, window):
        return cls(window, {})

    def __getitem__(self, degree):
        return self.dims[degree]

    def __iter__(self):
        return iter(self.dims.items())

    def __eq__(self, other):
        return (type(other) == type(self) and
            self.window == other.window and self.dims == other.dims)

    def __hash__(self):
        return hash((self.window, tuple(self.dims.items())))

    def is_zero(self):
        return not any(self.dims.values())

    def support(self):
        return [nu for nu, d in self.dims.items() if d]

    def dominates(self, other):
        """Check that every dimension is at least the one of the other
        table on the common window."""
        return all(d >= other.dims.get(nu, 0) for nu, d in self.dims.items())

    def to_dict(self):
        return collections.OrderedDict([
            ('window', list(self.window)),
            ('dims', collections.OrderedDict(
                (str(nu), d) for nu, d in self.dims.items())),
        ])

    def __str__(self):
        return '{%s}' % ', '.join('%d: %d' % (nu, d) for nu, d in self
            if d)

    __repr__ = __str__

def _count_standard(G, degree):
    """Count the monomials of the free module in one degree that are
    not divisible by a leading term of G."""
    leads = collections.defaultdict(list)
    for i, m in G.leading_terms:
        leads[i].append(m)
    count = 0
    for i, m in graded_piece(G.module, degree):
        if not any(all(a <= b for a, b in zip(lead, m))
                for lead in leads[i]):
            count += 1

    return count

def hilbert_function(N, window):
    """Compute the Hilbert function of a graded module on a window.

    Args:
        N: A GradedModulePresentation or a SubmodulePresentation, the
            latter standing for its quotient module
        window (tuple): The lowest and the highest degree

    Returns:
        HilbertTable

    Raises:
        InfiniteDimensionException: if the ring has a parameter
    """
    if isinstance(N, SubmodulePresentation):
        N = GradedModulePresentation.from_quotient(N)
    low, high = _check_window(window)
    if N.ring.has_parameter:
        raise InfiniteDimensionException()
    dims = {}
    for nu in range(low, high + 1):
        dims[nu] = _count_standard(N.relation_basis, nu)
        if N.kernel_basis is not None:
            dims[nu] -= _count_standard(N.kernel_basis, nu)

    return HilbertTable((low, high), dims)

def _transposed_rows(columns, rows, dual_source):
    """Get the rows of a matrix given by its columns, each row as a
    vector of dual_source."""
    terms = [dict() for _ in range(rows)]
    for c, column in enumerate(columns):
        for (j, m), value in column.terms.items():
            terms[j][(c, m)] = value

    return [PolyVector(dual_source, t) for t in terms]

@functools.lru_cache(maxsize=64)
def ext_modules(M):
    """Compute Ext^i(M, T) for i = 0, ..., r.

    Ext^i is presented as ker(d_(i+1)^T) / im(d_i^T) in the dual module
    Hom(F_i, T) of a free resolution F of M. The result is cached per
    module.

    Args:
        M (SubmodulePresentation): The module ambient/<generators>

    Returns:
        tuple: r + 1 GradedModulePresentations
    """
    ring = M.ring
    resolution = free_resolution(M, minimize=not ring.has_parameter)
    result = []
    for i in range(ring.num_vars + 1):
        F = resolution.module(i)
        dual = F.dual()
        following = resolution.differential(i + 1)
        if following:
            target = resolution.module(i + 1).dual()
            rows = _transposed_rows(following, F.rank, target)
            kernel = syzygies_of(target, rows, list(dual.twists))
            kernel = SubmodulePresentation(dual, kernel.generators)
        else:
            kernel = None
        previous = resolution.differential(i)
        if previous:
            image = _transposed_rows(previous,
                resolution.module(i - 1).rank, dual)
        else:
            image = []
        relations = SubmodulePresentation(dual, image)
        result.append(GradedModulePresentation(dual, relations, kernel,
            EXT % i))
        logger.debug("Ext^%d: rank %d, %d relations", i, dual.rank,
            len(relations))

    return tuple(result)

def ext_hilbert(M, i, window=None):
    """Compute the Hilbert function of Ext^i(M, T) on a window.

    Raises:
        CohomologicalIndexException: if i is negative
    """
    ring = M.ring
    window = window or default_window(ring)
    if i < 0:
        raise CohomologicalIndexException()
    if i > ring.num_vars:
        return HilbertTable.zero(_check_window(window))

    return hilbert_function(ext_modules(M)[i], window)

def local_cohomology_hilbert(M, i, window=None, permissive=False):
    """Compute the Hilbert function of the local cohomology module
    H^i(M) with support in the irrelevant ideal.

    Args:
        M (SubmodulePresentation): A module over k[x]
        i (int): The cohomological index
        window (tuple) (optional): The degrees to compute, by default
            [-delta - 10, 10]
        permissive (bool): Return a zero table for i > r instead of
            raising

    Returns:
        HilbertTable

    Raises:
        CohomologicalIndexException: if i is not in 0, ..., r
        InfiniteDimensionException: if the ring has a parameter
    """
    ring = M.ring
    window = _check_window(window or default_window(ring))
    r = ring.num_vars
    if i < 0 or i > r:
        if permissive and i > r:
            return HilbertTable.zero(window)
        raise CohomologicalIndexException(
            "Error, the index %d is not between 0 and %d" % (i, r))
    if ring.has_parameter:
        raise InfiniteDimensionException()
    low, high = window
    delta = ring.delta
    ext = hilbert_function(ext_modules(M)[r - i],
        (-high - delta, -low - delta))

    return HilbertTable(window,
        {nu: ext[-nu - delta] for nu in range(low, high + 1)})

def local_cohomology_tables(M, window=None, executor=None):
    """Compute the tables of H^0(M), ..., H^r(M).

    Args:
        executor (concurrent.futures.Executor) (optional): Runs the
            indices in parallel

    Returns:
        list: One HilbertTable per index, in index order
    """
    indices = range(M.ring.num_vars + 1)
    if executor is None:
        return [local_cohomology_hilbert(M, i, window) for i in indices]
    ext_modules(M)
    futures = [executor.submit(local_cohomology_hilbert, M, i, window)
        for i in indices]

    return [f.result() for f in futures]

def stanley_reisner_faces(I):
    """Get the faces of the simplicial complex whose face ideal is the
    square-free monomial ideal I.

    Returns:
        list: The faces as sorted tuples of variable indices, ordered by
            size, empty for the unit ideal

    Raises:
        InvalidArgumentException: if I is not square-free
    """
    ring = I.ring
    if ring.has_parameter or not I.is_ideal:
        raise InvalidArgumentException(
            "Error, expected an ideal of a ring without parameter")
    if not is_squarefree(I):
        raise InvalidArgumentException(
            "Error, the ideal %s is not square-free" % I)
    supports = [frozenset(k for k, e in enumerate(m) if e)
        for (_, m) in (next(iter(g.terms)) for g in I.generators)]
    vertices = range(ring.num_vars)
    faces = []
    for size in range(ring.num_vars + 1):
        for face in itertools.combinations(vertices, size):
            if not any(s <= set(face) for s in supports):
                faces.append(face)

    return faces

def link(faces, face):
    """Get the link of a face: all faces disjoint from it whose union
    with it is a face."""
    face = set(face)
    members = set(faces)

    return [g for g in faces if not face & set(g) and
        tuple(sorted(face | set(g))) in members]

def reduced_cohomology_dimension(faces, j, field):
    """Get the dimension of the reduced simplicial cohomology in degree
    j of a complex over a coefficient field. The empty face sits in
    degree -1."""
    if j < -1:
        return 0
    by_size = collections.defaultdict(list)
    for face in faces:
        by_size[len(face)].append(face)
    cochains = len(by_size[j + 1])
    if not cochains:
        return 0

    return (cochains - _boundary_rank(by_size, j + 2, field) -
        _boundary_rank(by_size, j + 1, field))

def _boundary_rank(by_size, size, field):
    """Get the rank of the boundary map from faces of the given size to
    faces with one vertex less."""
    if size < 1:
        return 0
    sources, targets = by_size[size], by_size[size - 1]
    if not sources or not targets:
        return 0
    domain = field.domain
    index = {face: k for k, face in enumerate(targets)}
    rows = [[domain.zero] * len(sources) for _ in targets]
    for column, face in enumerate(sources):
        for k in range(len(face)):
            sign = domain.one if k % 2 == 0 else -domain.one
            rows[index[face[:k] + face[k + 1:]]][column] = sign

    return DomainMatrix(rows, (len(targets), len(sources)), domain).rank()

def _count_positive(weights, total):
    """Count the vectors of positive integers b with sum w.b = total."""
    if not weights:
        return 1 if total == 0 else 0
    count = 0
    w = weights[0]
    for b in range(1, total // w + 1):
        count += _count_positive(weights[1:], total - b * w)

    return count

def hochster_hilbert(I, i, window=None):
    """Compute the Hilbert function of H^i(S/I) for a square-free
    monomial ideal I by Hochster's formula.

    A face F contributes dim H~^(i-|F|-1)(lk F) once for every exponent
    vector supported exactly on F with negative entries and weighted
    degree nu.

    Returns:
        HilbertTable

    Raises:
        InvalidArgumentException: if I is not square-free
    """
    ring = I.ring
    window = _check_window(window or default_window(ring))
    faces = stanley_reisner_faces(I)
    low, high = window
    dims = collections.Counter()
    for face in faces:
        multiplicity = reduced_cohomology_dimension(link(faces, face),
            i - len(face) - 1, ring.field)
        if not multiplicity:
            continue
        weights = [ring.weights[k] for k in face]
        for nu in range(low, min(high, 0) + 1):
            dims[nu] += multiplicity * _count_positive(weights, -nu)

    return HilbertTable(window, dims)

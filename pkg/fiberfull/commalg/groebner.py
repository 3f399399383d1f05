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
Groebner bases of submodules of graded free modules.

The module contains the division algorithm, Buchberger's algorithm with
the normal selection strategy and both of Buchberger's criteria,
syzygies following Schreyer, colon modules, saturation, elimination of
the x variables and the homogenization of an ideal with respect to a
weight vector representing a term order.
"""

import heapq
import itertools
import logging

from sympy.polys.monomials import (monomial_div, monomial_divides,
    monomial_lcm, monomial_mul)

from .errors import (InvalidArgumentException, OrderMismatchException,
    RingMismatchException, WeightVectorMismatchException)
from .polyutils import (EliminationOrder, GradedFreeModule, PolyVector,
    Polynomial, PositionOrder, SchreyerOrder, TermOrder, module_order,
    parameter_lcm)

logger = logging.getLogger(__name__)

# Upper bound for the total weight searched by weight_vector_for
MAX_WEIGHT_TOTAL = 256

class SubmodulePresentation(object):
    """A submodule of a graded free module given by homogeneous
    generators. It also stands for the quotient module ambient/<gens>.

    Args:
        ambient (GradedFreeModule): The free module
        generators (list): Homogeneous PolyVectors of the ambient
            module, or Polynomials if the ambient module has rank 1.
            Zero generators are dropped.
        order (optional): A module order under which the generators
            are known to be a Groebner basis

    Raises:
        InvalidArgumentException: if a generator is not homogeneous
    """
    def __init__(self, ambient, generators, order=None):
        gens = []
        for g in generators:
            if isinstance(g, Polynomial):
                g = PolyVector.from_components(ambient, [g])
            if g.module != ambient:
                raise RingMismatchException(
                    "Error, %s is not an element of %s" % (g, ambient))
            if not g.is_homogeneous():
                raise InvalidArgumentException(
                    "Error, the generator %s is not homogeneous" % g)
            if g:
                gens.append(g)
        self.ambient = ambient
        self.generators = tuple(gens)
        self.order = order

    @classmethod
    def ideal(cls, ring, polynomials):
        """Get the presentation of an ideal of a ring."""
        return cls(GradedFreeModule.free(ring), polynomials)

    @property
    def ring(self):
        return self.ambient.ring

    @property
    def is_ideal(self):
        return self.ambient.twists == (0,)

    def polynomials(self):
        """Get the generators of an ideal as polynomials."""
        return [g.component(0) for g in self.generators]

    def is_zero(self):
        return not self.generators

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        return (type(other) == type(self) and
            self.ambient == other.ambient and
            self.generators == other.generators)

    def __hash__(self):
        return hash((self.ambient, self.generators))

    def __str__(self):
        return '(%s)' % ', '.join(str(g) for g in self.generators)

    __repr__ = __str__

class GroebnerBasis(object):
    """A Groebner basis of a submodule, marked with the leading terms of
    its elements.

    Args:
        module (GradedFreeModule): The ambient free module
        order: A TermOrder or a module order
        elements (list): The PolyVectors of the basis
        reduced (bool): Whether the basis is the reduced one
    """
    def __init__(self, module, order, elements, reduced=True):
        self.module = module
        self.order = module_order(order)
        self.__elements = tuple(elements)
        self.__leads = tuple(g.leading_term(self.order)[1:]
            for g in self.__elements)
        self.reduced = reduced

    @classmethod
    def from_presentation(cls, presentation):
        """Wrap generators that are already known to be a Groebner basis
        under the order stored in the presentation."""
        if presentation.order is None:
            raise InvalidArgumentException(
                "Error, the presentation carries no order")
        return cls(presentation.ambient, presentation.order,
            presentation.generators, False)

    @property
    def elements(self):
        return self.__elements

    @property
    def leading_terms(self):
        """A list of (component, monomial) pairs."""
        return self.__leads

    def __len__(self):
        return len(self.__elements)

    def __iter__(self):
        return iter(self.__elements)

    def __getitem__(self, key):
        return self.__elements[key]

    def presentation(self):
        return SubmodulePresentation(self.module, self.__elements,
            self.order)

    def contains(self, vector):
        return normal_form(vector, self).is_zero()

    def __eq__(self, other):
        return (type(other) == type(self) and
            self.module == other.module and
            self.order == other.order and
            self.__elements == other.elements)

    def __hash__(self):
        return hash((self.module, self.__elements))

class _Element(object):
    """A basis element during a computation."""
    __slots__ = ('terms', 'component', 'lead', 'lc', 'degree')

    def __init__(self, terms, order, twists, ring):
        self.terms = terms
        key = max(terms, key=lambda k: order.key(*k))
        self.component, self.lead = key
        self.lc = terms[key]
        self.degree = ring.degree(self.lead) + twists[self.component]

class _Basis(object):
    """The list of elements used for reductions, indexed by the
    component of their leading terms."""
    def __init__(self, module, order):
        self.module = module
        self.order = order
        self.elements = []
        self.__by_component = {}
        self.__zero = module.ring.field.zero

    @classmethod
    def from_vectors(cls, module, order, vectors):
        basis = cls(module, order)
        for v in vectors:
            basis.add(v.terms, monic=False)

        return basis

    def __getitem__(self, index):
        return self.elements[index]

    def __len__(self):
        return len(self.elements)

    def add(self, terms, monic=True):
        element = _Element(terms, self.order, self.module.twists,
            self.module.ring)
        if monic and element.lc != self.module.ring.field.one:
            lc = element.lc
            element.terms = {k: c / lc for k, c in terms.items()}
            element.lc = self.module.ring.field.one
        self.__by_component.setdefault(element.component, []).append(
            len(self.elements))
        self.elements.append(element)

        return element

    def indices(self, component):
        return self.__by_component.get(component, [])

    def find_divisor(self, component, monomial):
        for index in self.__by_component.get(component, ()):
            if monomial_divides(self.elements[index].lead, monomial):
                return index
        return None

    def reduce(self, terms, quotients=None):
        """Reduce all terms of a vector.

        Args:
            terms (dict): The terms of the vector, left unchanged
            quotients (list) (optional): A list of dictionaries, one for
                each element, receiving the monomial -> coefficient map
                of the quotients

        Returns:
            dict: The terms of the remainder
        """
        zero = self.__zero
        key = self.order.key
        terms = dict(terms)
        remainder = {}
        while terms:
            top = max(terms, key=lambda k: key(*k))
            component, monomial = top
            index = self.find_divisor(component, monomial)
            if index is None:
                remainder[top] = terms.pop(top)
                continue
            g = self.elements[index]
            factor = terms[top] / g.lc
            shift = monomial_div(monomial, g.lead)
            for (i, m), c in g.terms.items():
                k = (i, monomial_mul(m, shift))
                value = terms.get(k, zero) - factor * c
                if value:
                    terms[k] = value
                else:
                    terms.pop(k, None)
            if quotients is not None:
                q = quotients[index]
                q[shift] = q.get(shift, zero) + factor

        return remainder

def _s_vector(a, b, zero):
    """Get lcm/LT(a) * a - lcm/LT(b) * b with the leading coefficients
    divided out."""
    lcm = monomial_lcm(a.lead, b.lead)
    shift_a = monomial_div(lcm, a.lead)
    shift_b = monomial_div(lcm, b.lead)
    terms = {}
    for (i, m), c in a.terms.items():
        terms[(i, monomial_mul(m, shift_a))] = c / a.lc
    for (i, m), c in b.terms.items():
        k = (i, monomial_mul(m, shift_b))
        value = terms.get(k, zero) - c / b.lc
        if value:
            terms[k] = value
        else:
            terms.pop(k, None)

    return terms, shift_a, shift_b

def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))

def _pair(i, j):
    return (i, j) if i < j else (j, i)

def _chain_criterion(basis, i, j, pending):
    """Buchberger's second criterion: the pair can be skipped if some
    other leading term divides the lcm and both pairs with it were
    already treated."""
    a, b = basis[i], basis[j]
    lcm = monomial_lcm(a.lead, b.lead)
    for k in basis.indices(a.component):
        if k == i or k == j:
            continue
        if (monomial_divides(basis[k].lead, lcm) and
                _pair(i, k) not in pending and
                _pair(j, k) not in pending):
            return True

    return False

def buchberger(gens, order):
    """Compute the reduced Groebner basis of a submodule.

    Args:
        gens (SubmodulePresentation): The generators
        order: A TermOrder (used term over position) or a module order

    Returns:
        GroebnerBasis: The reduced basis, sorted by decreasing leading
            terms
    """
    order = module_order(order)
    module = gens.ambient
    ring = module.ring
    zero = ring.field.zero
    ideal = module.rank == 1
    basis = _Basis(module, order)
    counter = itertools.count()
    queue = []
    pending = set()
    for g in gens.generators:
        heapq.heappush(queue, (g.degree(), next(counter), g.terms, None))

    reductions_to_zero = 0
    while queue:
        _, _, terms, pair = heapq.heappop(queue)
        if pair is not None:
            pending.discard(pair)
            if _chain_criterion(basis, pair[0], pair[1], pending):
                continue
            terms, _, _ = _s_vector(basis[pair[0]], basis[pair[1]], zero)
        remainder = basis.reduce(terms)
        if not remainder:
            reductions_to_zero += 1
            continue
        element = basis.add(remainder)
        new = len(basis) - 1
        for j in basis.indices(element.component):
            if j == new:
                continue
            other = basis[j]
            if ideal and _coprime(other.lead, element.lead):
                continue
            lcm = monomial_lcm(other.lead, element.lead)
            degree = ring.degree(lcm) + module.twists[element.component]
            heapq.heappush(queue, (degree, next(counter), None, (j, new)))
            pending.add((j, new))

    logger.debug("Buchberger: %d elements, %d reductions to zero",
        len(basis), reductions_to_zero)

    return GroebnerBasis(module, order, _reduce_basis(basis), True)

def _reduce_basis(basis):
    """Turn a Groebner basis into the reduced one."""
    keep = []
    elements = basis.elements
    for index, e in enumerate(elements):
        redundant = False
        for other_index in basis.indices(e.component):
            other = elements[other_index]
            if other_index == index:
                continue
            if monomial_divides(other.lead, e.lead) and (
                    other.lead != e.lead or other_index < index):
                redundant = True
                break
        if not redundant:
            keep.append(e)

    minimal = _Basis(basis.module, basis.order)
    for e in keep:
        minimal.add(e.terms)
    vectors = []
    for e in minimal.elements:
        top = (e.component, e.lead)
        tail = {k: c for k, c in e.terms.items() if k != top}
        terms = minimal.reduce(tail)
        terms[top] = e.lc
        vectors.append(PolyVector(basis.module, terms))
    key = basis.order.key
    vectors.sort(key=lambda v: key(*v.leading_term(basis.order)[1:]),
        reverse=True)

    return vectors

def _check_basis(vector, G):
    if vector.module != G.module:
        raise RingMismatchException(
            "Error, the vector and the basis live in different modules")

def normal_form(v, G, order=None):
    """Reduce a vector modulo a Groebner basis.

    Args:
        v (PolyVector): The vector to reduce
        G (GroebnerBasis): The basis
        order (optional): If given, it must be the order of the basis

    Returns:
        PolyVector: A vector without terms divisible by a leading term
            of G

    Raises:
        OrderMismatchException: if order is not the order of G
    """
    if order is not None and module_order(order) != G.order:
        raise OrderMismatchException()
    if isinstance(v, Polynomial):
        v = PolyVector.from_components(G.module, [v])
    _check_basis(v, G)
    basis = _Basis.from_vectors(G.module, G.order, G.elements)

    return PolyVector(G.module, basis.reduce(v.terms))

def division(v, G):
    """Divide a vector by the elements of a Groebner basis.

    Returns:
        tuple: A list with one quotient Polynomial for every element of
            G and the remainder as PolyVector
    """
    _check_basis(v, G)
    ring = G.module.ring
    basis = _Basis.from_vectors(G.module, G.order, G.elements)
    quotients = [{} for _ in range(len(basis))]
    remainder = basis.reduce(v.terms, quotients)

    return ([Polynomial(ring, q) for q in quotients],
        PolyVector(G.module, remainder))

def initial_module(G):
    """Get the monomial submodule generated by the leading terms of a
    Groebner basis."""
    one = G.module.ring.field.one
    monomials = [PolyVector(G.module, {lead: one})
        for lead in G.leading_terms]

    return SubmodulePresentation(G.module, monomials, G.order)

def syzygies(G):
    """Compute the syzygies of a Groebner basis following Schreyer.

    For every pair of elements with leading terms in the same component
    the S-vector is divided by G. The resulting relations form a
    Groebner basis of the syzygy module under the induced Schreyer
    order. Relations whose leading term is divisible by the leading term
    of another one are left out.

    Returns:
        SubmodulePresentation: The syzygies as submodule of the free
            module with one basis element per element of G, carrying
            the Schreyer order
    """
    ring = G.module.ring
    field = ring.field
    source = GradedFreeModule(ring, [g.degree() for g in G])
    order = SchreyerOrder(G.order, G.leading_terms)
    basis = _Basis.from_vectors(G.module, G.order, G.elements)
    candidates = []
    for i, j in itertools.combinations(range(len(basis)), 2):
        a, b = basis[i], basis[j]
        if a.component != b.component:
            continue
        s, shift_a, shift_b = _s_vector(a, b, field.zero)
        quotients = [{} for _ in range(len(basis))]
        if basis.reduce(s, quotients):
            raise InvalidArgumentException(
                "Error, the elements are not a Groebner basis")
        terms = {(i, shift_a): field.one / a.lc}
        terms[(j, shift_b)] = -field.one / b.lc
        for k, q in enumerate(quotients):
            for m, c in q.items():
                terms[(k, m)] = terms.get((k, m), field.zero) - c
        # the leading term is (i, shift_a), make it monic
        terms = {k: c * a.lc for k, c in terms.items() if c}
        candidates.append(((i, shift_a), terms))

    relations = []
    for index, (lead, terms) in enumerate(candidates):
        redundant = False
        for other_index, (other, _) in enumerate(candidates):
            if other_index == index or other[0] != lead[0]:
                continue
            if monomial_divides(other[1], lead[1]) and (
                    other[1] != lead[1] or other_index < index):
                redundant = True
                break
        if not redundant:
            relations.append(PolyVector(source, terms))
    logger.debug("Schreyer: %d pairs, %d syzygies kept", len(candidates),
        len(relations))

    return SubmodulePresentation(source, relations, order)

def syzygies_of(module, vectors, twists=None, order=None):
    """Compute the syzygies of arbitrary vectors of a free module.

    Each vector v_k is extended by a new basis vector e_k and a Groebner
    basis is computed under an order eliminating the original
    components. The elements without terms in the original components
    generate the syzygies.

    Args:
        module (GradedFreeModule): The module of the vectors
        vectors (list): The PolyVectors
        twists (list) (optional): The degrees of the vectors, needed if
            one of them is zero
        order (TermOrder) (optional): The monomial order to refine, the
            canonical order of the ring by default

    Returns:
        SubmodulePresentation: The syzygies as a submodule of the free
            module with the given twists, generated by a Groebner basis
    """
    ring = module.ring
    if twists is None:
        twists = [v.degree() for v in vectors]
        if None in twists:
            raise InvalidArgumentException(
                "Error, the degree of a zero vector must be given")
    rank = module.rank
    combined = GradedFreeModule(ring, module.twists + tuple(twists))
    gens = []
    for k, v in enumerate(vectors):
        terms = dict(v.terms)
        terms[(rank + k, ring.unit_monomial)] = ring.field.one
        gens.append(PolyVector(combined, terms))
    elimination = EliminationOrder(
        PositionOrder(order or ring.canonical_order), rank)
    G = buchberger(SubmodulePresentation(combined, gens), elimination)
    target = GradedFreeModule(ring, twists)
    relations = []
    for g in G:
        if all(i >= rank for i, _ in g.terms):
            relations.append(PolyVector(target,
                {(i - rank, m): c for (i, m), c in g.terms.items()}))

    return SubmodulePresentation(target, relations)

def _canonical_basis(U):
    return buchberger(U, U.ring.canonical_order)

def colon(U, h):
    """Compute the colon module (U : h) = {v : h v in U}.

    Args:
        U (SubmodulePresentation): The submodule
        h (Polynomial): A nonzero homogeneous polynomial

    Returns:
        SubmodulePresentation: The colon module, generated by its
            reduced Groebner basis under the canonical order

    Raises:
        InvalidArgumentException: if h is zero or inhomogeneous
    """
    if not h:
        raise InvalidArgumentException("Error, cannot divide by zero")
    if not h.is_homogeneous():
        raise InvalidArgumentException(
            "Error, %s is not homogeneous" % h)
    F = U.ambient
    vectors = [F.basis(i) * h for i in range(F.rank)]
    twists = [a + h.degree() for a in F.twists]
    vectors += list(U.generators)
    twists += [g.degree() for g in U.generators]
    syz = syzygies_of(F, vectors, twists)
    projected = []
    for s in syz:
        terms = {(i, m): c for (i, m), c in s.terms.items() if i < F.rank}
        projected.append(PolyVector(F, terms))

    return _canonical_basis(SubmodulePresentation(F,
        projected)).presentation()

def quotient_ideal(U, v):
    """Compute the ideal (U : v) = {f : f v in U} for a vector v."""
    F = U.ambient
    ring = F.ring
    vectors = [v] + list(U.generators)
    twists = [v.degree() or 0] + [g.degree() for g in U.generators]
    syz = syzygies_of(F, vectors, twists)
    generators = [s.component(0) for s in syz]

    return _canonical_basis(SubmodulePresentation.ideal(ring,
        generators)).presentation()

def saturate(U, h):
    """Compute the saturation (U : h^oo) by iterating colons until they
    stabilize.

    Returns:
        SubmodulePresentation: The saturation, generated by its reduced
            Groebner basis under the canonical order

    Raises:
        InvalidArgumentException: if h is zero
    """
    if not h:
        raise InvalidArgumentException(
            "Error, cannot saturate with respect to zero")
    current = _canonical_basis(U)
    steps = 0
    while True:
        following = colon(current.presentation(), h)
        steps += 1
        if all(current.contains(g) for g in following):
            logger.debug("Saturation by %s stable after %d steps", h,
                steps)
            return current.presentation()
        current = _canonical_basis(following)

def leading_parameter_coefficient(g, order):
    """Get the coefficient in k[t] of the leading term of g, seen as a
    vector over k[t][x]."""
    _, component, lead = g.leading_term(order)
    ring = g.ring
    r = ring.num_vars
    terms = {}
    for (i, m), c in g.terms.items():
        if i == component and m[:r] == lead[:r]:
            terms[(0,) * r + (m[-1],)] = c

    return Polynomial(ring, terms)

def saturate_parameter(U):
    """Compute the saturation of U by all nonzero polynomials in t.

    The reduced Groebner basis under the canonical order, which ranks
    the x variables above t, is computed first. Saturating by the lcm of
    the leading coefficients in k[t] of its elements gives the result.

    Returns:
        tuple: The saturation as SubmodulePresentation and the
            polynomial in t used to saturate
    """
    ring = U.ring
    if not ring.has_parameter:
        raise InvalidArgumentException(
            "Error, the ring has no parameter variable")
    G = _canonical_basis(U)
    h = parameter_lcm(ring,
        [leading_parameter_coefficient(g, G.order) for g in G])
    if h == ring.one():
        return G.presentation(), h

    return saturate(G.presentation(), h), h

def contract_to_parameter(I):
    """Compute generators of the intersection of an ideal of k[t][x]
    with k[t].

    Returns:
        list: Polynomials in t alone, empty for the zero intersection
    """
    if not I.ring.has_parameter:
        raise InvalidArgumentException(
            "Error, the ring has no parameter variable")
    if not I.is_ideal:
        raise InvalidArgumentException("Error, expected an ideal")
    G = _canonical_basis(I)

    return [g.component(0) for g in G if not g.component(0).involves_x()]

def is_squarefree(I):
    """Check whether the minimal generators of a monomial submodule
    have all exponents at most one.

    Raises:
        InvalidArgumentException: if a generator is not a monomial
    """
    leads = []
    for g in I.generators:
        if not g.is_monomial():
            raise InvalidArgumentException(
                "Error, %s is not a monomial" % g)
        leads.append(next(iter(g.terms)))
    for index, (i, m) in enumerate(leads):
        minimal = not any(j == i and monomial_divides(n, m) and
            (n != m or other < index)
            for other, (j, n) in enumerate(leads) if other != index)
        if minimal and any(e > 1 for e in m):
            return False

    return True

def _compositions(total, parts):
    """Yield the vectors of nonnegative integers with the given sum in
    increasing lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest

def weight_vector_for(I, order):
    """Find a weight vector selecting the same leading terms as a term
    order on the reduced Groebner basis of an ideal.

    The returned vector w satisfies w.(a - b) >= 1 for the leading
    exponent a and every other exponent b of each basis element. It has
    minimal total weight and is the lexicographically smallest of those;
    the zero vector is replaced by (1, ..., 1).

    Returns:
        tuple: The weight vector
    """
    ring = I.ring
    if ring.has_parameter or not I.is_ideal:
        raise InvalidArgumentException(
            "Error, expected an ideal of a ring without parameter")
    G = buchberger(I, order)
    differences = set()
    for g, (_, lead) in zip(G, G.leading_terms):
        for _, m in g.terms:
            if m != lead:
                differences.add(tuple(a - b for a, b in zip(lead, m)))
    differences = sorted(differences)
    r = ring.num_vars
    for total in range(MAX_WEIGHT_TOTAL + 1):
        for omega in _compositions(total, r):
            if all(sum(w * d for w, d in zip(omega, diff)) >= 1
                    for diff in differences):
                if not any(omega):
                    return (1,) * r
                logger.debug("Weight vector %s for %d inequalities",
                    omega, len(differences))
                return omega

    raise WeightVectorMismatchException(
        "Error, no weight vector of total weight up to %d represents "
        "the order" % MAX_WEIGHT_TOTAL)

def homogenize_polynomial(p, omega, ring):
    """Get sum c_a t^(m - w.a) x^a with m the maximum of w.a over the
    terms of p, as an element of the ring k[t][x]."""
    values = {m: sum(w * e for w, e in zip(omega, m)) for m in p.terms}
    top = max(values.values())

    return Polynomial(ring, {m + (top - values[m],): c
        for m, c in p.terms.items()})

def homogenize_omega(I, omega, order=None):
    """Compute the omega-homogenization J of an ideal I of k[x].

    J is generated by the homogenizations of the reduced Groebner basis
    of I. Setting t = 0 in J must give the initial ideal of I and t = 1
    must give I back.

    Args:
        I (SubmodulePresentation): A homogeneous ideal
        omega (tuple): Nonnegative integer weights
        order (TermOrder) (optional): The term order, grevlex by default

    Returns:
        SubmodulePresentation: The ideal J of k[t][x]

    Raises:
        WeightVectorMismatchException: if one of the checks fails
    """
    ring = I.ring
    if ring.has_parameter or not I.is_ideal:
        raise InvalidArgumentException(
            "Error, expected an ideal of a ring without parameter")
    omega = tuple(omega)
    if len(omega) != ring.num_vars or any(
            type(w) != int or w < 0 for w in omega):
        raise InvalidArgumentException(
            "Error, expected %d nonnegative integer weights" %
            ring.num_vars)
    order = order or TermOrder(ring, TermOrder.GREVLEX)
    G = buchberger(I, order)
    parametric = ring.with_parameter()
    J = SubmodulePresentation.ideal(parametric,
        [homogenize_polynomial(g.component(0), omega, parametric)
        for g in G])

    special = buchberger(specialize(J, 0), order)
    if special.elements != buchberger(initial_module(G), order).elements:
        raise WeightVectorMismatchException(
            "Error, setting t = 0 does not give the initial ideal")
    generic = buchberger(specialize(J, 1), order)
    if generic.elements != G.elements:
        raise WeightVectorMismatchException(
            "Error, setting t = 1 does not give the ideal back")

    return J

def specialize(U, value):
    """Substitute t by a field element in a submodule of a free module
    over k[t][x].

    Returns:
        SubmodulePresentation: The submodule of the free module with the
            same twists over k[x]
    """
    ring = U.ring
    if not ring.has_parameter:
        raise InvalidArgumentException(
            "Error, the ring has no parameter variable")
    target = U.ambient.change_ring(ring.without_parameter())

    return SubmodulePresentation(target,
        [g.substitute_parameter(value, target) for g in U.generators])

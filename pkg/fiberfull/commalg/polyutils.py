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
This module provides the arithmetic layer of the package.

There is a CoefficientField class wrapping the exact sympy domains QQ
and GF(p), a GradedRing class describing a positively graded polynomial
ring with an optional parameter variable of degree zero, term orders
and classes for polynomials, graded free modules and their elements.

Monomials are plain tuples of exponents. The first entries belong to the
positive degree variables x1, ..., xr; if the ring has a parameter, its
exponent is stored in the last entry.
"""

import enum
import functools

from sympy import Poly, Symbol
from sympy.ntheory import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.monomials import monomial_div, monomial_lcm, monomial_mul

from .errors import (InvalidFieldException, InvalidGradingException,
    InvalidArgumentException, RingMismatchException)

DEFAULT_PRIME = 32003
MAX_PRIME = 2 ** 31

class CoefficientField(object):
    """The field of coefficients of a polynomial ring.

    Args:
        kind (str): Either CoefficientField.RATIONALS or
            CoefficientField.PRIME_FIELD
        p (int) (optional): The characteristic of a prime field

    Raises:
        InvalidFieldException: if p is not a prime below 2^31
    """
    RATIONALS = 'QQ'
    PRIME_FIELD = 'Fp'

    def __init__(self, kind=RATIONALS, p=None):
        if kind == self.PRIME_FIELD:
            if p is None or not 1 < p < MAX_PRIME or not isprime(p):
                raise InvalidFieldException(
                    "Error, %s is not a prime below 2^31" % p)
            self.__domain = GF(p)
        elif kind == self.RATIONALS:
            p = None
            self.__domain = QQ
        else:
            raise InvalidFieldException(
                "Error, unknown coefficient field %s" % kind)
        self.kind = kind
        self.p = p

    @classmethod
    def rationals(cls):
        return cls(cls.RATIONALS)

    @classmethod
    def prime_field(cls, p=DEFAULT_PRIME):
        return cls(cls.PRIME_FIELD, p)

    @classmethod
    def from_string(cls, string):
        """Create a field from its textual name.

        Args:
            string (str): Either 'QQ' or 'Fp:<p>'

        Returns:
            CoefficientField
        """
        string = string.strip()
        if string == cls.RATIONALS:
            return cls.rationals()
        if string.startswith(cls.PRIME_FIELD + ':'):
            try:
                p = int(string[3:])
            except ValueError:
                raise InvalidFieldException(
                    "Error, could not read the characteristic of %s" %
                    string)
            return cls.prime_field(p)
        raise InvalidFieldException(
            "Error, unknown coefficient field %s" % string)

    @property
    def domain(self):
        """The sympy domain doing the arithmetic."""
        return self.__domain

    @property
    def zero(self):
        return self.__domain.zero

    @property
    def one(self):
        return self.__domain.one

    def __call__(self, numerator, denominator=1):
        """Get the field element numerator/denominator.

        Raises:
            InvalidArgumentException: if the denominator vanishes in
                the field
        """
        den = self.__domain(denominator)
        if not den:
            raise InvalidArgumentException(
                "Error, %s is zero in %s" % (denominator, self))

        return self.__domain(numerator) / den

    def to_string(self, element):
        """Get the canonical text of a field element, for example
        '-1/2' over QQ or '5' over a prime field.
        """
        return str(self.__domain.to_sympy(element))

    def __eq__(self, other):
        return (type(other) == type(self) and
            (self.kind, self.p) == (other.kind, other.p))

    def __hash__(self):
        return hash((self.kind, self.p))

    def __str__(self):
        if self.kind == self.RATIONALS:
            return self.RATIONALS

        return '%s:%d' % (self.PRIME_FIELD, self.p)

    __repr__ = __str__

class GradedRing(object):
    """A positively graded polynomial ring k[x1, ..., xr], optionally
    with a parameter variable t of degree 0 adjoined.

    Args:
        weights (list): The degrees of the variables x1, ..., xr
        has_parameter (bool): Whether to adjoin the parameter t
        field (CoefficientField): The coefficient field, QQ by default
        names (list) (optional): The names of x1, ..., xr
        parameter_name (str): The name of the parameter variable

    Raises:
        InvalidGradingException: if a weight is not a positive integer
    """
    def __init__(self, weights, has_parameter=False, field=None,
                 names=None, parameter_name='t'):
        weights = tuple(weights)
        if not weights:
            raise InvalidGradingException(
                "Error, a graded ring needs at least one variable")
        for w in weights:
            if type(w) != int or w <= 0:
                raise InvalidGradingException(
                    "Error, the weight %s is not a positive integer" % (w,))
        if names is None:
            names = ['x%d' % (i + 1) for i in range(len(weights))]
        names = tuple(names)
        if len(names) != len(weights):
            raise InvalidGradingException(
                "Error, %d variables but %d weights" % (
                    len(names), len(weights)))
        reserved = (parameter_name,) if has_parameter else ()
        if len(set(names + reserved)) != len(names) + len(reserved):
            raise InvalidArgumentException(
                "Error, the variable names are not distinct")

        self.weights = weights
        self.has_parameter = bool(has_parameter)
        self.field = field if field is not None else \
            CoefficientField.rationals()
        self.names = names
        self.parameter_name = parameter_name

    @property
    def num_vars(self):
        """The number r of positive degree variables."""
        return len(self.weights)

    @property
    def nvars(self):
        """The length of the exponent tuples, r plus one if the ring
        has a parameter."""
        return len(self.weights) + (1 if self.has_parameter else 0)

    @property
    def delta(self):
        """The sum of the degrees of all variables."""
        return sum(self.weights)

    @property
    def variable_names(self):
        if self.has_parameter:
            return self.names + (self.parameter_name,)
        return self.names

    @property
    def unit_monomial(self):
        return (0,) * self.nvars

    @property
    def canonical_order(self):
        """grevlex on x1, ..., xr refined by the exponent of t"""
        return TermOrder(self, TermOrder.BLOCK)

    def degree(self, monomial):
        """Get the weighted degree of a monomial. The parameter never
        contributes."""
        return sum(w * e for w, e in zip(self.weights, monomial))

    def parameter_exponent(self, monomial):
        return monomial[-1] if self.has_parameter else 0

    def monomials_of_degree(self, degree):
        """Get all monomials in x1, ..., xr of the given weighted
        degree, with exponent 0 for the parameter.

        Returns:
            tuple: The monomials in decreasing lexicographic order
        """
        pad = (0,) if self.has_parameter else ()

        return tuple(m + pad for m in _monomials(self.weights, degree))

    def without_parameter(self):
        """Get the ring k[x1, ..., xr] of the special and generic
        fibers."""
        if not self.has_parameter:
            return self
        return GradedRing(self.weights, False, self.field, self.names,
            self.parameter_name)

    def with_parameter(self):
        """Get the ring k[t][x1, ..., xr]."""
        if self.has_parameter:
            return self
        return GradedRing(self.weights, True, self.field, self.names,
            self.parameter_name)

    def with_field(self, field):
        return GradedRing(self.weights, self.has_parameter, field,
            self.names, self.parameter_name)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(self.field.one)

    def constant(self, coefficient):
        return Polynomial(self, {self.unit_monomial: coefficient})

    def variable(self, index):
        """Get the variable with the given index as polynomial. The
        parameter has the index r."""
        exponents = [0] * self.nvars
        exponents[index] = 1
        return Polynomial(self, {tuple(exponents): self.field.one})

    def parameter(self):
        if not self.has_parameter:
            raise InvalidArgumentException(
                "Error, the ring has no parameter variable")
        return self.variable(self.num_vars)

    def __key(self):
        return (self.weights, self.has_parameter, self.field, self.names,
            self.parameter_name)

    def __eq__(self, other):
        return type(other) == type(self) and self.__key() == other.__key()

    def __hash__(self):
        return hash(self.__key())

    def __str__(self):
        variables = ', '.join('%s:%d' % (n, w)
            for n, w in zip(self.names, self.weights))
        if self.has_parameter:
            return '%s[%s][%s]' % (self.field, self.parameter_name,
                variables)
        return '%s[%s]' % (self.field, variables)

    __repr__ = __str__

@functools.lru_cache(maxsize=None)
def _monomials(weights, degree):
    if degree < 0:
        return ()
    if not weights:
        return ((),) if degree == 0 else ()
    result = []
    w = weights[0]
    for e in range(degree // w, -1, -1):
        for rest in _monomials(weights[1:], degree - e * w):
            result.append((e,) + rest)

    return tuple(result)

def make_ring(weights, has_parameter=False, field=None, names=None):
    """Build a graded ring, see GradedRing.

    Returns:
        GradedRing
    """
    return GradedRing(weights, has_parameter, field, names)

class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1

class TermOrder(object):
    """A global monomial order on a graded ring.

    Every order compares the part in x1, ..., xr first and uses the
    exponent of the parameter only to break ties, so each order is an
    elimination order for the x variables.

    Args:
        ring (GradedRing): The ring of the monomials
        kind (str): One of LEX, GREVLEX, WEIGHTS or BLOCK
        weights (list) (optional): The weight vector for WEIGHTS orders,
            refined by grevlex
    """
    LEX = 'lex'
    GREVLEX = 'grevlex'
    WEIGHTS = 'weights'
    BLOCK = 'block'

    def __init__(self, ring, kind=GREVLEX, weights=None):
        if kind not in (self.LEX, self.GREVLEX, self.WEIGHTS, self.BLOCK):
            raise InvalidArgumentException(
                "Error, unknown term order %s" % kind)
        if kind == self.WEIGHTS:
            if (weights is None or len(weights) != ring.num_vars or
                    any(type(w) != int or w < 0 for w in weights)):
                raise InvalidArgumentException(
                    "Error, a weight order needs %d nonnegative integer "
                    "weights" % ring.num_vars)
            weights = tuple(weights)
        else:
            weights = None
        self.ring = ring
        self.kind = kind
        self.weights = weights
        self.__keys = {}

    @classmethod
    def from_string(cls, ring, string):
        """Create an order from 'lex', 'grevlex', 'block' or
        'weights:<w1>,...,<wr>'."""
        string = string.strip()
        if string.startswith(cls.WEIGHTS + ':'):
            try:
                weights = [int(w) for w in string[8:].split(',')]
            except ValueError:
                raise InvalidArgumentException(
                    "Error, could not read the weights of %s" % string)
            return cls(ring, cls.WEIGHTS, weights)

        return cls(ring, string)

    def x_key(self, monomial):
        """Get the sort key of the x part of a monomial."""
        r = self.ring.num_vars
        if self.kind == self.LEX:
            return tuple(monomial[:r])
        grevlex = (self.ring.degree(monomial),
            tuple(-e for e in reversed(monomial[:r])))
        if self.kind == self.WEIGHTS:
            return (sum(w * e for w, e in zip(self.weights, monomial)),
                grevlex)

        return grevlex

    def key(self, monomial):
        """Get a sort key of a monomial, larger keys belong to larger
        monomials."""
        try:
            return self.__keys[monomial]
        except KeyError:
            key = (self.x_key(monomial),
                self.ring.parameter_exponent(monomial))
            self.__keys[monomial] = key

            return key

    def __eq__(self, other):
        return (type(other) == type(self) and
            (self.ring, self.kind, self.weights) ==
            (other.ring, other.kind, other.weights))

    def __hash__(self):
        return hash((self.ring, self.kind, self.weights))

    def __str__(self):
        if self.kind == self.WEIGHTS:
            return '%s:%s' % (self.kind, ','.join(map(str, self.weights)))
        return self.kind

    __repr__ = __str__

def compare_monomials(order, a, b):
    """Compare two monomials of the same ring.

    Returns:
        Ordering: GT if a is larger than b under the order
    """
    ka, kb = order.key(a), order.key(b)
    if ka > kb:
        return Ordering.GT
    if ka < kb:
        return Ordering.LT

    return Ordering.EQ

class Polynomial(object):
    """An element of a graded ring.

    The terms are stored in a dictionary mapping monomials to nonzero
    coefficients. Polynomials are never changed after construction.

    Args:
        ring (GradedRing): The ring of the polynomial
        terms (dict): A dictionary with monomials as keys and field
            elements as values. Zero coefficients are dropped.
    """
    def __init__(self, ring, terms=None):
        self.ring = ring
        self.__terms = {m: c for m, c in (terms or {}).items() if c}

    @property
    def terms(self):
        return self.__terms

    def __iter__(self):
        """Iterate over (coefficient, monomial) pairs in the canonical
        order, largest monomial first."""
        order = self.ring.canonical_order
        for m in sorted(self.__terms, key=order.key, reverse=True):
            yield self.__terms[m], m

    def __len__(self):
        return len(self.__terms)

    def __bool__(self):
        return bool(self.__terms)

    def is_zero(self):
        return not self.__terms

    def __check_ring(self, other):
        if other.ring != self.ring:
            raise RingMismatchException()

    def __coerce(self, other):
        if isinstance(other, Polynomial):
            self.__check_ring(other)
            return other
        if isinstance(other, int):
            other = self.ring.field(other)

        return self.ring.constant(other)

    def __add__(self, other):
        other = self.__coerce(other)
        terms = dict(self.__terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, self.ring.field.zero) + c

        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring,
            {m: -c for m, c in self.__terms.items()})

    def __sub__(self, other):
        return self + (-self.__coerce(other))

    def __rsub__(self, other):
        return self.__coerce(other) - self

    def __mul__(self, other):
        other = self.__coerce(other)
        zero = self.ring.field.zero
        terms = {}
        for m1, c1 in self.__terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                terms[m] = terms.get(m, zero) + c1 * c2

        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self

        return result

    def mul_term(self, coefficient, monomial):
        return Polynomial(self.ring, {monomial_mul(m, monomial):
            c * coefficient for m, c in self.__terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(self.ring.field(other))
        return (isinstance(other, Polynomial) and
            self.ring == other.ring and self.__terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.__terms.items())))

    def is_homogeneous(self):
        return len({self.ring.degree(m) for m in self.__terms}) <= 1

    def degree(self):
        """Get the weighted degree, the maximum over all terms for
        inhomogeneous polynomials and None for zero."""
        if not self.__terms:
            return None
        return max(self.ring.degree(m) for m in self.__terms)

    def is_monomial(self):
        return len(self.__terms) == 1

    def is_constant(self):
        return all(not any(m) for m in self.__terms)

    def involves_x(self):
        r = self.ring.num_vars
        return any(any(m[:r]) for m in self.__terms)

    def leading_term(self, order):
        """Get the largest term under the given order.

        Returns:
            tuple: The coefficient and the monomial of the leading term
        """
        m = max(self.__terms, key=order.key)

        return self.__terms[m], m

    def monic(self, order):
        if not self.__terms:
            return self
        c, _ = self.leading_term(order)

        return Polynomial(self.ring,
            {m: v / c for m, v in self.__terms.items()})

    def substitute_parameter(self, value, ring=None):
        """Substitute t by a field element.

        Args:
            value: A field element or an integer
            ring (GradedRing) (optional): The target ring, by default
                the ring without the parameter

        Returns:
            Polynomial: The specialized polynomial
        """
        if not self.ring.has_parameter:
            raise InvalidArgumentException(
                "Error, the ring has no parameter variable")
        field = self.ring.field
        if isinstance(value, int):
            value = field(value)
        ring = ring or self.ring.without_parameter()
        terms = {}
        for m, c in self.__terms.items():
            target = m[:-1] + ((0,) if ring.has_parameter else ())
            terms[target] = terms.get(target, field.zero) + \
                c * value ** m[-1]

        return Polynomial(ring, terms)

    def change_ring(self, ring):
        """Map a polynomial of k[x] into k[t][x] or back, if it does not
        involve the parameter."""
        if ring == self.ring:
            return self
        terms = {}
        for m, c in self.__terms.items():
            if self.ring.has_parameter:
                if m[-1]:
                    raise InvalidArgumentException(
                        "Error, %s involves the parameter" % self)
                m = m[:-1]
            if ring.has_parameter:
                m = m + (0,)
            terms[m] = c

        return Polynomial(ring, terms)

    def __str__(self):
        if not self.__terms:
            return '0'
        parts = []
        for c, m in self:
            coefficient = self.ring.field.to_string(c)
            negative = coefficient.startswith('-')
            if negative:
                coefficient = coefficient[1:]
            factors = _monomial_factors(self.ring, m)
            if coefficient != '1' or not factors:
                factors.insert(0, coefficient)
            term = '*'.join(factors)
            if not parts:
                parts.append('-' + term if negative else term)
            else:
                parts.append(('- ' if negative else '+ ') + term)

        return ' '.join(parts)

    __repr__ = __str__

def _monomial_factors(ring, monomial):
    """The parameter is printed first, then x1, ..., xr."""
    factors = []
    names = list(ring.names)
    exponents = list(monomial[:ring.num_vars])
    if ring.has_parameter:
        names.insert(0, ring.parameter_name)
        exponents.insert(0, monomial[-1])
    for name, e in zip(names, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append('%s^%d' % (name, e))

    return factors

def monomial_to_string(ring, monomial):
    return '*'.join(_monomial_factors(ring, monomial)) or '1'

def poly_multiply(f, g):
    """Multiply two polynomials of the same ring.

    Raises:
        RingMismatchException: if the rings differ
    """
    if f.ring != g.ring:
        raise RingMismatchException()

    return f * g

def parameter_symbol(ring):
    return Symbol(ring.parameter_name)

def to_parameter_poly(polynomial):
    """Convert a polynomial in t alone into a univariate sympy Poly."""
    ring = polynomial.ring
    if polynomial.involves_x():
        raise InvalidArgumentException(
            "Error, %s is not a polynomial in %s alone" % (
                polynomial, ring.parameter_name))
    field = ring.field
    terms = {(m[-1],): field.domain.to_sympy(c)
        for m, c in polynomial.terms.items()}

    return Poly.from_dict(terms or {(0,): 0}, parameter_symbol(ring),
        domain=field.domain)

def from_parameter_poly(ring, poly):
    """Convert a univariate sympy Poly in t back into the ring."""
    domain = ring.field.domain
    terms = {}
    for (e,), c in poly.terms():
        if c:
            terms[(0,) * ring.num_vars + (e,)] = domain.from_sympy(c)

    return Polynomial(ring, terms)

def parameter_lcm(ring, polynomials):
    """Get the monic least common multiple of polynomials in t."""
    result = Poly(1, parameter_symbol(ring), domain=ring.field.domain)
    for p in polynomials:
        result = result.lcm(to_parameter_poly(p))

    return from_parameter_poly(ring, result.monic())

def parameter_gcd(ring, polynomials):
    """Get the monic greatest common divisor of polynomials in t."""
    result = Poly(0, parameter_symbol(ring), domain=ring.field.domain)
    for p in polynomials:
        result = result.gcd(to_parameter_poly(p))
    if result.is_zero:
        return ring.zero()

    return from_parameter_poly(ring, result.monic())

def evaluate_parameter_poly(polynomial, value):
    """Evaluate a polynomial in t alone at a field element."""
    return polynomial.substitute_parameter(value).terms.get(
        polynomial.ring.without_parameter().unit_monomial,
        polynomial.ring.field.zero)

class GradedFreeModule(object):
    """A graded free module over a graded ring.

    Args:
        ring (GradedRing): The ring
        twists (list): The degree of every basis element. The module
            with twists (a1, ..., am) is the direct sum of the modules
            R(-a1), ..., R(-am).
    """
    def __init__(self, ring, twists):
        self.ring = ring
        self.twists = tuple(twists)

    @classmethod
    def free(cls, ring, rank=1):
        return cls(ring, [0] * rank)

    @property
    def rank(self):
        return len(self.twists)

    def basis(self, index):
        return PolyVector(self,
            {(index, self.ring.unit_monomial): self.ring.field.one})

    def zero(self):
        return PolyVector(self, {})

    def dual(self):
        """Get the module Hom(F, R)."""
        return GradedFreeModule(self.ring, [-a for a in self.twists])

    def change_ring(self, ring):
        return GradedFreeModule(ring, self.twists)

    def __eq__(self, other):
        return (type(other) == type(self) and
            (self.ring, self.twists) == (other.ring, other.twists))

    def __hash__(self):
        return hash((self.ring, self.twists))

    def __str__(self):
        return '+'.join('R(%d)' % -a for a in self.twists) or '0'

    __repr__ = __str__

class PolyVector(object):
    """An element of a graded free module.

    Args:
        module (GradedFreeModule): The free module
        terms (dict): A dictionary with (component, monomial) as keys and
            nonzero field elements as values
    """
    def __init__(self, module, terms=None):
        self.module = module
        self.__terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def from_components(cls, module, components):
        """Build a vector from a list of polynomials, one for each
        basis element."""
        if len(components) != module.rank:
            raise InvalidArgumentException(
                "Error, expected %d components, got %d" % (
                    module.rank, len(components)))
        terms = {}
        for i, p in enumerate(components):
            if p.ring != module.ring:
                raise RingMismatchException()
            for m, c in p.terms.items():
                terms[(i, m)] = c

        return cls(module, terms)

    @property
    def ring(self):
        return self.module.ring

    @property
    def terms(self):
        return self.__terms

    def component(self, index):
        return Polynomial(self.ring, {m: c for (i, m), c in
            self.__terms.items() if i == index})

    def components(self):
        return [self.component(i) for i in range(self.module.rank)]

    def __bool__(self):
        return bool(self.__terms)

    def is_zero(self):
        return not self.__terms

    def __len__(self):
        return len(self.__terms)

    def __check_module(self, other):
        if other.module != self.module:
            raise RingMismatchException(
                "Error, the vectors live in different free modules")

    def __add__(self, other):
        self.__check_module(other)
        terms = dict(self.__terms)
        zero = self.ring.field.zero
        for k, c in other.terms.items():
            terms[k] = terms.get(k, zero) + c

        return PolyVector(self.module, terms)

    def __neg__(self):
        return PolyVector(self.module,
            {k: -c for k, c in self.__terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Multiply by a polynomial or a scalar."""
        if isinstance(other, int):
            other = self.ring.field(other)
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        if other.ring != self.ring:
            raise RingMismatchException()
        zero = self.ring.field.zero
        terms = {}
        for (i, m1), c1 in self.__terms.items():
            for m2, c2 in other.terms.items():
                k = (i, monomial_mul(m1, m2))
                terms[k] = terms.get(k, zero) + c1 * c2

        return PolyVector(self.module, terms)

    __rmul__ = __mul__

    def mul_term(self, coefficient, monomial):
        return PolyVector(self.module, {(i, monomial_mul(m, monomial)):
            c * coefficient for (i, m), c in self.__terms.items()})

    def __eq__(self, other):
        return (isinstance(other, PolyVector) and
            self.module == other.module and self.__terms == other.terms)

    def __hash__(self):
        return hash((self.module, frozenset(self.__terms.items())))

    def degree(self):
        """Get the degree of a homogeneous vector, None for zero."""
        if not self.__terms:
            return None
        twists = self.module.twists
        return max(self.ring.degree(m) + twists[i]
            for i, m in self.__terms)

    def is_homogeneous(self):
        twists = self.module.twists
        return len({self.ring.degree(m) + twists[i]
            for i, m in self.__terms}) <= 1

    def is_monomial(self):
        return len(self.__terms) == 1

    def leading_term(self, order):
        """Get the largest term under a module order.

        Returns:
            tuple: coefficient, component and monomial
        """
        i, m = max(self.__terms, key=lambda k: order.key(*k))

        return self.__terms[(i, m)], i, m

    def monic(self, order):
        if not self.__terms:
            return self
        c, _, _ = self.leading_term(order)

        return PolyVector(self.module,
            {k: v / c for k, v in self.__terms.items()})

    def substitute_parameter(self, value, module=None):
        """Specialize the parameter t to a field element.

        Returns:
            PolyVector: A vector of the free module with the same twists
                over the ring without parameter
        """
        module = module or self.module.change_ring(
            self.ring.without_parameter())
        components = [p.substitute_parameter(value, module.ring)
            for p in self.components()]

        return PolyVector.from_components(module, components)

    def change_ring(self, module):
        return PolyVector.from_components(module,
            [p.change_ring(module.ring) for p in self.components()])

    def __str__(self):
        if self.module.rank == 1:
            return str(self.component(0))

        return '[%s]' % ', '.join(str(p) for p in self.components())

    __repr__ = __str__

class PositionOrder(object):
    """Term over position order on a free module.

    Terms are compared by the x part of their monomials first, then by
    position, where e1 > e2 > ..., and finally by the exponent of the
    parameter.

    Args:
        order (TermOrder): The order on the monomials
    """
    def __init__(self, order):
        self.term_order = order
        self.__keys = {}

    def key(self, index, monomial):
        try:
            return self.__keys[(index, monomial)]
        except KeyError:
            key = (self.term_order.x_key(monomial), -index,
                self.term_order.ring.parameter_exponent(monomial))
            self.__keys[(index, monomial)] = key

            return key

    def __eq__(self, other):
        return (type(other) == type(self) and
            self.term_order == other.term_order)

    def __hash__(self):
        return hash(self.term_order)

    def __str__(self):
        return str(self.term_order)

class EliminationOrder(object):
    """A module order in which every term in one of the first
    components is larger than every term in the remaining ones.

    Args:
        order: The module order refining the comparison
        eliminate (int): The number of leading components to eliminate
    """
    def __init__(self, order, eliminate):
        self.inner = order
        self.eliminate = eliminate

    def key(self, index, monomial):
        return (1 if index < self.eliminate else 0,
            self.inner.key(index, monomial))

    def __eq__(self, other):
        return (type(other) == type(self) and
            (self.inner, self.eliminate) == (other.inner, other.eliminate))

    def __hash__(self):
        return hash((self.inner, self.eliminate))

class SchreyerOrder(object):
    """The order induced on the source of a map by the leading terms of
    its images.

    m e_i is larger than n e_j if the leading term of m g_i is larger
    than the one of n g_j, or if they agree and i < j.

    Args:
        order: The module order of the target
        leading_terms (list): The component and monomial of the leading
            term of each image g_i
    """
    def __init__(self, order, leading_terms):
        self.inner = order
        self.leading_terms = tuple(leading_terms)
        self.__keys = {}

    def key(self, index, monomial):
        try:
            return self.__keys[(index, monomial)]
        except KeyError:
            component, lead = self.leading_terms[index]
            key = (self.inner.key(component, monomial_mul(monomial, lead)),
                -index)
            self.__keys[(index, monomial)] = key

            return key

    def __eq__(self, other):
        return (type(other) == type(self) and
            (self.inner, self.leading_terms) ==
            (other.inner, other.leading_terms))

    def __hash__(self):
        return hash((self.inner, self.leading_terms))

def module_order(order):
    """Get a module order from a term order or a module order."""
    if isinstance(order, TermOrder):
        return PositionOrder(order)

    return order

__all__ = [
    'CoefficientField', 'GradedRing', 'make_ring', 'Ordering',
    'TermOrder', 'compare_monomials', 'Polynomial', 'poly_multiply',
    'GradedFreeModule', 'PolyVector', 'PositionOrder',
    'EliminationOrder', 'SchreyerOrder', 'module_order',
    'monomial_div', 'monomial_lcm', 'monomial_mul', 'monomial_to_string',
    'parameter_lcm', 'parameter_gcd', 'evaluate_parameter_poly',
    'to_parameter_poly', 'from_parameter_poly', 'DEFAULT_PRIME',
]

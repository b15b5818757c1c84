#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
.. currentmodule:: schubert.polynomial

Polynomials on the opposite big cell
************************************

Sparse integer polynomials in the cell coordinates :math:`x_{ij}`,
``d < i <= n``, ``1 <= j <= d``. Exponent vectors are indexed by variable
position, largest variable first, where :math:`x_{ij} > x_{i'j'}` iff
``i > i'`` or ``i == i'`` and ``j < j'``. With that layout the monomial
order (total degree first, then lexicographic on the descending variable
sequence) is exactly sympy's :data:`~sympy.polys.orderings.grlex` key.

Example::

    >>> from schubert.cosets import GrassmannShape, make_element
    >>> theta = make_element(GrassmannShape(2, 4), (3, 4))
    >>> f = plucker_on_cell(theta)
    >>> print(f)
    x[3,1]*x[4,2] - x[4,1]*x[3,2]
    >>> print(initial_term(f))
    x[4,1]*x[3,2]

"""

import logging
import itertools
from functools import lru_cache, total_ordering
from math import gcd

import sympy
from sympy.polys.monomials import monomial_mul, monomial_div, monomial_lcm, monomial_divides
from sympy.polys.orderings import grlex

from schubert.cosets import *
from schubert.goodsets import RootMultiset
from schubert.exc import *

log = logging.getLogger(__name__)

# cofactor expansion up to this size, fraction-free elimination beyond
COFACTOR_LIMIT = 4


class CellRing(object):
    """The polynomial ring :math:`K[O^-]` of one Grassmannian.

    :attr:`roots` -- variables in decreasing order, i.e. exponent positions

    """

    def __init__(self, shape):
        self.shape = shape
        self.roots = sorted(positive_roots(shape), key=lambda r: (-r.row, r.col))
        self.index = dict(((r.row, r.col), k) for k, r in enumerate(self.roots))
        self.nvars = len(self.roots)

    def __repr__(self):
        return "<CellRing %s>" % self.shape

    def __eq__(self, other):
        return isinstance(other, CellRing) and self.shape == other.shape

    def __hash__(self):
        return hash(self.shape)

    def unit(self, k):
        exps = [0] * self.nvars
        exps[k] = 1
        return tuple(exps)

    def zero_exponents(self):
        return (0,) * self.nvars

    def variable(self, i, j):
        """The coordinate :math:`x_{ij}` as a :class:`Polynomial`."""
        return Polynomial(self, {self.unit(self.index[(i, j)]): 1})

    def constant(self, c):
        return Polynomial(self, {self.zero_exponents(): c})

    def monomial(self, pairs):
        """Monomial with one factor per ``(i, j)`` pair, repetitions allowed."""
        exps = [0] * self.nvars
        for i, j in pairs:
            exps[self.index[(i, j)]] += 1
        return Monomial(self, tuple(exps))

    def symbols(self):
        """sympy symbols ``x_i_j`` in exponent order."""
        return sympy.symbols(["x_%d_%d" % (r.row, r.col) for r in self.roots])


@lru_cache(maxsize=None)
def cell_ring(shape):
    return CellRing(shape)


@total_ordering
class Monomial(object):
    """Power product :math:`x_{i_1 j_1} \\cdots x_{i_r j_r}` compared by the cell order."""
    __slots__ = ('ring', 'exponents')

    def __init__(self, ring, exponents):
        self.ring = ring
        self.exponents = tuple(exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __lt__(self, other):
        return grlex(self.exponents) < grlex(other.exponents)

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return "<Monomial %s>" % self

    def __str__(self):
        if not self.degree:
            return "1"
        factors = []
        for k, root in sorted(enumerate(self.ring.roots), key=lambda p: (p[1].col, p[1].row)):
            e = self.exponents[k]
            if e:
                factors.append("x[%d,%d]%s" % (root.row, root.col, "^%d" % e if e > 1 else ""))
        return "*".join(factors)

    def __mul__(self, other):
        return Monomial(self.ring, monomial_mul(self.exponents, other.exponents))

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def is_squarefree(self):
        return all(e <= 1 for e in self.exponents)

    def divides(self, other):
        return monomial_divides(self.exponents, other.exponents)

    def lcm(self, other):
        return Monomial(self.ring, monomial_lcm(self.exponents, other.exponents))

    def multisupp(self):
        """The multiset of roots, one per factor."""
        return RootMultiset(self.ring.shape, dict(
            (self.ring.roots[k], e) for k, e in enumerate(self.exponents) if e))

    @classmethod
    def from_multiset(cls, ring, S):
        """Inverse of :meth:`multisupp`."""
        return ring.monomial((root.row, root.col) for root in S.elements())


def compare_monomials(a, b):
    """``1`` if ``a`` is larger, ``-1`` if smaller, ``0`` if equal.

    >>> ring = cell_ring(GrassmannShape(2, 4))
    >>> compare_monomials(ring.monomial([(4, 1), (3, 2)]), ring.monomial([(4, 2), (3, 1)]))
    1

    """
    ka, kb = grlex(a.exponents), grlex(b.exponents)
    return (ka > kb) - (ka < kb)


class Polynomial(object):
    """Sparse polynomial with exact integer coefficients.

    :param ring: ambient ring
    :type ring: :class:`CellRing`
    :param terms: coefficient of each exponent vector, zeros are dropped
    :type terms: dict

    """

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = dict((e, int(c)) for e, c in (terms or {}).items() if c)

    @classmethod
    def from_sympy(cls, ring, expr):
        """Convert a sympy expression in :meth:`CellRing.symbols`."""
        poly = sympy.Poly(sympy.expand(expr), *ring.symbols())
        return cls(ring, dict((monom, int(coeff)) for monom, coeff in poly.terms()))

    def to_sympy(self):
        symbols = self.ring.symbols()
        return sympy.Add(*[c * sympy.Mul(*[s ** e for s, e in zip(symbols, exps)])
                           for exps, c in self.terms.items()])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ring == other.ring \
            and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return "<Polynomial %s>" % self

    def __str__(self):
        """Terms in increasing monomial order, factors by column then row."""
        if not self.terms:
            return "0"
        out = []
        for exps in sorted(self.terms, key=grlex):
            c = self.terms[exps]
            body = str(Monomial(self.ring, exps))
            if body == "1":
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = "%d*%s" % (abs(c), body)
            if not out:
                out.append("-" + text if c < 0 else text)
            else:
                out.append(("- " if c < 0 else "+ ") + text)
        return " ".join(out)

    def __neg__(self):
        return Polynomial(self.ring, dict((e, -c) for e, c in self.terms.items()))

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.ring, terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.ring, dict((e, c * other) for e, c in self.terms.items()))
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def mul_term(self, exps, coeff):
        return Polynomial(self.ring, dict(
            (monomial_mul(e, exps), c * coeff) for e, c in self.terms.items()))

    def leading(self):
        """``(exponents, coefficient)`` of the largest term."""
        if not self.terms:
            raise SchubertZeroPolynomial("The zero polynomial has no initial term")
        exps = max(self.terms, key=grlex)
        return exps, self.terms[exps]

    def order(self):
        """Lowest total degree of a term."""
        return min(sum(e) for e in self.terms)

    def truncate(self, max_degree):
        return Polynomial(self.ring, dict(
            (e, c) for e, c in self.terms.items() if sum(e) <= max_degree))

    def content(self):
        return gcd(*self.terms.values()) if self.terms else 0

    def is_homogeneous(self):
        return len(set(sum(e) for e in self.terms)) <= 1

    def evaluate(self, values):
        """Evaluate at integer ``values`` keyed by ``(i, j)``."""
        point = [values[(r.row, r.col)] for r in self.ring.roots]
        total = 0
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                term *= x ** e
            total += term
        return total


def _cofactor_det(ring, matrix):
    size = len(matrix)
    if size == 0:
        return ring.constant(1)
    if size == 1:
        return matrix[0][0]
    total = Polynomial(ring)
    for k in range(size):
        minor = [row[:k] + row[k + 1:] for row in matrix[1:]]
        term = matrix[0][k] * _cofactor_det(ring, minor)
        total = total + term if k % 2 == 0 else total - term
    return total


def minor(ring, rows, cols):
    """Determinant of the generic matrix :math:`X` restricted to ``rows`` x ``cols``."""
    if len(rows) <= COFACTOR_LIMIT:
        return _cofactor_det(ring, [[ring.variable(i, j) for j in cols] for i in rows])
    symbols = dict(((r.row, r.col), s) for r, s in zip(ring.roots, ring.symbols()))
    matrix = sympy.Matrix([[symbols[(i, j)] for j in cols] for i in rows])
    return Polynomial.from_sympy(ring, matrix.det(method='bareiss'))


def plucker_on_cell(theta):
    """:math:`f_\\theta = p_\\theta|_{O^-}`, a minor of the generic matrix.

    Rows are the entries of ``theta`` exceeding ``d``; columns the
    complement in ``{1..d}`` of the entries not exceeding ``d``.

    """
    d = theta.shape.d
    rows = [e for e in theta.entries if e > d]
    cols = [j for j in range(1, d + 1) if j not in theta.entries]
    return minor(cell_ring(theta.shape), rows, cols)


def initial_term(f):
    """Largest monomial of ``f``.

    :raises: :exc:`schubert.exc.SchubertZeroPolynomial`
    """
    return Monomial(f.ring, f.leading()[0])


def ideal_generators(w):
    """:math:`f_\\theta` for every :math:`\\theta \\not\\le w`, lexicographic in ``theta``."""
    return [plucker_on_cell(theta) for theta in w.shape.elements() if not bruhat_leq(theta, w)]


def reduce(f, G):
    """Remainder of ``f`` on division by ``G``.

    The largest divisible term is eliminated first, using the first element
    of ``G`` whose initial term divides it. When a leading coefficient does
    not divide the term's coefficient the running polynomial is scaled
    (fraction-free) and its content removed.

    """
    leads = [(g.leading(), g) for g in G]
    ring = f.ring
    current = Polynomial(ring, f.terms)
    while True:
        hit = None
        for exps in sorted(current.terms, key=grlex, reverse=True):
            for (lm, lc), g in leads:
                if monomial_divides(lm, exps):
                    hit = exps, lm, lc, g
                    break
            if hit:
                break
        if hit is None:
            return current
        exps, lm, lc, g = hit
        c = current.terms[exps]
        common = gcd(c, lc)
        scale = abs(lc) // common
        factor = (c // common) * (1 if lc > 0 else -1)
        current = current * scale - g.mul_term(monomial_div(exps, lm), factor)
        if scale != 1 and current:
            content = current.content()
            current = Polynomial(ring, dict((e, v // content) for e, v in current.terms.items()))


def s_polynomial(f, g):
    """Integer S-polynomial cancelling the initial terms of ``f`` and ``g``."""
    (lm_f, lc_f), (lm_g, lc_g) = f.leading(), g.leading()
    lcm = monomial_lcm(lm_f, lm_g)
    return f.mul_term(monomial_div(lcm, lm_f), lc_g) - g.mul_term(monomial_div(lcm, lm_g), lc_f)


def buchberger_is_groebner(G):
    """Buchberger's criterion: every S-polynomial reduces to zero modulo ``G``.

    Pairs with coprime initial terms are skipped; the remaining pairs are
    processed by increasing degree of the lcm of their initial terms.

    """
    G = list(G)
    pairs = []
    for a, b in itertools.combinations(range(len(G)), 2):
        lm_a, lm_b = G[a].leading()[0], G[b].leading()[0]
        lcm = monomial_lcm(lm_a, lm_b)
        if monomial_mul(lm_a, lm_b) == lcm:
            continue
        pairs.append((grlex(lcm), a, b))
    pairs.sort()
    for key, a, b in pairs:
        remainder = reduce(s_polynomial(G[a], G[b]), G)
        if remainder:
            log.debug("S(%s, %s) reduces to %s", G[a], G[b], remainder)
            return False
    log.debug("%d generators, %d critical pairs reduce to zero", len(G), len(pairs))
    return True


class MonomialIdeal(object):
    """Monomial ideal kept as its minimal generating set.

    :param ring: ambient ring
    :param generators: :class:`Monomial` instances, not necessarily minimal

    """

    def __init__(self, ring, generators=()):
        self.ring = ring
        unique = sorted(set(generators), reverse=True)
        self.generators = [m for m in unique
                           if not any(o != m and o.divides(m) for o in unique)]

    def __repr__(self):
        return "<MonomialIdeal (%s)>" % ", ".join(str(m) for m in self.generators)

    def __len__(self):
        return len(self.generators)

    def contains(self, exps):
        return any(monomial_divides(g.exponents, exps) for g in self.generators)

    @property
    def is_squarefree(self):
        return all(g.is_squarefree for g in self.generators)


def jw_generators(w):
    """Minimal generators of :math:`J_w = (\\mathrm{in} f_\\theta : \\theta \\not\\le w)`."""
    ring = cell_ring(w.shape)
    return MonomialIdeal(ring, [initial_term(f) for f in ideal_generators(w)])


def monomial_quotient_hilbert(J, m):
    """Number of degree ``m`` monomials outside ``J``."""
    if m < 0:
        raise SchubertInvalidInput("Degree must be non-negative, got %r" % m)
    count = 0
    nvars = J.ring.nvars
    for combo in itertools.combinations_with_replacement(range(nvars), m):
        exps = [0] * nvars
        for k in combo:
            exps[k] += 1
        if not J.contains(tuple(exps)):
            count += 1
    return count


def squarefree_quotient_degree(J):
    """``(M, count)``: top degree of a square-free monomial outside ``J`` and their number.

    :raises: :exc:`schubert.exc.SchubertNotSquareFree`
    """
    if not J.is_squarefree:
        raise SchubertNotSquareFree("Generators of %r are not square-free" % J)
    supports = [frozenset(k for k, e in enumerate(g.exponents) if e) for g in J.generators]
    counts = [1]

    def extend(start, face):
        for k in range(start, J.ring.nvars):
            larger = face | {k}
            if any(s <= larger for s in supports):
                continue
            if len(larger) == len(counts):
                counts.append(0)
            counts[len(larger)] += 1
            extend(k + 1, larger)

    extend(0, frozenset())
    return len(counts) - 1, counts[-1]

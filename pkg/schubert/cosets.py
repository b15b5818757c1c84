#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
.. currentmodule:: schubert.cosets

Combinatorics of :math:`I_{d,n}`
********************************

Elements of :math:`W/W_{P_d}` are stored as their sorted entry sequence
(:class:`CosetElement`), roots of :math:`R^+ \\setminus R^+_{P_d}` as grid
positions ``(i, j)`` with ``d < i <= n`` and ``1 <= j <= d`` (:class:`Root`).
A root is identified with the transposition :math:`s_{(i,j)}`.

Example::

    >>> shape = GrassmannShape(4, 8)
    >>> w = make_element(shape, (3, 5, 7, 8))
    >>> chain, d_w = canonical_decomposition(w)
    >>> [(r.row, r.col) for r in chain], d_w
    ([(8, 1), (7, 2), (5, 4)], 3)

"""

import logging
import itertools
from dataclasses import dataclass
from math import comb

from schubert.exc import *

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GrassmannShape:
    """The Grassmannian :math:`G_{d,n}` of ``d``-planes in ``n``-space.

    :raises: :exc:`schubert.exc.SchubertInvalidShape` unless ``1 <= d < n``

    """
    d: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.d, int) and isinstance(self.n, int)) or not 1 <= self.d < self.n:
            raise SchubertInvalidShape("Need 1 <= d < n, got d=%r n=%r" % (self.d, self.n))

    def __str__(self):
        return "G(%d,%d)" % (self.d, self.n)

    @property
    def nroots(self):
        """Number of cell coordinates, :math:`(n-d) \\cdot d`."""
        return (self.n - self.d) * self.d

    @property
    def lattice_size(self):
        """Cardinality of :math:`I_{d,n}`."""
        return comb(self.n, self.d)

    def identity(self):
        """The identity coset ``(1, ..., d)``."""
        return CosetElement(self, tuple(range(1, self.d + 1)))

    def elements(self):
        """All elements of :math:`I_{d,n}` in lexicographic order."""
        return [CosetElement(self, e)
                for e in itertools.combinations(range(1, self.n + 1), self.d)]

    def roots(self):
        return positive_roots(self)


@dataclass(frozen=True)
class CosetElement:
    """An element :math:`(i_1 < \\dots < i_d)` of :math:`I_{d,n}`.

    Construction validates membership; see :func:`make_element`.

    """
    shape: GrassmannShape
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, 'entries', entries)
        d, n = self.shape.d, self.shape.n
        if len(entries) != d:
            raise SchubertInvalidElement("Expected %d entries, got %r" % (d, entries))
        if any(not isinstance(e, int) or e < 1 or e > n for e in entries):
            raise SchubertInvalidElement("Entries of %r must lie in 1..%d" % (entries, n))
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise SchubertInvalidElement("Entries must be strictly increasing: %r" % (entries,))

    def __str__(self):
        return "(%s)" % ",".join(str(e) for e in self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_identity(self):
        return self.entries[-1] == self.shape.d


@dataclass(frozen=True)
class Root:
    """Grid position ``(row, col)`` standing for :math:`x_{ij}` and :math:`s_{(i,j)}`."""
    shape: GrassmannShape
    row: int
    col: int

    def __post_init__(self):
        d, n = self.shape.d, self.shape.n
        if not (d < self.row <= n and 1 <= self.col <= d):
            raise SchubertInvalidRoot("Root (%r,%r) is outside the grid of %s"
                % (self.row, self.col, self.shape))

    def __str__(self):
        return "(%d,%d)" % (self.row, self.col)


@dataclass(frozen=True)
class CommutingChain:
    """Pairwise commuting, strictly decreasing roots :math:`\\alpha_1 > \\dots > \\alpha_t`.

    Rows strictly decrease and columns strictly increase along the chain.
    The empty chain only arises from :func:`canonical_decomposition` of the
    identity.

    :raises: :exc:`schubert.exc.SchubertInvalidChain`

    """
    shape: GrassmannShape
    roots: tuple

    def __post_init__(self):
        roots = tuple(self.roots)
        object.__setattr__(self, 'roots', roots)
        for root in roots:
            if root.shape != self.shape:
                raise SchubertShapeMismatch("Root %s does not belong to %s" % (root, self.shape))
        for a, b in zip(roots, roots[1:]):
            if not (a.row > b.row and a.col < b.col):
                raise SchubertInvalidChain("%s > %s is not a commuting decreasing pair" % (a, b))

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __str__(self):
        return "[%s]" % ", ".join(str(r) for r in self.roots)


def _check_shapes(a, b):
    if a.shape != b.shape:
        raise SchubertShapeMismatch("%s and %s live in %s and %s" % (a, b, a.shape, b.shape))


def make_element(shape, entries):
    """Validate ``entries`` as an element of :math:`I_{d,n}`.

    :param shape: ambient Grassmannian
    :type shape: :class:`GrassmannShape`
    :param entries: candidate entries
    :type entries: sequence of ints
    :returns: :class:`CosetElement`
    :raises: :exc:`schubert.exc.SchubertInvalidElement`

    >>> make_element(GrassmannShape(2, 4), (4, 2))
    Traceback (most recent call last):
    ...
    schubert.exc.SchubertInvalidElement: Entries must be strictly increasing: (4, 2)

    """
    return CosetElement(shape, tuple(entries))


def make_root(shape, row, col):
    return Root(shape, row, col)


def make_chain(shape, pairs):
    """Build a :class:`CommutingChain` from ``(row, col)`` pairs."""
    return CommutingChain(shape, tuple(Root(shape, i, j) for i, j in pairs))


def bruhat_leq(a, b):
    """Componentwise comparison :math:`a_t \\le b_t`.

    >>> shape = GrassmannShape(2, 4)
    >>> bruhat_leq(make_element(shape, (1, 3)), make_element(shape, (2, 4)))
    True

    """
    _check_shapes(a, b)
    return all(x <= y for x, y in zip(a.entries, b.entries))


def bruhat_less(a, b):
    return a.entries != b.entries and bruhat_leq(a, b)


def positive_roots(shape):
    """All roots of the grid in row-major order, :math:`(n-d) \\cdot d` of them."""
    return [Root(shape, i, j)
            for i in range(shape.d + 1, shape.n + 1)
            for j in range(1, shape.d + 1)]


def _subset_entries(d, cols, rows):
    """Sorted entries of :math:`(\\{1..d\\} \\setminus cols) \\cup rows`."""
    return tuple(sorted(set(range(1, d + 1)).difference(cols).union(rows)))


def root_to_coset(root):
    """The coset :math:`s_{(i,j)} W_{P_d}`, i.e. ``(i j)`` applied to ``{1..d}``."""
    return CosetElement(root.shape, _subset_entries(root.shape.d, (root.col,), (root.row,)))


def roots_commute(a, b):
    """Transpositions commute iff their supports are disjoint."""
    _check_shapes(a, b)
    return a.row != b.row and a.col != b.col


def reflection_leq(a, b):
    """Grid rule for :math:`s_a \\le s_b`: ``a.row <= b.row`` and ``a.col >= b.col``."""
    return a.row <= b.row and a.col >= b.col


def reflection_less(a, b):
    """Strict reflection order, :math:`s_a < s_b`.

    Coincides with the Bruhat order of the images under :func:`root_to_coset`.

    """
    _check_shapes(a, b)
    return reflection_leq(a, b) and (a.row, a.col) != (b.row, b.col)


def chain_product_coset(chain):
    """Coset of :math:`s_{\\alpha_1} \\cdots s_{\\alpha_t}` applied to the identity.

    Commuting transpositions in distinct rows and columns swap each column
    index of the chain for its row index.

    :raises: :exc:`schubert.exc.SchubertInvalidChain` for malformed chains
    """
    if not isinstance(chain, CommutingChain):
        raise SchubertInvalidChain("Expected a CommutingChain, got %r" % (chain,))
    return CosetElement(chain.shape, _subset_entries(chain.shape.d,
        [r.col for r in chain.roots], [r.row for r in chain.roots]))


def canonical_decomposition(w):
    """Unique commuting decreasing chain with product ``w`` and its length :math:`d_w`.

    Entries of ``w`` exceeding ``d`` (descending) are paired with the
    elements of ``{1..d}`` missing from ``w`` (ascending).

    :returns: tuple ``(CommutingChain, d_w)``

    """
    d = w.shape.d
    rows = sorted((e for e in w.entries if e > d), reverse=True)
    cols = sorted(set(range(1, d + 1)).difference(w.entries))
    chain = CommutingChain(w.shape, tuple(Root(w.shape, i, j) for i, j in zip(rows, cols)))
    return chain, len(chain)


def degree(w):
    """:math:`d_w`, the number of entries of ``w`` exceeding ``d``."""
    return sum(1 for e in w.entries if e > w.shape.d)


def schubert_dimension(w):
    """:math:`\\dim X(w) = \\sum_t (i_t - t)`."""
    return sum(e - t for t, e in enumerate(w.entries, 1))


def covers(w):
    """Divisors of ``X(w)``: decrement one entry while staying strictly increasing.

    >>> [str(c) for c in covers(make_element(GrassmannShape(2, 4), (2, 4)))]
    ['(1,4)', '(2,3)']

    """
    result = []
    entries = w.entries
    for t, e in enumerate(entries):
        lower = entries[t - 1] if t else 0
        if e - 1 > lower:
            result.append(CosetElement(w.shape, entries[:t] + (e - 1,) + entries[t + 1:]))
    return result


def meet(a, b):
    """Componentwise minimum; :math:`X(a \\wedge b) = X(a) \\cap X(b)`."""
    _check_shapes(a, b)
    return CosetElement(a.shape, tuple(min(x, y) for x, y in zip(a.entries, b.entries)))


def meet_all(elements):
    elements = list(elements)
    result = elements[0]
    for e in elements[1:]:
        result = meet(result, e)
    return result


def elements_below(w, include_identity=True):
    """The Bruhat interval :math:`[id, w]` in lexicographic order."""
    shape = w.shape
    top = w.entries
    result = []
    for e in itertools.combinations(range(1, shape.n + 1), shape.d):
        if all(x <= y for x, y in zip(e, top)):
            if include_identity or e[-1] != shape.d:
                result.append(CosetElement(shape, e))
    return result


def minimal_representative(w):
    """Minimal-length permutation :math:`\\sigma` of the coset, one-line, 1-indexed.

    ``sigma[k - 1]`` is :math:`\\sigma(k)`: the entries of ``w`` fill positions
    ``1..d`` and the complement fills ``d+1..n``, both increasing.

    >>> minimal_representative(make_element(GrassmannShape(2, 4), (1, 3)))
    (1, 3, 2, 4)

    """
    rest = [i for i in range(1, w.shape.n + 1) if i not in w.entries]
    return tuple(w.entries) + tuple(rest)

#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
.. currentmodule:: schubert.goodsets

Good multisets of roots
***********************

A multiset ``S`` of roots is ``w``-good when the product of every chain of
commuting reflections drawn from ``S`` is below ``w``. The number of good
multisets of cardinality ``m`` is the Hilbert function of the tangent cone
of ``X(w)`` at the identity, and the number of good unisets of maximal
cardinality its multiplicity.

Chains draw *distinct* support elements, so goodness depends on the support
only: the good unisets form a simplicial complex and the good multisets are
the multisets supported on its faces. :func:`face_vector` counts the faces
and :func:`count_good_multisets` derives multiset counts from it;
:func:`iter_good_multisets` is the literal enumeration.

Example::

    >>> from schubert.cosets import GrassmannShape, make_element
    >>> w = make_element(GrassmannShape(2, 4), (2, 4))
    >>> [count_good_multisets(w, m) for m in range(5)]
    [1, 4, 9, 16, 25]
    >>> multiplicity(w)
    2

"""

import logging
import itertools
from collections import Counter
from functools import lru_cache
from math import comb

from schubert.cosets import *
from schubert.exc import *

log = logging.getLogger(__name__)


class RootMultiset(object):
    """Multiset over the roots of one Grassmannian.

    :param shape: ambient Grassmannian
    :type shape: :class:`schubert.cosets.GrassmannShape`
    :param counts: multiplicity of every root, zero entries are dropped
    :type counts: dict of :class:`schubert.cosets.Root` to int

    """

    def __init__(self, shape, counts=None):
        self.shape = shape
        self.counts = {}
        for root, mult in (counts or {}).items():
            if root.shape != shape:
                raise SchubertShapeMismatch("Root %s does not belong to %s" % (root, shape))
            if mult < 0:
                raise SchubertInvalidInput("Negative multiplicity for %s" % root)
            if mult:
                self.counts[root] = mult
        self._key = tuple(sorted(((r.row, r.col), c) for r, c in self.counts.items()))

    @classmethod
    def from_roots(cls, shape, roots):
        """Build from an iterable of roots, repetitions counted."""
        return cls(shape, Counter(roots))

    @classmethod
    def from_pairs(cls, shape, pairs):
        """Build from ``(row, col)`` pairs, repetitions counted.

        >>> S = RootMultiset.from_pairs(GrassmannShape(2, 4), [(4, 1), (4, 1), (3, 2)])
        >>> len(S), S.is_uniset
        (3, False)

        """
        return cls.from_roots(shape, (Root(shape, i, j) for i, j in pairs))

    def __len__(self):
        return sum(self.counts.values())

    def __eq__(self, other):
        return isinstance(other, RootMultiset) and self.shape == other.shape \
            and self._key == other._key

    def __hash__(self):
        return hash((self.shape, self._key))

    def __repr__(self):
        return "<RootMultiset %s>" % self

    def __str__(self):
        return "{%s}" % ", ".join(
            "(%d,%d)%s" % (i, j, "^%d" % c if c > 1 else "") for (i, j), c in self._key)

    @property
    def is_uniset(self):
        return all(c == 1 for c in self.counts.values())

    def support(self):
        """Distinct roots, row-major."""
        return sorted(self.counts, key=lambda r: (r.row, r.col))

    def pairs(self):
        return tuple(p for p, c in self._key)

    def elements(self):
        """Roots with repetitions, row-major."""
        return [r for r in self.support() for _ in range(self.counts[r])]


class MultipathDecomposition(object):
    """Layers :math:`S_1, \\dots, S_t` of chain-maximal elements."""

    def __init__(self, layers):
        self.layers = tuple(layers)

    def __len__(self):
        return len(self.layers)

    def __iter__(self):
        return iter(self.layers)

    def __repr__(self):
        return "<MultipathDecomposition %s>" % " | ".join(str(l) for l in self.layers)


class IECoefficients(dict):
    """Inclusion-exclusion coefficients :math:`a_{w'}` keyed by coset element."""

    def __repr__(self):
        return "<IECoefficients {%s}>" % ", ".join(
            "%s: %+d" % (k, v) for k, v in self.items())


## chains

def _chain_order(pairs):
    """Sort so that every chain is a subsequence: row descending, column ascending."""
    return sorted(set(pairs), key=lambda p: (-p[0], p[1]))


def _iter_chain_pairs(pairs):
    order = _chain_order(pairs)

    def extend(start, chain):
        for k in range(start, len(order)):
            r, c = order[k]
            if chain and not (r < chain[-1][0] and c > chain[-1][1]):
                continue
            longer = chain + ((r, c),)
            yield longer
            for result in extend(k + 1, longer):
                yield result

    return extend(0, ())


def _product_leq(d, chain, top):
    """Whether the coset of ``chain`` is below the entries ``top``."""
    cols = set(c for r, c in chain)
    product = sorted([i for i in range(1, d + 1) if i not in cols] + [r for r, c in chain])
    return all(x <= y for x, y in zip(product, top))


def _is_good_pairs(pairs, d, top):
    """Depth-first search over chains, abandoning a branch at its first bad product.

    Sub-chain products are dominated by the chain product, so a failing
    chain is always reached through passing prefixes.
    """
    order = _chain_order(pairs)

    def extend(start, chain):
        for k in range(start, len(order)):
            r, c = order[k]
            if chain and not (r < chain[-1][0] and c > chain[-1][1]):
                continue
            longer = chain + ((r, c),)
            if not _product_leq(d, longer, top) or not extend(k + 1, longer):
                return False
        return True

    return extend(0, ())


def _as_chain(shape, pairs):
    return CommutingChain(shape, tuple(Root(shape, i, j) for i, j in pairs))


def chains_in(S):
    """Every strictly decreasing commuting chain of distinct support roots.

    :param S: multiset of roots
    :type S: :class:`RootMultiset`
    :returns: generator of :class:`schubert.cosets.CommutingChain`

    """
    for pairs in _iter_chain_pairs(S.pairs()):
        yield _as_chain(S.shape, pairs)


def maximal_chains_in(S):
    """Chains of ``S`` into which no further support root can be inserted."""
    support = S.pairs()
    for pairs in _iter_chain_pairs(support):
        members = set(pairs)
        extendable = False
        for r, c in support:
            if (r, c) in members:
                continue
            above = [p for p in pairs if p[0] > r and p[1] < c]
            below = [p for p in pairs if p[0] < r and p[1] > c]
            if len(above) + len(below) == len(pairs):
                extendable = True
                break
        if not extendable:
            yield _as_chain(S.shape, pairs)


def chainlength(S):
    """Maximum chain length, 0 for the empty multiset."""
    return max((len(p) for p in _iter_chain_pairs(S.pairs())), default=0)


## goodness

def is_good_multiset(S, w):
    """Group-theoretic goodness, checked on maximal chains.

    >>> shape = GrassmannShape(2, 4)
    >>> is_good_multiset(RootMultiset.from_pairs(shape, [(4, 1), (3, 2)]),
    ...     make_element(shape, (2, 4)))
    False

    """
    if S.shape != w.shape:
        raise SchubertShapeMismatch("%s and %s live in different Grassmannians" % (S, w))
    return all(bruhat_leq(chain_product_coset(c), w) for c in maximal_chains_in(S))


def is_good_multiset_naive(S, w):
    """Same predicate checked on every chain of ``S``."""
    if S.shape != w.shape:
        raise SchubertShapeMismatch("%s and %s live in different Grassmannians" % (S, w))
    return all(bruhat_leq(chain_product_coset(c), w) for c in chains_in(S))


def multipath_decomposition(S):
    """Peel off chain-maximal elements (with repetitions) layer by layer.

    An element is chain-maximal when no element of the remainder is strictly
    greater and commutes with it, i.e. lies strictly up and to the left in
    the grid.

    """
    remaining = dict(S.counts)
    layers = []
    while remaining:
        layer = {}
        for root, mult in remaining.items():
            if not any(o.row > root.row and o.col < root.col for o in remaining):
                layer[root] = mult
        for root in layer:
            del remaining[root]
        layers.append(RootMultiset(S.shape, layer))
    return MultipathDecomposition(layers)


def is_good_combinatorial(S, w):
    """Layered goodness: layer ``j`` must lie in :math:`H_j`.

    :math:`H_j` holds the roots below the ``j``-th reflection of the
    canonical decomposition of ``w``.
    """
    if S.shape != w.shape:
        raise SchubertShapeMismatch("%s and %s live in different Grassmannians" % (S, w))
    chain, d_w = canonical_decomposition(w)
    layers = multipath_decomposition(S)
    if len(layers) > d_w:
        return False
    for layer, alpha in zip(layers, chain.roots):
        if not all(reflection_leq(root, alpha) for root in layer.counts):
            return False
    return True


## counting

@lru_cache(maxsize=None)
def face_vector(w, max_size=None):
    """Numbers of good unisets by cardinality, ``(f_0, f_1, ...)``.

    Faces larger than ``max_size`` are not enumerated. The tuple ends at the
    largest cardinality found.

    """
    d, top = w.shape.d, w.entries
    candidates = [(r.row, r.col) for r in positive_roots(w.shape)
                  if bruhat_leq(root_to_coset(r), w)]
    limit = len(candidates) if max_size is None else min(max_size, len(candidates))
    counts = [1] + [0] * limit

    def extend(start, face):
        for k in range(start, len(candidates)):
            larger = face + (candidates[k],)
            if _is_good_pairs(larger, d, top):
                counts[len(larger)] += 1
                if len(larger) < limit:
                    extend(k + 1, larger)

    if limit:
        extend(0, ())
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    log.debug("face_vector(%s, %s) = %s", w, max_size, counts)
    return tuple(counts)


def count_from_faces(faces, m):
    """Multisets of cardinality ``m`` supported on the counted faces."""
    if m == 0:
        return 1
    return sum(f * comb(m - 1, k - 1) for k, f in enumerate(faces) if 1 <= k <= m)


def count_good_multisets(w, m):
    """:math:`|S_w(m)|`, the Hilbert function of :math:`TC_{id}X(w)` in degree ``m``."""
    if m < 0:
        raise SchubertInvalidInput("Degree must be non-negative, got %r" % m)
    return count_from_faces(face_vector(w, m), m)


def count_good_unisets(w, m):
    """:math:`|S'_w(m)|`."""
    if m < 0:
        raise SchubertInvalidInput("Degree must be non-negative, got %r" % m)
    faces = face_vector(w, m)
    return faces[m] if m < len(faces) else 0


def max_uniset_cardinality(w):
    """``M``, the largest cardinality of a good uniset; equals :math:`\\dim X(w)`."""
    return len(face_vector(w)) - 1


def multiplicity(w):
    """Number of good unisets of cardinality ``M``."""
    return face_vector(w)[-1]


def iter_good_multisets(w, m, unisets_only=False):
    """Good multisets of cardinality ``m`` in lexicographic order.

    Prefixes whose support is already bad are abandoned.

    """
    roots = positive_roots(w.shape)
    d, top = w.shape.d, w.entries

    def extend(start, chosen):
        if len(chosen) == m:
            yield RootMultiset.from_roots(w.shape, (roots[k] for k in chosen))
            return
        for k in range(start, len(roots)):
            if unisets_only and chosen and chosen[-1] == k:
                continue
            longer = chosen + (k,)
            support = set((roots[i].row, roots[i].col) for i in longer)
            if _is_good_pairs(support, d, top):
                for result in extend(k, longer):
                    yield result

    return extend(0, ())


def iter_good_unisets(w, m):
    return iter_good_multisets(w, m, unisets_only=True)


## difference equation

@lru_cache(maxsize=None)
def divisor_ie_coefficients(w):
    """Coefficients :math:`a_{w'}` expressing :math:`|\\bigcup_i S_{w_i}|` over the divisors.

    :raises: :exc:`schubert.exc.SchubertIdentityError` for the identity

    >>> w = make_element(GrassmannShape(2, 4), (2, 4))
    >>> divisor_ie_coefficients(w)
    <IECoefficients {(1,3): -1, (1,4): +1, (2,3): +1}>

    """
    if w.is_identity:
        raise SchubertIdentityError("The identity has no divisors")
    divisors = covers(w)
    aggregated = Counter()
    for size in range(1, len(divisors) + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(divisors, size):
            aggregated[meet_all(subset)] += sign
    return IECoefficients((k, aggregated[k])
        for k in sorted(aggregated, key=lambda e: e.entries) if aggregated[k])


@lru_cache(maxsize=None)
def hilbert_via_recursion(w, m):
    """Evaluate :math:`\\phi(w, m)` by the difference equation with step :math:`d_w`.

    :math:`\\phi(w, m + d_w) = \\phi(w, m) + \\sum_{w'} a_{w'} \\phi(w', m + d_w)`;
    values below :math:`d_w` come from :func:`count_good_multisets`.

    """
    if m < 0:
        raise SchubertInvalidInput("Degree must be non-negative, got %r" % m)
    if w.is_identity:
        return 1 if m == 0 else 0
    d_w = degree(w)
    if m < d_w:
        return count_good_multisets(w, m)
    total = hilbert_via_recursion(w, m - d_w)
    for lower, a in divisor_ie_coefficients(w).items():
        total += a * hilbert_via_recursion(lower, m)
    return total


def boundary_cardinality_check(w, m):
    """Check :math:`|S_w(m+d)| - |S_H(m+d)| = |S_w(m)|` by enumeration.

    :math:`S_H(k)` is the union of :math:`S_{w_i}(k)` over the divisors.

    :raises: :exc:`schubert.exc.SchubertIdentityError` for the identity
    """
    if w.is_identity:
        raise SchubertIdentityError("The identity has no divisors")
    k = m + degree(w)
    boundary = set()
    for divisor in covers(w):
        boundary.update(iter_good_multisets(divisor, k))
    whole = count_good_multisets(w, k)
    log.debug("|S_w(%d)| = %d, |S_H(%d)| = %d", k, whole, k, len(boundary))
    return whole - len(boundary) == count_good_multisets(w, m)


def face_vector_from_hilbert(values):
    """Invert :math:`h(m) = \\sum_k f_k \\binom{m-1}{k-1}` for ``f_1..f_K``.

    >>> face_vector_from_hilbert([1, 4, 9, 16])
    (1, 4, 5, 2)

    """
    faces = [1]
    for m in range(1, len(values)):
        faces.append(values[m] - sum(faces[k] * comb(m - 1, k - 1) for k in range(1, m)))
    return tuple(faces)


def multiplicity_by_recursion(w):
    """``(M, multiplicity)`` from :math:`h(1..M)` evaluated by the difference equation.

    Uses :math:`M = \\dim X(w)`, so no face of the complex is enumerated
    beyond cardinality :math:`d_w - 1`.
    """
    top = schubert_dimension(w)
    values = [hilbert_via_recursion(w, m) for m in range(top + 1)]
    return top, face_vector_from_hilbert(values)[top]


## rendering

def render_multipath(S):
    """Draw the root grid, rows ``d+1..n`` top to bottom, labelling each root by its layer.

    >>> shape = GrassmannShape(2, 4)
    >>> print(render_multipath(RootMultiset.from_pairs(shape, [(4, 1), (3, 2)])))
        1 2
     3  . 2
     4  1 .

    """
    d, n = S.shape.d, S.shape.n
    label = {}
    for number, layer in enumerate(multipath_decomposition(S), 1):
        for root in layer.counts:
            label[(root.row, root.col)] = str(number)
    width = max(len(str(n)), max((len(v) for v in label.values()), default=1))
    lines = [" " * (width + 3) + " ".join(str(j).rjust(width) for j in range(1, d + 1))]
    for i in range(d + 1, n + 1):
        cells = [label.get((i, j), ".").rjust(width) for j in range(1, d + 1)]
        lines.append(str(i).rjust(width + 1) + "  " + " ".join(cells))
    return "\n".join(line.rstrip() for line in lines)

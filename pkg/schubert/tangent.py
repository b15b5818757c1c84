#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
.. currentmodule:: schubert.tangent

Tangent cones at arbitrary fixed points
***************************************

The good-multiset count generalizes to a point :math:`\\tau \\le w` by
translating chain products with the minimal representative :math:`\\sigma`
of :math:`\\tau`. Independently, :func:`local_hilbert_oracle` computes the
Hilbert function of :math:`\\mathrm{gr}(A, \\mathfrak{m})` at :math:`\\tau`
by exact linear algebra on :math:`K[x]/(I + \\mathfrak{m}^{j+1})`, and
:func:`check_conjectures` compares the two.

Example::

    >>> from schubert.cosets import GrassmannShape, make_element
    >>> shape = GrassmannShape(2, 4)
    >>> datum = PointedSchubertDatum(make_element(shape, (2, 4)), make_element(shape, (1, 3)))
    >>> [count_good_at(datum, m) for m in range(4)]
    [1, 3, 6, 10]
    >>> local_hilbert_oracle(datum, 2).values
    (1, 3, 6)

"""

import logging
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.monomials import monomial_mul

from schubert.cosets import *
from schubert.goodsets import RootMultiset, _iter_chain_pairs, face_vector_from_hilbert, count_from_faces
from schubert.polynomial import cell_ring, plucker_on_cell, Polynomial
from schubert.report import ConjectureCheck
from schubert.exc import *

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointedSchubertDatum:
    """A Schubert variety ``X(w)`` together with a fixed point ``tau`` on it.

    :raises: :exc:`schubert.exc.SchubertNotInVariety` unless ``tau <= w``
    """
    w: CosetElement
    tau: CosetElement

    def __post_init__(self):
        if self.w.shape != self.tau.shape:
            raise SchubertShapeMismatch("%s and %s live in different Grassmannians"
                % (self.w, self.tau))
        if not bruhat_leq(self.tau, self.w):
            raise SchubertNotInVariety("tau=%s is not below w=%s, the point is not on X(w)"
                % (self.tau, self.w))

    def __str__(self):
        return "w=%s tau=%s" % (self.w, self.tau)

    @property
    def shape(self):
        return self.w.shape

    @property
    def sigma(self):
        return minimal_representative(self.tau)


@dataclass(frozen=True)
class LocalHilbertTable:
    """Dimensions :math:`h(j) = \\dim \\mathfrak{m}^j / \\mathfrak{m}^{j+1}` for ``j <= j_max``."""
    values: tuple

    @property
    def j_max(self):
        return len(self.values) - 1


def _translate(sigma, d, cols, rows):
    subset = set(range(1, d + 1)).difference(cols).union(rows)
    return tuple(sorted(sigma[k - 1] for k in subset))


def coset_right_product(tau, chain):
    """Coset of :math:`\\sigma s_{\\alpha_1} \\cdots s_{\\alpha_t}`, :math:`\\sigma` minimal for ``tau``.

    >>> shape = GrassmannShape(2, 4)
    >>> str(coset_right_product(make_element(shape, (1, 3)), make_chain(shape, [(4, 1)])))
    '(3,4)'

    """
    if tau.shape != chain.shape:
        raise SchubertShapeMismatch("%s and %s live in different Grassmannians" % (tau, chain))
    return CosetElement(tau.shape, _translate(minimal_representative(tau), tau.shape.d,
        [r.col for r in chain], [r.row for r in chain]))


def _is_good_pairs_at(pairs, sigma, d, top):
    """Every chain, not only maximal ones: translated products are not monotone."""
    for chain in _iter_chain_pairs(pairs):
        product = _translate(sigma, d, [c for r, c in chain], [r for r, c in chain])
        if not all(x <= y for x, y in zip(product, top)):
            return False
    return True


def is_good_multiset_at(S, datum):
    """Whether every chain of ``S`` translated by ``tau`` stays below ``w``."""
    if S.shape != datum.shape:
        raise SchubertShapeMismatch("%s and %s live in different Grassmannians" % (S, datum.w))
    return _is_good_pairs_at(S.pairs(), datum.sigma, datum.shape.d, datum.w.entries)


@lru_cache(maxsize=None)
def face_vector_at(datum, max_size=None):
    """Good unisets at ``tau`` by cardinality; they form a simplicial complex."""
    shape = datum.shape
    sigma, d, top = datum.sigma, shape.d, datum.w.entries
    candidates = [(r.row, r.col) for r in positive_roots(shape)
                  if _is_good_pairs_at([(r.row, r.col)], sigma, d, top)]
    limit = len(candidates) if max_size is None else min(max_size, len(candidates))
    counts = [1] + [0] * limit

    def extend(start, face):
        for k in range(start, len(candidates)):
            larger = face + (candidates[k],)
            if _is_good_pairs_at(larger, sigma, d, top):
                counts[len(larger)] += 1
                if len(larger) < limit:
                    extend(k + 1, larger)

    if limit:
        extend(0, ())
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def count_good_at(datum, m, uniset_only=False):
    """:math:`|S_{w,\\tau}(m)|`, or :math:`|S'_{w,\\tau}(m)|` with ``uniset_only``."""
    if m < 0:
        raise SchubertInvalidInput("Degree must be non-negative, got %r" % m)
    faces = face_vector_at(datum, m)
    if uniset_only:
        return faces[m] if m < len(faces) else 0
    return count_from_faces(faces, m)


def iter_good_multisets_at(datum, m):
    """Literal enumeration of :math:`S_{w,\\tau}(m)` in lexicographic order."""
    roots = positive_roots(datum.shape)
    for combo in itertools.combinations_with_replacement(roots, m):
        S = RootMultiset.from_roots(datum.shape, combo)
        if is_good_multiset_at(S, datum):
            yield S


def multiplicity_at(datum):
    """Number of good unisets at ``tau`` of the largest cardinality."""
    return face_vector_at(datum)[-1]


def translated_generators(datum):
    """Ideal of ``X(w)`` in the chart :math:`\\sigma \\cdot O^-` centred at ``tau``.

    :math:`p_\\theta(\\sigma A) = \\pm f_{\\sigma^{-1}\\theta}`, so the
    generators are the cell minors of the relabelled elements, one per
    :math:`\\theta \\not\\le w` in lexicographic order of ``theta``.

    """
    sigma = datum.sigma
    inverse = dict((v, k) for k, v in enumerate(sigma, 1))
    shape = datum.shape
    return [plucker_on_cell(CosetElement(shape, tuple(sorted(inverse[e] for e in theta.entries))))
            for theta in shape.elements() if not bruhat_leq(theta, datum.w)]


def literal_translated_minor(datum, theta):
    """:math:`p_\\theta` evaluated on the row-permuted generic matrix :math:`\\sigma A`."""
    shape = datum.shape
    ring = cell_ring(shape)
    symbols = dict(((r.row, r.col), s) for r, s in zip(ring.roots, ring.symbols()))
    generic = [[1 if i == j else 0 for j in range(1, shape.d + 1)] for i in range(1, shape.d + 1)]
    generic += [[symbols[(i, j)] for j in range(1, shape.d + 1)]
                for i in range(shape.d + 1, shape.n + 1)]
    permuted = [None] * shape.n
    for k, image in enumerate(datum.sigma):
        permuted[image - 1] = generic[k]
    matrix = sympy.Matrix([permuted[e - 1] for e in theta.entries])
    return Polynomial.from_sympy(ring, matrix.det(method='bareiss'))


def _monomials_up_to(nvars, j):
    result = []
    for total in range(j + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), total):
            exps = [0] * nvars
            for k in combo:
                exps[k] += 1
            result.append(tuple(exps))
    return result


def _truncated_quotient_dimension(generators, nvars, j):
    """:math:`\\dim K[x]/(I + \\mathfrak{m}^{j+1})` via the rank of truncated multiples."""
    monomials = _monomials_up_to(nvars, j)
    column = dict((e, k) for k, e in enumerate(monomials))
    rows = {}
    for g in generators:
        low = g.order()
        if low > j:
            continue
        for shift in _monomials_up_to(nvars, j - low):
            entries = {}
            for exps, c in g.terms.items():
                product = monomial_mul(exps, shift)
                if sum(product) <= j:
                    entries[column[product]] = QQ(c)
            if entries:
                rows[len(rows)] = entries
    if not rows:
        return len(monomials)
    rank = DomainMatrix(rows, (len(rows), len(monomials)), QQ).rank()
    return len(monomials) - rank


def local_hilbert_oracle(datum, j_max, max_variables=12):
    """Hilbert function of the tangent cone at ``tau`` up to degree ``j_max``.

    :raises: :exc:`schubert.exc.SchubertLimitExceeded` when the grid has more
        than ``max_variables`` coordinates
    """
    if j_max < 0:
        raise SchubertInvalidInput("Truncation degree must be non-negative, got %r" % j_max)
    nvars = datum.shape.nroots
    if nvars > max_variables:
        raise SchubertLimitExceeded("%s has %d coordinates, the oracle allows %d"
            % (datum.shape, nvars, max_variables))
    generators = translated_generators(datum)
    dims = [_truncated_quotient_dimension(generators, nvars, j) for j in range(j_max + 1)]
    values = tuple(b - a for a, b in zip([0] + dims, dims))
    log.debug("oracle %s: %s", datum, values)
    return LocalHilbertTable(values)


def oracle_multiplicity(table, top):
    """Multiplicity read off ``table`` by binomial inversion.

    The inversion assumes :math:`h(m) = \\sum_k f_k \\binom{m-1}{k-1}` with
    :math:`f_k = 0` beyond ``top``. Degrees of ``table`` above ``top`` must
    be reproduced by the inverted face vector, otherwise the table is not of
    that shape and the result is ``None``, as it is when ``j_max < top``.

    >>> oracle_multiplicity(LocalHilbertTable((1, 4, 9, 16, 25)), 3)
    2
    >>> oracle_multiplicity(LocalHilbertTable((1, 2, 1, 1, 1)), 1) is None
    True

    """
    if table.j_max < top:
        return None
    faces = face_vector_from_hilbert(table.values[:top + 1])
    for m in range(top + 1, table.j_max + 1):
        if count_from_faces(faces, m) != table.values[m]:
            log.warning("Oracle table %s is not determined by degrees up to %d",
                table.values, top)
            return None
    return faces[top]


def check_conjectures(datum, j_max, max_variables=12):
    """Compare :func:`count_good_at` and :func:`multiplicity_at` with the oracle.

    :returns: :class:`schubert.report.ConjectureCheck`
    """
    table = local_hilbert_oracle(datum, j_max, max_variables)
    degrees = [(m, count_good_at(datum, m), table.values[m]) for m in range(j_max + 1)]
    check = ConjectureCheck(datum.w, datum.tau, j_max, degrees,
        multiplicity_at(datum), oracle_multiplicity(table, schubert_dimension(datum.w)))
    if not check.passed:
        log.debug("conjecture check failed for %s: %r", datum, check)
    return check


def is_smooth_profile(datum, j_max):
    """Whether the counts up to ``j_max`` are those of a regular point, :math:`\\binom{m+D-1}{m}`."""
    top = schubert_dimension(datum.w)
    if top == 0:
        return True
    return all(count_good_at(datum, m) == comb(m + top - 1, m) for m in range(j_max + 1))

#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
.. currentmodule:: schubert.standard

Standard monomials
******************

Local-degree ``m`` part of :math:`K[Y(w)]`, counted through its basis of
standard monomials :math:`f_{\\theta_1} \\cdots f_{\\theta_t}` with
:math:`w \\ge \\theta_1 \\ge \\dots \\ge \\theta_t`. Identity factors are
left out since :math:`f_{id} = 1`.

"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from schubert.config import Config
from schubert.cosets import *
from schubert.polynomial import plucker_on_cell
from schubert.exc import *

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardMonomial:
    """Multichain :math:`\\theta_1 \\ge \\dots \\ge \\theta_t` of non-identity elements."""
    factors: tuple

    def __str__(self):
        return "<%s>" % ",".join(str(theta) for theta in self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def degree(self):
        return sum(local_degree(theta) for theta in self.factors)

    def is_bounded_by(self, w):
        return all(bruhat_leq(theta, w) for theta in self.factors)

    def polynomial(self, ring):
        """Product of the factors as a polynomial on the cell."""
        result = ring.constant(1)
        for theta in self.factors:
            result = result * plucker_on_cell(theta)
        return result


def local_degree(theta):
    """Degree of :math:`f_\\theta` in the cell coordinates.

    >>> local_degree(make_element(GrassmannShape(4, 8), (3, 5, 7, 8)))
    3

    """
    return degree(theta)


@lru_cache(maxsize=None)
def _lower_elements(top):
    return tuple((theta, local_degree(theta)) for theta in elements_below(top, include_identity=False))


@lru_cache(maxsize=None)
def count_standard_monomials(w, m):
    """Number of standard monomials of local degree ``m`` bounded by ``w``.

    >>> w = make_element(GrassmannShape(2, 4), (2, 4))
    >>> [count_standard_monomials(w, m) for m in range(4)]
    [1, 4, 9, 16]

    """
    if m < 0:
        raise SchubertInvalidInput("Degree must be non-negative, got %r" % m)
    if m == 0:
        return 1
    return sum(count_standard_monomials(theta, m - d_theta)
               for theta, d_theta in _lower_elements(w) if d_theta <= m)


def enumerate_standard_monomials(w, m, config_manager=None):
    """Standard monomials of local degree ``m``, largest first factor lexicographically first.

    :param config_manager: supplies ``max_enumeration``, its default applies when ``None``
    :type config_manager: :class:`schubert.config.ConfigManager` instance
    :raises: :exc:`schubert.exc.SchubertLimitExceeded` if there are more than ``max_enumeration``
    """
    if config_manager is None:
        bound = Config.allowed_options['max_enumeration'][2]
    else:
        bound = config_manager.max_enumeration
    total = count_standard_monomials(w, m)
    if total > bound:
        raise SchubertLimitExceeded("%d standard monomials of degree %d below %s exceed "
            "max_enumeration=%d" % (total, m, w, bound))

    def descend(top, budget):
        if budget == 0:
            yield ()
            return
        for theta, d_theta in _lower_elements(top):
            if d_theta <= budget:
                for rest in descend(theta, budget - d_theta):
                    yield (theta,) + rest

    result = [StandardMonomial(factors) for factors in descend(w, m)]
    log.debug("%d standard monomials of degree %d below %s", len(result), m, w)
    return result

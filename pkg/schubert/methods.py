#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""This module implements the independent ways of computing the Hilbert
function of the tangent cone of ``X(w)`` at the identity::

    # multiset          good multisets of roots
    # standard-monomial multichains of the Bruhat interval
    # initial-ideal     monomials outside the initial ideal J_w
    # recursion         difference equation over the divisors

"""

import logging
from math import comb

from schubert.config import Config
from schubert.goodsets import count_good_multisets, hilbert_via_recursion
from schubert.polynomial import jw_generators, monomial_quotient_hilbert
from schubert.standard import count_standard_monomials
from schubert.exc import *

log = logging.getLogger(__name__)


def _option(options, name):
    if options is None:
        return Config.allowed_options[name][2]
    return getattr(options, name)


class Method(object):
    """Abstract class for Hilbert function methods.

    :param config_manager: Options to be used, defaults apply when ``None``
    :type config_manager: :class:`schubert.config.ConfigManager` instance

    """
    name = None

    def __init__(self, config_manager=None):
        self.options = config_manager

    def __repr__(self):
        return "<%s %s>" % (self.__class__.__name__, self.name)

    def __call__(self, w, m_max):
        """Values for degrees ``0..m_max``.

        :raises: :exc:`schubert.exc.SchubertLimitExceeded` beyond ``max_degree``
        """
        self.check_limits(w, m_max)
        return [self.value(w, m) for m in range(m_max + 1)]

    def check_limits(self, w, m_max):
        if m_max < 0:
            raise SchubertInvalidInput("Degree must be non-negative, got %r" % m_max)
        max_degree = _option(self.options, 'max_degree')
        if m_max > max_degree:
            raise SchubertLimitExceeded("Degree %d exceeds max_degree=%d" % (m_max, max_degree))

    def value(self, w, m):
        raise NotImplementedError


class MultisetCount(Method):
    """Counts :math:`S_w(m)` through the face vector of good unisets."""
    name = 'multiset'

    def check_limits(self, w, m_max):
        super(MultisetCount, self).check_limits(w, m_max)
        max_roots = _option(self.options, 'max_roots')
        if w.shape.nroots > max_roots:
            raise SchubertLimitExceeded("%s has %d roots, max_roots=%d"
                % (w.shape, w.shape.nroots, max_roots))

    def value(self, w, m):
        return count_good_multisets(w, m)


class StandardMonomialCount(Method):
    """Counts standard monomials of local degree ``m``."""
    name = 'standard-monomial'

    def check_limits(self, w, m_max):
        super(StandardMonomialCount, self).check_limits(w, m_max)
        max_lattice = _option(self.options, 'max_lattice')
        if w.shape.lattice_size > max_lattice:
            raise SchubertLimitExceeded("|I(%d,%d)| = %d exceeds max_lattice=%d"
                % (w.shape.d, w.shape.n, w.shape.lattice_size, max_lattice))

    def value(self, w, m):
        return count_standard_monomials(w, m)


class InitialIdealCount(Method):
    """Counts degree ``m`` monomials outside :math:`J_w`."""
    name = 'initial-ideal'

    def check_limits(self, w, m_max):
        super(InitialIdealCount, self).check_limits(w, m_max)
        nvars = w.shape.nroots
        monomials = comb(nvars + m_max - 1, m_max) if m_max else 1
        max_enumeration = _option(self.options, 'max_enumeration')
        if monomials > max_enumeration:
            raise SchubertLimitExceeded("%d monomials of degree %d in %d variables exceed "
                "max_enumeration=%d" % (monomials, m_max, nvars, max_enumeration))

    def __call__(self, w, m_max):
        self.check_limits(w, m_max)
        ideal = jw_generators(w)
        log.debug("J_%s has %d minimal generators", w, len(ideal))
        return [monomial_quotient_hilbert(ideal, m) for m in range(m_max + 1)]


class RecursionCount(Method):
    """Evaluates the difference equation with step :math:`d_w`."""
    name = 'recursion'

    def check_limits(self, w, m_max):
        super(RecursionCount, self).check_limits(w, m_max)
        max_lattice = _option(self.options, 'max_lattice')
        if w.shape.lattice_size > max_lattice:
            raise SchubertLimitExceeded("|I(%d,%d)| = %d exceeds max_lattice=%d"
                % (w.shape.d, w.shape.n, w.shape.lattice_size, max_lattice))

    def value(self, w, m):
        return hilbert_via_recursion(w, m)


METHODS = dict((cls.name, cls) for cls in
    (MultisetCount, StandardMonomialCount, InitialIdealCount, RecursionCount))


def get_method(name, config_manager=None):
    """Instantiate a method by name.

    :raises: :exc:`schubert.exc.SchubertInvalidInput` for unknown names
    """
    try:
        return METHODS[name](config_manager)
    except KeyError:
        raise SchubertInvalidInput("Unknown method %r, choose from %s"
            % (name, ", ".join(METHODS)))

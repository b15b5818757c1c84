#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exceptions module
=============================

Every exception carries :attr:`exit_code`, which :mod:`schubert.cli`
returns to the shell.
"""


class SchubertException(Exception):
    """Core exception class, all exception inherit from this class."""
    exit_code = 1


class SchubertInvalidInput(SchubertException):
    """Base for errors caused by malformed user input."""
    exit_code = 3


class SchubertInvalidShape(SchubertInvalidInput):
    """Raised when ``1 <= d < n`` does not hold."""


class SchubertInvalidElement(SchubertInvalidInput):
    """Raised when a sequence is not an element of :math:`I_{d,n}`."""


class SchubertInvalidRoot(SchubertInvalidInput):
    """Raised when a root lies outside the :math:`(n-d) \\times d` grid."""


class SchubertShapeMismatch(SchubertInvalidInput):
    """Raised when operands belong to different Grassmannians."""


class SchubertInvalidChain(SchubertInvalidInput):
    """Raised when roots are not pairwise commuting or not strictly decreasing."""


class SchubertIdentityError(SchubertInvalidInput):
    """Raised when the identity is passed where it has no divisors."""


class SchubertNotInVariety(SchubertInvalidInput):
    """Raised when the point ``tau`` is not below ``w``."""


class SchubertZeroPolynomial(SchubertInvalidInput):
    """Raised when the initial term of the zero polynomial is requested."""


class SchubertNotSquareFree(SchubertInvalidInput):
    """Raised if a square-free routine receives a non square-free monomial."""


class SchubertLimitExceeded(SchubertException):
    """Raised when a configured resource bound would be exceeded."""
    exit_code = 4


class SchubertConfigurationError(SchubertException):
    """"""


class SchubertValidationError(SchubertException):
    """"""

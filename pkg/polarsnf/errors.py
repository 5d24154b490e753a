#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module provides the exceptions raised across polarsnf.

Input problems subclass ``ValueError`` and broken internal consistency subclasses
``RuntimeError``, so callers may catch either the specific class or the built-in.
"""

from typing import Optional, Tuple


class PolarSnfError(Exception):
    """
    The base class of all polarsnf errors.
    """


# Bad input ####################################################################

class NotPrimeError(PolarSnfError, ValueError):
    """
    Raised when an integer that must be prime is not.
    """

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"{n} is not a prime")


class NotPrimePowerError(PolarSnfError, ValueError):
    """
    Raised when q is not a prime power.
    """

    def __init__(self, q: int):
        self.q = q
        super().__init__(f"q must be a prime power, got {q}")


class DegreeTooLargeError(PolarSnfError, ValueError):
    """
    Raised when a requested field exceeds the configured size bound.
    """

    def __init__(self, p: int, t: int, bound: int):
        self.p, self.t, self.bound = p, t, bound
        super().__init__(f"GF({p}^{t}) has {p ** t} elements, above the bound {bound}")


class NotQuadraticExtensionError(PolarSnfError, ValueError):
    """
    Raised when conjugation or the norm is requested on a field that was not
    built as a quadratic extension.
    """


class MTooSmallError(PolarSnfError, ValueError):
    """
    Raised when m is below the minimum rank of a polar family.
    """

    def __init__(self, family: str, m: int, minimum: int):
        self.family, self.m, self.minimum = family, m, minimum
        super().__init__(f"family {family} needs m >= {minimum}, got m = {m}")


class UnsupportedDimensionError(PolarSnfError, ValueError):
    """
    Raised when a form space cannot be built in the requested dimension.
    """


class ZeroArgumentError(PolarSnfError, ValueError):
    """
    Raised when the valuation of zero is requested.
    """


class OutOfRangeError(PolarSnfError, ValueError):
    """
    Raised for Gaussian binomials outside 0 <= j <= d or a base below 2.
    """


class HypothesisViolatedError(PolarSnfError, ValueError):
    """
    Raised when a prediction is requested outside the closed-form hypotheses.
    """


# Broken consistency ###########################################################

class SrgIdentityError(PolarSnfError, RuntimeError):
    """
    Raised when an adjacency matrix violates A^2 = kI + lambda A + mu (J - I - A).

    Args:
        entry (tuple): The (row, column) of the first violating entry.
        found (int): The entry of A^2.
        expected (int): The entry required by the identity.
    """

    def __init__(self,
                 entry: Tuple[int, int],
                 found: int,
                 expected: int,
                 ):
        self.entry, self.found, self.expected = entry, found, expected
        super().__init__(f"SRG identity violated at entry {entry}: "
                         f"A^2 has {found}, expected {expected}")


class NonIntegralOrderError(PolarSnfError, RuntimeError):
    """
    Raised when a closed-form group order is not an integer.
    """


class TableMismatchError(PolarSnfError, RuntimeError):
    """
    Raised when the eigenvalue definition of nilpotence disagrees with the table lookup.
    """

    def __init__(self, family: str, ell: int, q: int, m: int, which: str):
        self.family, self.ell, self.q, self.m, self.which = family, ell, q, m, which
        super().__init__(f"nilpotence lookup disagrees with the eigenvalues for "
                         f"{family}(q={q}, m={m}), ell={ell}, matrix {which}")


class TranscriptionError(PolarSnfError, RuntimeError):
    """
    Raised when a predictor branch produces an inconsistent profile.
    """

    def __init__(self, message: str, branch: Optional[str] = None):
        self.branch = branch
        if branch:
            message = f"{message} (branch {branch})"
        super().__init__(message)


class WittIndexError(PolarSnfError, RuntimeError):
    """
    Raised when a standard form does not have the expected Witt index.
    """


class UnhandledCaseError(PolarSnfError, RuntimeError):
    """
    Raised when no predictor branch covers a (family, q, m, ell) combination.
    """


# Resources and graphs #########################################################

class ResourceBoundError(PolarSnfError, RuntimeError):
    """
    Raised when an instance exceeds the configured matrix bound.
    """


class DisconnectedGraphError(PolarSnfError, ValueError):
    """
    Raised when a spanning-tree count is requested for a disconnected graph.
    """


# Predictor registry ###########################################################

class UnknownBranchError(PolarSnfError, LookupError):
    """
    Raised when a predictor branch name is not registered, or is registered twice.
    """

    def __init__(self, name: str, message: Optional[str] = None):
        self.name = name
        super().__init__(message or f"No predictor branch registered as {name!r}")

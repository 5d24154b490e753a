#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module provides integer helpers: prime checks, prime-power splitting, l-adic
valuations, Gaussian binomials and factorisation.
"""

import logging
from math import prod
from typing import Dict, List, Tuple

from sympy import factorint, isprime

from polarsnf.errors import (NotPrimeError,
                             NotPrimePowerError,
                             OutOfRangeError,
                             ZeroArgumentError)

logger = logging.getLogger(__name__)


def check_prime(ell: int) -> int:
    """
    Return ``ell`` unchanged if it is prime.

    Args:
        ell (int): The candidate prime.

    Returns:
        int: ``ell``.

    Raises:
        NotPrimeError: If ``ell`` is not prime.
    """
    if not isprime(ell):
        raise NotPrimeError(ell)
    return int(ell)


def prime_power(q: int) -> Tuple[int, int]:
    """
    Split a prime power q into (p, t) with q = p^t.

    Args:
        q (int): The prime power.

    Returns:
        tuple: ``(p, t)``.

    Raises:
        NotPrimePowerError: If q is not a prime power.
    """
    if q < 2:
        raise NotPrimePowerError(q)
    factors = factorint(q)
    if len(factors) != 1:
        raise NotPrimePowerError(q)
    (p, t), = factors.items()
    return int(p), int(t)


def valuation(n: int, ell: int) -> int:
    """
    The ell-adic valuation of a nonzero integer.

    Args:
        n (int): A nonzero integer.
        ell (int): A prime.

    Returns:
        int: The largest e with ell^e dividing n.

    Raises:
        ZeroArgumentError: If ``n`` is zero.
    """
    if n == 0:
        raise ZeroArgumentError(f"v_{ell}(0) is undefined")
    n = abs(n)
    e = 0
    while n % ell == 0:
        n //= ell
        e += 1
    return e


def gaussian_integer(n: int, z: int) -> int:
    """
    The Gaussian integer [n]_z = (z^n - 1) / (z - 1), i.e. [n choose 1]_z.

    Args:
        n (int): A nonnegative integer.
        z (int): The base, at least 2.

    Returns:
        int: ``1 + z + ... + z^(n-1)``; ``0`` for ``n = 0``.
    """
    if n < 0 or z < 2:
        raise OutOfRangeError(f"[{n}]_{z} needs n >= 0 and z >= 2")
    return (z ** n - 1) // (z - 1)


def gaussian_binomial(d: int, j: int, z: int) -> int:
    """
    The Gaussian binomial [d choose j]_z, the number of j-dimensional subspaces of a
    d-dimensional space over a field with z elements.

    Args:
        d (int): The ambient dimension.
        j (int): The subspace dimension, ``0 <= j <= d``.
        z (int): The field order, at least 2.

    Returns:
        int: The exact binomial.

    Raises:
        OutOfRangeError: If ``j`` lies outside ``[0, d]`` or ``z < 2``.
    """
    if not 0 <= j <= d or z < 2:
        raise OutOfRangeError(f"[{d} choose {j}]_{z} is out of range")
    numerator = prod(z ** (d - i + 1) - 1 for i in range(1, j + 1))
    denominator = prod(z ** i - 1 for i in range(1, j + 1))
    return numerator // denominator


def factorize(n: int) -> Dict[int, int]:
    """
    Factor a nonzero integer.

    Args:
        n (int): A nonzero integer; the sign is ignored.

    Returns:
        dict: Prime to exponent, primes in ascending order.
    """
    if n == 0:
        raise ZeroArgumentError("cannot factor 0")
    return {int(p): int(e) for p, e in sorted(factorint(abs(n)).items())}


def prime_divisors(*numbers: int) -> List[int]:
    """
    The ascending list of primes dividing at least one of the given nonzero integers.
    """
    primes = set()
    for n in numbers:
        primes.update(factorize(n))
    return sorted(primes)


def combine_factors(*terms: Tuple[Dict[int, int], int]) -> Dict[int, int]:
    """
    Combine factorisations with integer weights, i.e. the factorisation of
    prod(n_i ** w_i) given the factorisations of each n_i.

    Args:
        terms: Pairs ``(factors, weight)``; weights may be negative.

    Returns:
        dict: Prime to exponent, zero exponents dropped.

    Raises:
        ValueError: If a combined exponent is negative.
    """
    combined: Dict[int, int] = {}
    for factors, weight in terms:
        for p, e in factors.items():
            combined[p] = combined.get(p, 0) + weight * e
    if any(e < 0 for e in combined.values()):
        raise ValueError(f"The weighted product {combined} is not an integer.")
    return {p: e for p, e in sorted(combined.items()) if e}


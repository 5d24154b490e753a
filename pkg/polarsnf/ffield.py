#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module provides exact arithmetic in the finite fields GF(p^t) and in the
quadratic extensions GF(q^2) that carry Hermitian forms, on top of ``galois``.

Elements are encoded as integers in ``[0, p^t)`` whose base-p digits are the
coefficients (lowest degree first) of a polynomial modulo a fixed monic
irreducible of degree t. This is the integer representation ``galois`` uses, so
encodings pass through unchanged.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple, Type

import galois
import numpy as np
from sympy import isprime

from polarsnf.errors import (DegreeTooLargeError,
                             NotPrimeError,
                             NotQuadraticExtensionError)
from polarsnf.mathlib.numtheory import prime_power

logger = logging.getLogger(__name__)

DEFAULT_FIELD_BOUND = 2 ** 20


@dataclass(frozen=True)
class PrimePower:
    """
    A prime power q = p^t.

    Args:
        p (int): The characteristic.
        t (int): A positive exponent.
    """
    p: int
    t: int

    def __post_init__(self):
        if not isprime(self.p):
            raise NotPrimeError(self.p)
        if self.t < 1:
            raise ValueError(f"The exponent t should be positive, got {self.t}.")

    @property
    def value(self) -> int:
        return self.p ** self.t

    @classmethod
    def from_int(cls, q: int) -> 'PrimePower':
        """
        Split an integer into a prime power.

        Args:
            q (int): The prime power.

        Returns:
            PrimePower: The decomposition ``p^t``.
        """
        p, t = prime_power(q)
        return cls(p, t)

    def __int__(self) -> int:
        return self.p ** self.t


# Polynomials over Z/p as coefficient tuples, lowest degree first ##############

def _monic_polynomials(p: int, degree: int) -> Iterable[Tuple[int, ...]]:
    """
    Monic polynomials of a given degree, lexicographic on the coefficients taken
    lowest degree first.
    """
    for low in product(range(p), repeat=degree):
        yield low + (1,)


def to_poly(coefficients: Sequence[int], p: int) -> galois.Poly:
    """
    The ``galois`` polynomial over GF(p) with the given coefficients, lowest degree first.
    """
    return galois.Poly([int(c) % p for c in coefficients], field=galois.GF(p), order='asc')


def is_irreducible(coefficients: Sequence[int], p: int) -> bool:
    """
    Irreducibility of a monic polynomial over Z/p.

    Args:
        coefficients (sequence): Coefficients, lowest degree first, leading 1.
        p (int): The prime.

    Returns:
        bool: ``True`` if the polynomial is irreducible over GF(p).
    """
    if len(coefficients) < 2:
        return False
    return bool(to_poly(coefficients, p).is_irreducible())


def smallest_irreducible(p: int, t: int) -> Tuple[int, ...]:
    """
    The lexicographically smallest monic irreducible of degree t over Z/p, with
    coefficients compared lowest degree first.
    """
    if t == 1:
        return (0, 1)
    for candidate in _monic_polynomials(p, t):
        if is_irreducible(candidate, p):
            return candidate
    raise RuntimeError(f"No irreducible polynomial of degree {t} over GF({p}).")


class GaloisField:
    """
    The finite field GF(p^t), a thin layer over a ``galois`` field class built with
    the modulus :func:`smallest_irreducible`. Scalars and arrays go in and come out
    as plain integer encodings.

    Args:
        p (int): The characteristic.
        t (int): The degree over GF(p).
        base_degree (int, optional): When given, the field is GF(q^2) with
                                     q = p^base_degree and ``t == 2 * base_degree``,
                                     which enables :meth:`conjugate` and :meth:`norm`.
                                     Defaults to ``None``.
        bound (int, optional): The largest accepted field order. Defaults to ``2**20``.
    """

    def __init__(self,
                 p: int,
                 t: int,
                 base_degree: Optional[int] = None,
                 bound: int = DEFAULT_FIELD_BOUND,
                 ):
        if not isprime(p):
            raise NotPrimeError(p)
        if t < 1:
            raise ValueError(f"The degree should be positive, got {t}.")
        if p ** t > bound:
            raise DegreeTooLargeError(p, t, bound)
        if base_degree is not None and 2 * base_degree != t:
            raise NotQuadraticExtensionError(
                f"GF({p}^{t}) is not a quadratic extension of GF({p}^{base_degree})")
        self.logger = logging.getLogger(f"{self.__class__.__name__}")
        self.p = p
        self.degree = t
        self.order = p ** t
        self.base_degree = base_degree
        self.modulus = smallest_irreducible(p, t)
        if t == 1:
            self.GF: Type[galois.FieldArray] = galois.GF(p)
        else:
            self.GF = galois.GF(self.order, irreducible_poly=to_poly(self.modulus, p))
        self.primitive_element = int(self.GF.primitive_element)
        if base_degree is not None:
            self._conj = self._ints(self.GF.elements ** (p ** base_degree))
        else:
            self._conj = None
        self.logger.debug(f"Built GF({p}^{t}) with modulus {self.modulus} "
                          f"and primitive element {self.primitive_element}")

    def __repr__(self) -> str:
        return f"GaloisField(p={self.p}, t={self.degree})"

    @staticmethod
    def _ints(x) -> np.ndarray:
        return np.asarray(x.view(np.ndarray), dtype=np.int64)

    def _array(self, a) -> galois.FieldArray:
        return self.GF(np.asarray(a, dtype=np.int64))

    # Encoding ###############################################################

    def encode(self, coefficients: Sequence[int]) -> int:
        """
        Encode a coefficient vector (lowest degree first) as an integer.
        """
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coefficients))

    def decode(self, a: int) -> Tuple[int, ...]:
        """
        The coefficient vector (lowest degree first) of an encoded element.
        """
        return tuple(int(c) for c in self.GF(int(a)).vector()[::-1])

    def elements(self) -> range:
        """
        The canonical enumeration ``0, 1, ..., p^t - 1`` of the field.
        """
        return range(self.order)

    # Scalar arithmetic ######################################################

    def add(self, a: int, b: int) -> int:
        return int(self.GF(int(a)) + self.GF(int(b)))

    def neg(self, a: int) -> int:
        return int(-self.GF(int(a)))

    def sub(self, a: int, b: int) -> int:
        return int(self.GF(int(a)) - self.GF(int(b)))

    def mul(self, a: int, b: int) -> int:
        return int(self.GF(int(a)) * self.GF(int(b)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return int(self.GF(int(a)) ** -1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse in a field")
            return 1 if e == 0 else 0
        return int(self.GF(int(a)) ** e)

    def multiplicative_order(self, a: int) -> int:
        """
        The order of a nonzero element in the multiplicative group.
        """
        if a == 0:
            raise ValueError("0 is not in the multiplicative group")
        return int(self.GF(int(a)).multiplicative_order())

    # Hermitian structure ####################################################

    @property
    def is_quadratic_extension(self) -> bool:
        return self.base_degree is not None

    def _check_quadratic(self):
        if not self.is_quadratic_extension:
            raise NotQuadraticExtensionError(
                f"GF({self.p}^{self.degree}) was not built as a quadratic extension")

    @property
    def base_order(self) -> int:
        """
        The order q of the fixed subfield GF(q).
        """
        self._check_quadratic()
        return self.p ** self.base_degree

    def conjugate(self, a: int) -> int:
        """
        The involution a -> a^q of GF(q^2).
        """
        self._check_quadratic()
        return int(self._conj[a])

    def norm(self, a: int) -> int:
        """
        The field norm a * a^q, an element of GF(q).
        """
        return self.mul(a, self.conjugate(a))

    def subfield_elements(self) -> List[int]:
        """
        The encodings of GF(q) inside GF(q^2), sorted. They are 0 and the powers of
        the subfield generator g^(q+1), g the primitive element.
        """
        self._check_quadratic()
        generator = self.GF.primitive_element ** (self.base_order + 1)
        return sorted([0] + [int(generator ** k) for k in range(self.base_order - 1)])

    def in_subfield(self, a: int) -> bool:
        return self.conjugate(a) == a

    # Vectorised arithmetic on integer arrays #################################

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._ints(self._array(a) + self._array(b))

    def vneg(self, a: np.ndarray) -> np.ndarray:
        return self._ints(-self._array(a))

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._ints(self._array(a) * self._array(b))

    def vconj(self, a: np.ndarray) -> np.ndarray:
        self._check_quadratic()
        return self._conj[np.asarray(a)]


@lru_cache(maxsize=None)
def construct_field(p: int,
                    t: int,
                    bound: int = DEFAULT_FIELD_BOUND,
                    ) -> GaloisField:
    """
    Build (once) the field GF(p^t).

    Args:
        p (int): A prime.
        t (int): The degree, at least 1.
        bound (int, optional): The largest accepted order. Defaults to ``2**20``.

    Returns:
        GaloisField: The field.
    """
    return GaloisField(p, t, bound=bound)


@lru_cache(maxsize=None)
def quadratic_extension(q: int,
                        bound: int = DEFAULT_FIELD_BOUND,
                        ) -> GaloisField:
    """
    Build (once) GF(q^2) as a degree-2t extension of GF(p), q = p^t.

    Args:
        q (int): A prime power.
        bound (int, optional): The largest accepted order. Defaults to ``2**20``.

    Returns:
        GaloisField: The quadratic extension.
    """
    pp = PrimePower.from_int(q)
    return GaloisField(pp.p, 2 * pp.t, base_degree=pp.t, bound=bound)


def conjugate(field: GaloisField, a: int) -> int:
    """
    The Hermitian involution a -> a^q on GF(q^2).
    """
    return field.conjugate(a)


def field_norm(field: GaloisField, a: int) -> int:
    """
    The norm a * a^q from GF(q^2) to GF(q).
    """
    return field.norm(a)


def smallest_irreducible_quadratic(field: GaloisField) -> Tuple[int, int]:
    """
    The smallest (c, b), compared as (c, b), such that z^2 + b z + c has no root in
    the given field; then N(X, Y) = X^2 + bXY + cY^2 is anisotropic.

    Args:
        field (GaloisField): The field GF(q).

    Returns:
        tuple: ``(c, b)`` as field encodings.
    """
    GF = field.GF
    xs = GF.elements
    squares = xs * xs
    for c in field.elements():
        for b in field.elements():
            if np.all(squares + GF(b) * xs + GF(c) != 0):
                return c, b
    raise RuntimeError(f"No irreducible quadratic over {field}.")

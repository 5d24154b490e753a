#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module provides the closed-form strongly regular parameters, spectra and group
orders of the polar graphs, the nilpotence classifier, and identity checks against
constructed graphs.
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from sympy import Poly, primerange, symbols

from polarsnf.errors import (NonIntegralOrderError,
                             SrgIdentityError,
                             TableMismatchError)
from polarsnf.mathlib.numtheory import (check_prime,
                                        combine_factors,
                                        factorize,
                                        gaussian_integer)
from polarsnf.polar import PolarFamily, PolarGraph

logger = logging.getLogger(__name__)

MATRIX_KINDS = ('A', 'L')


@dataclass(frozen=True)
class SrgParams:
    """
    Parameters (v, k, lambda, mu) of a strongly regular graph.
    """
    v: int
    k: int
    lam: int
    mu: int

    def is_feasible(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Spectrum:
    """
    Eigenvalues k, r, s of A with multiplicities 1, f, g, and the nonzero Laplacian
    eigenvalues t = k - r and u = k - s.
    """
    k: int
    r: int
    s: int
    t: int
    u: int
    f: int
    g: int

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class GroupOrders:
    """
    The orders of the Smith group and of the critical group, with factorisations.
    """
    smith: int
    critical: int
    smith_factors: Dict[int, int]
    critical_factors: Dict[int, int]

    def valuation(self, ell: int, target: str) -> int:
        factors = self.smith_factors if target == 'smith' else self.critical_factors
        return factors.get(ell, 0)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralOrderError(f"{what} = {value} is not an integer")
    return value.numerator


def srg_params(family: Union[PolarFamily, str],
               q: int,
               m: int,
               ) -> SrgParams:
    """
    The strongly regular parameters of a polar graph from the closed forms.

    Args:
        family (PolarFamily or str): The family.
        q (int): The order of the base field.
        m (int): The rank parameter.

    Returns:
        SrgParams: ``(v, k, lambda, mu)``.
    """
    family = PolarFamily.from_string(family)
    family.check_m(m)
    z, h, qt = family.z(m), family.h, family.q_tilde(q)
    power = family.power
    v = (power(q, z - 1 + h) + 1) * gaussian_integer(z, qt)
    k = qt * gaussian_integer(z - 1, qt) * (power(q, z - 2 + h) + 1)
    lam = (qt - 1) + qt ** 2 * (power(q, z - 3 + h) + 1) * gaussian_integer(z - 2, qt)
    mu = k / qt
    params = SrgParams(*(_integral(x, name) for x, name in
                         zip((v, k, lam, mu), ('v', 'k', 'lambda', 'mu'))))
    if not params.is_feasible():
        raise NonIntegralOrderError(f"{params} fails k(k - lambda - 1) = (v - k - 1) mu")
    return params


def spectrum(family: Union[PolarFamily, str],
             q: int,
             m: int,
             ) -> Spectrum:
    """
    The spectrum of a polar graph. The multiplicities come from the general
    expressions in q~ and h.

    Args:
        family (PolarFamily or str): The family.
        q (int): The order of the base field.
        m (int): The rank parameter.

    Returns:
        Spectrum: The eigenvalues and multiplicities.
    """
    family = PolarFamily.from_string(family)
    params = srg_params(family, q, m)
    z, h, qt = family.z(m), family.h, family.q_tilde(q)
    power = family.power
    r = power(q, z - 1) - 1
    s = -(power(q, z - 2 + h) + 1)
    t = gaussian_integer(z - 1, qt) * (power(q, z - 1 + h) + 1)
    u = (power(q, z - 2 + h) + 1) * gaussian_integer(z, qt)
    denominator = (qt - 1) * (power(q, h - 1) + 1)
    f = power(q, h) * (power(q, z - 2 + h) + 1) * (power(q, z) - 1) / denominator
    g = qt * (power(q, z - 1 + h) + 1) * (power(q, z - 1) - 1) / denominator
    values = {name: _integral(Fraction(x), name)
              for name, x in (('r', r), ('s', s), ('t', t), ('u', u), ('f', f), ('g', g))}
    result = Spectrum(k=params.k, **values)
    if 1 + result.f + result.g != params.v:
        raise NonIntegralOrderError(f"1 + f + g = {1 + result.f + result.g} differs from v = {params.v}")
    if params.k + result.f * result.r + result.g * result.s != 0:
        raise NonIntegralOrderError(f"The spectrum {result} does not give a traceless A")
    if result.r * result.s != params.mu - params.k or result.r + result.s != params.lam - params.mu:
        raise NonIntegralOrderError(f"r, s of {result} are not the roots for {params}")
    return result


def measure_srg_params(graph: PolarGraph) -> SrgParams:
    """
    Read (v, k, lambda, mu) off a graph by counting common neighbours.

    Args:
        graph (PolarGraph): The graph.

    Returns:
        SrgParams: The measured parameters.

    Raises:
        ValueError: If the graph is not strongly regular.
    """
    A = graph.adjacency
    n = graph.num_vertices
    degrees = graph.degrees
    if not graph.is_regular():
        raise ValueError(f"{graph!r} is not regular, degrees range over {sorted(set(degrees.tolist()))}")
    common = A @ A
    off_diagonal = ~np.eye(n, dtype=bool)
    adjacent = common[(A == 1)]
    non_adjacent = common[(A == 0) & off_diagonal]
    lam = set(adjacent.tolist())
    mu = set(non_adjacent.tolist())
    if len(lam) > 1 or len(mu) > 1:
        raise ValueError(f"{graph!r} is not strongly regular: lambda in {sorted(lam)}, mu in {sorted(mu)}")
    return SrgParams(v=n,
                     k=int(degrees[0]),
                     lam=lam.pop() if lam else 0,
                     mu=mu.pop() if mu else 0)


def verify_srg_identity(graph: PolarGraph,
                        params: Optional[SrgParams] = None,
                        ) -> bool:
    """
    Check A^2 = kI + lambda A + mu (J - I - A) entrywise.

    Args:
        graph (PolarGraph): The graph.
        params (SrgParams, optional): The parameters to test against. Defaults to the
                                      closed form of the graph's family, or to the
                                      measured parameters for a bare graph.

    Returns:
        bool: ``True`` when the identity holds.

    Raises:
        SrgIdentityError: At the first violating entry.
    """
    if params is None:
        if graph.space is not None:
            space = graph.space
            params = srg_params(space.family, space.q.value, space.m)
        else:
            params = measure_srg_params(graph)
    A = graph.adjacency
    n = graph.num_vertices
    identity = np.eye(n, dtype=np.int64)
    expected = params.k * identity + params.lam * A + params.mu * (1 - identity - A)
    found = A @ A
    bad = np.argwhere(found != expected)
    if bad.size:
        i, j = (int(x) for x in bad[0])
        raise SrgIdentityError((i, j), int(found[i, j]), int(expected[i, j]))
    return True


def group_orders(spec: Spectrum, params: SrgParams) -> GroupOrders:
    """
    The orders |S| = k r^f |s|^g and |K| = t^f u^g / v, with factorisations.

    Args:
        spec (Spectrum): The spectrum.
        params (SrgParams): The parameters.

    Returns:
        GroupOrders: The orders.

    Raises:
        NonIntegralOrderError: If t^f u^g is not divisible by v.
    """
    smith_factors = combine_factors((factorize(spec.k), 1),
                                    (factorize(spec.r), spec.f),
                                    (factorize(spec.s), spec.g))
    try:
        critical_factors = combine_factors((factorize(spec.t), spec.f),
                                           (factorize(spec.u), spec.g),
                                           (factorize(params.v), -1))
    except ValueError as exc:
        raise NonIntegralOrderError(f"t^f u^g / v is not an integer for {spec}: {exc}") from exc
    smith = 1
    for p, e in smith_factors.items():
        smith *= p ** e
    critical = 1
    for p, e in critical_factors.items():
        critical *= p ** e
    return GroupOrders(smith, critical, smith_factors, critical_factors)


def eigenvalues(spec: Spectrum, which: str) -> Tuple[int, ...]:
    """
    The nonzero eigenvalues of A (k, r, s) or of L (t, u).
    """
    if which not in MATRIX_KINDS:
        raise ValueError(f"Expect which in {MATRIX_KINDS}, got {which!r}.")
    return (spec.k, spec.r, spec.s) if which == 'A' else (spec.t, spec.u)


def table_nilpotence(family: Union[PolarFamily, str],
                     q: int,
                     m: int,
                     ell: int,
                     which: str,
                     ) -> bool:
    """
    The rule lookup deciding whether the matrix reduced modulo ell is nilpotent.

    Args:
        family (PolarFamily or str): The family.
        q (int): The order of the base field.
        m (int): The rank parameter.
        ell (int): A prime.
        which (str): ``'A'`` or ``'L'``.

    Returns:
        bool: The tabulated answer.
    """
    family = PolarFamily.from_string(family)
    if q % 2 == 0 and ell == 2:
        return False
    if family in (PolarFamily.S, PolarFamily.O):
        return ell == 2
    if family.is_hermitian:
        return (q + 1) % ell == 0
    if ell == 2:
        return True
    if (q + 1) % ell:
        return False
    # OMINUS is nilpotent for both matrices when m is even, OPLUS when m is odd.
    both = m % 2 == 0 if family is PolarFamily.OMINUS else m % 2 == 1
    return both or which == 'L'


def is_nilpotent(family: Union[PolarFamily, str],
                 q: int,
                 m: int,
                 ell: int,
                 which: str = 'A',
                 ) -> bool:
    """
    Whether A (or L) is nilpotent modulo ell, i.e. ell divides all its nonzero
    eigenvalues. The answer is cross-checked with :func:`table_nilpotence`.

    Args:
        family (PolarFamily or str): The family.
        q (int): The order of the base field.
        m (int): The rank parameter.
        ell (int): A prime.
        which (str, optional): ``'A'`` or ``'L'``. Defaults to ``'A'``.

    Returns:
        bool: Whether the matrix is nilpotent modulo ell.

    Raises:
        TableMismatchError: If the rule lookup disagrees with the eigenvalues.
    """
    family = PolarFamily.from_string(family)
    check_prime(ell)
    values = eigenvalues(spectrum(family, q, m), which)
    nilpotent = all(x % ell == 0 for x in values)
    if nilpotent != table_nilpotence(family, q, m, ell, which):
        raise TableMismatchError(family.label, ell, q, m, which)
    return nilpotent


def nilpotence_sweep(family: Union[PolarFamily, str],
                     q: int,
                     m: int,
                     max_ell: int = 100,
                     ) -> Dict[int, Tuple[bool, bool]]:
    """
    Classify every prime up to ``max_ell`` for both matrices.

    Returns:
        dict: ``ell -> (A nilpotent, L nilpotent)``.
    """
    return {int(ell): (is_nilpotent(family, q, m, int(ell), 'A'),
                       is_nilpotent(family, q, m, int(ell), 'L'))
            for ell in primerange(2, max_ell + 1)}


# Polynomials ##################################################################

X = symbols('x')


def _roots(spec: Spectrum, which: str) -> List[Tuple[int, int]]:
    if which not in MATRIX_KINDS:
        raise ValueError(f"Expect which in {MATRIX_KINDS}, got {which!r}.")
    if which == 'A':
        return [(spec.k, 1), (spec.r, spec.f), (spec.s, spec.g)]
    return [(0, 1), (spec.t, spec.f), (spec.u, spec.g)]


def characteristic_polynomial(spec: Spectrum, which: str = 'A') -> Poly:
    """
    The characteristic polynomial of A or L as a sympy polynomial in ``x``.
    """
    poly = Poly(1, X)
    for root, multiplicity in _roots(spec, which):
        poly *= Poly(X - root, X) ** multiplicity
    return poly


def minimal_polynomial(spec: Spectrum, which: str = 'A') -> Poly:
    """
    The minimal polynomial of A or L, the product of x - e over the distinct eigenvalues.
    """
    poly = Poly(1, X)
    for root in sorted({root for root, _ in _roots(spec, which)}):
        poly *= Poly(X - root, X)
    return poly


def evaluate_polynomial(poly: Poly, matrix: np.ndarray) -> np.ndarray:
    """
    Evaluate an integer polynomial of small degree at a small integer matrix by
    Horner's rule in int64.
    """
    M = np.asarray(matrix, dtype=np.int64)
    identity = np.eye(M.shape[0], dtype=np.int64)
    result = np.zeros_like(M)
    for c in poly.all_coeffs():
        result = result @ M + int(c) * identity
    return result

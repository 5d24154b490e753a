#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module computes Smith groups and critical groups: elementary divisor profiles
at a prime, cokernel decompositions, spanning-tree counts and the filtration
dimensions that cross-check the profiles.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from polarsnf.errors import DisconnectedGraphError
from polarsnf.mathlib.intmat import (as_integer_matrix,
                                     bareiss_elimination,
                                     determinant,
                                     local_pivot_valuations,
                                     naive_oracle_snf,
                                     null_space_mod_prime,
                                     rank_mod_prime,
                                     smith_normal_form)
from polarsnf.mathlib.numtheory import check_prime, prime_divisors, valuation
from polarsnf.polar import PolarGraph
from polarsnf.utils import TorsionEntry, format_group, profile_to_json

logger = logging.getLogger(__name__)

__all__ = ['DivisorProfile', 'GroupDecomposition', 'smith_normal_form', 'naive_oracle_snf',
           'divisor_profile', 'profile_from_invariants', 'cokernel', 'spanning_tree_count',
           'filtration_dimension', 'filtration_dimensions', 'filtration_consistent']

MatrixLike = Union[np.ndarray, Sequence[Sequence[int]]]

# Products in the filtration lift stay in int64 while n * l^(levels+1) * max(l, |M|) is below this.
FILTRATION_INT64_BOUND = 2 ** 62


@dataclass
class DivisorProfile:
    """
    The l-elementary divisor multiplicities of a matrix: ``entries[a]`` counts the
    invariant factors of l-adic valuation exactly ``a``. Zero invariant factors are
    counted in ``free_rank``.
    """
    ell: int
    entries: Dict[int, int] = field(default_factory=dict)
    free_rank: int = 0

    def __post_init__(self):
        self.entries = {int(a): int(c) for a, c in sorted(self.entries.items()) if c}

    @property
    def count(self) -> int:
        return sum(self.entries.values())

    @property
    def mass(self) -> int:
        """
        The l-adic valuation of the product of the nonzero invariant factors.
        """
        return sum(a * c for a, c in self.entries.items())

    @property
    def max_exponent(self) -> int:
        return max(self.entries, default=0)

    def torsion(self) -> List[TorsionEntry]:
        return [(self.ell, a, c) for a, c in self.entries.items() if a >= 1]

    def to_json(self) -> Dict[str, int]:
        return profile_to_json(self.entries)

    def __str__(self) -> str:
        return format_group(self.torsion())


@dataclass
class GroupDecomposition:
    """
    A finitely generated abelian group Z^free_rank + torsion, the torsion given by
    ``(prime, exponent, multiplicity)`` entries with exponent >= 1.
    """
    free_rank: int
    torsion: List[TorsionEntry]
    invariant_factors: Optional[List[int]] = None

    @property
    def order(self) -> int:
        """
        The order of the torsion part.
        """
        result = 1
        for ell, a, count in self.torsion:
            result *= ell ** (a * count)
        return result

    def primes(self) -> List[int]:
        return sorted({ell for ell, _, _ in self.torsion})

    def __str__(self) -> str:
        return format_group(self.torsion)


def profile_from_invariants(invariants: Sequence[int], ell: int) -> DivisorProfile:
    """
    Read the l-profile off a list of invariant factors.

    Args:
        invariants (sequence): Invariant factors, zeros for the free part.
        ell (int): A prime.

    Returns:
        DivisorProfile: The profile.
    """
    entries: Dict[int, int] = {}
    free_rank = 0
    for alpha in invariants:
        if alpha == 0:
            free_rank += 1
            continue
        a = valuation(alpha, ell)
        entries[a] = entries.get(a, 0) + 1
    return DivisorProfile(ell, entries, free_rank)


def divisor_profile(matrix: MatrixLike,
                    ell: int,
                    method: str = 'full',
                    ) -> DivisorProfile:
    """
    The l-elementary divisor profile of an integer matrix.

    Args:
        matrix (np.ndarray or sequence): An integer matrix.
        ell (int): A prime.
        method (str, optional): ``'full'`` reads the profile off the integer Smith
                                normal form; ``'local'`` eliminates over Z/l^B with
                                B = v_l(D) + 1, D a maximal nonsingular minor.
                                Defaults to ``'full'``.

    Returns:
        DivisorProfile: The profile.
    """
    check_prime(ell)
    if method == 'full':
        return profile_from_invariants(smith_normal_form(matrix), ell)
    if method != 'local':
        raise NotImplementedError(f"Unsupported profile method {method!r}.")
    A = as_integer_matrix(matrix)
    size = min(A.shape)
    rank, minor, _ = bareiss_elimination(A)
    precision = valuation(minor, ell) + 1
    valuations = local_pivot_valuations(A, ell, precision)
    if len(valuations) != rank:
        raise RuntimeError(f"Found {len(valuations)} pivots over Z/{ell}^{precision}, "
                           f"expected the rank {rank}.")
    entries: Dict[int, int] = {}
    for a in valuations:
        entries[a] = entries.get(a, 0) + 1
    logger.debug(f"Profile at ell={ell} over Z/{ell}^{precision}: {entries}")
    return DivisorProfile(ell, entries, size - rank)


def cokernel(matrix: MatrixLike) -> GroupDecomposition:
    """
    Decompose the cokernel Z^n / M(Z^m) of a square integer matrix.

    Args:
        matrix (np.ndarray or sequence): A square integer matrix.

    Returns:
        GroupDecomposition: The free rank (the nullity over Q) and the torsion.
    """
    A = as_integer_matrix(matrix)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"Expect a square matrix, got shape {A.shape}.")
    invariants = smith_normal_form(A)
    nontrivial = [alpha for alpha in invariants if alpha > 1]
    torsion = []
    for ell in prime_divisors(*nontrivial) if nontrivial else []:
        torsion += profile_from_invariants(invariants, ell).torsion()
    free_rank = invariants.count(0)
    return GroupDecomposition(free_rank, sorted(torsion), invariants)


def _adjacency_of(graph: Union[PolarGraph, MatrixLike]) -> PolarGraph:
    if isinstance(graph, PolarGraph):
        return graph
    return PolarGraph(np.asarray(graph, dtype=np.int64))


def spanning_tree_count(graph: Union[PolarGraph, MatrixLike]) -> int:
    """
    Count spanning trees by the matrix-tree theorem: the determinant of the Laplacian
    with row 0 and column 0 removed.

    Args:
        graph (PolarGraph or matrix): A connected graph or its adjacency matrix.

    Returns:
        int: The number of spanning trees.

    Raises:
        DisconnectedGraphError: If the graph is not connected.
    """
    graph = _adjacency_of(graph)
    if not graph.is_connected():
        raise DisconnectedGraphError(f"{graph!r} is not connected")
    if graph.num_vertices == 1:
        return 1
    return determinant(graph.laplacian[1:, 1:])


def filtration_dimensions(matrix: MatrixLike,
                          ell: int,
                          levels: int,
                          ) -> List[int]:
    """
    The dimensions of the filtration modules M_0, ..., M_levels, where M_j is the
    image modulo l of the lattice {x : Mx = 0 mod l^j}.

    The lattice is lifted one level at a time: if the columns of B span level j,
    the next level is spanned by B Y, where Y spans {y : (M B / l^j) y = 0 mod l}
    (a null space over GF(l) plus l times the non-pivot unit vectors). Only field
    linear algebra is used, so the result is independent of the local elimination
    behind :func:`divisor_profile`.

    Args:
        matrix (np.ndarray or sequence): A square integer matrix.
        ell (int): A prime.
        levels (int): The last level.

    Returns:
        list: ``levels + 1`` dimensions, starting with ``n``.
    """
    A = as_integer_matrix(matrix)
    n = A.shape[1]
    # Level j only needs the basis modulo l^(j+1).
    modulus = ell ** (levels + 1)
    largest = max(ell, int(np.abs(A).max(initial=0)))
    dtype = np.int64 if n * modulus * largest < FILTRATION_INT64_BOUND else object
    A = A.astype(dtype)
    basis = np.identity(n, dtype=np.int64).astype(dtype)
    dimensions = [n]
    for level in range(levels):
        image = A.dot(basis)
        reduced = (image // ell ** level) % ell
        kernel = null_space_mod_prime(reduced, ell)
        pivots = set(np.argmax(kernel != 0, axis=1).tolist()) if kernel.shape[0] else set()
        step = np.zeros((n, n), dtype=dtype)
        step[:, :kernel.shape[0]] = kernel.T.astype(dtype)
        for column, i in enumerate(i for i in range(n) if i not in pivots):
            step[i, kernel.shape[0] + column] = ell
        basis = basis.dot(step) % modulus
        dimensions.append(rank_mod_prime(basis, ell))
    return dimensions


def filtration_dimension(matrix: MatrixLike,
                         ell: int,
                         j: int,
                         ) -> int:
    """
    The dimension of the j-th module of the filtration, i.e. the number of
    invariant-factor slots of valuation at least j (including zero slots).
    """
    if j <= 0:
        return as_integer_matrix(matrix).shape[1]
    return filtration_dimensions(matrix, ell, j)[j]


def filtration_consistent(matrix: MatrixLike,
                          profile: DivisorProfile,
                          ) -> bool:
    """
    Check sum_{t >= j} e_t = dim M_j - dim ker for every level j up to one past the
    largest exponent of the profile.
    """
    levels = profile.max_exponent + 1
    dimensions = filtration_dimensions(matrix, profile.ell, levels)
    for j in range(levels + 1):
        tail = sum(c for a, c in profile.entries.items() if a >= j)
        if tail != dimensions[j] - profile.free_rank:
            logger.warning(f"Filtration check failed at ell={profile.ell}, level {j}")
            return False
    return True

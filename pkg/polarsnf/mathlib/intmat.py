#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module provides exact kernels for integer matrices: Smith normal forms,
fraction-free (Bareiss) elimination, elimination over Z/l^B, and linear algebra
over GF(l) through ``galois``.

Matrices are handled as numpy arrays of ``dtype=object`` holding Python integers,
so that no entry ever overflows.
"""

import logging
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

import galois
import numpy as np

logger = logging.getLogger(__name__)

# Below this modulus, products of two residues fit in int64.
INT64_SAFE_MODULUS = 2 ** 31


def as_integer_matrix(matrix: Union[np.ndarray, Sequence[Sequence[int]]]) -> np.ndarray:
    """
    Copy a matrix into a two-dimensional object array of Python integers.

    Args:
        matrix (np.ndarray or sequence): A rectangular integer matrix.

    Returns:
        np.ndarray: An ``n x m`` array with ``dtype=object``.

    Raises:
        ValueError: If the input is not a non-empty rectangular matrix.
    """
    if isinstance(matrix, np.ndarray) and matrix.dtype != object:
        if not np.issubdtype(matrix.dtype, np.integer):
            raise ValueError(f"Expect an integer matrix, got dtype {matrix.dtype}.")
        array = matrix.astype(object)
    else:
        rows = [[int(x) for x in row] for row in matrix]
        if not rows or len({len(row) for row in rows}) != 1:
            raise ValueError("Expect a non-empty rectangular matrix.")
        array = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            array[i, :] = row
    if array.ndim != 2 or 0 in array.shape:
        raise ValueError(f"Expect a non-empty 2D matrix, got shape {array.shape}.")
    return array


def _swap(A: np.ndarray,
          t: int,
          i: int,
          j: int,
          ) -> int:
    """
    Move entry (i, j) to (t, t) by one row and one column swap. Returns the sign
    change of the determinant.
    """
    sign = 1
    if i != t:
        A[[t, i], :] = A[[i, t], :]
        sign = -sign
    if j != t:
        A[:, [t, j]] = A[:, [j, t]]
        sign = -sign
    return sign


def _min_abs_position(block: np.ndarray) -> Optional[Tuple[int, int]]:
    """
    Position of the nonzero entry of minimal absolute value, ties broken by the
    smallest row and then the smallest column.
    """
    rows, cols = np.nonzero(block)
    if rows.size == 0:
        return None
    k = int(np.argmin(np.abs(block[rows, cols])))
    return int(rows[k]), int(cols[k])


def _divisibility_chain(diagonal: List[int]) -> List[int]:
    """
    Turn a diagonal into an equivalent divisibility chain with gcd/lcm passes,
    zeros moved to the end.
    """
    values = [abs(d) for d in diagonal if d]
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            g = gcd(values[i], values[j])
            if g != values[i]:
                values[i], values[j] = g, values[i] // g * values[j]
    return values + [0] * (len(diagonal) - len(values))


def smith_normal_form(matrix: Union[np.ndarray, Sequence[Sequence[int]]]) -> List[int]:
    """
    Compute the invariant factors of an integer matrix.

    The matrix is diagonalised by integer elimination, always pivoting on the
    nonzero entry of minimal absolute value, and the diagonal is then normalised
    into a divisibility chain.

    Args:
        matrix (np.ndarray or sequence): An ``n x m`` integer matrix.

    Returns:
        list: ``min(n, m)`` nonnegative integers ``a_1 | a_2 | ...``, zeros last.
    """
    A = as_integer_matrix(matrix)
    n, m = A.shape
    size = min(n, m)
    diagonal = []
    for t in range(size):
        position = _min_abs_position(A[t:, t:])
        if position is None:
            break
        _swap(A, t, position[0] + t, position[1] + t)
        while True:
            pivot = A[t, t]
            column = A[t + 1:, t]
            if np.count_nonzero(column):
                A[t + 1:, t:] -= np.multiply.outer(column // pivot, A[t, t:])
            row = A[t, t + 1:]
            if np.count_nonzero(row):
                A[t:, t + 1:] -= np.multiply.outer(A[t:, t], row // pivot)
            # Remainders left in the pivot row/column are smaller than the pivot.
            cross = np.concatenate([A[t + 1:, t], A[t, t + 1:]])
            if not np.count_nonzero(cross):
                break
            nonzero = np.flatnonzero(cross)
            k = int(nonzero[np.argmin(np.abs(cross[nonzero]))])
            if k < n - t - 1:
                _swap(A, t, t + 1 + k, t)
            else:
                _swap(A, t, t, t + 1 + k - (n - t - 1))
        diagonal.append(abs(A[t, t]))
    logger.debug(f"Diagonalised a {n}x{m} matrix with {len(diagonal)} nonzero pivots")
    diagonal += [0] * (size - len(diagonal))
    return _divisibility_chain(diagonal)


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Return (g, x, y) with g = gcd(a, b) >= 0 and x a + y b = g.
    """
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def naive_oracle_snf(matrix: Union[np.ndarray, Sequence[Sequence[int]]]) -> List[int]:
    """
    Textbook Smith normal form by repeated extended-gcd pivot reduction on plain
    lists. Slow on purpose and independent of :func:`smith_normal_form`; meant as a
    test oracle.

    Args:
        matrix (np.ndarray or sequence): An ``n x m`` integer matrix.

    Returns:
        list: ``min(n, m)`` invariant factors in a divisibility chain, zeros last.
    """
    A = [[int(x) for x in row] for row in matrix]
    n, m = len(A), len(A[0])
    size = min(n, m)
    t = 0
    while t < size:
        found = next(((i, j) for i in range(t, n) for j in range(t, m) if A[i][j]), None)
        if found is None:
            break
        i, j = found
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            for i in range(t + 1, n):
                if A[i][t]:
                    g, x, y = _xgcd(A[t][t], A[i][t])
                    a, b = A[t][t] // g, A[i][t] // g
                    A[t], A[i] = ([x * u + y * v for u, v in zip(A[t], A[i])],
                                  [-b * u + a * v for u, v in zip(A[t], A[i])])
            for j in range(t + 1, m):
                if A[t][j]:
                    g, x, y = _xgcd(A[t][t], A[t][j])
                    a, b = A[t][t] // g, A[t][j] // g
                    for row in A:
                        row[t], row[j] = x * row[t] + y * row[j], -b * row[t] + a * row[j]
            if any(A[i][t] for i in range(t + 1, n)):
                continue
            pivot = A[t][t]
            bad = next((i for i in range(t + 1, n)
                        for j in range(t + 1, m) if A[i][j] % pivot), None)
            if bad is None:
                break
            A[t] = [u + v for u, v in zip(A[t], A[bad])]
        t += 1
    diagonal = [abs(A[k][k]) for k in range(t)]
    return diagonal + [0] * (size - t)


def bareiss_elimination(matrix: Union[np.ndarray, Sequence[Sequence[int]]],
                        ) -> Tuple[int, int, int]:
    """
    Fraction-free Gaussian elimination with complete pivoting.

    Args:
        matrix (np.ndarray or sequence): An ``n x m`` integer matrix.

    Returns:
        tuple: ``(rank, minor, sign)`` where ``minor`` is the determinant of a
        nonsingular ``rank x rank`` minor (``1`` for rank 0) and ``sign`` the parity
        of the row and column swaps used.
    """
    A = as_integer_matrix(matrix)
    n, m = A.shape
    previous, sign, rank = 1, 1, 0
    for k in range(min(n, m)):
        rows, cols = np.nonzero(A[k:, k:])
        if rows.size == 0:
            break
        sign *= _swap(A, k, int(rows[0]) + k, int(cols[0]) + k)
        pivot = A[k, k]
        A[k + 1:, k + 1:] = (A[k + 1:, k + 1:] * pivot
                             - np.multiply.outer(A[k + 1:, k], A[k, k + 1:])) // previous
        A[k + 1:, k] = 0
        previous = pivot
        rank += 1
    return rank, previous, sign


def determinant(matrix: Union[np.ndarray, Sequence[Sequence[int]]]) -> int:
    """
    Exact determinant of a square integer matrix by Bareiss elimination.

    Args:
        matrix (np.ndarray or sequence): A square integer matrix.

    Returns:
        int: The determinant.
    """
    A = as_integer_matrix(matrix)
    n, m = A.shape
    if n != m:
        raise ValueError(f"Determinant needs a square matrix, got {n}x{m}.")
    rank, minor, sign = bareiss_elimination(A)
    return sign * minor if rank == n else 0


def rank_over_rationals(matrix: Union[np.ndarray, Sequence[Sequence[int]]]) -> int:
    """
    The rank of an integer matrix over Q.
    """
    return bareiss_elimination(matrix)[0]


def local_pivot_valuations(matrix: Union[np.ndarray, Sequence[Sequence[int]]],
                           ell: int,
                           precision: int,
                           ) -> List[int]:
    """
    Diagonalise a matrix over the local ring Z/l^B and return the l-adic valuations
    of the pivots. Slots not listed are zero modulo l^B.

    Args:
        matrix (np.ndarray or sequence): An integer matrix.
        ell (int): A prime.
        precision (int): The exponent ``B`` of the modulus, at least 1.

    Returns:
        list: One valuation in ``[0, B)`` per pivot, in elimination order.
    """
    modulus = ell ** precision
    A = as_integer_matrix(matrix) % modulus
    if modulus < INT64_SAFE_MODULUS:
        A = A.astype(np.int64)
    n, m = A.shape
    powers = [ell ** e for e in range(precision + 1)]
    valuations = []
    for t in range(min(n, m)):
        block = A[t:, t:]
        rows, cols = np.nonzero(block)
        if rows.size == 0:
            break
        entries = block[rows, cols]
        for v in range(precision):
            hits = np.flatnonzero(entries % powers[v + 1])
            if hits.size:
                break
        k = int(hits[0])
        _swap(A, t, int(rows[k]) + t, int(cols[k]) + t)
        unit = int(A[t, t]) // powers[v]
        inverse = pow(unit, -1, modulus)
        factors = ((A[t + 1:, t] // powers[v]) * inverse) % modulus
        A[t + 1:, t:] = (A[t + 1:, t:] - np.multiply.outer(factors, A[t, t:])) % modulus
        # Every entry of the pivot row is a multiple of l^v, so column operations clear it.
        A[t, t + 1:] = 0
        valuations.append(v)
    return valuations


def mod_prime(matrix: Union[np.ndarray, Sequence[Sequence[int]]],
              ell: int,
              ) -> galois.FieldArray:
    """
    Reduce an integer matrix into a ``galois`` matrix over GF(l).
    """
    A = as_integer_matrix(matrix) % ell
    return galois.GF(ell)(A.astype(np.int64))


def rank_mod_prime(matrix: Union[np.ndarray, Sequence[Sequence[int]]],
                   ell: int,
                   ) -> int:
    """
    The rank of an integer matrix over Z/lZ.

    Args:
        matrix (np.ndarray or sequence): An integer matrix.
        ell (int): A prime.

    Returns:
        int: The rank modulo ``ell``.
    """
    A = mod_prime(matrix, ell)
    if A.size == 0:
        return 0
    return int(np.linalg.matrix_rank(A))


def null_space_mod_prime(matrix: Union[np.ndarray, Sequence[Sequence[int]]],
                         ell: int,
                         ) -> np.ndarray:
    """
    A basis of {y : M y = 0 over GF(l)} in reduced row echelon form.

    Args:
        matrix (np.ndarray or sequence): An ``n x m`` integer matrix.
        ell (int): A prime.

    Returns:
        np.ndarray: A ``k x m`` int64 array, one basis vector per row.
    """
    A = mod_prime(matrix, ell)
    basis = A.null_space()
    if basis.shape[0] == 0:
        return np.zeros((0, A.shape[1]), dtype=np.int64)
    return np.asarray(basis.row_reduce().view(np.ndarray), dtype=np.int64)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Unit tests for the intmat module.
"""

import logging

import numpy as np
import pytest

from polarsnf.mathlib.intmat import (as_integer_matrix,
                                     bareiss_elimination,
                                     determinant,
                                     local_pivot_valuations,
                                     null_space_mod_prime,
                                     rank_mod_prime,
                                     rank_over_rationals,
                                     smith_normal_form)

logging.basicConfig(level=logging.DEBUG)

################################################################################


class TestIntegerMatrix:
    """
    Test the conversion to exact integer matrices.
    """

    def test_object_dtype(self):
        """
        Test that entries become Python integers.
        """
        array = as_integer_matrix(np.array([[1, 2], [3, 4]], dtype=np.int64))
        assert array.dtype == object
        assert isinstance(array[0, 0], int)

    @pytest.mark.parametrize('matrix', [[], [[1, 2], [3]], np.array([[0.5, 1.0]])])
    def test_rejects(self, matrix):
        """
        Test rejecting empty, ragged and non-integer input.
        """
        with pytest.raises(ValueError):
            as_integer_matrix(matrix)


class TestBareiss:
    """
    Test fraction-free elimination.
    """

    @pytest.mark.parametrize('matrix, expected', [
        ([[2, 0], [0, 3]], 6),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
        ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 4),
        ([[0, 0, 1], [0, 1, 0], [1, 0, 0]], -1),
    ])
    def test_determinant(self, matrix, expected):
        """
        Test exact determinants, including the sign of pivot swaps.
        """
        assert determinant(matrix) == expected

    def test_determinant_matches_float(self):
        """
        Test against numpy on random small matrices.
        """
        rng = np.random.default_rng(0)
        for _ in range(20):
            matrix = rng.integers(-4, 5, size=(6, 6))
            assert determinant(matrix) == round(np.linalg.det(matrix))

    def test_large_entries(self):
        """
        Test that no entry overflows.
        """
        big = 10 ** 30
        assert determinant([[big, 1], [1, big]]) == big * big - 1

    def test_rank_and_minor(self):
        """
        Test the rank and a nonsingular minor of a singular matrix.
        """
        rank, minor, _ = bareiss_elimination([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert rank == 2
        assert minor != 0
        assert rank_over_rationals([[1, 2, 3], [2, 4, 6], [1, 0, 1]]) == 2

    def test_non_square_determinant(self):
        """
        Test rejecting a rectangular determinant.
        """
        with pytest.raises(ValueError):
            determinant([[1, 2, 3]])


class TestLocal:
    """
    Test elimination over Z/l^B and Z/l.
    """

    def test_pivot_valuations(self):
        """
        Test that pivot valuations reproduce the 2-adic valuations of the invariants.
        """
        matrix = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        assert sorted(local_pivot_valuations(matrix, 2, 4)) == [1, 1, 2]
        assert sorted(local_pivot_valuations(matrix, 3, 3)) == [0, 1, 1]

    def test_truncation(self):
        """
        Test that slots of valuation at least B are not listed.
        """
        matrix = np.diag([1, 3, 9, 27])
        assert sorted(local_pivot_valuations(matrix, 3, 2)) == [0, 1]

    def test_matches_smith_form(self):
        """
        Test against the Smith normal form on random matrices.
        """
        rng = np.random.default_rng(5)
        for _ in range(10):
            matrix = rng.integers(-8, 9, size=(8, 8)) * 2
            invariants = [x for x in smith_normal_form(matrix) if x]
            expected = sorted(v for v in (_valuation(x, 2) for x in invariants) if v < 6)
            assert sorted(local_pivot_valuations(matrix, 2, 6)) == expected

    @pytest.mark.parametrize('matrix, ell, expected', [
        ([[1, 1], [1, 1]], 2, 1),
        ([[2, 0], [0, 3]], 2, 1),
        ([[2, 0], [0, 3]], 5, 2),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 3, 1),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 5, 2),
    ])
    def test_rank_mod_prime(self, matrix, ell, expected):
        """
        Test ranks over Z/l.
        """
        assert rank_mod_prime(matrix, ell) == expected

    @pytest.mark.parametrize('matrix, ell, dim', [
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 5, 1),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 3, 2),
        ([[2, 0], [0, 3]], 5, 0),
        ([[3, 6, 9], [0, 3, 0]], 3, 3),
    ])
    def test_null_space_mod_prime(self, matrix, ell, dim):
        """
        Test that the null space over Z/l has rank-nullity dimension, solves the
        system, and comes in reduced row echelon form.
        """
        basis = null_space_mod_prime(matrix, ell)
        n_cols = len(matrix[0])
        assert basis.shape == (dim, n_cols)
        assert dim == n_cols - rank_mod_prime(matrix, ell)
        assert not np.any((np.array(matrix) @ basis.T) % ell)
        if dim:
            leads = np.argmax(basis != 0, axis=1)
            assert np.all(basis[np.arange(dim), leads] == 1)
            assert len(set(leads.tolist())) == dim


def _valuation(n, ell):
    e = 0
    while n % ell == 0:
        n //= ell
        e += 1
    return e

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Unit tests for the polar module.
"""

import logging
from fractions import Fraction

import numpy as np
import pytest

from polarsnf.errors import MTooSmallError, NotPrimePowerError, UnsupportedDimensionError
from polarsnf.ffield import PrimePower
from polarsnf.polar import (FormSpace,
                            PolarFamily,
                            PolarGraph,
                            enumerate_singular_points,
                            read_matrix,
                            standard_form,
                            write_matrix)

logging.basicConfig(level=logging.DEBUG)

################################################################################

BATTERY = [
    ('s', 2, 2, 15, 6),
    ('s', 3, 2, 40, 12),
    ('s', 2, 3, 63, 30),
    ('o', 3, 2, 40, 12),
    ('o', 5, 2, 156, 30),
    ('ominus', 2, 3, 27, 10),
    ('oplus', 2, 3, 35, 18),
    ('ue', 2, 2, 45, 12),
    ('uo', 2, 2, 165, 36),
]


class TestPolarFamily:
    """
    Test the family descriptors.
    """

    @pytest.mark.parametrize('name, expected', [
        ('s', PolarFamily.S), ('O', PolarFamily.O), ('OMinus', PolarFamily.OMINUS),
        ('oplus', PolarFamily.OPLUS), (PolarFamily.UE, PolarFamily.UE), ('uo', PolarFamily.UO),
    ])
    def test_from_string(self, name, expected):
        """
        Test looking families up by name.
        """
        assert PolarFamily.from_string(name) is expected

    def test_unknown_family(self):
        """
        Test rejecting an unknown name.
        """
        with pytest.raises(ValueError, match='Unknown polar family'):
            PolarFamily.from_string('sp')

    @pytest.mark.parametrize('family, q, m, v, k', BATTERY)
    def test_vertex_count_formula(self, family, q, m, v, k):
        """
        Test the closed-form vertex counts of the battery.
        """
        assert PolarFamily.from_string(family).vertex_count(q, m) == v

    @pytest.mark.parametrize('family, m', [('ominus', 2), ('oplus', 2), ('s', 1), ('ue', 1)])
    def test_m_too_small(self, family, m):
        """
        Test the minimum rank of each family.
        """
        with pytest.raises(MTooSmallError):
            PolarFamily.from_string(family).vertex_count(2, m)

    def test_half_integer_powers(self):
        """
        Test that only the Hermitian families accept half-integer exponents.
        """
        assert PolarFamily.UE.power(2, Fraction(3, 2)) == 8
        assert PolarFamily.S.power(3, 2) == 9
        with pytest.raises(ValueError):
            PolarFamily.O.power(3, Fraction(1, 2))

    @pytest.mark.parametrize('family, m, dimension, witt', [
        ('s', 2, 4, 2), ('o', 2, 5, 2), ('ominus', 3, 6, 2),
        ('oplus', 3, 6, 3), ('ue', 2, 4, 2), ('uo', 2, 5, 2),
    ])
    def test_dimension_and_witt_index(self, family, m, dimension, witt):
        """
        Test the ambient dimension and the Witt index of each family.
        """
        family = PolarFamily.from_string(family)
        assert family.dimension(m) == dimension
        assert family.z(m) == witt


class TestFormSpace:
    """
    Test the standard forms.
    """

    @pytest.mark.parametrize('family, q, m', [
        ('s', 2, 2), ('s', 3, 2), ('o', 3, 2), ('o', 2, 2), ('ominus', 2, 3),
        ('ominus', 3, 3), ('oplus', 2, 3), ('ue', 2, 2), ('uo', 2, 2),
    ])
    def test_witt_index(self, family, q, m):
        """
        Test that every standard form has the Witt index of its family.
        """
        space = standard_form(family, q, m, check_witt=False)
        assert space.witt_index() == space.family.z(m)

    def test_symplectic_gram_is_alternating(self):
        """
        Test that the symplectic Gram matrix is antisymmetric with zero diagonal.
        """
        space = standard_form('s', 3, 2)
        gram = space.gram
        assert not np.any((gram + gram.T) % 3)
        assert not np.any(np.diag(gram))

    def test_hermitian_pairing(self):
        """
        Test H(y, x) = conj(H(x, y)) on random vectors of GF(4)^4.
        """
        space = standard_form('ue', 2, 2)
        field = space.field
        rng = np.random.default_rng(0)
        for _ in range(50):
            x, y = rng.integers(0, 4, size=(2, 4))
            assert space.pairing(y, x) == field.conjugate(space.pairing(x, y))

    def test_singular_points_are_normalized(self):
        """
        Test the normalisation and ordering of the point list.
        """
        space = standard_form('ominus', 2, 3)
        points = enumerate_singular_points(space)
        assert points.shape == (27, 6)
        for point in points:
            assert point[np.flatnonzero(point)[0]] == 1
        assert [tuple(p) for p in points] == sorted(tuple(p) for p in points)
        assert not np.any(space.form_values(points))
        with pytest.raises(ValueError):
            points[0, 0] = 0

    def test_projective_points(self):
        """
        Test the number of normalized vectors of GF(3)^4.
        """
        space = standard_form('s', 3, 2)
        assert space.normalized_vectors().shape[0] == (3 ** 4 - 1) // 2

    def test_space_bound(self):
        """
        Test refusing a space larger than the bound.
        """
        with pytest.raises(UnsupportedDimensionError):
            FormSpace(PolarFamily.S, PrimePower(2, 1), 2, space_bound=8)

    def test_not_a_prime_power(self):
        """
        Test that q must be a prime power.
        """
        with pytest.raises(NotPrimePowerError):
            standard_form('s', 6, 2)


class TestPolarGraph:
    """
    Test the constructed graphs.
    """

    @pytest.mark.parametrize('family, q, m, v, k', BATTERY)
    def test_battery_counts(self, polar_graph, family, q, m, v, k):
        """
        Test vertex counts, regularity and connectivity on the battery.
        """
        graph = polar_graph(family, q, m)
        assert graph.num_vertices == v
        assert graph.is_regular()
        assert int(graph.degrees[0]) == k
        assert graph.is_connected()

    def test_laplacian(self, polar_graph):
        """
        Test L = kI - A with zero row sums.
        """
        graph = polar_graph('s', 2, 2)
        L = graph.laplacian
        assert set(np.diag(L).tolist()) == {6}
        assert not np.any(L.sum(axis=1))

    def test_adjacency_is_read_only(self, polar_graph):
        """
        Test that the adjacency matrix cannot be modified in place.
        """
        graph = polar_graph('s', 2, 2)
        with pytest.raises(ValueError):
            graph.adjacency[0, 1] = 1 - graph.adjacency[0, 1]

    def test_rejects_bad_adjacency(self):
        """
        Test the symmetry and zero-diagonal checks.
        """
        with pytest.raises(ValueError):
            PolarGraph(np.array([[0, 1], [0, 0]]))
        with pytest.raises(ValueError):
            PolarGraph(np.array([[1, 0], [0, 0]]))

    def test_relabeled(self, polar_graph):
        """
        Test that relabelling permutes rows, columns and points consistently.
        """
        graph = polar_graph('ue', 2, 2)
        shuffled = graph.relabeled(seed=7)
        assert shuffled.num_vertices == graph.num_vertices
        assert sorted(shuffled.degrees.tolist()) == sorted(graph.degrees.tolist())
        position = {tuple(p): i for i, p in enumerate(graph.vertices)}
        index = [position[tuple(p)] for p in shuffled.vertices]
        np.testing.assert_array_equal(shuffled.adjacency, graph.adjacency[np.ix_(index, index)])

    def test_toggled_edge(self, polar_graph):
        """
        Test that flipping one pair breaks regularity.
        """
        graph = polar_graph('s', 2, 2)
        broken = graph.with_toggled_edge(0, 1)
        assert broken.adjacency[0, 1] == 1 - graph.adjacency[0, 1]
        assert not broken.is_regular()


class TestExports:
    """
    Test the file formats.
    """

    def test_adjacency_file(self, polar_graph, tmp_path):
        """
        Test the matrix header and row count, and reading it back.
        """
        graph = polar_graph('s', 2, 2)
        path = tmp_path / 'adjacency.txt'
        graph.write_adjacency(str(path))
        lines = path.read_text().splitlines()
        assert len(lines) == 16
        assert lines[0] == '15'
        assert all(len(line.split()) == 15 for line in lines[1:])
        np.testing.assert_array_equal(read_matrix(str(path)), graph.adjacency)

    def test_laplacian_file(self, polar_graph, tmp_path):
        """
        Test the Laplacian diagonal in the written file.
        """
        graph = polar_graph('s', 2, 2)
        path = tmp_path / 'laplacian.txt'
        graph.write_laplacian(str(path))
        L = read_matrix(str(path))
        assert set(np.diag(L).tolist()) == {6}

    def test_points_file(self, polar_graph, tmp_path):
        """
        Test one tab-separated line per point.
        """
        graph = polar_graph('ominus', 2, 3)
        path = tmp_path / 'points.tsv'
        graph.write_points(str(path))
        lines = path.read_text().splitlines()
        assert len(lines) == 27
        assert all(len(line.split('\t')) == 6 for line in lines)

    def test_edgelist_file(self, polar_graph, tmp_path):
        """
        Test the networkx edge list has v k / 2 edges.
        """
        graph = polar_graph('s', 2, 2)
        path = tmp_path / 'graph.edges'
        graph.write_edgelist(str(path))
        assert len(path.read_text().splitlines()) == 15 * 6 // 2

    def test_write_matrix_is_idempotent(self, tmp_path):
        """
        Test that writing twice gives the same bytes.
        """
        matrix = np.array([[0, 1], [1, 0]])
        first, second = tmp_path / 'a.txt', tmp_path / 'b.txt'
        write_matrix(str(first), matrix)
        write_matrix(str(second), matrix)
        assert first.read_bytes() == second.read_bytes() == b'2\n0 1\n1 0\n'

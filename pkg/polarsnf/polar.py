#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module builds the six families of finite classical polar spaces in standard
coordinates, enumerates their singular projective points, and constructs the polar
graphs whose adjacency is orthogonality.
"""

import logging
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Tuple, Union

import networkx as nx
import numpy as np

from polarsnf.errors import (MTooSmallError,
                             UnsupportedDimensionError,
                             WittIndexError)
from polarsnf.ffield import (DEFAULT_FIELD_BOUND,
                             GaloisField,
                             PrimePower,
                             construct_field,
                             quadratic_extension,
                             smallest_irreducible_quadratic)
from polarsnf.mathlib.numtheory import gaussian_integer

logger = logging.getLogger(__name__)

# Above this dimension the Witt index is checked by counting points instead.
WITT_EXHAUSTIVE_MAX_DIM = 8
# Largest ambient space (number of vectors) that is enumerated.
DEFAULT_SPACE_BOUND = 2 ** 24
# Rows of a pairing block are chunked so that a block has at most this many entries.
PAIRING_BLOCK_ENTRIES = 2 ** 22

# A form term (a, b, coefficient) contributes coefficient * x_a * y_b.
FormTerm = Tuple[int, int, int]


class PolarFamily(Enum):
    """
    The six families of finite classical polar spaces. The value is the CLI name.
    """
    S = 's'
    O = 'o'
    OMINUS = 'ominus'
    OPLUS = 'oplus'
    UE = 'ue'
    UO = 'uo'

    @classmethod
    def from_string(cls, name: Union[str, 'PolarFamily']) -> 'PolarFamily':
        """
        Look a family up by its CLI name (case insensitive) or its member name.
        """
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        raise ValueError(f"Unknown polar family {name!r}. "
                         f"Choose from {[member.value for member in cls]}.")

    @property
    def label(self) -> str:
        return {'s': 'S', 'o': 'O', 'ominus': 'OMinus',
                'oplus': 'OPlus', 'ue': 'UE', 'uo': 'UO'}[self.value]

    @property
    def h(self) -> Fraction:
        return {'s': Fraction(1), 'o': Fraction(1), 'ominus': Fraction(2),
                'oplus': Fraction(0), 'ue': Fraction(1, 2), 'uo': Fraction(3, 2)}[self.value]

    @property
    def min_m(self) -> int:
        return 3 if self in (PolarFamily.OMINUS, PolarFamily.OPLUS) else 2

    @property
    def is_hermitian(self) -> bool:
        return self in (PolarFamily.UE, PolarFamily.UO)

    @property
    def is_orthogonal(self) -> bool:
        return self in (PolarFamily.O, PolarFamily.OMINUS, PolarFamily.OPLUS)

    def z(self, m: int) -> int:
        """
        The Witt index of the space of rank m.
        """
        return m - 1 if self is PolarFamily.OMINUS else m

    def dimension(self, m: int) -> int:
        return 2 * m + 1 if self in (PolarFamily.O, PolarFamily.UO) else 2 * m

    def q_tilde(self, q: int) -> int:
        return q * q if self.is_hermitian else q

    def power(self, q: int, e: Union[int, Fraction]) -> Fraction:
        """
        Evaluate q~^e exactly. Half-integer exponents occur for the Hermitian
        families, where q~^e = q^(2e).

        Args:
            q (int): The order of the base field GF(q).
            e (int or Fraction): The exponent.

        Returns:
            Fraction: The exact power.
        """
        exponent = Fraction(e) * (2 if self.is_hermitian else 1)
        if exponent.denominator != 1:
            raise ValueError(f"{self.label} has no power q~^{e} in integers of q")
        return Fraction(q) ** exponent.numerator

    def check_m(self, m: int):
        if m < self.min_m:
            raise MTooSmallError(self.label, m, self.min_m)

    def vertex_count(self, q: int, m: int) -> int:
        """
        The number of singular points, (q~^(z-1+h) + 1) [z]_q~.
        """
        self.check_m(m)
        z = self.z(m)
        count = (self.power(q, z - 1 + self.h) + 1) * gaussian_integer(z, self.q_tilde(q))
        return int(count)


def _polar_terms_of_quadratic(terms: List[FormTerm],
                              field: GaloisField,
                              ) -> List[FormTerm]:
    """
    The polar pairing B(x, y) = Q(x + y) - Q(x) - Q(y) of a quadratic form given by
    upper triangular terms, as a list of bilinear terms.
    """
    gram = {}
    for a, b, c in terms:
        if a == b:
            gram[(a, a)] = field.add(gram.get((a, a), 0), field.add(c, c))
        else:
            gram[(a, b)] = field.add(gram.get((a, b), 0), c)
            gram[(b, a)] = field.add(gram.get((b, a), 0), c)
    return [(a, b, c) for (a, b), c in sorted(gram.items()) if c]


class FormSpace:
    """
    A vector space carrying one of the six standard non-degenerate forms.

    Args:
        family (PolarFamily): The polar family.
        q (PrimePower): The order of the base field GF(q).
        m (int): The rank parameter.
        field_bound (int, optional): The largest field order accepted. Defaults to ``2**20``.
        space_bound (int, optional): The largest number of vectors enumerated.
                                     Defaults to ``2**24``.
    """

    def __init__(self,
                 family: PolarFamily,
                 q: PrimePower,
                 m: int,
                 field_bound: int = DEFAULT_FIELD_BOUND,
                 space_bound: int = DEFAULT_SPACE_BOUND,
                 ):
        self.logger = logging.getLogger(f"{self.__class__.__name__}")
        self.family = PolarFamily.from_string(family)
        self.q = q
        self.m = m
        self.family.check_m(m)
        if self.family.is_hermitian:
            self.field = quadratic_extension(q.value, bound=field_bound)
        else:
            self.field = construct_field(q.p, q.t, bound=field_bound)
        self.dim = self.family.dimension(m)
        if self.field.order ** self.dim > space_bound:
            raise UnsupportedDimensionError(
                f"{self.family.label}(q={q.value}, m={m}) lives in a space of "
                f"{self.field.order}^{self.dim} vectors, above the bound {space_bound}")
        self.quadratic_terms = self._quadratic_terms()
        self.pairing_terms = self._pairing_terms()

    def __repr__(self) -> str:
        return f"FormSpace({self.family.label}, q={self.q.value}, m={self.m})"

    # Standard forms #########################################################

    def _quadratic_terms(self) -> Optional[List[FormTerm]]:
        m, one = self.m, 1
        if self.family is PolarFamily.O:
            return [(0, 0, one)] + [(i, m + i, one) for i in range(1, m + 1)]
        if self.family is PolarFamily.OPLUS:
            return [(i, m + i, one) for i in range(m)]
        if self.family is PolarFamily.OMINUS:
            c, b = smallest_irreducible_quadratic(self.field)
            terms = [(i, m - 1 + i, one) for i in range(m - 1)]
            terms += [(2 * m - 2, 2 * m - 2, one), (2 * m - 2, 2 * m - 1, b), (2 * m - 1, 2 * m - 1, c)]
            return [term for term in terms if term[2]]
        return None

    def _pairing_terms(self) -> List[FormTerm]:
        m, n, field = self.m, self.dim, self.field
        if self.family is PolarFamily.S:
            minus_one = field.neg(1)
            return ([(i, m + i, 1) for i in range(m)]
                    + [(m + i, i, minus_one) for i in range(m)])
        if self.family.is_hermitian:
            return [(i, n - 1 - i, 1) for i in range(n)]
        return _polar_terms_of_quadratic(self.quadratic_terms, field)

    @property
    def gram(self) -> np.ndarray:
        """
        The Gram matrix of the polar pairing as field encodings. For the Hermitian
        families the pairing is ``x G conj(y)^T``.
        """
        gram = np.zeros((self.dim, self.dim), dtype=np.int64)
        for a, b, c in self.pairing_terms:
            gram[a, b] = c
        return gram

    # Evaluation #############################################################

    def _second_argument(self, y: np.ndarray) -> np.ndarray:
        return self.field.vconj(y) if self.family.is_hermitian else y

    def pairing(self, x: np.ndarray, y: np.ndarray) -> int:
        """
        The polar pairing of two coordinate vectors.
        """
        x, y = np.asarray(x), self._second_argument(np.asarray(y))
        value = 0
        for a, b, c in self.pairing_terms:
            value = self.field.add(value, self.field.mul(self.field.mul(int(x[a]), c), int(y[b])))
        return value

    def pairing_matrix(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """
        The matrix of pairings between the rows of X and the rows of Y.

        Args:
            X (np.ndarray): An ``N x dim`` array of coordinates.
            Y (np.ndarray): An ``M x dim`` array of coordinates.

        Returns:
            np.ndarray: The ``N x M`` array of pairing values.
        """
        X, Y = np.asarray(X), self._second_argument(np.asarray(Y))
        field = self.field
        out = np.zeros((X.shape[0], Y.shape[0]), dtype=np.int64)
        step = max(1, PAIRING_BLOCK_ENTRIES // max(1, Y.shape[0]))
        for start in range(0, X.shape[0], step):
            block = X[start:start + step]
            acc = np.zeros((block.shape[0], Y.shape[0]), dtype=np.int64)
            for a, b, c in self.pairing_terms:
                left = field.vmul(block[:, a], np.full(block.shape[0], c))
                acc = field.vadd(acc, field.vmul(left[:, None], Y[None, :, b]))
            out[start:start + step] = acc
        return out

    def form_values(self, X: np.ndarray) -> np.ndarray:
        """
        Evaluate the form deciding singularity on each row: Q(x) for orthogonal
        spaces, H(x, x) for Hermitian spaces, and 0 for symplectic spaces.
        """
        X = np.asarray(X)
        field = self.field
        values = np.zeros(X.shape[0], dtype=np.int64)
        if self.family is PolarFamily.S:
            return values
        if self.family.is_hermitian:
            terms, Y = self.pairing_terms, field.vconj(X)
        else:
            terms, Y = self.quadratic_terms, X
        for a, b, c in terms:
            left = field.vmul(X[:, a], np.full(X.shape[0], c))
            values = field.vadd(values, field.vmul(left, Y[:, b]))
        return values

    # Points #################################################################

    def normalized_vectors(self) -> np.ndarray:
        """
        All vectors whose first nonzero coordinate is 1, sorted lexicographically by
        the coordinate encodings.
        """
        order, n = self.field.order, self.dim
        blocks = []
        for lead in range(n):
            tail = n - lead - 1
            codes = np.arange(order ** tail, dtype=np.int64)
            powers = order ** np.arange(tail - 1, -1, -1, dtype=np.int64)
            block = np.zeros((codes.size, n), dtype=np.int64)
            block[:, lead] = 1
            if tail:
                block[:, lead + 1:] = (codes[:, None] // powers[None, :]) % order
            blocks.append(block)
        vectors = np.concatenate(blocks)
        return vectors[np.lexsort(vectors.T[::-1])]

    @cached_property
    def singular_points(self) -> np.ndarray:
        vectors = self.normalized_vectors()
        points = vectors[self.form_values(vectors) == 0]
        points.setflags(write=False)
        self.logger.debug(f"{self!r}: {points.shape[0]} singular points "
                          f"out of {vectors.shape[0]} projective points")
        return points

    # Witt index #############################################################

    def _span(self, basis: List[np.ndarray]) -> np.ndarray:
        field = self.field
        span = np.zeros((1, self.dim), dtype=np.int64)
        for vector in basis:
            shifted = [field.vadd(span, field.vmul(np.full(span.shape, c), vector[None, :]))
                       for c in field.elements()]
            span = np.concatenate(shifted)
        return span

    def maximal_singular_subspace(self) -> List[np.ndarray]:
        """
        Greedily extend a totally singular subspace through the sorted singular
        points until no point extends it. By Witt's theorem every maximal totally
        singular subspace has the same dimension.

        Returns:
            list: A basis of a maximal totally singular subspace.
        """
        points = self.singular_points
        basis: List[np.ndarray] = []
        spanned = {tuple(np.zeros(self.dim, dtype=np.int64))}
        while True:
            if basis:
                orthogonal = np.all(self.pairing_matrix(points, np.array(basis)) == 0, axis=1)
            else:
                orthogonal = np.ones(points.shape[0], dtype=bool)
            candidate = next((point for point, ok in zip(points, orthogonal)
                              if ok and tuple(point) not in spanned), None)
            if candidate is None:
                return basis
            basis.append(candidate)
            spanned = {tuple(vector) for vector in self._span(basis)}

    def witt_index(self) -> int:
        """
        The Witt index, by exhaustive greedy search in small dimension and by the
        point-count identity otherwise.
        """
        if self.dim <= WITT_EXHAUSTIVE_MAX_DIM:
            return len(self.maximal_singular_subspace())
        expected = self.family.vertex_count(self.q.value, self.m)
        if self.singular_points.shape[0] != expected:
            raise WittIndexError(f"{self!r} has {self.singular_points.shape[0]} singular points, "
                                 f"expected {expected}")
        return self.family.z(self.m)

    def check_witt_index(self):
        z = self.family.z(self.m)
        index = self.witt_index()
        if index != z:
            raise WittIndexError(f"{self!r} has Witt index {index}, expected {z}")


def standard_form(family: Union[PolarFamily, str],
                  q: Union[PrimePower, int],
                  m: int,
                  field_bound: int = DEFAULT_FIELD_BOUND,
                  check_witt: bool = True,
                  ) -> FormSpace:
    """
    Build the standard form space of a polar family.

    Args:
        family (PolarFamily or str): The family.
        q (PrimePower or int): The order of the base field.
        m (int): The rank parameter.
        field_bound (int, optional): The largest field order accepted. Defaults to ``2**20``.
        check_witt (bool, optional): Verify the Witt index. Defaults to ``True``.

    Returns:
        FormSpace: The form space.
    """
    family = PolarFamily.from_string(family)
    if not isinstance(q, PrimePower):
        q = PrimePower.from_int(q)
    space = FormSpace(family, q, m, field_bound=field_bound)
    if check_witt:
        space.check_witt_index()
    return space


def enumerate_singular_points(space: FormSpace) -> np.ndarray:
    """
    The normalized singular points of a form space, sorted by coordinate encodings.

    Args:
        space (FormSpace): The form space.

    Returns:
        np.ndarray: A read-only ``N x dim`` array, one point per row.
    """
    return space.singular_points


class PolarGraph:
    """
    A graph given by an ordered vertex list and a symmetric 0/1 adjacency matrix.

    Args:
        adjacency (np.ndarray): The adjacency matrix.
        vertices (np.ndarray, optional): Vertex coordinates, one row per vertex.
        space (FormSpace, optional): The form space the graph was built from.
    """

    def __init__(self,
                 adjacency: np.ndarray,
                 vertices: Optional[np.ndarray] = None,
                 space: Optional[FormSpace] = None,
                 ):
        adjacency = np.array(adjacency, dtype=np.int64)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise ValueError(f"Expect a square adjacency matrix, got shape {adjacency.shape}.")
        if not np.array_equal(adjacency, adjacency.T) or np.any(np.diag(adjacency)):
            raise ValueError("Expect a symmetric adjacency matrix with zero diagonal.")
        self.adjacency = adjacency
        self.adjacency.setflags(write=False)
        self.vertices = vertices
        self.space = space

    def __repr__(self) -> str:
        name = repr(self.space) if self.space is not None else 'graph'
        return f"PolarGraph({name}, n={self.num_vertices})"

    @property
    def num_vertices(self) -> int:
        return self.adjacency.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def is_regular(self) -> bool:
        degrees = self.degrees
        return bool(np.all(degrees == degrees[0]))

    @property
    def laplacian(self) -> np.ndarray:
        """
        The Laplacian D - A, which is kI - A for a k-regular graph.
        """
        return np.diag(self.degrees) - self.adjacency

    def to_networkx(self) -> nx.Graph:
        return nx.from_numpy_array(np.asarray(self.adjacency))

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def relabeled(self, seed: int = 0) -> 'PolarGraph':
        """
        The same graph with its vertices shuffled by a seeded random permutation.
        """
        permutation = np.random.default_rng(seed).permutation(self.num_vertices)
        vertices = self.vertices[permutation] if self.vertices is not None else None
        return PolarGraph(self.adjacency[np.ix_(permutation, permutation)],
                          vertices=vertices,
                          space=self.space)

    def with_toggled_edge(self, i: int, j: int) -> 'PolarGraph':
        """
        The graph with the pair {i, j} flipped between edge and non-edge.
        """
        adjacency = np.array(self.adjacency)
        adjacency[i, j] = adjacency[j, i] = 1 - adjacency[i, j]
        return PolarGraph(adjacency, vertices=self.vertices, space=self.space)

    # Exports ################################################################

    def write_adjacency(self, path: str):
        write_matrix(path, self.adjacency)

    def write_laplacian(self, path: str):
        write_matrix(path, self.laplacian)

    def write_points(self, path: str):
        """
        Write one line per vertex with its coordinate encodings separated by tabs.
        """
        if self.vertices is None:
            raise ValueError("This graph carries no vertex coordinates.")
        with open(path, 'w') as f:
            for point in self.vertices:
                f.write('\t'.join(str(int(c)) for c in point) + '\n')

    def write_edgelist(self, path: str):
        nx.write_edgelist(self.to_networkx(), path, data=False)


def write_matrix(path: str, matrix: np.ndarray):
    """
    Write a square integer matrix: a first line with n, then n lines of n
    space-separated entries.
    """
    matrix = np.asarray(matrix)
    with open(path, 'w') as f:
        f.write(f"{matrix.shape[0]}\n")
        for row in matrix:
            f.write(' '.join(str(int(x)) for x in row) + '\n')


def read_matrix(path: str) -> np.ndarray:
    """
    Read a matrix written by :func:`write_matrix`.
    """
    with open(path) as f:
        n = int(f.readline())
        rows = [[int(x) for x in f.readline().split()] for _ in range(n)]
    return np.array(rows, dtype=np.int64)


def build_graph(family: Union[PolarFamily, str],
                q: Union[PrimePower, int],
                m: int,
                field_bound: int = DEFAULT_FIELD_BOUND,
                check_witt: bool = True,
                ) -> PolarGraph:
    """
    Build the polar graph of a family: vertices are the singular points and two
    distinct points are adjacent if they are orthogonal.

    Args:
        family (PolarFamily or str): The family.
        q (PrimePower or int): The order of the base field.
        m (int): The rank parameter.
        field_bound (int, optional): The largest field order accepted. Defaults to ``2**20``.
        check_witt (bool, optional): Verify the Witt index of the form. Defaults to ``True``.

    Returns:
        PolarGraph: The polar graph.
    """
    space = standard_form(family, q, m, field_bound=field_bound, check_witt=check_witt)
    points = enumerate_singular_points(space)
    adjacency = (space.pairing_matrix(points, points) == 0).astype(np.int64)
    np.fill_diagonal(adjacency, 0)
    graph = PolarGraph(adjacency, vertices=points, space=space)
    logger.info(f"Built {graph!r} with degree {int(graph.degrees[0])}")
    return graph

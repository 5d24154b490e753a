#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Unit tests for the ffield module.
"""

import logging

import galois
import numpy as np
import pytest

from polarsnf.errors import (DegreeTooLargeError,
                             NotPrimeError,
                             NotPrimePowerError,
                             NotQuadraticExtensionError)
from polarsnf.ffield import (GaloisField,
                             PrimePower,
                             conjugate,
                             construct_field,
                             field_norm,
                             is_irreducible,
                             quadratic_extension,
                             smallest_irreducible,
                             smallest_irreducible_quadratic)

logging.basicConfig(level=logging.DEBUG)

################################################################################


@pytest.fixture(params=[(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)])
def field(request):
    """
    Small fields GF(p^t).
    """
    p, t = request.param
    return construct_field(p, t)


class TestPrimePower:
    """
    Test the prime power container.
    """

    @pytest.mark.parametrize('q, p, t', [(2, 2, 1), (4, 2, 2), (9, 3, 2), (125, 5, 3)])
    def test_from_int(self, q, p, t):
        """
        Test splitting a prime power.
        """
        pp = PrimePower.from_int(q)
        assert (pp.p, pp.t, pp.value) == (p, t, q)

    @pytest.mark.parametrize('q', [1, 6, 12, 0])
    def test_not_a_prime_power(self, q):
        """
        Test rejecting integers that are not prime powers.
        """
        with pytest.raises(NotPrimePowerError, match='q must be a prime power'):
            PrimePower.from_int(q)

    def test_not_prime(self):
        """
        Test rejecting a composite characteristic.
        """
        with pytest.raises(NotPrimeError):
            PrimePower(4, 1)


class TestIrreducible:
    """
    Test the irreducible polynomial search.
    """

    def test_gf4_modulus(self):
        """
        Test that x^2 + x + 1 is the modulus of GF(4).
        """
        assert smallest_irreducible(2, 2) == (1, 1, 1)

    def test_gf9_modulus(self):
        """
        Test that x^2 + 1 is the modulus of GF(9).
        """
        assert smallest_irreducible(3, 2) == (1, 0, 1)

    @pytest.mark.parametrize('p, t', [(3, 2), (2, 3), (5, 2)])
    def test_field_uses_modulus(self, p, t):
        """
        Test that the field class is built on the chosen modulus, not the default one.
        """
        field = construct_field(p, t)
        expected = galois.Poly(list(smallest_irreducible(p, t))[::-1], field=galois.GF(p))
        assert field.GF.irreducible_poly == expected
        assert field.GF.order == p ** t

    @pytest.mark.parametrize('coefficients, p, expected', [
        ((1, 0, 1), 2, False),
        ((1, 1, 1), 2, True),
        ((1, 1, 0, 1), 2, True),
        ((1, 0, 0, 1), 2, False),
        ((2, 0, 1), 3, False),
        ((1, 0, 1), 3, True),
        ((1, 0, 1, 0, 1), 2, False),
    ])
    def test_is_irreducible(self, coefficients, p, expected):
        """
        Test the factor search on small polynomials.
        """
        assert is_irreducible(coefficients, p) is expected


class TestGaloisField:
    """
    Test the field arithmetic.
    """

    def test_gf4_multiplication(self):
        """
        Test x * x = x + 1 in GF(4).
        """
        gf4 = construct_field(2, 2)
        assert gf4.mul(2, 2) == 3
        assert gf4.add(2, 3) == 1

    def test_gf9_generator(self):
        """
        Test that GF(9) has a generator of order 8.
        """
        gf9 = construct_field(3, 2)
        assert gf9.order == 9
        assert gf9.multiplicative_order(gf9.primitive_element) == 8

    def test_field_axioms(self, field):
        """
        Test inverses, distributivity and commutativity exhaustively.
        """
        elements = list(field.elements())
        for a in elements:
            assert field.add(a, field.neg(a)) == 0
            if a:
                assert field.mul(a, field.inv(a)) == 1
            for b in elements:
                assert field.mul(a, b) == field.mul(b, a)
                assert field.add(a, b) == field.add(b, a)
        for a in elements[:5]:
            for b in elements[:5]:
                for c in elements:
                    assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))

    def test_frobenius_is_additive(self, field):
        """
        Test (a + b)^p = a^p + b^p.
        """
        p = field.p
        for a in field.elements():
            for b in field.elements():
                assert field.pow(field.add(a, b), p) == field.add(field.pow(a, p), field.pow(b, p))

    def test_vectorised_matches_scalar(self, field):
        """
        Test the array operations against the scalar ones.
        """
        a, b = np.meshgrid(np.arange(field.order), np.arange(field.order))
        a, b = a.ravel(), b.ravel()
        expected_add = [field.add(int(x), int(y)) for x, y in zip(a, b)]
        expected_mul = [field.mul(int(x), int(y)) for x, y in zip(a, b)]
        np.testing.assert_array_equal(field.vadd(a, b), expected_add)
        np.testing.assert_array_equal(field.vmul(a, b), expected_mul)
        np.testing.assert_array_equal(field.vneg(a), [field.neg(int(x)) for x in a])

    def test_encode_decode(self):
        """
        Test the base-p coefficient encoding.
        """
        gf8 = construct_field(2, 3)
        assert gf8.encode((1, 0, 1)) == 5
        assert gf8.decode(6) == (0, 1, 1)

    def test_zero_has_no_inverse(self):
        """
        Test that inverting zero raises.
        """
        with pytest.raises(ZeroDivisionError):
            construct_field(5, 1).inv(0)

    def test_size_bound(self):
        """
        Test the field size bound.
        """
        with pytest.raises(DegreeTooLargeError):
            GaloisField(2, 10, bound=2 ** 8)


class TestQuadraticExtension:
    """
    Test conjugation and the norm on GF(q^2).
    """

    def test_gf4_conjugation(self):
        """
        Test conj(x) = x + 1 and N(x) = 1 in GF(4).
        """
        gf4 = quadratic_extension(2)
        assert conjugate(gf4, 2) == 3
        assert field_norm(gf4, 2) == 1

    @pytest.mark.parametrize('q', [2, 3, 4, 5])
    def test_involution_and_norm(self, q):
        """
        Test that conjugation is an involution fixing exactly GF(q), and that the
        norm lands in GF(q) and is multiplicative.
        """
        field = quadratic_extension(q)
        subfield = set(field.subfield_elements())
        assert len(subfield) == q
        for a in field.elements():
            assert field.conjugate(field.conjugate(a)) == a
            assert field.in_subfield(a) == (a in subfield)
            assert field.norm(a) in subfield
        for a in range(1, field.order, 3):
            for b in range(1, field.order, 2):
                assert field.norm(field.mul(a, b)) == field.mul(field.norm(a), field.norm(b))

    @pytest.mark.parametrize('q', [2, 3, 4])
    def test_norm_is_surjective(self, q):
        """
        Test that every element of GF(q)^* is a norm of exactly q + 1 elements.
        """
        field = quadratic_extension(q)
        counts = {}
        for a in range(1, field.order):
            norm = field.norm(a)
            counts[norm] = counts.get(norm, 0) + 1
        assert len(counts) == q - 1
        assert set(counts.values()) == {q + 1}

    def test_conjugation_needs_extension(self):
        """
        Test that a plain field refuses conjugation.
        """
        with pytest.raises(NotQuadraticExtensionError):
            construct_field(2, 2).conjugate(1)

    @pytest.mark.parametrize('p, t', [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)])
    def test_irreducible_quadratic(self, p, t):
        """
        Test that the chosen quadratic has no root.
        """
        field = construct_field(p, t)
        c, b = smallest_irreducible_quadratic(field)
        for x in field.elements():
            assert field.add(field.add(field.mul(x, x), field.mul(b, x)), c) != 0

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module keeps the printed forms of the unitary and hyperbolic constants next
to the values the predictor actually uses. Several printed forms are wrong; they
stay available as a display layer and as named typos that can be switched back on
to exercise the verifier.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, Union

from polarsnf.mathlib.numtheory import gaussian_integer
from polarsnf.polar import PolarFamily
from polarsnf.srg import spectrum

logger = logging.getLogger(__name__)

# Injectable typos and what each one re-enables.
TYPOS = {
    'tableue-g': "unitary-even g printed with denominator q - 1",
    'tableue-x': "unitary-even x printed as (q^2m - 1)(q^(2m-1) + 1) / ((q^2 - 1)(q - 1))",
    'tableuo-g': "unitary-odd g printed as q^2 [m-1]_(q^2) (q^(2m-2) - 1) / (q - 1)",
    'tableuo-d': "unitary-odd Smith d printed as v_l(q^(2m+1) + 1)",
    'tableopo-b': "hyperbolic, l odd, m odd: top exponent printed as a + b with b = v_l([m]_q)",
}


def check_typos(typos: Iterable[str]) -> frozenset:
    """
    Validate typo names.

    Raises:
        ValueError: For an unknown name.
    """
    names = frozenset(typos)
    unknown = sorted(names - set(TYPOS))
    if unknown:
        raise ValueError(f"Unknown typo(s) {unknown}. Choose from {sorted(TYPOS)}.")
    return names


def _as_number(value: Fraction) -> Union[int, str]:
    return value.numerator if value.denominator == 1 else str(value)


def unitary_even_y(q: int, m: int) -> int:
    return (q ** (2 * m) - 1) * (q ** (2 * m - 1) - q) // (q + 1) ** 2


def printed_unitary_even_g(q: int, m: int) -> Fraction:
    return Fraction(q ** 3 * gaussian_integer(m - 1, q * q) * (q ** (2 * m - 1) + 1), q - 1)


def printed_unitary_even_x(q: int, m: int) -> Fraction:
    return Fraction((q ** (2 * m) - 1) * (q ** (2 * m - 1) + 1), (q * q - 1) * (q - 1))


def printed_unitary_odd_g(q: int, m: int) -> Fraction:
    return Fraction(q * q * gaussian_integer(m - 1, q * q) * (q ** (2 * m - 2) - 1), q - 1)


def injected_integer(value: Fraction) -> int:
    """
    A printed constant coerced to an integer so it can drive a branch.
    """
    return value.numerator // value.denominator


def display_constants(family: Union[PolarFamily, str],
                      q: int,
                      m: int,
                      ) -> Dict[str, dict]:
    """
    The printed constants that differ from the ones in use.

    Args:
        family (PolarFamily or str): The family.
        q (int): The order of the base field.
        m (int): The rank parameter.

    Returns:
        dict: ``name -> {"printed": ..., "used": ...}``.
    """
    family = PolarFamily.from_string(family)
    display = {}
    if family is PolarFamily.UE:
        spec = spectrum(family, q, m)
        used_x = spec.g - unitary_even_y(q, m)
        for name, printed, used in (('g', printed_unitary_even_g(q, m), spec.g),
                                    ('x', printed_unitary_even_x(q, m), used_x)):
            if printed != used:
                display[name] = {'printed': _as_number(printed), 'used': used}
    elif family is PolarFamily.UO:
        spec = spectrum(family, q, m)
        printed = printed_unitary_odd_g(q, m)
        if printed != spec.g:
            display['g'] = {'printed': _as_number(printed), 'used': spec.g}
        display['d'] = {'printed': 'v_l(q^(2m+1) + 1)', 'used': 'v_l(q^(2m-1) + 1)'}
    elif family is PolarFamily.OPLUS:
        display['top exponent'] = {'printed': 'a + b', 'used': 'a + d'}
    for name, entry in display.items():
        logger.debug(f"{family.label}(q={q}, m={m}): printed {name} = {entry['printed']}, "
                     f"using {entry['used']}")
    return display

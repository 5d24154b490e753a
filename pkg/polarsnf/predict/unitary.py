#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Branches for the nilpotent primes of the Hermitian families, which are exactly the
primes dividing q + 1, and the dimension constant x of the even Hermitian family.
"""

import logging
from typing import Tuple

import numpy as np

from polarsnf.mathlib.intmat import rank_mod_prime
from polarsnf.polar import PolarGraph
from polarsnf.predict.base import (BranchRegistry,
                                   PredictionContext,
                                   ProfileTally,
                                   ValuationParams)
from polarsnf.predict.tables import (injected_integer,
                                     printed_unitary_even_g,
                                     printed_unitary_even_x,
                                     printed_unitary_odd_g,
                                     unitary_even_y)
from polarsnf.srg import spectrum

logger = logging.getLogger(__name__)


def unitary_even_x(q: int, m: int) -> int:
    """
    Closed form of x = g - y for the even Hermitian family.
    """
    return spectrum('ue', q, m).g - unitary_even_y(q, m)


def unitary_x(graph: PolarGraph, ell: int) -> int:
    """
    Operational x: the rank of J - A over Z/ell minus one.

    Args:
        graph (PolarGraph): A constructed graph of the even Hermitian family.
        ell (int): A prime dividing q + 1.

    Returns:
        int: The dimension constant.
    """
    A = graph.adjacency
    return rank_mod_prime(np.ones_like(A) - A, ell) - 1


def _case(ctx: PredictionContext) -> str:
    if (ctx.m - 1) % ctx.ell == 0:
        return 'ell|m-1'
    if ctx.m % ctx.ell == 0:
        return 'ell|m'
    return 'ell!|m'


@BranchRegistry.register('ue')
def unitary_even(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    """
    The even Hermitian family at ell dividing q + 1.
    """
    q, m, f = ctx.q, ctx.m, ctx.f
    if (q + 1) % ctx.ell:
        raise ctx.unhandled("a nilpotent prime must divide q + 1")
    g = injected_integer(printed_unitary_even_g(q, m)) if ctx.injected('tableue-g') else ctx.g
    if ctx.injected('tableue-x'):
        x = injected_integer(printed_unitary_even_x(q, m))
    else:
        x = ctx.g - unitary_even_y(q, m)
    qq = q * q
    case = _case(ctx)
    d = ctx.v(q ** (2 * m - 3) + 1)
    if ctx.smith:
        w = ctx.v(qq - 1)
        if case == 'ell|m-1':
            a = ctx.v(ctx.gauss(m - 1, qq))
            tally = ctx.tally('sec11', case, 'a!=d' if a != d else 'a=d')
            if a != d:
                tally.put(0, x).put(a, 1).put(d, g - x)
            else:
                tally.put(0, x).put(a, g + 1 - x)
            tally.put(w + a, f - x - 1).put(w + a + d, x + 1)
            return tally, ValuationParams(a=a, d=d, w=w, x=x, f=f, g=g)
        tally = ctx.tally('sec11', case, 'w!=d' if w != d else 'w=d')
        if w != d:
            tally.put(0, x + 1).put(w, f - x - 1).put(d, g - x).put(w + d, x + 1)
        else:
            tally.put(0, x + 1).put(w, f + g - 2 * x - 1).put(w + d, x + 1)
        return tally, ValuationParams(d=d, w=w, x=x, f=f, g=g)
    c = ctx.v(q ** (2 * m - 1) + 1)
    if case == 'ell|m-1':
        a = ctx.v(ctx.gauss(m - 1, qq))
        tally = ctx.tally('sec11', case, 'a!=c' if a != c else 'a=c')
        if a != c:
            tally.put(0, x).put(a, 1).put(c, g - x)
        else:
            tally.put(0, x).put(c, g + 1 - x)
        tally.put(a + d, f - x - 1).put(a + c + d, x)
        return tally, ValuationParams(a=a, c=c, d=d, x=x, f=f, g=g)
    if case == 'ell|m':
        b = ctx.v(ctx.gauss(m, qq))
        tally = ctx.tally('sec11', case, 'b!=d' if b != d else 'b=d')
        if b != d:
            tally.put(0, x + 1).put(d, f - x - 1).put(b + d, g - x).put(2 * d, 1).put(b + 2 * d, x - 1)
        else:
            tally.put(0, x + 1).put(b, f - x - 1).put(2 * b, g - x + 1).put(3 * b, x - 1)
        return tally, ValuationParams(b=b, d=d, x=x, f=f, g=g)
    tally = ctx.tally('sec11', case, 'c!=d' if c != d else 'c=d')
    if c != d:
        tally.put(0, x + 1).put(c, f - x - 1).put(d, g - x).put(c + d, x)
    else:
        tally.put(0, x + 1).put(c, f + g - 2 * x - 1).put(c + d, x)
    return tally, ValuationParams(c=c, d=d, x=x, f=f, g=g)


@BranchRegistry.register('uo')
def unitary_odd(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    """
    The odd Hermitian family at ell dividing q + 1. The valuations follow the actual
    eigenvalues: s = -(q^(2m-1) + 1) and t = [m-1]_(q^2) (q^(2m+1) + 1).
    """
    q, m, f = ctx.q, ctx.m, ctx.f
    if (q + 1) % ctx.ell:
        raise ctx.unhandled("a nilpotent prime must divide q + 1")
    g = injected_integer(printed_unitary_odd_g(q, m)) if ctx.injected('tableuo-g') else ctx.g
    qq = q * q
    a = ctx.v(ctx.gauss(m - 1, qq))
    ell_divides_m = m % ctx.ell == 0
    if ctx.smith:
        w = ctx.v(qq - 1)
        exponent = 2 * m + 1 if ctx.injected('tableuo-d') else 2 * m - 1
        d = ctx.v(q ** exponent + 1)
        if ell_divides_m or a == 0:
            tally = ctx.tally('sec12', 'ell|m' if ell_divides_m else 'ell!|m', 'a=0')
            tally.put(0, g + 1).put(w, f - g - 1).put(w + d, g + 1)
        else:
            tally = ctx.tally('sec12', 'ell!|m')
            tally.put(0, g).put(a, 1).put(w + a, f - g - 1).put(w + a + d, g + 1)
        return tally, ValuationParams(a=a, d=d, w=w, f=f, g=g)
    c = ctx.v(q ** (2 * m - 1) + 1)
    d = ctx.v(q ** (2 * m + 1) + 1)
    if ell_divides_m:
        b = ctx.v(ctx.gauss(m, qq))
        tally = ctx.tally('sec12', 'ell|m')
        tally.put(0, g + 1).put(d, f - g - 1).put(2 * d, 1).put(b + 2 * d, g - 1)
        return tally, ValuationParams(a=a, b=b, d=d, f=f, g=g)
    if a == 0:
        tally = ctx.tally('sec12', 'ell!|m', 'a=0')
        tally.put(0, g + 1).put(d, f - g - 1).put(c + d, g)
    else:
        tally = ctx.tally('sec12', 'ell!|m')
        tally.put(0, g).put(a, 1).put(a + d, f - g - 1).put(a + c + d, g)
    return tally, ValuationParams(a=a, c=c, d=d, f=f, g=g)

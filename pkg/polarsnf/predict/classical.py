#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Branches for the nilpotent primes of the symplectic and orthogonal families.

Each branch spells out its coincidence subcases; the tally rejects any other
coincident exponent.
"""

import logging
from typing import Tuple

from polarsnf.predict.base import (BranchRegistry,
                                   PredictionContext,
                                   ProfileTally,
                                   ValuationParams)

logger = logging.getLogger(__name__)


def parabolic_x(q: int, m: int) -> int:
    """
    The dimension constant x = (q^2m - q^2) / (q^2 - 1) of the parabolic family.
    """
    return (q ** (2 * m) - q ** 2) // (q ** 2 - 1)


@BranchRegistry.register('s')
def symplectic(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    """
    The symplectic family at ell = 2, q odd.
    """
    q, m, f, g = ctx.q, ctx.m, ctx.f, ctx.g
    if ctx.ell != 2:
        raise ctx.unhandled("only ell = 2 is nilpotent")
    w = ctx.v(q - 1)
    if ctx.smith:
        if m % 2 == 0:
            d = ctx.v(q ** (m - 1) + 1)
            tally = ctx.tally('sec7', 'meven')
            tally.put(0, g + 1).put(w, f - g - 1).put(d + w, g + 1)
            return tally, ValuationParams(d=d, w=w, f=f, g=g)
        a = ctx.v(ctx.gauss(m - 1))
        tally = ctx.tally('sec7', 'modd')
        tally.put(0, g).put(a, 1).put(a + w, f - g - 1).put(a + w + 1, g + 1)
        return tally, ValuationParams(a=a, w=w, f=f, g=g)
    if m % 2 == 0:
        b, d = ctx.v(ctx.gauss(m)), ctx.v(q ** (m - 1) + 1)
        tally = ctx.tally('sec7', 'meven')
        tally.put(0, g + 1).put(1, f - g - 1).put(d + 1, 1).put(b + d + 1, g - 1)
        return tally, ValuationParams(b=b, d=d, f=f, g=g)
    a, c = ctx.v(ctx.gauss(m - 1)), ctx.v(q ** m + 1)
    tally = ctx.tally('sec7', 'modd')
    tally.put(0, g).put(a, 1).put(a + c, f - g - 1).put(a + c + 1, g)
    return tally, ValuationParams(a=a, c=c, f=f, g=g)


@BranchRegistry.register('o')
def parabolic(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    """
    The parabolic family at ell = 2, q odd. Shares its spectrum with the
    symplectic family but not its 2-profiles.
    """
    q, m, f, g = ctx.q, ctx.m, ctx.f, ctx.g
    if ctx.ell != 2:
        raise ctx.unhandled("only ell = 2 is nilpotent")
    x = parabolic_x(q, m)
    w = ctx.v(q - 1)
    if m % 2 == 0:
        d = ctx.v(q ** (m - 1) + 1)
        if ctx.smith:
            # q - 1 and q + 1 never share their 2-adic valuation, so w != d.
            tally = ctx.tally('sec8', 'meven', 'w=1' if w == 1 else 'w>1')
            tally.put(0, x + 1).put(w, f - x - 1).put(d, g - x).put(w + d, x + 1)
            return tally, ValuationParams(d=d, w=w, x=x, f=f, g=g)
        b = ctx.v(ctx.gauss(m))
        if b > 1:
            tally = ctx.tally('sec8', 'meven', 'b>1')
            tally.put(0, x + 1).put(1, f - x - 1).put(d + 1, 1).put(d + b, g - x).put(d + b + 1, x - 1)
        else:
            tally = ctx.tally('sec8', 'meven', 'b=1')
            tally.put(0, x + 1).put(1, f - x - 1).put(d + 1, g + 1 - x).put(d + 2, x - 1)
        return tally, ValuationParams(b=b, d=d, x=x, f=f, g=g)
    a = ctx.v(ctx.gauss(m - 1))
    if ctx.smith:
        if a > 1:
            tally = ctx.tally('sec8', 'modd', 'a>1')
            tally.put(0, x).put(1, g - x).put(a, 1).put(a + w, f - x - 1).put(a + w + 1, x + 1)
        else:
            tally = ctx.tally('sec8', 'modd', 'a=1')
            tally.put(0, x).put(1, g + 1 - x).put(1 + w, f - x - 1).put(2 + w, x + 1)
        return tally, ValuationParams(a=a, w=w, x=x, f=f, g=g)
    c = ctx.v(q ** m + 1)
    if a > 1:
        tally = ctx.tally('sec8', 'modd', 'a>1')
        tally.put(0, x).put(1, g - x).put(a, 1).put(a + c, f - x - 1).put(a + c + 1, x)
    else:
        tally = ctx.tally('sec8', 'modd', 'a=1')
        tally.put(0, x).put(1, g - x + 1).put(a + c, f - x - 1).put(a + c + 1, x)
    return tally, ValuationParams(a=a, c=c, x=x, f=f, g=g)


@BranchRegistry.register('ominus')
def elliptic(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    """
    The elliptic family at ell = 2 (q odd) and at odd ell dividing q + 1.
    """
    q, m, f, g = ctx.q, ctx.m, ctx.f, ctx.g
    if ctx.ell == 2:
        w = ctx.v(q - 1)
        if m % 2 == 1:
            if ctx.smith:
                tally = ctx.tally('sec9', 'modd', 'ell=2')
                tally.put(0, g + 1).put(w, f - g - 1).put(w + 1, g + 1)
                return tally, ValuationParams(w=w, f=f, g=g)
            b, c = ctx.v(ctx.gauss(m - 1)), ctx.v(q ** m + 1)
            tally = ctx.tally('sec9', 'modd', 'ell=2')
            tally.put(0, g + 1).put(c, f - g - 1).put(c + 1, 1).put(b + c + 1, g - 1)
            return tally, ValuationParams(b=b, c=c, f=f, g=g)
        a, d = ctx.v(ctx.gauss(m - 2)), ctx.v(q ** (m - 1) + 1)
        tally = ctx.tally('sec9', 'meven', 'ell=2')
        if ctx.smith:
            tally.put(0, g).put(a, 1).put(a + w, f - g - 1).put(a + d + w, g + 1)
            return tally, ValuationParams(a=a, d=d, w=w, f=f, g=g)
        tally.put(0, g).put(a, 1).put(a + 1, f - g - 1).put(a + d + 1, g)
        return tally, ValuationParams(a=a, d=d, f=f, g=g)
    if (q + 1) % ctx.ell:
        raise ctx.unhandled("an odd nilpotent prime must divide q + 1")
    if m % 2 == 0:
        a, d = ctx.v(ctx.gauss(m - 2)), ctx.v(q ** (m - 1) + 1)
        tally = ctx.tally('sec9', 'meven', 'ell|q+1')
        tally.put(0, g).put(a, f - g).put(a + d, g + 1 if ctx.smith else g)
        return tally, ValuationParams(a=a, d=d, f=f, g=g)
    if ctx.smith:
        raise ctx.unhandled("A is not nilpotent for m odd")
    b, c = ctx.v(ctx.gauss(m - 1)), ctx.v(q ** m + 1)
    tally = ctx.tally('sec9', 'modd', 'ell|q+1')
    tally.put(0, g + 1).put(c, f - g).put(b + c, g - 1)
    return tally, ValuationParams(b=b, c=c, f=f, g=g)


def _hyperbolic_two(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    q, m, f, g = ctx.q, ctx.m, ctx.f, ctx.g
    w = ctx.v(q - 1)
    if m % 2 == 0:
        if ctx.smith:
            tally = ctx.tally('sec10', 'meven', 'ell=2')
            tally.put(0, f).put(1, g + 1 - f).put(w + 1, f)
            return tally, ValuationParams(w=w, f=f, g=g)
        b, c = ctx.v(ctx.gauss(m)), ctx.v(q ** (m - 1) + 1)
        if b != c:
            tally = ctx.tally('sec10', 'meven', 'ell=2', 'b!=c')
            tally.put(0, f).put(c + 1, 1).put(b + 1, g - f + 1).put(b + c + 1, f - 2)
        else:
            tally = ctx.tally('sec10', 'meven', 'ell=2', 'b=c')
            tally.put(0, f).put(c + 1, g - f + 2).put(2 * c + 1, f - 2)
        return tally, ValuationParams(b=b, c=c, f=f, g=g)
    a, d = ctx.v(ctx.gauss(m - 1)), ctx.v(q ** (m - 2) + 1)
    if ctx.smith:
        if a != d:
            tally = ctx.tally('sec10', 'modd', 'ell=2', 'a!=d')
            tally.put(0, f - 1).put(d, g - f + 1).put(a, 1).put(a + w + d, f)
        else:
            tally = ctx.tally('sec10', 'modd', 'ell=2', 'a=d')
            tally.put(0, f - 1).put(a, g + 2 - f).put(a + d + w, f)
        return tally, ValuationParams(a=a, d=d, w=w, f=f, g=g)
    if a != d:
        tally = ctx.tally('sec10', 'modd', 'ell=2', 'a!=d')
        tally.put(0, f - 1).put(a, 1).put(d, g + 1 - f).put(a + d + 1, f - 1)
    else:
        tally = ctx.tally('sec10', 'modd', 'ell=2', 'a=d')
        tally.put(0, f - 1).put(a, g + 2 - f).put(2 * a + 1, f - 1)
    return tally, ValuationParams(a=a, d=d, f=f, g=g)


@BranchRegistry.register('oplus')
def hyperbolic(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    """
    The hyperbolic family at ell = 2 (q odd) and at odd ell dividing q + 1.
    """
    q, m, f, g = ctx.q, ctx.m, ctx.f, ctx.g
    if ctx.ell == 2:
        return _hyperbolic_two(ctx)
    if (q + 1) % ctx.ell:
        raise ctx.unhandled("an odd nilpotent prime must divide q + 1")
    if m % 2 == 1:
        a, d = ctx.v(ctx.gauss(m - 1)), ctx.v(q ** (m - 2) + 1)
        top = f if ctx.smith else f - 1
        if ctx.smith and ctx.injected('tableopo-b'):
            b = ctx.v(ctx.gauss(m))
            tally = ctx.tally('sec10', 'modd', 'ell|q+1', 'a!=d' if a != d else 'a=d')
            if a != d:
                tally.put(0, f - 1).put(a, 1).put(d, g - f + 1).put(a + b, top)
            else:
                tally.put(0, f - 1).put(a, g - f + 2).put(a + b, top)
            return tally, ValuationParams(a=a, b=b, d=d, f=f, g=g)
        if a != d:
            tally = ctx.tally('sec10', 'modd', 'ell|q+1', 'a!=d')
            tally.put(0, f - 1).put(a, 1).put(d, g - f + 1).put(a + d, top)
        else:
            tally = ctx.tally('sec10', 'modd', 'ell|q+1', 'a=d')
            tally.put(0, f - 1).put(a, g - f + 2).put(2 * a, top)
        return tally, ValuationParams(a=a, d=d, f=f, g=g)
    if ctx.smith:
        raise ctx.unhandled("A is not nilpotent for m even")
    b, c = ctx.v(ctx.gauss(m)), ctx.v(q ** (m - 1) + 1)
    if b != c:
        tally = ctx.tally('sec10', 'meven', 'ell|q+1', 'b!=c')
        tally.put(0, f).put(c, 1).put(b, g - f + 1).put(b + c, f - 2)
    else:
        tally = ctx.tally('sec10', 'meven', 'ell|q+1', 'b=c')
        tally.put(0, f).put(c, g - f + 2).put(2 * c, f - 2)
    return tally, ValuationParams(b=b, c=c, f=f, g=g)

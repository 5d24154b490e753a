#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Branches for the primes where the matrix is not nilpotent modulo ell, plus the
characteristic of the field for the Smith group. These do not depend on the family.
"""

import logging
from typing import Tuple

from polarsnf.predict.base import (BranchRegistry,
                                   PredictionContext,
                                   ProfileTally,
                                   ValuationParams)

logger = logging.getLogger(__name__)


@BranchRegistry.register('characteristic')
def characteristic(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    """
    The p-part of the Smith group is cyclic of order q~: all other invariant factors
    are units at p.
    """
    epsilon = ctx.v(ctx.qt)
    tally = ctx.tally('sec6', 'case3')
    tally.put(0, ctx.f + ctx.g).put(epsilon, 1)
    return tally, ValuationParams(f=ctx.f, g=ctx.g)


def _smith(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    spec, qt, z = ctx.spec, ctx.qt, ctx.family.z(ctx.m)
    f, g = ctx.f, ctx.g
    divides_r, divides_s = spec.r % ctx.ell == 0, spec.s % ctx.ell == 0
    if divides_r and not divides_s:
        a, w = ctx.v(ctx.gauss(z - 1, qt)), ctx.v(qt - 1)
        if w == 0:
            tally = ctx.tally('sec6', 'case1', 'w=0')
            tally.put(0, g).put(a, f + 1)
        elif a == 0:
            tally = ctx.tally('sec6', 'case1', 'a=0')
            tally.put(0, g + 1).put(w, f)
        else:
            tally = ctx.tally('sec6', 'case1')
            tally.put(0, g).put(a, 1).put(a + w, f)
        return tally, ValuationParams(a=a, w=w, f=f, g=g)
    if divides_s and not divides_r:
        d = ctx.v(spec.s)
        tally = ctx.tally('sec6', 'case2')
        tally.put(0, f).put(d, g + 1)
        return tally, ValuationParams(d=d, f=f, g=g)
    raise ctx.unhandled(f"ell divides r={spec.r}: {divides_r}, s={spec.s}: {divides_s}")


def _critical(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    spec, qt, z, h = ctx.spec, ctx.qt, ctx.family.z(ctx.m), ctx.family.h
    f, g = ctx.f, ctx.g
    power = ctx.family.power
    divides_t, divides_u = spec.t % ctx.ell == 0, spec.u % ctx.ell == 0
    if divides_t and not divides_u:
        a = ctx.v(ctx.gauss(z - 1, qt))
        c = ctx.v(int(power(ctx.q, z - 1 + h)) + 1)
        if a == 0:
            tally = ctx.tally('sec6', 'case1', 'a=0')
            tally.put(0, g + 1).put(c, f - 1)
        elif c == 0:
            tally = ctx.tally('sec6', 'case1', 'c=0')
            tally.put(0, g).put(a, f)
        else:
            tally = ctx.tally('sec6', 'case1')
            tally.put(0, g).put(a, 1).put(a + c, f - 1)
        return tally, ValuationParams(a=a, c=c, f=f, g=g)
    if divides_u and not divides_t:
        b = ctx.v(ctx.gauss(z, qt))
        d = ctx.v(int(power(ctx.q, z - 2 + h)) + 1)
        if b == 0:
            tally = ctx.tally('sec6', 'case2', 'b=0')
            tally.put(0, f).put(d, g)
        elif d == 0:
            tally = ctx.tally('sec6', 'case2', 'd=0')
            tally.put(0, f + 1).put(b, g - 1)
        else:
            tally = ctx.tally('sec6', 'case2')
            tally.put(0, f).put(d, 1).put(b + d, g - 1)
        return tally, ValuationParams(b=b, d=d, f=f, g=g)
    raise ctx.unhandled(f"ell divides t={spec.t}: {divides_t}, u={spec.u}: {divides_u}")


@BranchRegistry.register('nonnilpotent')
def nonnilpotent(ctx: PredictionContext) -> Tuple[ProfileTally, ValuationParams]:
    """
    A prime dividing exactly one of the two nontrivial eigenvalues: r or s for the
    Smith group, t or u for the critical group.
    """
    return _smith(ctx) if ctx.smith else _critical(ctx)

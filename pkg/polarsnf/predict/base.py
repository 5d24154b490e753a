#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module provides the predictor scaffolding: the branch registry, the prediction
context handed to each branch, the profile tally guarding count and mass
conservation, and the routing from (family, q, m, target) to per-prime branches.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from polarsnf.errors import (HypothesisViolatedError,
                             MTooSmallError,
                             TranscriptionError,
                             UnhandledCaseError,
                             UnknownBranchError)
from polarsnf.ffield import PrimePower
from polarsnf.mathlib.numtheory import factorize, gaussian_integer, valuation
from polarsnf.polar import PolarFamily
from polarsnf.predict.tables import check_typos, display_constants
from polarsnf.snf import DivisorProfile
from polarsnf.srg import (GroupOrders,
                          SrgParams,
                          Spectrum,
                          group_orders,
                          is_nilpotent,
                          spectrum,
                          srg_params)
from polarsnf.utils import format_group, torsion_from_profiles

logger = logging.getLogger(__name__)

TARGETS = ('smith', 'critical')
TARGET_PREFIX = {'smith': 'S', 'critical': 'K'}


class BranchRegistry:
    """
    Predictor branches keyed by the name :func:`route` returns.
    """
    _registry: Dict[str, 'Branch'] = {}

    @classmethod
    def register(cls, name: str):
        def decorator(branch):
            if name in cls._registry and cls._registry[name] is not branch:
                raise UnknownBranchError(name, f"Predictor branch {name!r} is already registered")
            cls._registry[name] = branch
            return branch

        return decorator

    @classmethod
    def get(cls, name: str) -> 'Branch':
        try:
            return cls._registry[name]
        except KeyError:
            raise UnknownBranchError(name) from None

    @classmethod
    def names(cls) -> List[str]:
        return sorted(cls._registry)


@dataclass
class ValuationParams:
    """
    The valuations and dimension constants a branch used. Unused entries stay ``None``.
    """
    a: Optional[int] = None
    b: Optional[int] = None
    c: Optional[int] = None
    d: Optional[int] = None
    w: Optional[int] = None
    x: Optional[int] = None
    f: Optional[int] = None
    g: Optional[int] = None

    def as_dict(self) -> Dict[str, int]:
        return {key: value for key, value in asdict(self).items() if value is not None}


class ProfileTally:
    """
    Accumulates the exponent multiplicities produced by one branch.

    Zero multiplicities are skipped. A negative multiplicity or an exponent that
    another term of the same branch already produced raises
    :class:`TranscriptionError` when ``strict``; otherwise the issue is recorded and
    coincident terms are summed.

    Args:
        branch (str): The branch identifier.
        strict (bool, optional): Raise on inconsistencies. Defaults to ``True``.
    """

    def __init__(self, branch: str, strict: bool = True):
        self.branch = branch
        self.strict = strict
        self.entries: Dict[int, int] = {}
        self.issues: List[str] = []

    def fail(self, message: str):
        if self.strict:
            raise TranscriptionError(message, self.branch)
        self.issues.append(message)

    def put(self, exponent: int, count: int) -> 'ProfileTally':
        if count < 0:
            self.fail(f"negative multiplicity {count} for exponent {exponent}")
            return self
        if count == 0:
            return self
        if exponent in self.entries:
            self.fail(f"exponent {exponent} produced twice")
        self.entries[exponent] = self.entries.get(exponent, 0) + count
        return self


class PredictionContext:
    """
    Everything a branch needs about one (family, q, m, ell, target).

    Args:
        family (PolarFamily): The family.
        q (PrimePower): The order of the base field.
        m (int): The rank parameter.
        ell (int): The prime.
        target (str): ``'smith'`` or ``'critical'``.
        spec (Spectrum): The spectrum.
        orders (GroupOrders): The group orders.
        typos (frozenset): Names of display typos to re-enable.
        strict (bool): Raise on inconsistent profiles.
    """

    def __init__(self,
                 family: PolarFamily,
                 q: PrimePower,
                 m: int,
                 ell: int,
                 target: str,
                 spec: Spectrum,
                 orders: GroupOrders,
                 typos: frozenset = frozenset(),
                 strict: bool = True,
                 ):
        self.family = family
        self.q = q.value
        self.p = q.p
        self.m = m
        self.ell = ell
        self.target = target
        self.spec = spec
        self.orders = orders
        self.typos = typos
        self.strict = strict

    @property
    def prefix(self) -> str:
        return TARGET_PREFIX[self.target]

    @property
    def smith(self) -> bool:
        return self.target == 'smith'

    @property
    def qt(self) -> int:
        return self.family.q_tilde(self.q)

    @property
    def f(self) -> int:
        return self.spec.f

    @property
    def g(self) -> int:
        return self.spec.g

    def v(self, n: int) -> int:
        return valuation(n, self.ell)

    def gauss(self, n: int, base: Optional[int] = None) -> int:
        return gaussian_integer(n, self.q if base is None else base)

    def injected(self, name: str) -> bool:
        return name in self.typos

    def tally(self, *parts: str) -> ProfileTally:
        """
        Start the tally of a branch with identifier ``<S|K>:sec<N>:<case>[:<subcase>]``.
        N is 6 for the non-nilpotent primes and the characteristic, and 7 to 12
        for the nilpotent primes of s, o, ominus, oplus, ue and uo.
        """
        return ProfileTally(':'.join((self.prefix,) + parts), strict=self.strict)

    def unhandled(self, detail: str) -> UnhandledCaseError:
        return UnhandledCaseError(f"No branch for {self.family.label}(q={self.q}, m={self.m}), "
                                  f"ell={self.ell}, target {self.target}: {detail}")


# A branch maps a context to its tally and the valuations it used.
Branch = Callable[[PredictionContext], Tuple[ProfileTally, ValuationParams]]


@dataclass
class Prediction:
    """
    Closed-form elementary divisor profiles of the Smith group or the critical group,
    with the branch that produced each prime.
    """
    family: PolarFamily
    q: int
    m: int
    target: str
    params: SrgParams
    profiles: Dict[int, DivisorProfile] = field(default_factory=dict)
    branches: Dict[int, str] = field(default_factory=dict)
    valuations: Dict[int, ValuationParams] = field(default_factory=dict)
    issues: Dict[int, List[str]] = field(default_factory=dict)
    display: Dict[str, dict] = field(default_factory=dict)
    typos: Tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return not any(self.issues.values())

    @property
    def group(self) -> str:
        return format_group(torsion_from_profiles(
            {ell: profile.entries for ell, profile in self.profiles.items()}))

    def to_json(self) -> dict:
        report = {
            'family': self.family.value,
            'q': self.q,
            'm': self.m,
            'target': self.target,
            'v': self.params.v,
            'k': self.params.k,
            'profiles': {str(ell): profile.to_json() for ell, profile in sorted(self.profiles.items())},
            'group': self.group,
            'branches': {str(ell): branch for ell, branch in sorted(self.branches.items())},
            'valuations': {str(ell): vp.as_dict() for ell, vp in sorted(self.valuations.items())},
            'consistent': self.consistent,
        }
        if not self.consistent:
            report['issues'] = {str(ell): issues for ell, issues in sorted(self.issues.items()) if issues}
        if self.display:
            report['display'] = self.display
        if self.typos:
            report['injected'] = list(self.typos)
        return report


def relevant_primes(family: Union[PolarFamily, str],
                    q: int,
                    m: int,
                    target: str,
                    ) -> List[int]:
    """
    The primes dividing q~ r |s| (Smith group) or t u (critical group).

    Args:
        family (PolarFamily or str): The family.
        q (int): The order of the base field.
        m (int): The rank parameter.
        target (str): ``'smith'`` or ``'critical'``.

    Returns:
        list: Ascending primes.
    """
    family = PolarFamily.from_string(family)
    spec = spectrum(family, q, m)
    if target == 'smith':
        number = family.q_tilde(q) * spec.r * abs(spec.s)
    elif target == 'critical':
        number = spec.t * spec.u
    else:
        raise ValueError(f"Expect target in {TARGETS}, got {target!r}.")
    return list(factorize(number))


def route(ctx: PredictionContext) -> str:
    """
    Name of the registered branch handling a context.
    """
    if ctx.ell == ctx.p:
        if not ctx.smith:
            raise ctx.unhandled("the characteristic does not divide |K|")
        return 'characteristic'
    if not is_nilpotent(ctx.family, ctx.q, ctx.m, ctx.ell, 'A' if ctx.smith else 'L'):
        return 'nonnilpotent'
    return ctx.family.value


def _check_conservation(ctx: PredictionContext,
                        tally: ProfileTally,
                        params: SrgParams,
                        ):
    expected_count = params.v if ctx.smith else params.v - 1
    expected_mass = ctx.orders.valuation(ctx.ell, ctx.target)
    count = sum(tally.entries.values())
    mass = sum(a * c for a, c in tally.entries.items())
    if count != expected_count:
        tally.fail(f"{count} invariant factors predicted, expected {expected_count}")
    if mass != expected_mass:
        tally.fail(f"valuation {mass} predicted, expected {expected_mass}")


def predict(family: Union[PolarFamily, str],
            q: int,
            m: int,
            target: str,
            typos: Iterable[str] = (),
            strict: bool = True,
            ) -> Prediction:
    """
    Predict the elementary divisors of the Smith group or of the critical group.

    Args:
        family (PolarFamily or str): The family.
        q (int): The order of the base field, a prime power.
        m (int): The rank parameter.
        target (str): ``'smith'`` or ``'critical'``.
        typos (iterable, optional): Display typos to re-enable. Any typo turns the
                                    conservation guard into a recorded issue.
                                    Defaults to none.
        strict (bool, optional): Raise :class:`TranscriptionError` on inconsistent
                                 profiles. Defaults to ``True``.

    Returns:
        Prediction: The per-prime profiles and branch trace.

    Raises:
        HypothesisViolatedError: If m is below the family minimum.
    """
    family = PolarFamily.from_string(family)
    if target not in TARGETS:
        raise ValueError(f"Expect target in {TARGETS}, got {target!r}.")
    prime_power = PrimePower.from_int(q)
    try:
        family.check_m(m)
    except MTooSmallError as exc:
        raise HypothesisViolatedError(str(exc)) from exc
    typos = check_typos(typos)
    if typos:
        logger.warning(f"Predicting {family.label}(q={q}, m={m}) with re-enabled typos {sorted(typos)}")
        strict = False

    params = srg_params(family, q, m)
    spec = spectrum(family, q, m)
    orders = group_orders(spec, params)
    prediction = Prediction(family, q, m, target, params,
                            display=display_constants(family, q, m),
                            typos=tuple(sorted(typos)))
    for ell in relevant_primes(family, q, m, target):
        ctx = PredictionContext(family, prime_power, m, ell, target, spec, orders,
                                typos=frozenset(typos), strict=strict)
        name = route(ctx)
        branch = BranchRegistry.get(name)
        tally, vp = branch(ctx)
        _check_conservation(ctx, tally, params)
        logger.debug(f"{family.label}(q={q}, m={m}) ell={ell}: {tally.branch} -> {tally.entries}")
        prediction.profiles[ell] = DivisorProfile(ell, tally.entries, 0 if ctx.smith else 1)
        prediction.branches[ell] = tally.branch
        prediction.valuations[ell] = vp
        prediction.issues[ell] = tally.issues
    return prediction


def predict_smith(family: Union[PolarFamily, str],
                  q: int,
                  m: int,
                  typos: Iterable[str] = (),
                  strict: bool = True,
                  ) -> Prediction:
    """
    Predict the Smith group, the cokernel of the adjacency matrix.
    """
    return predict(family, q, m, 'smith', typos=typos, strict=strict)


def predict_critical(family: Union[PolarFamily, str],
                     q: int,
                     m: int,
                     typos: Iterable[str] = (),
                     strict: bool = True,
                     ) -> Prediction:
    """
    Predict the critical group, the finite part of the cokernel of the Laplacian.
    """
    return predict(family, q, m, 'critical', typos=typos, strict=strict)

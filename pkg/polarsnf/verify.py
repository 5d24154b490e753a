#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Modules for verifying predictions against brute-force computation.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from time import time
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from polarsnf.errors import PolarSnfError, ResourceBoundError
from polarsnf.ffield import DEFAULT_FIELD_BOUND
from polarsnf.mathlib.intmat import determinant, rank_over_rationals
from polarsnf.mathlib.numtheory import factorize
from polarsnf.polar import PolarFamily, PolarGraph, build_graph
from polarsnf.predict import Prediction, predict
from polarsnf.predict.unitary import unitary_even_x, unitary_x
from polarsnf.snf import divisor_profile, filtration_consistent, spanning_tree_count
from polarsnf.srg import (evaluate_polynomial,
                          group_orders,
                          measure_srg_params,
                          minimal_polynomial,
                          nilpotence_sweep,
                          spectrum,
                          srg_params,
                          verify_srg_identity)
from polarsnf.utils import profile_to_json

logger = logging.getLogger(__name__)

DEFAULT_MATRIX_BOUND = 4000

# The acceptance battery as (family, q, m).
BATTERY = (
    ('s', 2, 2),
    ('s', 3, 2),
    ('s', 2, 3),
    ('o', 3, 2),
    ('o', 5, 2),
    ('ominus', 2, 3),
    ('oplus', 2, 3),
    ('ue', 2, 2),
    ('uo', 2, 2),
)

# A profile task: (instance index, target, ell, matrix).
ProfileTask = Tuple[int, str, int, np.ndarray]


def compute_profile(task: ProfileTask) -> Tuple[int, str, int, Dict[int, int], int, bool]:
    """
    Compute one divisor profile and check it against the filtration dimensions. Runs
    in worker processes.

    Args:
        task (tuple): ``(index, target, ell, matrix)``.

    Returns:
        tuple: ``(index, target, ell, entries, free_rank, filtration_ok)``.
    """
    index, target, ell, matrix = task
    profile = divisor_profile(matrix, ell, method='local')
    return index, target, ell, profile.entries, profile.free_rank, filtration_consistent(matrix, profile)


def run_tasks(function: Callable,
              tasks: Sequence,
              threads: int = 1,
              ) -> list:
    """
    Map a function over tasks, in a process pool when ``threads > 1``. Results come
    back in task order whatever the completion order.
    """
    if threads <= 1 or len(tasks) <= 1:
        return [function(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, tasks))


def profile_diff(predicted: Dict[int, int], computed: Dict[int, int]) -> Dict[str, List[int]]:
    """
    The exponents where two profiles differ, as ``exponent -> [predicted, computed]``.
    """
    return {str(a): [predicted.get(a, 0), computed.get(a, 0)]
            for a in sorted(set(predicted) | set(computed))
            if predicted.get(a, 0) != computed.get(a, 0)}


class Verifier:
    """
    The abstract class for verifiers.

    Args:
        track_stats (bool, optional): Whether to track timing stats. Defaults to ``False``.
    """

    def __init__(self,
                 track_stats: bool = False):
        self.track_stats = track_stats
        self.stats = []
        self.logger = logging.getLogger(f"{self.__class__.__name__}")

    def verify(self, *args, **kwargs):
        """
        The abstract method for verifying. Returns a JSON-ready report.

        Raises:
            NotImplementedError
        """
        raise NotImplementedError

    def __call__(self, *args, **kwargs):
        """
        Run the verification.

        Returns:
            dict: The report.
        """
        time_start = time()
        report = self.verify(*args, **kwargs)

        if self.track_stats:
            time_end = time()
            stats = {"time": time_end - time_start}
            self.stats.append(stats)

        return report


class InstanceVerifier(Verifier):
    """
    Verify the predicted Smith and critical groups of polar graphs against exact
    Smith normal forms, together with the structural identities of each graph.

    Args:
        typos (iterable, optional): Display typos to re-enable in the predictor.
                                    Defaults to none.
        v_max (int, optional): The largest number of vertices handled. Defaults to ``4000``.
        threads (int, optional): Worker processes for the per-prime profiles.
                                 Defaults to ``1``.
        field_bound (int, optional): The largest field order. Defaults to ``2**20``.
        nilpotence_max_ell (int, optional): Primes up to this bound are classified
                                            against the rule table. Defaults to ``100``.
        track_stats (bool, optional): Whether to track timing stats. Defaults to ``False``.
    """

    def __init__(self,
                 typos: Iterable[str] = (),
                 v_max: int = DEFAULT_MATRIX_BOUND,
                 threads: int = 1,
                 field_bound: int = DEFAULT_FIELD_BOUND,
                 nilpotence_max_ell: int = 100,
                 track_stats: bool = False):
        super(InstanceVerifier, self).__init__(track_stats)
        self.typos = tuple(sorted(set(typos)))
        self.v_max = v_max
        self.threads = threads
        self.field_bound = field_bound
        self.nilpotence_max_ell = nilpotence_max_ell

    # Phase 1: construction, predictions and global checks ####################

    def prepare(self,
                family: str,
                q: int,
                m: int,
                index: int = 0,
                ) -> Tuple[dict, List[ProfileTask]]:
        """
        Build the graph, run the predictions and the global checks, and list the
        profile computations still to run.

        Returns:
            tuple: The partial report and its profile tasks.
        """
        family = PolarFamily.from_string(family)
        timing = {}
        time_start = time()
        params = srg_params(family, q, m)
        if params.v > self.v_max:
            raise ResourceBoundError(f"{family.label}(q={q}, m={m}) has {params.v} vertices, "
                                     f"above the bound {self.v_max}")
        report = {'family': family.value, 'q': q, 'm': m, 'v': params.v, 'k': params.k,
                  'targets': {}, 'checks': {}, 'errors': []}
        graph = build_graph(family, q, m, field_bound=self.field_bound)
        timing['construction'] = time() - time_start

        time_start = time()
        self._global_checks(report, graph)
        timing['checks'] = time() - time_start

        tasks: List[ProfileTask] = []
        matrices = {'smith': graph.adjacency, 'critical': graph.laplacian}
        for target, matrix in matrices.items():
            prediction = self._predict(report, family, q, m, target)
            entry = {'primes': {}}
            if prediction is not None:
                entry['predicted_group'] = prediction.group
                entry['consistent'] = prediction.consistent
                if prediction.display:
                    report['display'] = prediction.display
                for ell in prediction.profiles:
                    entry['primes'][str(ell)] = {'branch': prediction.branches[ell],
                                                 'predicted': prediction.profiles[ell].entries}
            primes = set(int(ell) for ell in entry['primes'])
            primes |= set(self._computed_primes(report, target))
            for ell in sorted(primes):
                tasks.append((index, target, ell, np.asarray(matrix)))
            report['targets'][target] = entry
        report['timing'] = timing
        return report, tasks

    def _predict(self,
                 report: dict,
                 family: PolarFamily,
                 q: int,
                 m: int,
                 target: str,
                 ) -> Optional[Prediction]:
        try:
            return predict(family, q, m, target, typos=self.typos)
        except PolarSnfError as exc:
            if isinstance(exc, ValueError):
                raise
            report['errors'].append(f"{target}: {exc}")
            return None

    def _computed_primes(self, report: dict, target: str) -> List[int]:
        order = report['orders']['determinant' if target == 'smith' else 'tree_count']
        return list(factorint(order)) if order > 1 else []

    def _check(self, report: dict, name: str, function: Callable[[], bool]):
        try:
            ok = bool(function())
        except (PolarSnfError, ValueError) as exc:
            report['errors'].append(f"{name}: {exc}")
            ok = False
        if not ok:
            self.logger.warning(f"Check {name} failed for {report['family']}(q={report['q']}, m={report['m']})")
        report['checks'][name] = ok

    def _global_checks(self, report: dict, graph: PolarGraph):
        space = graph.space
        family, q, m = space.family, space.q.value, space.m
        params = srg_params(family, q, m)
        spec = spectrum(family, q, m)
        orders = group_orders(spec, params)
        A, L = graph.adjacency, graph.laplacian
        n = graph.num_vertices

        det = abs(determinant(A))
        trees = spanning_tree_count(graph)
        report['orders'] = {'determinant': det, 'tree_count': trees}
        report['spectrum'] = spec.as_dict()

        checks = report['checks']
        self._check(report, 'vertex_count', lambda: n == params.v)
        self._check(report, 'connected', graph.is_connected)
        self._check(report, 'srg_params', lambda: measure_srg_params(graph) == params)
        self._check(report, 'srg_identity', lambda: verify_srg_identity(graph, params))
        identity = np.eye(n, dtype=np.int64)
        self._check(report, 'multiplicities',
                    lambda: (n - rank_over_rationals(A - spec.r * identity) == spec.f
                             and n - rank_over_rationals(A - spec.s * identity) == spec.g))
        self._check(report, 'minimal_polynomial',
                    lambda: not np.any(evaluate_polynomial(minimal_polynomial(spec, 'A'), A))
                    and not np.any(evaluate_polynomial(minimal_polynomial(spec, 'L'), L)))
        self._check(report, 'determinant', lambda: det == orders.smith)
        self._check(report, 'tree_count', lambda: trees == orders.critical)
        self._check(report, 'characteristic_coprime_to_K', lambda: trees % space.q.p != 0)
        self._check(report, 'nilpotence_table',
                    lambda: len(nilpotence_sweep(family, q, m, self.nilpotence_max_ell)) > 0)
        if family is PolarFamily.UE:
            expected = unitary_even_x(q, m)
            measured = {str(ell): unitary_x(graph, ell)
                        for ell in factorize(q + 1)}
            report['unitary_x'] = {'closed_form': expected, 'measured': measured}
            self._check(report, 'unitary_x', lambda: all(x == expected for x in measured.values()))
        logger.debug(f"Global checks for {graph!r}: {checks}")

    # Phase 2: profiles and verdict ###########################################

    def assemble(self,
                 report: dict,
                 results: Iterable[Tuple[int, str, int, Dict[int, int], int, bool]],
                 ) -> dict:
        """
        Merge computed profiles into a prepared report and decide the verdict.
        """
        filtration_ok = True
        for _, target, ell, entries, free_rank, filtration in results:
            entry = report['targets'][target]['primes'].setdefault(str(ell), {'branch': None})
            predicted = entry.pop('predicted', {})
            entry['predicted'] = profile_to_json(predicted)
            entry['computed'] = profile_to_json(entries)
            entry['free_rank'] = free_rank
            entry['match'] = predicted == entries
            if not entry['match']:
                entry['diff'] = profile_diff(predicted, entries)
            entry['filtration'] = filtration
            filtration_ok = filtration_ok and filtration
        for target in report['targets'].values():
            target['primes'] = {ell: target['primes'][ell] for ell in sorted(target['primes'], key=int)}
        report['checks']['filtration'] = filtration_ok
        matches = all(entry.get('match', False)
                      for target in report['targets'].values()
                      for entry in target['primes'].values())
        consistent = all(target.get('consistent', False) for target in report['targets'].values())
        report['verdict'] = bool(matches and consistent
                                 and all(report['checks'].values()) and not report['errors'])
        report['timing'] = report.pop('timing')
        return report

    def verify(self,
               family: str,
               q: int,
               m: int,
               ) -> dict:
        """
        Verify one instance.

        Args:
            family (str): The family.
            q (int): The order of the base field.
            m (int): The rank parameter.

        Returns:
            dict: The verification report; ``report["verdict"]`` is the overall verdict.
        """
        report, tasks = self.prepare(family, q, m)
        time_start = time()
        results = run_tasks(compute_profile, tasks, self.threads)
        report['timing']['profiles'] = time() - time_start
        report = self.assemble(report, results)
        self.logger.info(f"Verified {family}(q={q}, m={m}): verdict {report['verdict']}")
        return report


class BatteryVerifier(InstanceVerifier):
    """
    Verify a list of instances, fanning all (instance, target, prime) profiles out
    over one worker pool. Accepts the keyword arguments of :class:`InstanceVerifier`.
    """

    def verify(self,
               instances: Sequence[Tuple[str, int, int]] = BATTERY,
               ) -> dict:
        """
        Verify every instance.

        Args:
            instances (sequence, optional): ``(family, q, m)`` triples. Defaults to the battery.

        Returns:
            dict: ``{"instances": [...], "verdict": bool}`` in instance order.
        """
        reports, tasks = [], []
        for index, (family, q, m) in enumerate(instances):
            report, instance_tasks = self.prepare(family, q, m, index=index)
            reports.append(report)
            tasks += instance_tasks
        time_start = time()
        results = run_tasks(compute_profile, tasks, self.threads)
        elapsed = time() - time_start
        grouped = [[] for _ in reports]
        for result in results:
            grouped[result[0]].append(result)
        reports = [self.assemble(report, group) for report, group in zip(reports, grouped)]
        verdict = all(report['verdict'] for report in reports)
        self.logger.info(f"Verified {len(reports)} instances: verdict {verdict}")
        return {'instances': reports, 'verdict': verdict, 'timing': {'profiles': elapsed}}


def compare_isospectral(q: int,
                        m: int,
                        compute: bool = True,
                        ) -> dict:
    """
    Compare the symplectic and parabolic graphs over GF(q), q odd: they share every
    strongly regular parameter and eigenvalue but not their 2-profiles.

    Args:
        q (int): An odd prime power.
        m (int): The rank parameter.
        compute (bool, optional): Also compute the 2-profiles of the adjacency
                                  matrices. Defaults to ``True``.

    Returns:
        dict: The shared parameters and the per-family 2-profiles.
    """
    if q % 2 == 0:
        raise ValueError(f"The isospectral pair needs q odd, got q = {q}.")
    shared = {}
    for family in ('s', 'o'):
        shared[family] = {**srg_params(family, q, m).as_dict(), **spectrum(family, q, m).as_dict()}
    result = {'q': q, 'm': m,
              'same_parameters': shared['s'] == shared['o'],
              'parameters': shared['s'],
              'profiles': {}}
    for family in ('s', 'o'):
        profiles = {'predicted': profile_to_json(predict(family, q, m, 'smith').profiles[2].entries)}
        if compute:
            graph = build_graph(family, q, m)
            profiles['computed'] = divisor_profile(graph.adjacency, 2, method='local').to_json()
        result['profiles'][family] = profiles
    result['distinguished'] = result['profiles']['s'] != result['profiles']['o']
    return result


def sweep_instances(q_max: int,
                    m_max: int,
                    v_max: int = DEFAULT_MATRIX_BOUND,
                    ) -> List[Tuple[str, int, int]]:
    """
    Every (family, q, m) with q <= q_max a prime power, m <= m_max and at most
    ``v_max`` vertices, in family order, then q, then m.
    """
    prime_powers = [q for q in range(2, q_max + 1) if len(factorint(q)) == 1]
    instances = []
    for family in PolarFamily:
        for q in prime_powers:
            for m in range(family.min_m, m_max + 1):
                if family.vertex_count(q, m) <= v_max:
                    instances.append((family.value, q, m))
    return instances

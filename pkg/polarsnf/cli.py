#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The ``polar-snf`` command line: predict, compute, verify, export and sweep polar
graph instances. Reports go to stdout as JSON (and to ``--json PATH`` when given);
logs go to stderr.
"""

import argparse
import logging
import sys
from time import time
from typing import Optional, Sequence, Tuple

import pandas as pd
from sympy import factorint

from polarsnf.errors import PolarSnfError, ResourceBoundError
from polarsnf.ffield import DEFAULT_FIELD_BOUND
from polarsnf.mathlib.intmat import determinant, rank_over_rationals
from polarsnf.polar import PolarFamily, build_graph
from polarsnf.predict import predict
from polarsnf.predict.base import TARGETS
from polarsnf.predict.tables import TYPOS
from polarsnf.snf import divisor_profile, spanning_tree_count
from polarsnf.srg import srg_params
from polarsnf.utils import dumps, format_group, torsion_from_profiles, write_json
from polarsnf.verify import (BATTERY,
                             DEFAULT_MATRIX_BOUND,
                             BatteryVerifier,
                             InstanceVerifier,
                             sweep_instances)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_BAD_INPUT = 2
EXIT_RESOURCE = 3
EXIT_IO = 4

EXPORTS = ('adjacency', 'laplacian', 'points', 'edgelist')


def configure_logging(verbose: bool = False, quiet: bool = False):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s | %(name)s | %(levelname)s: %(message)s",
        datefmt="%Y/%m/%d %I:%M:%S %p",
        stream=sys.stderr,
    )


def _targets(target: str) -> Tuple[str, ...]:
    return TARGETS if target == 'both' else (target,)


def _check_size(family: str, q: int, m: int, v_max: int):
    v = srg_params(family, q, m).v
    if v > v_max:
        raise ResourceBoundError(f"{PolarFamily.from_string(family).label}(q={q}, m={m}) "
                                 f"has {v} vertices, above the bound {v_max}")


# Subcommands ##################################################################

def cmd_predict(args: argparse.Namespace) -> Tuple[dict, int]:
    """
    Closed-form profiles, group and branch trace for each requested target.
    """
    reports = {target: predict(args.family, args.q, args.m, target, typos=args.inject_typo).to_json()
               for target in _targets(args.target)}
    if len(reports) == 1:
        return next(iter(reports.values())), EXIT_OK
    return {'family': args.family, 'q': args.q, 'm': args.m, 'targets': reports}, EXIT_OK


def cmd_compute(args: argparse.Namespace) -> Tuple[dict, int]:
    """
    Profiles read off the constructed matrices at every prime dividing the group order.
    """
    _check_size(args.family, args.q, args.m, args.v_max)
    graph = build_graph(args.family, args.q, args.m, field_bound=args.field_bound)
    if args.seed is not None:
        graph = graph.relabeled(args.seed)
    report = {'family': args.family, 'q': args.q, 'm': args.m,
              'v': graph.num_vertices, 'k': int(graph.degrees[0]), 'targets': {}}
    for target in _targets(args.target):
        time_start = time()
        if target == 'smith':
            matrix, order_name = graph.adjacency, 'determinant'
            order = abs(determinant(matrix))
        else:
            matrix, order_name = graph.laplacian, 'tree_count'
            order = spanning_tree_count(graph)
        profiles = {ell: divisor_profile(matrix, ell, method='local')
                    for ell in (factorint(order) if order > 1 else {})}
        free_rank = graph.num_vertices - rank_over_rationals(matrix)
        report['targets'][target] = {
            order_name: order,
            'profiles': {str(ell): profile.to_json() for ell, profile in sorted(profiles.items())},
            'free_rank': free_rank,
            'group': format_group(torsion_from_profiles(
                {ell: profile.entries for ell, profile in profiles.items()})),
            'seconds': time() - time_start,
        }
    return report, EXIT_OK


def cmd_verify(args: argparse.Namespace) -> Tuple[dict, int]:
    """
    Compare predictions with computations for one instance or the battery.
    """
    options = dict(typos=args.inject_typo, v_max=args.v_max, threads=args.threads,
                   field_bound=args.field_bound)
    if args.battery:
        report = BatteryVerifier(**options).verify(BATTERY)
    else:
        _require_instance(args)
        report = InstanceVerifier(**options).verify(args.family, args.q, args.m)
    return report, EXIT_OK if report['verdict'] else EXIT_VERDICT_FALSE


def cmd_export(args: argparse.Namespace) -> Tuple[dict, int]:
    """
    Write the adjacency matrix, the Laplacian, the point list or the edge list.
    """
    _check_size(args.family, args.q, args.m, args.v_max)
    graph = build_graph(args.family, args.q, args.m, field_bound=args.field_bound)
    if args.seed is not None:
        graph = graph.relabeled(args.seed)
    writer = getattr(graph, f"write_{args.what}")
    writer(args.output)
    logger.info(f"Wrote the {args.what} of {graph!r} to {args.output}")
    return {'family': args.family, 'q': args.q, 'm': args.m, 'v': graph.num_vertices,
            'what': args.what, 'path': args.output}, EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> Tuple[dict, int]:
    """
    Verify every instance within the bounds and summarise them in a table.
    """
    instances = sweep_instances(args.q_max, args.m_max, args.v_max)
    logger.info(f"Sweeping {len(instances)} instances")
    report = BatteryVerifier(typos=args.inject_typo, v_max=args.v_max, threads=args.threads,
                             field_bound=args.field_bound).verify(instances)
    df = pd.DataFrame([{'family': r['family'], 'q': r['q'], 'm': r['m'], 'v': r['v'],
                        'verdict': r['verdict'], 'seconds': sum(r['timing'].values())}
                       for r in report['instances']],
                      columns=['family', 'q', 'm', 'v', 'verdict', 'seconds'])
    logger.info(f"Sweep summary:\n{df.to_string(index=False)}")
    if args.csv:
        df.to_csv(args.csv, index=False)
    return report, EXIT_OK if report['verdict'] else EXIT_VERDICT_FALSE


def _require_instance(args: argparse.Namespace):
    missing = [name for name in ('family', 'q', 'm') if getattr(args, name) is None]
    if missing:
        raise ValueError(f"Missing instance options: {', '.join('--' + name for name in missing)}")


# Parser #######################################################################

def _add_common(parser: argparse.ArgumentParser, instance_required: bool = True):
    parser.add_argument('--family', choices=[family.value for family in PolarFamily],
                        required=instance_required, help='The polar family.')
    parser.add_argument('--q', type=int, required=instance_required,
                        help='The order of the base field, a prime power.')
    parser.add_argument('--m', type=int, required=instance_required, help='The rank parameter.')
    parser.add_argument('--json', dest='json_path', default=None,
                        help='Also write the JSON report to this path.')
    parser.add_argument('--field-bound', type=int, default=DEFAULT_FIELD_BOUND,
                        help='The largest field order accepted.')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log at DEBUG.')
    parser.add_argument('-q', '--quiet', action='store_true', help='Log at WARNING.')


def _add_target(parser: argparse.ArgumentParser):
    parser.add_argument('--target', choices=TARGETS + ('both',), default='both',
                        help='The Smith group, the critical group or both.')


def _add_typos(parser: argparse.ArgumentParser):
    parser.add_argument('--inject-typo', action='append', default=[], choices=sorted(TYPOS),
                        help='Re-enable a printed table typo in the predictor. Repeatable.')


def _add_resources(parser: argparse.ArgumentParser):
    parser.add_argument('--v-max', type=int, default=DEFAULT_MATRIX_BOUND,
                        help='The largest number of vertices handled.')
    parser.add_argument('--threads', type=int, default=1,
                        help='Worker processes for the per-prime profiles.')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='polar-snf',
        description='Smith groups and critical groups of finite classical polar graphs.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    predict_parser = subparsers.add_parser('predict', help='Closed-form prediction.')
    _add_common(predict_parser)
    _add_target(predict_parser)
    _add_typos(predict_parser)
    predict_parser.set_defaults(handler=cmd_predict)

    compute_parser = subparsers.add_parser('compute', help='Exact computation.')
    _add_common(compute_parser)
    _add_target(compute_parser)
    _add_resources(compute_parser)
    compute_parser.add_argument('--seed', type=int, default=None,
                                help='Relabel the vertices with this seeded permutation.')
    compute_parser.set_defaults(handler=cmd_compute)

    verify_parser = subparsers.add_parser('verify', help='Prediction against computation.')
    _add_common(verify_parser, instance_required=False)
    _add_resources(verify_parser)
    _add_typos(verify_parser)
    verify_parser.add_argument('--battery', action='store_true',
                               help='Verify the acceptance battery.')
    verify_parser.set_defaults(handler=cmd_verify)

    export_parser = subparsers.add_parser('export', help='Write a graph to a file.')
    _add_common(export_parser)
    _add_resources(export_parser)
    export_parser.add_argument('--what', choices=EXPORTS, default='adjacency',
                               help='What to write.')
    export_parser.add_argument('--output', required=True, help='The output path.')
    export_parser.add_argument('--seed', type=int, default=None,
                               help='Relabel the vertices with this seeded permutation.')
    export_parser.set_defaults(handler=cmd_export)

    sweep_parser = subparsers.add_parser('sweep', help='Verify every instance in range.')
    sweep_parser.add_argument('--q-max', type=int, required=True)
    sweep_parser.add_argument('--m-max', type=int, required=True)
    sweep_parser.add_argument('--json', dest='json_path', default=None)
    sweep_parser.add_argument('--csv', default=None, help='Write the summary table here.')
    sweep_parser.add_argument('--field-bound', type=int, default=DEFAULT_FIELD_BOUND)
    sweep_parser.add_argument('-v', '--verbose', action='store_true')
    sweep_parser.add_argument('-q', '--quiet', action='store_true')
    _add_resources(sweep_parser)
    _add_typos(sweep_parser)
    sweep_parser.set_defaults(handler=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv (sequence, optional): The arguments. Defaults to ``sys.argv[1:]``.

    Returns:
        int: The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    configure_logging(args.verbose, args.quiet)
    try:
        report, code = args.handler(args)
        if args.json_path:
            write_json(report, args.json_path)
    except ResourceBoundError as exc:
        print(f"polar-snf: resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"polar-snf: IO error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"polar-snf: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except PolarSnfError as exc:
        logger.error(f"{args.command} failed: {exc}")
        print(f"polar-snf: failed: {exc}", file=sys.stderr)
        return EXIT_VERDICT_FALSE
    print(dumps(report))
    return code


if __name__ == '__main__':
    sys.exit(main())

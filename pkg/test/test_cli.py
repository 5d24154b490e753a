#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Unit tests for the cli module.
"""

import json
import logging

import numpy as np
import pandas as pd
import pytest

from polarsnf.cli import (EXIT_BAD_INPUT,
                          EXIT_IO,
                          EXIT_OK,
                          EXIT_RESOURCE,
                          EXIT_VERDICT_FALSE,
                          build_parser,
                          main)
from polarsnf.polar import read_matrix

logging.basicConfig(level=logging.DEBUG)

################################################################################


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    report = json.loads(captured.out) if code in (EXIT_OK, EXIT_VERDICT_FALSE) and captured.out else None
    return code, report, captured.err


class TestParser:
    """
    Test the argument parser.
    """

    def test_defaults(self):
        """
        Test the default target and resource options.
        """
        args = build_parser().parse_args(['compute', '--family', 's', '--q', '2', '--m', '2'])
        assert args.target == 'both'
        assert args.threads == 1
        assert args.seed is None

    def test_short_flags(self):
        """
        Test that -q and -v are the logging flags, not the instance options.
        """
        args = build_parser().parse_args(['predict', '--family', 's', '--q', '3', '--m', '2', '-q'])
        assert args.q == 3
        assert args.quiet is True
        assert args.verbose is False

    def test_missing_subcommand(self, capsys):
        """
        Test that a missing subcommand exits with the input error code.
        """
        assert main([]) == EXIT_BAD_INPUT
        capsys.readouterr()

    def test_unknown_typo(self, capsys):
        """
        Test that only catalogued typos are accepted.
        """
        assert main(['predict', '--family', 'ue', '--q', '2', '--m', '2',
                     '--inject-typo', 'tableue-z']) == EXIT_BAD_INPUT
        capsys.readouterr()


class TestPredict:
    """
    Test the predict subcommand.
    """

    def test_single_target(self, capsys):
        """
        Test the Smith group of the symplectic graph over GF(2).
        """
        code, report, _ = run(capsys, ['predict', '--family', 's', '--q', '2', '--m', '2',
                                       '--target', 'smith'])
        assert code == EXIT_OK
        assert report['group'] == 'Z/2 + (Z/3)^6'
        assert report['branches'] == {'2': 'S:sec6:case3', '3': 'S:sec6:case2'}

    def test_both_targets(self, capsys, tmp_path):
        """
        Test the default target and the --json copy.
        """
        path = tmp_path / 'predict.json'
        code, report, _ = run(capsys, ['predict', '--family', 's', '--q', '2', '--m', '2',
                                       '--json', str(path)])
        assert code == EXIT_OK
        assert set(report['targets']) == {'smith', 'critical'}
        assert report['targets']['critical']['group'] == 'Z/3 + (Z/9)^4 + (Z/5)^8'
        assert json.loads(path.read_text()) == report

    def test_not_a_prime_power(self, capsys):
        """
        Test the input error for q = 6.
        """
        code, _, err = run(capsys, ['predict', '--family', 's', '--q', '6', '--m', '2'])
        assert code == EXIT_BAD_INPUT
        assert 'q must be a prime power' in err

    def test_m_too_small(self, capsys):
        """
        Test the input error for the hyperbolic family with m = 2.
        """
        code, _, err = run(capsys, ['predict', '--family', 'oplus', '--q', '2', '--m', '2'])
        assert code == EXIT_BAD_INPUT
        assert 'm >= 3' in err

    def test_injected_typo(self, capsys):
        """
        Test that an injected typo is reported, not raised.
        """
        code, report, _ = run(capsys, ['predict', '--family', 'ue', '--q', '2', '--m', '2',
                                       '--target', 'smith', '--inject-typo', 'tableue-g'])
        assert code == EXIT_OK
        assert report['consistent'] is False
        assert report['injected'] == ['tableue-g']


class TestCompute:
    """
    Test the compute subcommand.
    """

    def test_critical_group(self, capsys):
        """
        Test the tree count and critical group of the symplectic graph over GF(2).
        """
        code, report, _ = run(capsys, ['compute', '--family', 's', '--q', '2', '--m', '2',
                                       '--target', 'critical'])
        assert code == EXIT_OK
        critical = report['targets']['critical']
        assert critical['tree_count'] == 3 ** 9 * 5 ** 8
        assert critical['free_rank'] == 1
        assert critical['group'] == 'Z/3 + (Z/9)^4 + (Z/5)^8'
        assert critical['profiles']['3'] == {'0': 9, '1': 1, '2': 4}

    def test_relabeled(self, capsys):
        """
        Test that a seeded relabelling gives the same groups.
        """
        argv = ['compute', '--family', 'ue', '--q', '2', '--m', '2', '--target', 'smith']
        _, plain, _ = run(capsys, argv)
        _, shuffled, _ = run(capsys, argv + ['--seed', '5'])
        assert plain['targets']['smith']['group'] == shuffled['targets']['smith']['group'] \
            == 'Z/4 + (Z/3)^15 + (Z/9)^15'

    def test_resource_bound(self, capsys):
        """
        Test the resource exit code above --v-max.
        """
        code, _, err = run(capsys, ['compute', '--family', 'uo', '--q', '2', '--m', '2',
                                    '--v-max', '100'])
        assert code == EXIT_RESOURCE
        assert 'above the bound 100' in err


class TestVerify:
    """
    Test the verify subcommand.
    """

    def test_instance(self, capsys):
        """
        Test a passing instance.
        """
        code, report, _ = run(capsys, ['verify', '--family', 'ominus', '--q', '2', '--m', '3'])
        assert code == EXIT_OK
        assert report['verdict'] is True

    def test_branch_trace(self, capsys):
        """
        Test the branch id reported for the nilpotent prime 2 of the symplectic graph over GF(3).
        """
        code, report, _ = run(capsys, ['verify', '--family', 's', '--q', '3', '--m', '2'])
        assert code == EXIT_OK
        assert report['verdict'] is True
        assert report['targets']['smith']['primes']['2']['branch'] == 'S:sec7:meven'
        assert report['targets']['critical']['primes']['2']['branch'] == 'K:sec7:meven'

    def test_injected_typo(self, capsys):
        """
        Test that a re-enabled typo gives exit code 1.
        """
        code, report, _ = run(capsys, ['verify', '--family', 'oplus', '--q', '2', '--m', '3',
                                       '--inject-typo', 'tableopo-b'])
        assert code == EXIT_VERDICT_FALSE
        assert report['verdict'] is False
        assert report['targets']['smith']['primes']['3']['diff']

    def test_missing_instance(self, capsys):
        """
        Test that verify needs an instance or --battery.
        """
        code, _, err = run(capsys, ['verify', '--family', 's'])
        assert code == EXIT_BAD_INPUT
        assert '--q' in err


class TestExport:
    """
    Test the export subcommand.
    """

    def test_adjacency(self, capsys, tmp_path):
        """
        Test writing the adjacency matrix.
        """
        path = tmp_path / 'adjacency.txt'
        code, report, _ = run(capsys, ['export', '--family', 's', '--q', '2', '--m', '2',
                                       '--output', str(path)])
        assert code == EXIT_OK
        assert report['what'] == 'adjacency'
        A = read_matrix(str(path))
        assert A.shape == (15, 15)
        assert set(A.sum(axis=1).tolist()) == {6}

    def test_laplacian(self, capsys, tmp_path):
        """
        Test writing the Laplacian.
        """
        path = tmp_path / 'laplacian.txt'
        code, _, _ = run(capsys, ['export', '--family', 'ue', '--q', '2', '--m', '2',
                                  '--what', 'laplacian', '--output', str(path)])
        assert code == EXIT_OK
        L = read_matrix(str(path))
        assert set(np.diag(L).tolist()) == {12}
        assert not np.any(L.sum(axis=1))

    def test_unwritable(self, capsys, tmp_path):
        """
        Test the IO exit code for a path in a missing directory.
        """
        path = tmp_path / 'missing' / 'adjacency.txt'
        code, _, err = run(capsys, ['export', '--family', 's', '--q', '2', '--m', '2',
                                    '--output', str(path)])
        assert code == EXIT_IO
        assert 'IO error' in err


class TestSweep:
    """
    Test the sweep subcommand.
    """

    def test_sweep(self, capsys, tmp_path):
        """
        Test a small sweep and its summary table.
        """
        path = tmp_path / 'sweep.csv'
        code, report, _ = run(capsys, ['sweep', '--q-max', '2', '--m-max', '2', '--v-max', '50',
                                       '--csv', str(path)])
        assert code == EXIT_OK
        assert report['verdict'] is True
        df = pd.read_csv(path)
        assert list(df.columns) == ['family', 'q', 'm', 'v', 'verdict', 'seconds']
        assert len(df) == len(report['instances'])
        assert ('s', 2, 2) in set(zip(df['family'], df['q'], df['m']))

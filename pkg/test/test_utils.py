#!/usr/bin/env python3

"""
Unit tests for the utils module.
"""

import json
import logging

import pytest

from polarsnf.utils import dumps, format_group, profile_to_json, torsion_from_profiles, write_json

logging.basicConfig(level=logging.DEBUG)

################################################################################


@pytest.mark.parametrize('torsion, expected', [
    ([], '0'),
    ([(2, 1, 1)], 'Z/2'),
    ([(3, 1, 6), (2, 1, 1)], 'Z/2 + (Z/3)^6'),
    ([(5, 1, 8), (3, 2, 4), (3, 1, 1)], 'Z/3 + (Z/9)^4 + (Z/5)^8'),
    ([(2, 0, 14), (3, 1, 0)], '0'),
])
def test_format_group(torsion, expected):
    """
    Test the group pretty-printer.
    """
    assert format_group(torsion) == expected


def test_torsion_from_profiles():
    """
    Test that units are dropped and entries are sorted.
    """
    profiles = {3: {0: 9, 1: 1, 2: 4}, 2: {0: 14, 1: 1}}
    assert torsion_from_profiles(profiles) == [(2, 1, 1), (3, 1, 1), (3, 2, 4)]


def test_profile_to_json():
    """
    Test string keys in ascending numeric order.
    """
    encoded = profile_to_json({10: 1, 2: 3, 0: 5})
    assert list(encoded) == ['0', '2', '10']
    assert encoded['2'] == 3


def test_write_json(tmp_path):
    """
    Test that the written report reads back and ends with a newline.
    """
    report = {'family': 's', 'profiles': profile_to_json({0: 9, 1: 6})}
    path = tmp_path / 'report.json'
    write_json(report, str(path))
    text = path.read_text()
    assert text.endswith('\n')
    assert json.loads(text) == report
    assert text == dumps(report) + '\n'

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module provides helpers for presenting results: the group pretty-printer and
the JSON encoding of reports.
"""

import json
from typing import Any, Dict, Iterable, Mapping, Tuple

# Torsion summands as (prime, exponent, multiplicity).
TorsionEntry = Tuple[int, int, int]


def format_group(torsion: Iterable[TorsionEntry]) -> str:
    """
    Pretty-print a finite abelian group given by its elementary divisors, ordered by
    prime and then by exponent, e.g. ``Z/2 + (Z/3)^6``.

    Args:
        torsion (iterable): ``(prime, exponent, multiplicity)`` entries with exponent >= 1.

    Returns:
        str: The group, or ``"0"`` for the trivial group.
    """
    parts = []
    for ell, a, count in sorted(torsion):
        if count <= 0 or a <= 0:
            continue
        summand = f"Z/{ell ** a}"
        parts.append(summand if count == 1 else f"({summand})^{count}")
    return ' + '.join(parts) if parts else '0'


def torsion_from_profiles(profiles: Mapping[int, Mapping[int, int]]) -> list:
    """
    Collect the torsion entries (a >= 1) of per-prime exponent maps.
    """
    return sorted((int(ell), int(a), int(count))
                  for ell, entries in profiles.items()
                  for a, count in entries.items()
                  if int(a) >= 1 and count)


def profile_to_json(entries: Mapping[int, int]) -> Dict[str, int]:
    """
    Exponent map with decimal string keys in ascending exponent order.
    """
    return {str(a): int(entries[a]) for a in sorted(entries, key=int)}


def dumps(report: Any, indent: int = 2) -> str:
    """
    Serialise a report. Key order is the insertion order, which the report
    builders keep deterministic.
    """
    return json.dumps(report, indent=indent)


def write_json(report: Any, path: str):
    with open(path, 'w') as f:
        f.write(dumps(report) + '\n')

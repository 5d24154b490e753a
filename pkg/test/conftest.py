#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Shared fixtures: polar graphs are built once per test session.
"""

from functools import lru_cache

import pytest

from polarsnf.polar import build_graph


@lru_cache(maxsize=None)
def _cached_graph(family, q, m):
    return build_graph(family, q, m)


@pytest.fixture(scope='session')
def polar_graph():
    """
    A factory returning the (cached) polar graph of ``(family, q, m)``.
    """
    return _cached_graph

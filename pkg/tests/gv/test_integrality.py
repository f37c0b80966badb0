# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests the integrality of t G_d for the preset surfaces and for some
non-geometric choices of gamma, and the GV numbers of local P2.
"""

import pytest

from gvpoles.cli import PRESETS
from gvpoles.series import degree_vectors, free_energy, partition_function
from gvpoles.gv import GvReportContainer, class_summed_gv, integrality_report

NON_GEOMETRIC = [(-1, -1), (0, -2), (2, 2)]


def compute_reports(gamma, max_total_degree, degrees=None):
    """Reports for all degree vectors up to ``max_total_degree``, or for the
    given ``degrees``."""
    if degrees is None:
        degrees = degree_vectors(len(gamma), max_total_degree)
    energy = free_energy(
        partition_function(gamma, max_total_degree, degrees=degrees)
    )
    return GvReportContainer([
        integrality_report(gamma, degree, energy) for degree in degrees
    ])


def nonzero(numbers):
    return {genus: n for genus, n in numbers.items() if n}


@pytest.mark.parametrize(
    'gamma', list(PRESETS.values()) + NON_GEOMETRIC, ids=str
)
def test_integral(gamma):
    reports = compute_reports(gamma, 3)
    assert len(reports) == len(degree_vectors(len(gamma), 3))
    for report in reports:
        assert report.integral, report.degree
        assert report.g_poly is not None
    assert reports.passed


def test_local_p2_degree_three():
    sums = class_summed_gv(compute_reports(PRESETS['P2'], 3))
    assert sums[1] == {0: 3}
    assert nonzero(sums[3]) == {0: 27, 1: -10}


@pytest.mark.slow
def test_local_p2_degree_four():
    sums = class_summed_gv(compute_reports(PRESETS['P2'], 4))
    assert nonzero(sums[3]) == {0: 27, 1: -10}
    assert nonzero(sums[4]) == {0: -192, 1: 231, 2: -102, 3: 15}


@pytest.mark.slow
@pytest.mark.parametrize(
    'gamma', [
        gamma for gamma in list(PRESETS.values()) + NON_GEOMETRIC
        if len(gamma) <= 4
    ],
    ids=str
)
def test_integral_degree_four(gamma):
    assert compute_reports(gamma, 4).passed


@pytest.mark.slow
def test_local_p2_diagonal():
    """All degree vectors below (2, 2, 2)."""
    degrees = [
        degree for degree in degree_vectors(3, 6)
        if max(degree) <= 2
    ]
    reports = compute_reports(PRESETS['P2'], 6, degrees=degrees)
    assert len(reports) == 26
    assert reports.passed

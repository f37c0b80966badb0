# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the integrality reports and the GV numbers.
"""

# pylint: disable=redefined-outer-name

import io
import json
import tempfile
from fractions import Fraction

import pytest

import gvpoles as gv
from gvpoles.qalgebra import QRatio, TPoly, qnum
from gvpoles.series import degree_vectors, free_energy, partition_function
from gvpoles.gv import (
    CSV_FIELDS, GvReport, GvReportContainer, class_summed_gv,
    integrality_report
)

GAMMA = (1, 1, 1)


@pytest.fixture(scope='module')
def energy():
    return free_energy(partition_function(GAMMA, 2))


@pytest.fixture(scope='module')
def reports(energy):
    return GvReportContainer([
        integrality_report(GAMMA, degree, energy)
        for degree in degree_vectors(3, 2)
    ])


def test_single_box(energy):
    report = integrality_report(GAMMA, (1, 0, 0), energy)
    assert report.integral
    assert report.g_poly == TPoly((-1, ))
    assert report.gv_numbers == [(0, 1)]
    assert report.passed


def test_without_free_energy():
    report = integrality_report(GAMMA, (0, 1, 0))
    assert report.gv_numbers == [(0, 1)]


def test_integral(reports):
    assert len(reports) == 9
    assert reports.passed
    for report in reports:
        assert report.integral


def test_two_edges(energy):
    assert integrality_report(GAMMA, (1, 1, 0),
                              energy).gv_numbers == [(0, -1)]


def test_class_sum(reports):
    assert class_summed_gv(reports)[1] == {0: 3}


def test_not_polynomial():
    report = GvReport.from_g(GAMMA, (1, 0, 0), QRatio(1, qnum(1)**4))
    assert report.g_poly is None
    assert not report.integral
    assert not report.passed
    assert report.gv_numbers == []


def test_non_integral():
    report = GvReport.from_g(GAMMA, (1, 0, 0), QRatio(1, qnum(1)**2) / 2)
    assert report.g_poly == TPoly((Fraction(1, 2), ))
    assert not report.integral
    assert report.gv_numbers == []


def test_paths_disagree():
    report = GvReport.from_g(
        GAMMA, (1, 0, 0), QRatio(-1, qnum(1)**2), paths_agree=False
    )
    assert report.integral
    assert not report.passed
    assert report.notes == ['evaluation paths disagree']


def test_json(reports):
    for report in reports:
        text = report.to_json()
        restored = GvReport.from_json(text)
        assert restored.to_json() == text
        assert restored.g_poly == report.g_poly


def test_write_json(reports):
    stream = io.StringIO()
    reports.write_json(stream)
    lines = stream.getvalue().splitlines()
    assert len(lines) == 10
    assert json.loads(lines[0])['degree'] == [1, 0, 0]
    assert json.loads(lines[-1]) == {
        'summary': {
            'num_reports': 9,
            'all_integral': True,
            'all_paths_agree': True
        }
    }


def test_write_csv(reports):
    stream = io.StringIO()
    reports.write_csv(stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == ','.join(CSV_FIELDS)
    assert lines[1] == '1 1 1,1 0 0,0,1'


def test_hdf5(reports):
    with tempfile.NamedTemporaryFile() as named_file:
        gv.io.save(reports, named_file.name)
        restored = gv.io.load(named_file.name)
    assert [report.to_json() for report in restored
            ] == [report.to_json() for report in reports]

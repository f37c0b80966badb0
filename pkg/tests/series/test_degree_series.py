# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for truncated series in the degree vectors.
"""

import pytest

from gvpoles.qalgebra import QRatio, qnum
from gvpoles.series import DegreeSeries, degree_vectors
from gvpoles.series._degree_series import downward_closure


def test_degree_vectors():
    assert degree_vectors(2, 2) == [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert degree_vectors(3, 1, include_zero=True) == [
        (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)
    ]
    assert len(degree_vectors(3, 3)) == 19


def test_invalid_r():
    with pytest.raises(ValueError):
        degree_vectors(0, 2)


def test_downward_closure():
    assert downward_closure([(1, 1)]) == [(1, 0), (0, 1), (1, 1)]
    assert downward_closure([(2, 0), (0, 1)]) == [(1, 0), (0, 1), (2, 0)]


def test_product():
    x = DegreeSeries(2, 2, {(1, 0): 1})
    y = DegreeSeries(2, 2, {(0, 1): 2})
    product = (x + 1) * (y + 1)
    assert product.constant == 1
    assert product[(1, 0)] == 1
    assert product[(0, 1)] == 2
    assert product[(1, 1)] == 2
    assert product[(2, 0)] == 0


def test_truncation():
    x = DegreeSeries(2, 1, {(1, 0): 1, (0, 1): 1})
    assert not (x * x).items()


def test_support():
    series = DegreeSeries(2, 3, support=downward_closure([(1, 1)]))
    series[(1, 1)] = QRatio(1, qnum(1))
    with pytest.raises(KeyError):
        series[(2, 0)]  # pylint: disable=pointless-statement
    with pytest.raises(KeyError):
        series[(0, 2)] = 1
    square = (series + 1) * (series + 1)
    assert square[(1, 1)] == QRatio(2, qnum(1))


def test_invalid_degree():
    with pytest.raises(ValueError):
        DegreeSeries(2, 1, support=[(2, 0)])
    with pytest.raises(ValueError):
        DegreeSeries(2, 2, support=[(1, 0, 0)])


def test_incompatible():
    with pytest.raises(ValueError):
        DegreeSeries(2, 1) + DegreeSeries(2, 2)  # pylint: disable=expression-not-assigned
    with pytest.raises(TypeError):
        DegreeSeries(2, 1) + 'a'  # pylint: disable=expression-not-assigned


def test_arithmetic():
    series = DegreeSeries(2, 2, {(1, 0): 2, (0, 1): 4})
    assert series / 2 == DegreeSeries(2, 2, {(1, 0): 1, (0, 1): 2})
    assert series - series == DegreeSeries(2, 2)
    assert -series == series * (-1)
    assert [degree for degree, _ in series.items()] == [(1, 0), (0, 1)]

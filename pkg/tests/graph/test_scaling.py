# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for scaled combined forests and the Moebius combinations G_k(W).
"""

import pytest

from gvpoles.partitions import RSet
from gvpoles.qalgebra import NotSymmetricInT, to_t_poly
from gvpoles.graph import (
    amplitude_H, enumerate_combined_forests, g_k_of_w, scaling_residual,
    scale_forest
)


@pytest.fixture
def three_slot_tree():
    rset = RSet(
        mu=((1, ), (1, ), ()), nu=((1, ), (1, ), ()), lam=((1, ), (1, ), (1, ))
    )
    (result, ) = [
        combined for combined in enumerate_combined_forests(
            rset, (-1, -1, -1), connected_only=True
        ) if combined.cycle_rank == 0
    ]
    return result


def _is_polynomial(value):
    try:
        to_t_poly(value)
    except NotSymmetricInT:
        return False
    return True


def test_g_one(three_slot_tree):
    assert g_k_of_w(three_slot_tree, 1) == amplitude_H(three_slot_tree)


@pytest.mark.parametrize('k', [3, 4, 5])
def test_g_k_polynomial(three_slot_tree, k):
    assert _is_polynomial(g_k_of_w(three_slot_tree, k))


def test_g_two(three_slot_tree, t_value):
    value = g_k_of_w(three_slot_tree, 2)
    assert not _is_polynomial(value)
    assert _is_polynomial(value * t_value)


def test_residual_two(three_slot_tree, t_ratio):
    expected = t_ratio([2, 1])**3 * t_ratio([6, 4, 1])
    assert scaling_residual(three_slot_tree, 2) == expected


@pytest.mark.parametrize('k', [1, 3, 4])
def test_residual_integral(three_slot_tree, k):
    assert to_t_poly(scaling_residual(three_slot_tree, k)).is_integral


def test_scale_forest(three_slot_tree):
    scaled = scale_forest(three_slot_tree, 3)
    assert amplitude_H(scaled) == amplitude_H(three_slot_tree.scale(3))
    assert scale_forest(three_slot_tree, 1).bridges == three_slot_tree.bridges


@pytest.mark.parametrize('func', [scale_forest, g_k_of_w, scaling_residual])
def test_invalid_k(three_slot_tree, func):
    with pytest.raises(ValueError):
        func(three_slot_tree, 0)

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the amplitudes of VEV trees and forests.
"""

import pytest

from gvpoles.qalgebra import QRatio, qnum, qnum_product
from gvpoles.schur_vertex import matrix_element_char
from gvpoles.graph import (
    amplitude_A, amplitude_B, generate_vev_forests, matrix_element_word,
    vev_graphs
)


@pytest.mark.parametrize('a', [1, 2, 5])
def test_single_commutator(a):
    (forest, ) = generate_vev_forests((1, -1), (0, a))
    assert amplitude_A(forest) == 1
    assert vev_graphs((1, -1), (0, a)) == 1


@pytest.mark.parametrize('c', [1, 2])
@pytest.mark.parametrize('d', [1, 3])
def test_two_forests(c, d):
    """
    The word (c, c, -c, -c), (0, 0, 0, d) has two forests, each with
    amplitude c [c d] / [d].
    """
    forests = generate_vev_forests((c, c, -c, -c), (0, 0, 0, d))
    assert len(forests) == 2
    expected = QRatio(qnum(c * d), qnum(d)) * c
    for forest in forests:
        assert amplitude_A(forest) == expected
    assert vev_graphs((c, c, -c, -c), (0, 0, 0, d)) == expected * 2


def test_two_box_sum(t_value):
    assert vev_graphs((1, 1, -1, -1), (0, 0, 1, 1)) == t_value + 2


@pytest.mark.parametrize('c', [1, 2, 3])
def test_white_trees(c):
    forests = generate_vev_forests((c, c, -c, -c), (0, 0, 0, 0))
    assert len(forests) == 2
    for forest in forests:
        assert amplitude_A(forest) == c**2


@pytest.mark.parametrize('mu', [(1, 1, 1), (2, 1), (3, 2, 1)])
@pytest.mark.parametrize('a', [1, 2])
def test_single_part_nu(mu, a):
    """
    Against a one-part nu, the VEV is given by a single forest with amplitude
    prod_i [a d mu_i] / [a d].
    """
    d = sum(mu)
    word = matrix_element_word(sorted(mu, reverse=True), a, (d, ))
    forests = generate_vev_forests(*word)
    assert len(forests) == 1
    expected = QRatio(
        qnum_product([a * d * part for part in mu]), qnum(a * d)
    )
    assert amplitude_A(forests[0]) == expected
    assert vev_graphs(*word) == expected


@pytest.mark.parametrize('a, d', [(1, 1), (1, 3), (3, 2), (2, 2)])
def test_tree_b(a, d):
    """B(T) = [a d^2] / ([a d] [d]^2) for mu = nu = (d)."""
    (forest, ) = generate_vev_forests(*matrix_element_word((d, ), a, (d, )))
    (tree, ) = forest.trees
    expected = QRatio(qnum(a * d * d), qnum(a * d) * qnum(d)**2)
    assert amplitude_B(tree) == expected
    assert amplitude_B(tree, mu=(d, ), nu=(d, )) == expected


def test_tree_b_value():
    """For a = 1, d = 3, B(T) = (t_3 + 3) / t_3."""
    (forest, ) = generate_vev_forests(*matrix_element_word((3, ), 1, (3, )))
    t_3 = QRatio(qnum(3)**2)
    assert amplitude_B(forest.trees[0]) == (t_3 + 3) / t_3
    assert amplitude_A(forest.trees[0]) == QRatio(qnum(9), qnum(3))
    assert amplitude_A(forest) == t_3 + 3


@pytest.mark.parametrize('mu, nu', [((2, 1), (2, 1)), ((1, 1), (2, )),
                                    ((3, ), (1, 1, 1))])
@pytest.mark.parametrize('a', [-1, 2])
def test_matrix_elements(mu, nu, a):
    assert vev_graphs(*matrix_element_word(mu, a, nu)) == matrix_element_char(
        mu, a, nu
    )

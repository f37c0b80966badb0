# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the pole data of VEV trees and the bridge coupling.
"""

import pytest

from gvpoles.partitions import RSet, enumerate_partitions
from gvpoles.qalgebra import NoSuchDecomposition, TPoly, pole_extract
from gvpoles.graph import (
    amplitude_B, bridge_coupling, enumerate_combined_forests,
    generate_vev_forests, matrix_element_word, reduce_tree, tree_gcd,
    tree_pole_data, tree_type, tree_types
)


def _single_tree(mu, a, nu):
    (forest, ) = [
        forest for forest in generate_vev_forests(
            *matrix_element_word(mu, a, nu)
        ) if len(forest.trees) == 1
    ]
    return forest.trees[0]


def test_type_one():
    tree = _single_tree((3, ), 1, (3, ))
    data = tree_pole_data(tree)
    assert data.m == 3
    assert data.type == 'I'
    assert data.g == 3
    assert data.remainder == TPoly((1, ))


def test_type_three():
    tree = _single_tree((2, ), 3, (2, ))
    data = tree_pole_data(tree)
    assert (data.m, data.type, data.g) == (2, 'III', 2)
    assert data.remainder.is_integral
    with pytest.raises(NoSuchDecomposition):
        pole_extract(amplitude_B(tree), 2)


def test_type_two():
    tree = _single_tree((1, ), 2, (1, ))
    assert tree_type(tree) == 'II'
    assert tree_pole_data(tree).m == 1


@pytest.mark.parametrize('mu, a, nu', [((3, ), 1, (3, )), ((2, ), 3, (2, )),
                                       ((2, 2), 1, (4, )), ((3, 3), 2, (6, ))])
def test_reduce_tree(mu, a, nu):
    tree = _single_tree(mu, a, nu)
    reduced, m = reduce_tree(tree)
    assert m == tree_gcd(tree)
    assert tree_gcd(reduced) == 1
    assert reduced.scale(m) == tree
    data = tree_pole_data(tree)
    assert data.g == tree_pole_data(reduced).g * m**(len(tree.leaves()) - 1)


@pytest.mark.parametrize('a', [1, 2, 3])
@pytest.mark.parametrize('mu', enumerate_partitions(3))
@pytest.mark.parametrize('nu', enumerate_partitions(3))
def test_integral_remainder(mu, nu, a):
    for forest in generate_vev_forests(*matrix_element_word(mu, a, nu)):
        if len(forest.trees) == 1:
            assert tree_pole_data(forest.trees[0]).remainder.is_integral


def test_tree_types():
    rset = RSet(
        mu=((1, ), (1, ), ()), nu=((1, ), (1, ), ()), lam=((1, ), (1, ), (1, ))
    )
    for combined in enumerate_combined_forests(rset, (-1, -1, -1)):
        types = tree_types(combined)
        assert sum(len(trees) for trees in types.values()
                   ) == combined.num_trees


def test_bridge_coupling():
    rset = RSet(
        mu=((1, ), (1, ), ()), nu=((1, ), (1, ), ()), lam=((1, ), (1, ), (1, ))
    )
    for combined in enumerate_combined_forests(
        rset, (-1, -1, -1), connected_only=True
    ):
        coupling = bridge_coupling(combined)
        assert set(coupling) == {node for node, _ in combined.trees()}
        uncovered = [node for node, bridges in coupling.items() if not bridges]
        assert len(uncovered) == (1 if combined.cycle_rank == 0 else 0)
        assert sum(len(bridges) for bridges in coupling.values()
                   ) == len(combined.bridges)

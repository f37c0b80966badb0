# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the generation of VEV forests from operator words.
"""

import pytest

from gvpoles.partitions import enumerate_partitions
from gvpoles.schur_vertex import vev_fock
from gvpoles.graph import (
    VevVertex, equivalence_classes, generate_vev_forests, matrix_element_word,
    vev_graphs
)


def test_single_commutator():
    forests = generate_vev_forests((1, -1), (0, 3))
    assert len(forests) == 1
    (tree, ) = forests[0].trees
    assert (tree.c, tree.n) == (0, 3)
    assert not tree.white
    assert tree.zeta == 3
    assert tree.leaf_indices() == [1, 2]


def test_white_root():
    forests = generate_vev_forests((2, -2), (0, 0))
    assert len(forests) == 1
    (tree, ) = forests[0].trees
    assert tree.white
    assert tree.zeta == 0


@pytest.mark.parametrize('a', [1, 2, -1])
def test_two_box_word(a):
    """
    The word of <(1,1)|q^(a F_2)|(1,1)> has one connected forest and two
    forests with two trees.
    """
    forests = generate_vev_forests(*matrix_element_word((1, 1), a, (1, 1)))
    groups = sorted(forest.leaf_groups() for forest in forests)
    assert groups == [((1, 2, 3, 4), ), ((1, 3), (2, 4)), ((1, 4), (2, 3))]


def test_all_white_forests():
    forests = generate_vev_forests((1, 1, -1, -1), (0, 0, 0, 0))
    assert sorted(forest.leaf_groups() for forest in forests) == [
        ((1, 3), (2, 4)), ((1, 4), (2, 3))
    ]
    for forest in forests:
        assert all(tree.white for tree in forest.trees)


def test_vanishing_word():
    assert generate_vev_forests((-1, 1), (0, 2)) == []


def test_matrix_element_word():
    assert matrix_element_word((2, 1), 3, (3, )) == ((1, 2, -3), (0, 0, 9))
    assert matrix_element_word((), 1, ()) == ((), ())


@pytest.mark.parametrize(
    'c_vec, n_vec', [((1, -1), (0, )), ((1, 0, -1), (0, 0, 2)),
                     ((1, -2), (0, 1))]
)
def test_invalid_word(c_vec, n_vec):
    with pytest.raises(ValueError):
        generate_vev_forests(c_vec, n_vec)


def test_merge_zeta():
    left = VevVertex.make_leaf(1, 2, 1)
    right = VevVertex.make_leaf(2, -1, 3)
    merged = VevVertex.merge(left, right)
    assert (merged.c, merged.n) == (1, 4)
    assert merged.zeta == 2 * 3 - 1 * (-1)
    with pytest.raises(ValueError):
        left.zeta  # pylint: disable=pointless-statement


def test_scale_divide():
    forest = generate_vev_forests((1, 1, -2), (0, 0, 2))[0]
    scaled = forest.scale(3)
    assert scaled.c_vec == (3, 3, -6)
    assert scaled.n_vec == (0, 0, 6)
    assert scaled.trees[0].divide(3) == forest.trees[0]
    with pytest.raises(ValueError):
        scaled.trees[0].divide(2)


def test_equivalence_classes():
    forests = generate_vev_forests((1, 1, -1, -1), (0, 0, 1, 1))
    classes = equivalence_classes(forests)
    assert sum(len(members) for members in classes.values()) == 3
    assert sorted(len(members) for members in classes.values()) == [1, 2]


@pytest.mark.parametrize('a', [-2, 1, 3])
@pytest.mark.parametrize('mu', enumerate_partitions(3))
@pytest.mark.parametrize('nu', enumerate_partitions(3))
def test_graphs_match_fock(mu, nu, a):
    word = matrix_element_word(mu, a, nu)
    assert vev_graphs(*word) == vev_fock(*word)


def test_unbalanced_vev():
    assert vev_graphs((1, 1), (0, 1)) == 0

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the pole data of VEV trees and the coupling of trees to bridges in a
combined forest.
"""

import math
from collections import namedtuple
from functools import reduce

from fsc.export import export

from ..qalgebra import pole_extract
from ._amplitude import amplitude_B
from ._edge_map import edge_map
from ._logging import GRAPH_LOGGER

TreePoleData = namedtuple('TreePoleData', ['m', 'g', 'type', 'remainder'])
TreePoleData.__doc__ = """
Pole data of the amplitude ``B(T)`` of a VEV tree.

Attributes
----------
m : int
    The gcd of the leaf labels; ``B(T)`` has its pole at ``t_m = 0``.
g : fractions.Fraction
    Coefficient of the pole.
type : str
    One of ``'I'`` (``m`` and ``n_root / m`` odd), ``'II'`` (``n_root / m``
    even) or ``'III'`` (``m`` even, ``n_root / m`` odd).
remainder : TPoly or YPoly
    The polynomial part. For type ``'III'`` it is a polynomial in ``y``.
"""
__all__ = ['TreePoleData']


@export
def tree_gcd(tree):
    """The gcd ``m(T)`` of the labels ``|c|`` of the leaves."""
    return reduce(math.gcd, (abs(leaf.c) for leaf in tree.leaves()), 0)


@export
def reduce_tree(tree):
    """
    Returns the pair ``(T_(0), m)``, where ``T_(0)`` is the tree with all
    labels divided by ``m = m(T)``.
    """
    m = tree_gcd(tree)
    if m == 0:
        raise ValueError('All leaves of {} have c = 0.'.format(tree))
    return tree.divide(m), m


@export
def tree_type(tree):
    """The type of a tree, as described in :class:`TreePoleData`."""
    m = tree_gcd(tree)
    ratio, rest = divmod(tree.n, m)
    if rest:
        raise ValueError(
            'Root label {} is not a multiple of m = {}.'.format(tree.n, m)
        )
    if ratio % 2 == 0:
        return 'II'
    if m % 2:
        return 'I'
    return 'III'


_TYPE_MODE_LOOKUP = {'I': 'plain', 'II': 'plain', 'III': 'half'}


@export
def tree_pole_data(tree):
    """Pole data of the amplitude ``B(T)`` of a VEV tree.

    Arguments
    ---------
    tree : VevVertex
        Root of a tree generated from a matrix element word.

    Returns
    -------
    TreePoleData

    Raises
    ------
    NoSuchDecomposition
        If ``B(T)`` does not have the shape of a simple pole plus a
        polynomial.
    """
    m = tree_gcd(tree)
    kind = tree_type(tree)
    decomposition = pole_extract(
        amplitude_B(tree), m, mode=_TYPE_MODE_LOOKUP[kind]
    )
    GRAPH_LOGGER.debug(
        'Tree {}: m = {}, type {}, g = {}'.format(
            tree.canonical_form(), m, kind, decomposition.g
        )
    )
    return TreePoleData(
        m=m, g=decomposition.g, type=kind, remainder=decomposition.remainder
    )


@export
def tree_types(combined):
    """
    Partition of the trees of a combined forest by type. Returns a dict
    from ``'I'``, ``'II'`` and ``'III'`` to lists of ``(node, tree)`` pairs.
    """
    result = {'I': [], 'II': [], 'III': []}
    for node, tree in combined.trees():
        result[tree_type(tree)].append((node, tree))
    return result


@export
def bridge_coupling(combined, vertex=None):
    """Couple the trees of a connected combined forest to bridges.

    The bridges are assigned to the trees through an edge map of the
    contracted graph, so that every tree (except ``vertex`` when the cycle
    rank is zero) receives a bridge. A bridge label is always a leaf label of
    the tree it is coupled to, hence a multiple of ``m(T)``, and the zero of
    ``[h(b)]^2`` cancels the pole of ``B(T)``.

    Returns
    -------
    dict
        Mapping from tree nodes ``(slot, index)`` to lists of bridges.
    """
    graph = combined.contracted_graph()
    if vertex is None and combined.cycle_rank == 0:
        vertex = next(iter(graph.nodes))
    mapping = edge_map(graph, vertex=vertex)
    result = {node: [] for node in graph.nodes}
    for edge, node in mapping.items():
        bridge = graph.edges[edge]['bridge']
        if bridge.label % tree_gcd(graph.nodes[node]['tree']):
            raise ValueError(
                'Bridge {} does not match the tree at {}.'.format(bridge, node)
            )
        result[node].append(bridge)
    return result

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines combined forests: one VEV forest per slot of an r-set, joined by
bridges between the leaves which carry the shared ``lambda`` parts.
"""

import itertools
from collections import namedtuple

import networkx as nx
from fsc.export import export

from ..partitions import RSet
from ._forest import generate_vev_forests, matrix_element_word
from ._amplitude import QNumberProduct, tree_factors
from ._logging import GRAPH_LOGGER

LeafRole = namedtuple('LeafRole', ['kind', 'value'])
LeafRole.__doc__ = """
Origin of a leaf in its slot: ``kind`` is one of ``'mu'``, ``'nu'``,
``'lambda'`` (shared with the previous slot) or ``'lambda_next'`` (shared with
the next slot), and ``value`` is the corresponding part.
"""

Bridge = namedtuple('Bridge', ['label', 'left', 'right'])
Bridge.__doc__ = """
Bridge joining a ``'lambda'`` leaf of one slot to a ``'lambda_next'`` leaf of
the previous slot.

Attributes
----------
label : int
    The part ``h(b)`` of the shared partition.
left : tuple(int, int)
    Slot and leaf index of the ``'lambda'`` leaf.
right : tuple(int, int)
    Slot and leaf index of the ``'lambda_next'`` leaf.
"""
__all__ = ['LeafRole', 'Bridge']


def _run_positions(values):
    """Map each value to the list of positions where it occurs."""
    runs = {}
    for position, value in enumerate(values):
        runs.setdefault(value, []).append(position)
    return runs


@export
def leaf_roles(rset, slot):
    """
    Roles of the leaves of the forests in the given slot. Within a block of
    equal parts, the outer leaves belong to ``lambda``: the leftmost ones in
    the left block and the rightmost ones in the right block.
    """
    left = rset.left(slot)
    right = rset.right(slot)
    left_values = tuple(reversed(left))
    right_values = tuple(right)
    roles = [None] * (len(left_values) + len(right_values))

    lam_counts = rset.lam[slot].multiplicities()
    for value, positions in _run_positions(left_values).items():
        num_lambda = lam_counts.get(value, 0)
        for i, position in enumerate(positions):
            kind = 'lambda' if i < num_lambda else 'mu'
            roles[position] = LeafRole(kind=kind, value=value)

    offset = len(left_values)
    next_counts = rset.lam[(slot + 1) % rset.r].multiplicities()
    for value, positions in _run_positions(right_values).items():
        num_lambda = next_counts.get(value, 0)
        for i, position in enumerate(reversed(positions)):
            kind = 'lambda_next' if i < num_lambda else 'nu'
            roles[offset + position] = LeafRole(kind=kind, value=value)
    return tuple(roles)


def _bridges(rset, roles):
    """
    Bridges of an r-set. Leaves with equal labels are paired from the outside
    in.
    """
    result = []
    for slot in range(rset.r):
        previous = (slot - 1) % rset.r
        left_leaves = {}
        for index, role in enumerate(roles[slot], start=1):
            if role.kind == 'lambda':
                left_leaves.setdefault(role.value, []).append(index)
        right_leaves = {}
        for index, role in enumerate(roles[previous], start=1):
            if role.kind == 'lambda_next':
                right_leaves.setdefault(role.value, []).append(index)
        for value in sorted(left_leaves):
            for left_index, right_index in zip(
                left_leaves[value], reversed(right_leaves[value])
            ):
                result.append(
                    Bridge(
                        label=value,
                        left=(slot, left_index),
                        right=(previous, right_index)
                    )
                )
    return tuple(result)


@export
class CombinedForest:
    """One VEV forest per slot of an r-set, joined by bridges.

    Arguments
    ---------
    rset : RSet
        The r-set the forest belongs to.
    gamma : tuple(int)
        The integers ``gamma_i``; slot ``i`` uses ``q^((gamma_i + 2) F_2)``.
    forests : tuple(VevForest)
        The forest of each slot.
    bridges : tuple(Bridge)
        The bridges. Computed from the r-set if not given.
    """
    def __init__(self, rset, gamma, forests, bridges=None):
        self.rset = rset
        self.gamma = tuple(gamma)
        self.forests = tuple(forests)
        if bridges is None:
            bridges = _bridges(
                rset, [leaf_roles(rset, slot) for slot in range(rset.r)]
            )
        self.bridges = tuple(bridges)

    @property
    def r(self):
        return self.rset.r

    def trees(self):
        """List of ``((slot, tree_index), root)`` pairs."""
        return [((slot, index), tree)
                for slot, forest in enumerate(self.forests)
                for index, tree in enumerate(forest.trees)]

    @property
    def num_trees(self):
        return sum(len(forest.trees) for forest in self.forests)

    def tree_node(self, slot, leaf):
        return (slot, self.forests[slot].tree_of_leaf(leaf))

    def contracted_graph(self):
        """
        Multigraph whose vertices are the trees and whose edges are the
        bridges. Edges carry the bridge label as ``label`` and the bridge
        itself as ``bridge``.
        """
        graph = nx.MultiGraph()
        for node, tree in self.trees():
            graph.add_node(node, tree=tree)
        for bridge in self.bridges:
            graph.add_edge(
                self.tree_node(*bridge.left),
                self.tree_node(*bridge.right),
                label=bridge.label,
                bridge=bridge
            )
        return graph

    @property
    def cycle_rank(self):
        """``#edges - #vertices + #components`` of the contracted graph."""
        graph = self.contracted_graph()
        return (
            graph.number_of_edges() - graph.number_of_nodes() +
            nx.number_connected_components(graph)
        )

    @property
    def is_connected(self):
        graph = self.contracted_graph()
        if graph.number_of_nodes() == 0:
            return False
        return nx.is_connected(graph)

    @property
    def l1(self):
        """Total number of parts of the ``mu`` and ``nu`` partitions."""
        return self.rset.length_mu_nu

    @property
    def l2(self):
        """Sum of the ``n`` labels of the roots."""
        return sum(tree.n for _, tree in self.trees())

    @property
    def num_parts(self):
        """``l(mu) + l(nu) + l(lambda)``."""
        return self.rset.length_mu_nu + self.rset.length_lambda

    def scale(self, k):
        """The forest ``W_(k)``, with all vertex and bridge labels times k."""
        return CombinedForest(
            rset=self.rset.scale(k),
            gamma=self.gamma,
            forests=[forest.scale(k) for forest in self.forests],
            bridges=[bridge._replace(label=k * bridge.label)
                     for bridge in self.bridges]
        )

    def __repr__(self):
        return 'CombinedForest(rset={}, gamma={}, forests={})'.format(
            self.rset, self.gamma, self.forests
        )


def _slot_forests(rset, gamma, slot):
    c_vec, n_vec = matrix_element_word(
        rset.left(slot), gamma[slot] + 2, rset.right(slot)
    )
    return generate_vev_forests(c_vec, n_vec)


@export
def enumerate_combined_forests(rset, gamma, *, connected_only=False):
    """Enumerate the combined forests of an r-set.

    Slot ``i`` runs over the forests of the word of
    ``<mu^i ∪ lam^i| q^((gamma_i + 2) F_2) |nu^i ∪ lam^(i+1)>``, and the
    ``lambda`` leaves are joined by bridges.

    Arguments
    ---------
    rset : RSet
        The r-set.
    gamma : tuple(int)
        The integers ``gamma_i``, one per slot.
    connected_only : bool
        Keep only combined forests whose contracted graph is connected.

    Returns
    -------
    list(CombinedForest)
    """
    if not isinstance(rset, RSet):
        rset = RSet(*rset)
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != rset.r:
        raise ValueError(
            "Invalid value for 'gamma': {} (expected length {})".format(
                gamma, rset.r
            )
        )
    bridges = _bridges(
        rset, [leaf_roles(rset, slot) for slot in range(rset.r)]
    )
    slot_forests = [_slot_forests(rset, gamma, slot) for slot in range(rset.r)]
    result = []
    for forests in itertools.product(*slot_forests):
        combined = CombinedForest(
            rset=rset, gamma=gamma, forests=forests, bridges=bridges
        )
        if connected_only and not combined.is_connected:
            continue
        result.append(combined)
    GRAPH_LOGGER.debug(
        'Enumerated {} combined forests for {}'.format(len(result), rset)
    )
    return result


def combined_factors(combined):
    """The combined amplitude as a :class:`.QNumberProduct`."""
    sign = -1 if (combined.l1 + combined.l2) % 2 else 1
    result = QNumberProduct(sign)
    for _, tree in combined.trees():
        result.update(tree_factors(tree))
        if not result:
            return result
        for leaf in tree.leaves():
            if leaf.c:
                result.divide(abs(leaf.c))
    for bridge in combined.bridges:
        result.multiply(bridge.label, power=2)
    return result


@export
def amplitude_H(combined):  # pylint: disable=invalid-name
    """The combined amplitude

    ``(-1)^(L_1 + L_2) prod_T B(T) prod_b [h(b)]^2``,

    where ``L_1`` counts the parts of ``mu`` and ``nu`` and ``L_2`` is the sum
    of the root labels ``n``.
    """
    return combined_factors(combined).to_ratio()

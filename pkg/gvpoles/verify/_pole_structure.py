# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the suite checking the pole structure of tree amplitudes and of the
combined amplitudes of connected forests.
"""

import networkx as nx
from fsc.export import export

from ..partitions import enumerate_partitions, enumerate_rsets, partitions_gcd
from ..qalgebra import (
    NoSuchDecomposition, NotSymmetricInT, QRatio, qnum, to_t_poly
)
from ..graph import (
    amplitude_H, enumerate_combined_forests, g_k_of_w, generate_vev_forests,
    bridge_coupling, cycle_rank, edge_map, scaling_residual,
    matrix_element_word, reduce_tree, tree_pole_data
)
from ..series import degree_vectors
from ._result import SuiteResult


def _converts(value, *, integral=False):
    try:
        poly = to_t_poly(value)
    except NotSymmetricInT:
        return False
    return poly.is_integral or not integral


def _check_tree(result, tree, context):
    try:
        data = tree_pole_data(tree)
    except NoSuchDecomposition as exc:
        result.check(False, 'B(T) of {}: {}'.format(context, exc))
        return
    result.check(
        data.remainder.is_integral,
        'B(T) of {} has non-integral remainder {}'.format(
            context, data.remainder
        )
    )
    if data.m > 1:
        reduced, _ = reduce_tree(tree)
        expected = tree_pole_data(reduced).g * data.m**(
            len(tree.leaves()) - 1
        )
        result.check(
            data.g == expected,
            'g_T = {} != {} for {}'.format(data.g, expected, context)
        )


def _check_combined(result, combined, max_k):
    rset = combined.rset
    context = '{} (gamma = {})'.format(rset, combined.gamma)
    value = amplitude_H(combined)
    rank = combined.cycle_rank
    coupling = bridge_coupling(combined)
    result.check(
        sum(1 for bridges in coupling.values() if not bridges) ==
        (1 if rank == 0 else 0),
        'Bridge coupling leaves the wrong number of trees uncovered: {}'.
        format(context)
    )
    if rank > 0:
        result.check(
            _converts(value),
            'H(W) is not a polynomial for beta = {}: {}'.format(rank, context)
        )
        return
    k = partitions_gcd(rset.mu + rset.nu + rset.lam)
    result.check(
        _converts(value * QRatio(qnum(k)**2)),
        't_{} H(W) is not a polynomial: {}'.format(k, context)
    )
    if k != 1:
        return
    t_value = QRatio(qnum(1)**2)
    for scale in range(1, max_k + 1):
        result.check(
            _converts(scaling_residual(combined, scale), integral=True),
            'Pole part of H(W_({})) is not as predicted: {}'.format(
                scale, context
            )
        )
        g_k = g_k_of_w(combined, scale)
        if scale > 2:
            result.check(
                _converts(g_k),
                'G_{}(W) has a pole: {}'.format(scale, context)
            )
        else:
            result.check(
                _converts(g_k * t_value),
                't G_{}(W) is not a polynomial: {}'.format(scale, context)
            )


def _check_edge_map(result, graph, index):
    rank = cycle_rank(graph)
    vertex = next(iter(graph.nodes)) if rank == 0 else None
    mapping = edge_map(graph, vertex=vertex)
    covered = set(mapping.values())
    expected = set(graph.nodes) - ({vertex} if rank == 0 else set())
    result.check(
        covered == expected and all(
            node in edge[:2] for edge, node in mapping.items()
        ),
        'Edge map of atlas graph {} does not cover the vertices.'.format(index)
    )


@export
def pole_structure_suite(
    *,
    max_weight=3,
    a_values=(1, 2, 3),
    max_total_degree=2,
    gammas=((-1, -1), (1, 1, 1)),
    max_k=3,
    max_vertices=6
):
    """Check the pole structure of amplitudes.

    Every single-tree forest of the matrix element words up to
    ``max_weight`` must have the pole predicted by its type, with the
    coefficient scaling as ``m^(#leaves - 1)``. Every connected combined
    forest up to ``max_total_degree`` must have the pole cancellation
    predicted by its cycle rank, and for cycle rank zero the scaled forests
    up to ``max_k`` are checked as well.

    Finally, an edge map must exist for every connected graph with at most
    ``max_vertices`` vertices.
    """
    result = SuiteResult('pole-structure')
    for weight in range(1, max_weight + 1):
        partitions = enumerate_partitions(weight)
        for mu in partitions:
            for nu in partitions:
                for a in a_values:
                    for forest in generate_vev_forests(
                        *matrix_element_word(mu, a, nu)
                    ):
                        if len(forest.trees) == 1:
                            _check_tree(
                                result, forest.trees[0],
                                '<{}|q^({} F_2)|{}>'.format(mu, a, nu)
                            )
    for gamma in gammas:
        for degree in degree_vectors(len(gamma), max_total_degree):
            for rset in enumerate_rsets(len(gamma), degree):
                for combined in enumerate_combined_forests(
                    rset, gamma, connected_only=True
                ):
                    _check_combined(result, combined, max_k)
    for index, graph in enumerate(nx.graph_atlas_g()):
        if 0 < graph.number_of_nodes() <= max_vertices and nx.is_connected(
            graph
        ):
            _check_edge_map(result, graph, index)
    return result

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines edge maps, which assign each edge of a connected graph to one of its
endpoints such that the vertices are covered.
"""

import networkx as nx
from fsc.export import export


@export
def cycle_rank(graph):
    """``#edges - #vertices + #components`` of a (multi)graph."""
    return (
        graph.number_of_edges() - graph.number_of_nodes() +
        nx.number_connected_components(graph)
    )


def _check_graph(graph):
    if graph.number_of_nodes() == 0:
        raise ValueError('Edge maps are not defined for the empty graph.')
    if nx.number_of_selfloops(graph):
        raise ValueError('Edge maps are not defined for graphs with loops.')
    if not nx.is_connected(graph):
        raise ValueError('Edge maps are only defined for connected graphs.')


def _edges(graph):
    if graph.is_multigraph():
        return list(graph.edges(keys=True))
    return list(graph.edges())


@export
def edge_map(graph, vertex=None):
    """Assign each edge of a connected graph to one of its endpoints.

    For a graph without cycles, every vertex except ``vertex`` receives
    exactly one edge: the edges are oriented away from ``vertex``. If the
    graph has cycles, every vertex receives at least one edge. The edges of
    a breadth-first spanning tree are mapped to their lower end, and a
    remaining edge is used to cover the start vertex, shifting the tree edges
    along the path between them.

    Arguments
    ---------
    graph : networkx.Graph or networkx.MultiGraph
        Connected graph without self-loops.
    vertex :
        The uncovered vertex for a graph without cycles, and the start of the
        spanning tree otherwise. Defaults to the first vertex.

    Returns
    -------
    dict
        Mapping from edges, as given by ``graph.edges`` (including the keys
        of a multigraph), to vertices.
    """
    _check_graph(graph)
    rank = cycle_rank(graph)
    if vertex is None:
        if rank == 0:
            raise ValueError(
                'A vertex must be given for a graph without cycles.'
            )
        vertex = next(iter(graph.nodes))
    elif vertex not in graph:
        raise ValueError("Invalid value for 'vertex': {}".format(vertex))

    parents = dict(nx.bfs_predecessors(graph, vertex))
    parent_edge = {}
    result = {}
    extra_edges = []
    for edge in _edges(graph):
        first, second = edge[:2]
        for child, parent in ((first, second), (second, first)):
            if parents.get(child) == parent and child not in parent_edge:
                parent_edge[child] = edge
                result[edge] = child
                break
        else:
            extra_edges.append(edge)

    if not extra_edges:
        return result
    for edge in extra_edges:
        result[edge] = edge[0]
    direct = [edge for edge in extra_edges if vertex in edge[:2]]
    if direct:
        result[direct[0]] = vertex
        return result

    # Shift the tree edges on the path from the first endpoint to the start.
    current = extra_edges[0][0]
    while current != vertex:
        parent = parents[current]
        result[parent_edge[current]] = parent
        current = parent
    return result

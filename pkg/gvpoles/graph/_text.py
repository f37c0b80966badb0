# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines a line-based text format for VEV forests and combined forests, used
for golden-file tests and debugging.

A VEV forest is written as::

    forest
    word 1,1,-1,-1 | 0,0,1,1
    vertex 0 0 2 black
    vertex 1 1 0 black leaf 1
    edge 0 1 left
    root 0
    end

and a combined forest as a header with the r-set, followed by one forest
block per slot and the bridges.
"""

from fsc.export import export

from ..partitions import RSet, parse_partition
from ._forest import VevForest, VevVertex
from ._combined import Bridge, CombinedForest


def _join(values):
    return ','.join(str(v) for v in values)


def _split_ints(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(v) for v in text.split(','))


def _vev_forest_lines(forest):
    lines = [
        'forest', 'word {} | {}'.format(
            _join(forest.c_vec), _join(forest.n_vec)
        )
    ]
    edges = []
    roots = []
    counter = 0

    def visit(vertex):
        nonlocal counter
        own_id = counter
        counter += 1
        line = 'vertex {} {} {} {}'.format(
            own_id, vertex.c, vertex.n, 'white' if vertex.white else 'black'
        )
        if vertex.is_leaf:
            line += ' leaf {}'.format(vertex.leaf)
        lines.append(line)
        if not vertex.is_leaf:
            edges.append('edge {} {} left'.format(own_id, visit(vertex.left)))
            edges.append(
                'edge {} {} right'.format(own_id, visit(vertex.right))
            )
        return own_id

    for tree in forest.trees:
        roots.append('root {}'.format(visit(tree)))
    return lines + edges + roots + ['end']


@export
def forest_to_text(forest):
    """Serialize a :class:`.VevForest` or :class:`.CombinedForest`."""
    if isinstance(forest, VevForest):
        return '\n'.join(_vev_forest_lines(forest)) + '\n'
    if not isinstance(forest, CombinedForest):
        raise TypeError(
            'Cannot serialize object of type {}'.format(type(forest))
        )
    lines = ['combined']
    for name in ('mu', 'nu', 'lam'):
        lines.append(
            '{} {}'.format(
                name, ' '.join(str(p) for p in getattr(forest.rset, name))
            )
        )
    lines.append('gamma {}'.format(_join(forest.gamma)))
    for slot, vev_forest in enumerate(forest.forests):
        lines.append('slot {}'.format(slot))
        lines.extend(_vev_forest_lines(vev_forest))
    for bridge in forest.bridges:
        lines.append(
            'bridge {} {}:{} {}:{}'.format(
                bridge.label, *bridge.left, *bridge.right
            )
        )
    lines.append('end')
    return '\n'.join(lines) + '\n'


def _parse_vev_forest(lines):
    """Parse a forest block, starting after the 'forest' line."""
    c_text, n_text = next(lines).split(' ', 1)[1].split('|')
    labels = {}
    children = {}
    root_ids = []
    for line in lines:
        keyword, *rest = line.split()
        if keyword == 'end':
            break
        if keyword == 'vertex':
            vertex_id, c, n, colour = rest[:4]
            leaf = int(rest[5]) if len(rest) > 4 else None
            labels[int(vertex_id)] = (int(c), int(n), colour == 'white', leaf)
        elif keyword == 'edge':
            parent, child, side = rest
            children.setdefault(int(parent), {})[side] = int(child)
        elif keyword == 'root':
            root_ids.append(int(rest[0]))
        else:
            raise ValueError('Unexpected line in forest block: ' + line)

    def build(vertex_id):
        c, n, white, leaf = labels[vertex_id]
        if leaf is not None:
            return VevVertex.make_leaf(leaf, c, n)
        sides = children[vertex_id]
        return VevVertex(
            c=c,
            n=n,
            left=build(sides['left']),
            right=build(sides['right']),
            leaf=None,
            white=white
        )

    return VevForest(
        trees=[build(root_id) for root_id in root_ids],
        c_vec=_split_ints(c_text),
        n_vec=_split_ints(n_text)
    )


def _parse_slot(text):
    slot, leaf = text.split(':')
    return (int(slot), int(leaf))


@export
def forest_from_text(text):
    """Inverse of :func:`forest_to_text`."""
    lines = iter(line.strip() for line in text.splitlines() if line.strip())
    header = next(lines)
    if header == 'forest':
        return _parse_vev_forest(lines)
    if header != 'combined':
        raise ValueError('Unknown forest header: {}'.format(header))
    rset_parts = {}
    gamma = None
    forests = []
    bridges = []
    for line in lines:
        keyword, _, rest = line.partition(' ')
        if keyword in ('mu', 'nu', 'lam'):
            rset_parts[keyword] = [parse_partition(p) for p in rest.split()]
        elif keyword == 'gamma':
            gamma = _split_ints(rest)
        elif keyword == 'slot':
            if next(lines) != 'forest':
                raise ValueError('Slot {} has no forest block.'.format(rest))
            forests.append(_parse_vev_forest(lines))
        elif keyword == 'bridge':
            label, left, right = rest.split()
            bridges.append(
                Bridge(
                    label=int(label),
                    left=_parse_slot(left),
                    right=_parse_slot(right)
                )
            )
        elif keyword == 'end':
            break
        else:
            raise ValueError('Unexpected line in combined forest: ' + line)
    return CombinedForest(
        rset=RSet(**rset_parts),
        gamma=gamma,
        forests=forests,
        bridges=bridges
    )

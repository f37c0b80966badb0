# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the VEV forests and the commutator recursion which generates them
from a word of operators ``E_c(n)``.
"""

from collections import namedtuple
from functools import lru_cache

from fsc.export import export

from ..partitions import Partition
from ._logging import GRAPH_LOGGER


@export
class VevVertex(
    namedtuple('VevVertex', ['c', 'n', 'left', 'right', 'leaf', 'white'])
):
    """Vertex of a VEV tree, together with the subtree above it.

    Leaves carry their index in the operator word and no children. Merge
    vertices carry the two upper neighbours ``left`` (with ``c >= 0``) and
    ``right`` (with ``c < 0``). White vertices are roots labelled ``(0, 0)``.

    Attributes
    ----------
    c, n : int
        The vertex labels.
    left, right : VevVertex or None
        Upper neighbours of a merge vertex.
    leaf : int or None
        Leaf index (starting from 1), ``None`` for merge vertices.
    white : bool
        Colour of the vertex.
    """
    __slots__ = ()

    @classmethod
    def make_leaf(cls, index, c, n):
        return cls(c=c, n=n, left=None, right=None, leaf=index, white=False)

    @classmethod
    def merge(cls, left, right):
        """
        Merge two vertices. The result is white if the labels sum to
        ``(0, 0)``.
        """
        c = left.c + right.c
        n = left.n + right.n
        return cls(
            c=c,
            n=n,
            left=left,
            right=right,
            leaf=None,
            white=(c == 0 and n == 0)
        )

    @property
    def is_leaf(self):
        return self.leaf is not None

    @property
    def zeta(self):
        """The determinant ``c_L n_R - n_L c_R`` born at a merge vertex."""
        if self.is_leaf:
            raise ValueError('Leaves do not carry a determinant.')
        return self.left.c * self.right.n - self.left.n * self.right.c

    def iter_vertices(self):
        """Pre-order iteration over the subtree."""
        yield self
        if not self.is_leaf:
            yield from self.left.iter_vertices()
            yield from self.right.iter_vertices()

    def leaves(self):
        return [v for v in self.iter_vertices() if v.is_leaf]

    def merge_vertices(self):
        return [v for v in self.iter_vertices() if not v.is_leaf]

    def leaf_indices(self):
        return sorted(v.leaf for v in self.leaves())

    def scale(self, k):
        """Multiply all labels of the subtree by ``k``."""
        if self.is_leaf:
            return self._replace(c=k * self.c, n=k * self.n)
        return self._replace(
            c=k * self.c,
            n=k * self.n,
            left=self.left.scale(k),
            right=self.right.scale(k)
        )

    def divide(self, k):
        """Divide all labels of the subtree by ``k``, which must be exact."""
        if self.c % k or self.n % k:
            raise ValueError(
                'Labels ({}, {}) are not divisible by {}'.format(
                    self.c, self.n, k
                )
            )
        if self.is_leaf:
            return self._replace(c=self.c // k, n=self.n // k)
        return self._replace(
            c=self.c // k,
            n=self.n // k,
            left=self.left.divide(k),
            right=self.right.divide(k)
        )

    def canonical_form(self):
        """Serialization which forgets the leaf indices."""
        if self.is_leaf:
            return '({},{})'.format(self.c, self.n)
        return '[{},{}{}|{},{}]'.format(
            self.c, self.n, 'w' if self.white else '',
            self.left.canonical_form(), self.right.canonical_form()
        )


@export
class VevForest:
    """Forest generated by the commutator recursion on an operator word.

    Trees are ordered by their smallest leaf index.

    Attributes
    ----------
    trees : tuple(VevVertex)
        The roots of the trees.
    c_vec, n_vec : tuple(int)
        The operator word the forest was generated from.
    """
    __slots__ = ('trees', 'c_vec', 'n_vec')

    def __init__(self, trees, c_vec, n_vec):
        self.trees = tuple(sorted(trees, key=lambda t: min(t.leaf_indices())))
        self.c_vec = tuple(c_vec)
        self.n_vec = tuple(n_vec)

    @property
    def num_leaves(self):
        return len(self.c_vec)

    def tree_of_leaf(self, index):
        """Position in :attr:`trees` of the tree containing the given leaf."""
        for position, tree in enumerate(self.trees):
            if index in tree.leaf_indices():
                return position
        raise ValueError('Leaf {} is not in the forest.'.format(index))

    def leaf_groups(self):
        """The set partition of the leaf indices induced by the trees."""
        return tuple(tuple(tree.leaf_indices()) for tree in self.trees)

    def scale(self, k):
        return VevForest(
            trees=[tree.scale(k) for tree in self.trees],
            c_vec=[k * c for c in self.c_vec],
            n_vec=[k * n for n in self.n_vec]
        )

    def canonical_form(self):
        return ' '.join(sorted(tree.canonical_form() for tree in self.trees))

    def __eq__(self, other):
        if not isinstance(other, VevForest):
            return NotImplemented
        return (self.trees, self.c_vec, self.n_vec) == (
            other.trees, other.c_vec, other.n_vec
        )

    def __hash__(self):
        return hash((self.trees, self.c_vec, self.n_vec))

    def __repr__(self):
        return 'VevForest({})'.format(
            ' '.join(tree.canonical_form() for tree in self.trees)
        )


def _check_word(c_vec, n_vec):
    if len(c_vec) != len(n_vec):
        raise ValueError(
            'Operator labels have different lengths: {} and {}'.format(
                len(c_vec), len(n_vec)
            )
        )
    if any(c == 0 and n == 0 for c, n in zip(c_vec, n_vec)):
        raise ValueError(
            'Operator word ({}, {}) contains E_0(0).'.format(c_vec, n_vec)
        )


def _expand(word, roots):
    """
    Run the recursion on a word of vertices. Yields the tuples of roots of
    all terms which survive until the word is empty.
    """
    while True:
        if not word:
            yield roots
            return
        if word[-1].c > 0 or word[0].c < 0:
            return
        if word[-1].c == 0:
            roots = roots + (word[-1], )
            word = word[:-1]
            continue
        break
    pos = max(
        i for i in range(len(word) - 1)
        if word[i].c >= 0 and word[i + 1].c < 0
    )
    left, right = word[pos], word[pos + 1]
    merged = VevVertex.merge(left, right)
    if merged.white:
        yield from _expand(word[:pos] + word[pos + 2:], roots + (merged, ))
    else:
        yield from _expand(word[:pos] + (merged, ) + word[pos + 2:], roots)
    yield from _expand(word[:pos] + (right, left) + word[pos + 2:], roots)


@export
def generate_vev_forests(c_vec, n_vec):
    """Generate the VEV forests of the word ``E_c1(n1) ... E_cl(nl)``.

    The rightmost adjacent pair ``(c_i >= 0, c_(i+1) < 0)`` is rewritten as
    the swapped pair plus the commutator. The commutator becomes a black
    merge vertex, or a white root if its labels vanish. Terms with a
    positive ``c`` on the right or a negative ``c`` on the left vanish, and a
    rightmost ``c = 0`` operator is closed into a root. Forests with a zero
    amplitude are kept.

    Arguments
    ---------
    c_vec, n_vec : tuple(int)
        The operator labels. The ``c`` labels must sum to zero.

    Returns
    -------
    list(VevForest)
    """
    c_vec = tuple(int(c) for c in c_vec)
    n_vec = tuple(int(n) for n in n_vec)
    _check_word(c_vec, n_vec)
    if sum(c_vec) != 0:
        raise ValueError(
            'The c labels of {} do not sum to zero.'.format(c_vec)
        )
    return list(_generate_cached(c_vec, n_vec))


@lru_cache(maxsize=None)
def _generate_cached(c_vec, n_vec):
    word = tuple(
        VevVertex.make_leaf(index, c, n)
        for index, (c, n) in enumerate(zip(c_vec, n_vec), start=1)
    )
    forests = tuple(
        VevForest(trees=roots, c_vec=c_vec, n_vec=n_vec)
        for roots in _expand(word, ())
    )
    GRAPH_LOGGER.debug(
        'Generated {} forests for word c={}, n={}'.format(
            len(forests), c_vec, n_vec
        )
    )
    return forests


@export
def matrix_element_word(mu, a, nu):
    """
    Operator word whose VEV is ``<mu| q^(a F_2) |nu>``: the parts of ``mu``
    in increasing order with ``n = 0``, followed by the negated parts of
    ``nu`` in decreasing order with ``n = a nu_j``.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    c_vec = tuple(reversed(mu)) + tuple(-part for part in nu)
    n_vec = (0, ) * len(mu) + tuple(a * part for part in nu)
    return c_vec, n_vec


@export
def equivalence_classes(forests):
    """Group forests by their leaf-index free canonical form."""
    classes = {}
    for forest in forests:
        classes.setdefault(forest.canonical_form(), []).append(forest)
    return classes

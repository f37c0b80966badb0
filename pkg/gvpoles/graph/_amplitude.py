# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the amplitudes of VEV trees and forests, and the evaluation of a VEV
as a sum over forests.
"""

from collections import Counter
from fractions import Fraction

from fsc.export import export

from ..qalgebra import QRatio, RatioSum, qnum_product
from ._forest import VevForest, generate_vev_forests


class QNumberProduct:
    """
    Value of the form ``scalar * prod [num] / prod [den]`` with positive
    q-number arguments, kept as multisets until it is converted. Common
    factors of numerator and denominator cancel without any polynomial gcd.
    """
    __slots__ = ('scalar', 'num', 'den')

    def __init__(self, scalar=1):
        self.scalar = Fraction(scalar)
        self.num = Counter()
        self.den = Counter()

    def multiply(self, k, power=1):
        """Multiply by ``[k]^power``, using ``[-k] = -[k]`` and ``[0] = 0``."""
        if k == 0:
            if power > 0:
                self.scalar = Fraction(0)
                return
            raise ZeroDivisionError('Division by the q-number [0].')
        if k < 0 and power % 2:
            self.scalar = -self.scalar
        if power > 0:
            self.num[abs(k)] += power
        elif power < 0:
            self.den[abs(k)] -= power

    def divide(self, k):
        self.multiply(k, power=-1)

    def update(self, other):
        self.scalar *= other.scalar
        self.num.update(other.num)
        self.den.update(other.den)

    def cancel(self):
        common = self.num & self.den
        self.num -= common
        self.den -= common

    def __bool__(self):
        return bool(self.scalar)

    def to_ratio(self):
        if not self.scalar:
            return QRatio(0)
        self.cancel()
        return QRatio(
            qnum_product(self.num.elements()) * self.scalar,
            qnum_product(self.den.elements())
        )

    def add_to(self, accumulator):
        """Add the value to a :class:`.RatioSum`."""
        if not self.scalar:
            return
        self.cancel()
        accumulator.add(
            qnum_product(self.num.elements()),
            den_parts=tuple(self.den.elements()),
            coefficient=self.scalar
        )


def tree_factors(tree):
    """The amplitude of a single VEV tree as a :class:`QNumberProduct`."""
    result = QNumberProduct()
    if tree.white:
        result.scalar *= tree.left.c
        for vertex in tree.merge_vertices():
            if vertex is not tree:
                result.multiply(vertex.zeta)
    else:
        for vertex in tree.merge_vertices():
            result.multiply(vertex.zeta)
        result.divide(tree.n)
    return result


def forest_factors(forest):
    result = QNumberProduct()
    for tree in _trees_of(forest):
        result.update(tree_factors(tree))
        if not result:
            break
    return result


def _trees_of(value):
    if isinstance(value, VevForest):
        return value.trees
    return (value, )


@export
def amplitude_A(forest):  # pylint: disable=invalid-name
    """Amplitude of a VEV tree or forest.

    For a black root, a tree contributes ``prod [zeta_v] / [n_root]`` over
    its merge vertices. A white root contributes
    ``c_L(root) prod [zeta_v]`` over the merge vertices other than the root.
    The amplitude of a forest is the product over its trees.

    Arguments
    ---------
    forest : VevForest or VevVertex
        The forest, or the root of a single tree.

    Returns
    -------
    QRatio
    """
    return forest_factors(forest).to_ratio()


def _leaf_arguments(tree):
    return [abs(leaf.c) for leaf in tree.leaves() if leaf.c]


@export
def amplitude_B(tree, mu=None, nu=None):  # pylint: disable=invalid-name
    """
    The amplitude ``A(T) / ([mu] [nu])`` of a tree. When ``mu`` and ``nu``
    are not given, they are read from the leaves with positive and negative
    ``c``.
    """
    result = tree_factors(tree)
    if mu is None and nu is None:
        for k in _leaf_arguments(tree):
            result.divide(k)
    else:
        for k in tuple(mu or ()) + tuple(nu or ()):
            result.divide(k)
    return result.to_ratio()


@export
def vev_graphs(c_vec, n_vec):
    """
    The VEV ``<0| E_c1(n1) ... E_cl(nl) |0>`` as the sum of the amplitudes of
    all forests generated from the word. Words whose ``c`` labels do not sum
    to zero have a vanishing VEV.
    """
    if sum(c_vec) != 0:
        return QRatio(0)
    accumulator = RatioSum()
    for forest in generate_vev_forests(c_vec, n_vec):
        forest_factors(forest).add_to(accumulator)
    return accumulator.total()

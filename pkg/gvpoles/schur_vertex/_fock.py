# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the charge-zero Fock space in the fermionic basis and the action of
the operators ``E_c(n)``.

A basis state ``|v_lam>`` is described by its Maya positions
``lam_i - i + 1/2``. Positions are stored doubled, as the odd integers
``2 lam_i - 2 i + 1``.
"""

import numbers
from functools import lru_cache
from types import MappingProxyType

from fsc.export import export

from ..partitions import EMPTY, Partition, enumerate_partitions
from ..characters import mn_character
from ..qalgebra import QLaurent, QRatio, qnum


@export
class FockVector:
    """Finite linear combination of fermionic basis states ``|v_lam>``.

    Arguments
    ---------
    terms : collections.abc.Mapping
        Mapping from :class:`.Partition` to coefficients. Zero coefficients
        are dropped.
    """
    __slots__ = ('_terms', )

    def __init__(self, terms=MappingProxyType({})):
        self._terms = {}
        for partition, value in dict(terms).items():
            value = QRatio.coerce(value)
            if value:
                self._terms[Partition(partition)] = value

    @classmethod
    def vacuum(cls):
        return cls({EMPTY: 1})

    @classmethod
    def basis(cls, partition):
        return cls({partition: 1})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, partition):
        return self._terms.get(Partition(partition), QRatio(0))

    def pair(self, other):
        """Bilinear pairing with ``<v_lam|v_lam'> = delta``."""
        total = QRatio(0)
        for partition, value in self._terms.items():
            if partition in other.terms:
                total += value * other.terms[partition]
        return total

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other.terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        result = dict(self._terms)
        for partition, value in other.items():
            result[partition] = result.get(partition, QRatio(0)) + value
        return FockVector(result)

    def __neg__(self):
        return FockVector({
            partition: -value
            for partition, value in self._terms.items()
        })

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (numbers.Rational, QLaurent, QRatio)):
            return NotImplemented
        return FockVector({
            partition: value * scalar
            for partition, value in self._terms.items()
        })

    __rmul__ = __mul__

    def __repr__(self):
        return 'FockVector({})'.format(
            ', '.join(
                '{}: {}'.format(partition, value)
                for partition, value in self._terms.items()
            )
        )


@export
def bosonic_state(mu):
    """The bosonic state ``|mu> = sum_lam chi_lam(mu) |v_lam>``."""
    mu = Partition(mu)
    return FockVector({
        lam: mn_character(lam, mu)
        for lam in enumerate_partitions(mu.weight)
    })


def _maya_positions(partition, size):
    parts = tuple(partition) + (0, ) * (size - len(partition))
    return [2 * part - 2 * i + 1 for i, part in enumerate(parts, start=1)]


def _partition_from_maya(positions):
    positions = sorted(positions, reverse=True)
    return Partition(
        part for part in (
            (position + 2 * i - 1) // 2
            for i, position in enumerate(positions, start=1)
        ) if part > 0
    )


@lru_cache(maxsize=None)
def _apply_to_basis(c, n, partition):
    """
    Returns the terms of ``E_c(n) |v_partition>`` as a tuple of
    ``(Partition, QRatio)`` pairs.
    """
    if c == 0:
        eigenvalue = QLaurent()
        for position, vacuum_position in zip(
            _maya_positions(partition, len(partition)),
            _maya_positions(EMPTY, len(partition))
        ):
            eigenvalue += QLaurent({
                n * position: 1
            }) - QLaurent({n * vacuum_position: 1})
        return ((partition, QRatio(eigenvalue) + QRatio(1, qnum(n))), )
    size = len(partition) + abs(c) + 1
    positions = _maya_positions(partition, size)
    occupied = set(positions)
    lowest = min(positions)
    result = []
    for position in positions:
        target = position - 2 * c
        if target in occupied or target < lowest:
            continue
        between = sum(
            1 for other in positions
            if min(position, target) < other < max(position, target)
        )
        sign = -1 if between % 2 else 1
        new_positions = (occupied - {position}) | {target}
        result.append((
            _partition_from_maya(new_positions),
            QRatio(QLaurent.monomial(n * (position - c), sign))
        ))
    return tuple(result)


@export
def apply_E(c, n, vector):  # pylint: disable=invalid-name
    """Apply the operator

    ``E_c(n) = sum_k q^(n (k - c/2)) E_{k-c,k} + delta_{c,0} / [n]``

    to a :class:`FockVector`. ``E_{k-c,k}`` moves the Maya position ``k``
    to ``k - c``, with the fermionic sign given by the number of occupied
    positions in between.

    Arguments
    ---------
    c, n : int
        Labels of the operator; ``(0, 0)`` is not allowed.
    vector : FockVector
        The state to act on.
    """
    if c == 0 and n == 0:
        raise ValueError('The operator E_0(0) is not defined.')
    result = {}
    for partition, value in vector.items():
        for new_partition, factor in _apply_to_basis(c, n, partition):
            result[new_partition] = result.get(new_partition,
                                               QRatio(0)) + value * factor
    return FockVector(result)


def _check_word(c_vec, n_vec):
    if len(c_vec) != len(n_vec):
        raise ValueError(
            'Operator labels have different lengths: {} and {}'.format(
                len(c_vec), len(n_vec)
            )
        )
    for c, n in zip(c_vec, n_vec):
        if c == 0 and n == 0:
            raise ValueError(
                'Operator word ({}, {}) contains E_0(0).'.format(
                    c_vec, n_vec
                )
            )


@export
def vev_fock(c_vec, n_vec):
    """Vacuum expectation value ``<0| E_c1(n1) ... E_cl(nl) |0>``.

    The operators are applied to the vacuum from right to left. The result
    is zero when the labels ``c`` do not sum to zero.
    """
    _check_word(c_vec, n_vec)
    if sum(c_vec) != 0:
        return QRatio(0)
    vector = FockVector.vacuum()
    for c, n in reversed(list(zip(c_vec, n_vec))):
        vector = apply_E(c, n, vector)
        if not vector:
            return QRatio(0)
    return vector.coefficient(EMPTY)

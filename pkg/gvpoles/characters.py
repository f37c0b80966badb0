# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the irreducible characters of the symmetric group, and the change
between the bosonic and fermionic bases of the charge-zero Fock space.
"""

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from fsc.export import export

from .partitions import Partition, enumerate_partitions, z_value


def _beta_numbers(partition):
    length = len(partition)
    return tuple(part + length - i for i, part in enumerate(partition, 1))


def _from_beta_numbers(beta):
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return Partition(
        part for part in (b - (length - i) for i, b in enumerate(beta, 1))
        if part > 0
    )


@export
@lru_cache(maxsize=None)
def mn_character(lam, mu):
    """Irreducible character ``chi_lam(mu)`` of the symmetric group.

    Computed by the Murnaghan-Nakayama rule, stripping border strips of the
    size of the largest part of ``mu``. Border strips are removed as bead
    moves on the beta-numbers of ``lam``.

    Arguments
    ---------
    lam : Partition
        Label of the irreducible representation.
    mu : Partition
        Label of the conjugacy class.
    """
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(
            'Weight mismatch in character: {} and {}'.format(lam, mu)
        )
    if not mu:
        return 1
    strip = mu[0]
    rest = Partition(mu[1:])
    beta = _beta_numbers(lam)
    occupied = set(beta)
    result = 0
    for bead in beta:
        target = bead - strip
        if target < 0 or target in occupied:
            continue
        height = sum(1 for other in beta if target < other < bead)
        new_beta = (occupied - {bead}) | {target}
        sign = -1 if height % 2 else 1
        result += sign * mn_character(_from_beta_numbers(new_beta), rest)
    return result


@export
def class_sign(mu):
    """Sign of a permutation of cycle type ``mu``."""
    return -1 if (Partition(mu).weight - len(mu)) % 2 else 1


@export
def dimension(lam):
    """Dimension of the irreducible representation, by the hook-length
    formula.
    """
    lam = Partition(lam)
    conjugate = lam.conjugate()
    hooks = 1
    for i, part in enumerate(lam):
        for j in range(part):
            hooks *= part - j + conjugate[j] - i - 1
    return math.factorial(lam.weight) // hooks


@export
class CharacterTable:
    """
    Character table of the symmetric group of a given degree. Rows and columns
    are both indexed by :func:`.enumerate_partitions`.

    Attributes
    ----------
    d : int
        Degree of the symmetric group.
    partitions : tuple(Partition)
        Row and column labels.
    values : numpy.ndarray
        Object array of Python integers, ``values[i, j] = chi_i(class_j)``.
    """
    def __init__(self, d):
        self.d = d
        self.partitions = enumerate_partitions(d)
        self._index = {p: i for i, p in enumerate(self.partitions)}
        self.values = np.array(
            [[mn_character(lam, mu) for mu in self.partitions]
             for lam in self.partitions],
            dtype=object
        )

    def __getitem__(self, key):
        lam, mu = key
        return self.values[self._index[Partition(lam)],
                           self._index[Partition(mu)]]

    def index(self, partition):
        return self._index[Partition(partition)]

    @property
    def z_values(self):
        return np.array([z_value(p) for p in self.partitions], dtype=object)


@export
@lru_cache(maxsize=None)
def character_table(d):
    """Cached :class:`CharacterTable` of degree ``d``."""
    return CharacterTable(d)


@export
def bosonic_to_fermionic(coordinates, d):
    """
    Convert a vector ``sum_mu b_mu |mu>`` of bosonic states to fermionic
    coordinates ``c_lam``, using ``|mu> = sum_lam chi_lam(mu) |v_lam>``.

    Arguments
    ---------
    coordinates : collections.abc.Mapping
        Mapping from partitions of ``d`` to coefficients.
    d : int
        The common weight.
    """
    table = character_table(d)
    b_vec = np.array([
        Fraction(coordinates.get(mu, 0)) for mu in table.partitions
    ],
                     dtype=object)
    c_vec = table.values.dot(b_vec)
    return {
        lam: value
        for lam, value in zip(table.partitions, c_vec) if value != 0
    }


@export
def fermionic_to_bosonic(coordinates, d):
    """
    Inverse of :func:`bosonic_to_fermionic`, using
    ``|v_lam> = sum_mu chi_lam(mu) / z_mu |mu>``.
    """
    table = character_table(d)
    c_vec = np.array([
        Fraction(coordinates.get(lam, 0)) for lam in table.partitions
    ],
                     dtype=object)
    b_vec = table.values.T.dot(c_vec)
    return {
        mu: Fraction(value) / z
        for mu, value, z in zip(table.partitions, b_vec, table.z_values)
        if value != 0
    }

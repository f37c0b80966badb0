# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the matrix elements of ``q^(a F_2)`` in the bosonic and fermionic
bases.
"""

from functools import lru_cache

from fsc.export import export

from ..partitions import Partition, kappa, enumerate_partitions, z_value
from ..characters import mn_character
from ..qalgebra import QLaurent


@export
def fermionic_matrix_element(lam, a, mu):
    """``<v_lam| q^(a F_2) |mu> = chi_lam(mu) q^(a kappa(lam) / 2)``."""
    return QLaurent.monomial(a * kappa(lam), mn_character(lam, mu))


@export
@lru_cache(maxsize=None)
def matrix_element_char(mu, a, nu):
    """Matrix element ``<mu| q^(a F_2) |nu>`` between bosonic states.

    Evaluates ``sum_lam chi_lam(mu) chi_lam(nu) q^(a kappa(lam) / 2)``. The
    bracket between two empty partitions is 1.

    Arguments
    ---------
    mu, nu : Partition
        Partitions of equal weight.
    a : int
        Power of the energy operator.

    Returns
    -------
    QLaurent
    """
    mu = Partition(mu)
    nu = Partition(nu)
    if mu.weight != nu.weight:
        raise ValueError(
            'Weight mismatch in matrix element: {} and {}'.format(mu, nu)
        )
    coefficients = {}
    for lam in enumerate_partitions(mu.weight):
        value = mn_character(lam, mu) * mn_character(lam, nu)
        if value:
            exponent = a * kappa(lam)
            coefficients[exponent] = coefficients.get(exponent, 0) + value
    return QLaurent(coefficients)


@export
def bosonic_norm(mu):
    """``<mu|mu> = z_mu``, the value of the ``a = 0`` matrix element."""
    return z_value(mu)

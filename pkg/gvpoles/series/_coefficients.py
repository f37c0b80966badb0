# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the coefficients ``Z_d`` of the partition function, evaluated along
three independent paths, and the connected-forest coefficients ``F_d`` of the
free energy.
"""

import itertools
from fractions import Fraction

from fsc.export import export

from ..partitions import enumerate_partitions, enumerate_rsets, kappa
from ..qalgebra import QLaurent, QRatio, RatioSum
from ..schur_vertex import W_vertex, matrix_element_char
from ..graph import enumerate_combined_forests
from ..graph._combined import combined_factors
from ._logging import SERIES_LOGGER


def _check_input(gamma, degree):
    gamma = tuple(int(g) for g in gamma)
    degree = tuple(int(d) for d in degree)
    if len(gamma) < 2:
        raise ValueError(
            "Invalid value for 'gamma': {} (need r >= 2)".format(gamma)
        )
    if len(degree) != len(gamma):
        raise ValueError(
            "Invalid value for 'degree': {} (expected length {})".format(
                degree, len(gamma)
            )
        )
    if any(d < 0 for d in degree) or not any(degree):
        raise ValueError("Invalid value for 'degree': {}".format(degree))
    return gamma, degree


def _gamma_sign(gamma, degree):
    return -1 if sum(g * d for g, d in zip(gamma, degree)) % 2 else 1


@export
def z_coefficient_def(gamma, degree):
    """The coefficient of ``Q^d`` in the partition function.

    Evaluates the defining sum

    ``(-1)^(gamma.d) sum_{lam^i in P_(d_i)} prod_i q^(gamma_i kappa(lam^i) / 2)
    W_{lam^i, lam^(i+1)}``

    with cyclic indices.

    Arguments
    ---------
    gamma : tuple(int)
        The integers ``gamma_i``, at least two.
    degree : tuple(int)
        Non-zero degree vector of the same length.

    Returns
    -------
    QRatio
    """
    gamma, degree = _check_input(gamma, degree)
    r = len(gamma)
    total = QRatio(0)
    for lams in itertools.product(*(enumerate_partitions(d) for d in degree)):
        framing = sum(g * kappa(lam) for g, lam in zip(gamma, lams))
        term = QRatio(QLaurent.monomial(framing))
        for i in range(r):
            term = term * W_vertex(lams[i], lams[(i + 1) % r])
            if not term:
                break
        total += term
    SERIES_LOGGER.debug(
        'Computed Z_{} for gamma = {} by definition.'.format(degree, gamma)
    )
    return total * _gamma_sign(gamma, degree)


@export
def z_coefficient_matrix(gamma, degree):
    """The coefficient of ``Q^d``, written through matrix elements.

    Evaluates

    ``(-1)^(gamma.d) sum_{r-sets} (-1)^(l(mu) + l(nu)) / (z [mu] [nu])
    prod_i <mu^i ∪ lam^i| q^((gamma_i + 2) F_2) |nu^i ∪ lam^(i+1)>``.
    """
    gamma, degree = _check_input(gamma, degree)
    accumulator = RatioSum()
    for rset in enumerate_rsets(len(gamma), degree):
        numerator = QLaurent.constant(1)
        for i, g in enumerate(gamma):
            numerator = numerator * matrix_element_char(
                rset.left(i), g + 2, rset.right(i)
            )
            if not numerator:
                break
        if not numerator:
            continue
        sign = -1 if rset.length_mu_nu % 2 else 1
        accumulator.add(
            numerator,
            den_parts=sum((tuple(p) for p in rset.mu + rset.nu), ()),
            coefficient=Fraction(sign, rset.z)
        )
    SERIES_LOGGER.debug(
        'Computed Z_{} for gamma = {} from matrix elements.'.format(
            degree, gamma
        )
    )
    return accumulator.total() * _gamma_sign(gamma, degree)


def _forest_sum(gamma, degree, *, connected_only):
    accumulator = RatioSum()
    for rset in enumerate_rsets(len(gamma), degree):
        weight = Fraction(1, rset.z)
        for combined in enumerate_combined_forests(
            rset, gamma, connected_only=connected_only
        ):
            factors = combined_factors(combined)
            factors.scalar *= weight
            factors.add_to(accumulator)
    return accumulator.total()


@export
def z_coefficient_graphs(gamma, degree):
    """
    The coefficient of ``Q^d`` as the sum of the combined amplitudes of all
    combined forests, weighted by ``1 / (z_mu z_nu z_lam)``.
    """
    gamma, degree = _check_input(gamma, degree)
    result = _forest_sum(gamma, degree, connected_only=False)
    SERIES_LOGGER.debug(
        'Computed Z_{} for gamma = {} from combined forests.'.format(
            degree, gamma
        )
    )
    return result


@export
def f_connected(gamma, degree):
    """
    The coefficient of ``Q^d`` in the free energy, as the weighted sum of the
    combined amplitudes of the connected combined forests.
    """
    gamma, degree = _check_input(gamma, degree)
    return _forest_sum(gamma, degree, connected_only=True)

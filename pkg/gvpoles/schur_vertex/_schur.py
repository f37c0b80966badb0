# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the skew Schur functions at ``q^(-rho)`` and the vertex weight
``W_{mu,nu}(q)``.
"""

from fractions import Fraction
from functools import lru_cache

from fsc.export import export

from ..partitions import (
    Partition, combine, enumerate_partitions, kappa, z_value
)
from ..characters import mn_character
from ..qalgebra import QRatio, QLaurent, RatioSum
from ._logging import SCHUR_VERTEX_LOGGER


@export
@lru_cache(maxsize=None)
def skew_schur_qrho(mu, eta):
    """
    Skew Schur function ``s_{mu/eta}`` at the principal specialization
    ``q^(-rho)``, where the power sums are ``p_i = -1 / [i]``. Evaluated
    through the character expansion

    ``sum_{mu', eta'} p_mu' / (z_mu' z_eta')
    chi_mu(mu' ∪ eta') chi_eta(eta')``.
    """
    mu = Partition(mu)
    eta = Partition(eta)
    if eta.weight > mu.weight:
        return QRatio(0)
    accumulator = RatioSum()
    for mu_prime in enumerate_partitions(mu.weight - eta.weight):
        weight = Fraction(0)
        for eta_prime in enumerate_partitions(eta.weight):
            character_product = mn_character(
                mu, combine('union', mu_prime, eta_prime)
            ) * mn_character(eta, eta_prime)
            if character_product:
                weight += Fraction(
                    character_product,
                    z_value(mu_prime) * z_value(eta_prime)
                )
        if weight:
            sign = -1 if len(mu_prime) % 2 else 1
            accumulator.add(1, den_parts=mu_prime, coefficient=sign * weight)
    return accumulator.total()


@export
def W_vertex(mu, nu):  # pylint: disable=invalid-name
    """The vertex weight

    ``(-1)^(|mu| + |nu|) q^((kappa(mu) + kappa(nu)) / 2)
    sum_eta s_{mu/eta}(q^(-rho)) s_{nu/eta}(q^(-rho))``.

    The result is symmetric in ``mu`` and ``nu`` and cached on the sorted
    pair.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    return _w_vertex_sorted(*sorted((mu, nu)))


@lru_cache(maxsize=None)
def _w_vertex_sorted(mu, nu):
    SCHUR_VERTEX_LOGGER.debug('Computing W_vertex({}, {})'.format(mu, nu))
    total = QRatio(0)
    for eta_weight in range(min(mu.weight, nu.weight) + 1):
        for eta in enumerate_partitions(eta_weight):
            total += skew_schur_qrho(mu, eta) * skew_schur_qrho(nu, eta)
    sign = -1 if (mu.weight + nu.weight) % 2 else 1
    return total * QRatio(QLaurent.monomial(kappa(mu) + kappa(nu), sign))

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the scaling ``W -> W_(k)`` of combined forests and the Möbius
combinations ``G_k(W)`` built from it.
"""

from fractions import Fraction

from fsc.export import export

from ..number_theory import divisors, mobius
from ..qalgebra import QRatio, qnum
from ._combined import amplitude_H
from ._poles import tree_gcd, tree_types


@export
def scale_forest(combined, k):
    """The combined forest ``W_(k)``: all vertex and bridge labels times k."""
    if k < 1:
        raise ValueError("Invalid value for 'k': {}".format(k))
    return combined.scale(k)


@export
def g_k_of_w(combined, k):
    """The combination

    ``G_k(W) = sum_{k'|k} mu(k/k') k'^(1 - L) H(W_(k'))|_(q -> q^(k/k'))``,

    where ``L = l(mu) + l(nu) + l(lambda)``.

    Arguments
    ---------
    combined : CombinedForest
        The forest ``W``, whose labels have gcd one.
    k : int
        Positive integer.

    Returns
    -------
    QRatio
    """
    if k < 1:
        raise ValueError("Invalid value for 'k': {}".format(k))
    exponent = 1 - combined.num_parts
    total = QRatio(0)
    for divisor in divisors(k):
        weight = mobius(k // divisor)
        if not weight:
            continue
        value = amplitude_H(combined.scale(divisor)).substitute_power(
            k // divisor
        )
        total += value * (weight * Fraction(divisor)**exponent)
    return total


def _half_factor(m, k):
    """``1 + t_(m k / 2) / 2``"""
    return QRatio(qnum(m * k // 2)**2) * Fraction(1, 2) + 1


@export
def scaling_residual(combined, k):
    """
    Difference between ``H(W_(k))`` and its predicted pole part, which is
    a polynomial in ``t`` with integer coefficients.

    For odd ``k`` the prediction is ``k^(L-1) H(W)|_(t -> t_k)``. For even
    ``k`` it is multiplied by ``(-1)^(L_2(W))`` and by the factor
    ``1 + t_(m(T) k / 2) / 2`` for each type I tree.
    """
    if k < 1:
        raise ValueError("Invalid value for 'k': {}".format(k))
    prediction = amplitude_H(combined).substitute_power(k) * (
        k**(combined.num_parts - 1)
    )
    if k % 2 == 0:
        if combined.l2 % 2:
            prediction = -prediction
        for _, tree in tree_types(combined)['I']:
            prediction = prediction * _half_factor(tree_gcd(tree), k)
    return amplitude_H(combined.scale(k)) - prediction

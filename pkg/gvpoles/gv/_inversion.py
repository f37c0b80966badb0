# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the multicover inversion between the free energy ``F_d`` and the
functions ``G_d``.
"""

import math
from fractions import Fraction
from functools import reduce

from fsc.export import export

from ..number_theory import divisors, mobius
from ..qalgebra import QRatio


def _lookup(coefficients, degree, name):
    try:
        return QRatio.coerce(coefficients[degree])
    except KeyError as exc:
        raise ValueError(
            'Missing coefficient {}_{}.'.format(name, degree)
        ) from exc


def _degree_gcd(degree):
    degree = tuple(int(d) for d in degree)
    if any(d < 0 for d in degree) or not any(degree):
        raise ValueError("Invalid value for 'degree': {}".format(degree))
    return degree, reduce(math.gcd, degree, 0)


@export
def g_of_d(gamma, degree, free_energy):
    """The Möbius inversion

    ``G_d = sum_{k'|k} (k'/k) mu(k/k') F_(k' d / k)(q^(k/k'))``

    with ``k = gcd(d)``.

    Arguments
    ---------
    gamma : tuple(int)
        The integers ``gamma_i`` the free energy belongs to.
    degree : tuple(int)
        Non-zero degree vector.
    free_energy : DegreeSeries or collections.abc.Mapping
        The coefficients ``F_d``, indexed by degree vectors.

    Returns
    -------
    QRatio
    """
    if len(gamma) != len(degree):
        raise ValueError(
            "Invalid value for 'degree': {} (expected length {})".format(
                degree, len(gamma)
            )
        )
    degree, k = _degree_gcd(degree)
    total = QRatio(0)
    for divisor in divisors(k):
        weight = mobius(k // divisor)
        if not weight:
            continue
        reduced = tuple(divisor * d // k for d in degree)
        value = _lookup(free_energy, reduced, 'F')
        total += value.substitute_power(k // divisor) * Fraction(
            weight * divisor, k
        )
    return total


@export
def free_energy_from_g(g_coefficients, degree):
    """The multicover sum ``F_d = sum_{j | gcd(d)} G_(d/j)(q^j) / j``.

    Arguments
    ---------
    g_coefficients : collections.abc.Mapping
        The functions ``G_d``, indexed by degree vectors.
    degree : tuple(int)
        Non-zero degree vector.
    """
    degree, k = _degree_gcd(degree)
    total = QRatio(0)
    for j in divisors(k):
        value = _lookup(g_coefficients, tuple(d // j for d in degree), 'G')
        total += value.substitute_power(j) * Fraction(1, j)
    return total

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the isomorphisms between symmetric Laurent polynomials and
polynomials in ``t`` or ``y``.
"""

import math
from fractions import Fraction
from functools import reduce

from fsc.export import export

from ._ratio import QRatio
from ._univariate import TPoly, YPoly


@export
class NotSymmetricInT(ValueError):
    """
    Raised when a value is not a polynomial in ``t`` (or ``y``): it has a
    non-trivial denominator, is not invariant under ``q -> 1/q``, or contains
    half-integer powers of ``q`` where only integer powers are allowed.
    """


def _symmetric_laurent(value):
    value = QRatio.coerce(value)
    if not value.is_laurent:
        raise NotSymmetricInT(
            '{} has a non-trivial denominator.'.format(value)
        )
    laurent = value.num
    if not laurent.is_symmetric:
        raise NotSymmetricInT(
            '{} is not symmetric under q -> 1/q.'.format(laurent)
        )
    return laurent


def _shifted_step(previous, before, constant):
    """``constant + (v + 2) previous - before`` on integer coefficient lists,
    where ``v`` is the polynomial variable."""
    result = [0] * max(len(previous) + 1, len(before), 1)
    for power, value in enumerate(previous):
        result[power] += 2 * value
        result[power + 1] += value
    for power, value in enumerate(before):
        result[power] -= value
    result[0] += constant
    return result


def _peel(laurent, step, poly_cls):
    """
    Rewrite ``sum_j b_j (x^(j step) + x^(-j step))`` in the variable
    ``v = x^step - 2 + x^(-step)``.

    The pairs ``p_j = x^(j step) + x^(-j step)`` satisfy
    ``p_(j+1) = (v + 2) p_j - p_(j-1)``, so the sum is evaluated by the
    Clenshaw recurrence on integer coefficients, after clearing the common
    denominator.
    """
    pairs = {
        exponent // step: Fraction(value)
        for exponent, value in laurent.coefficients.items() if exponent >= 0
    }
    if not pairs:
        return poly_cls()
    denominator = reduce(
        lambda a, b: a * b // math.gcd(a, b),
        (value.denominator for value in pairs.values()), 1
    )
    scaled = [
        int(pairs.get(index, 0) * denominator)
        for index in range(max(pairs) + 1)
    ]
    current, following = [], []
    for index in range(len(scaled) - 1, 0, -1):
        current, following = _shifted_step(
            current, following, scaled[index]
        ), current
    total = _shifted_step(current, [2 * value for value in following], 0)
    total[0] += scaled[0]
    return poly_cls(Fraction(value, denominator) for value in total)


@export
def to_t_poly(value):
    """
    Convert a symmetric Laurent polynomial in ``q`` to a polynomial in
    ``t``.

    Arguments
    ---------
    value : QRatio or QLaurent
        The value to convert.

    Returns
    -------
    TPoly

    Raises
    ------
    NotSymmetricInT
        If the value has a denominator, is not symmetric, or contains
        half-integer powers of ``q``.
    """
    laurent = _symmetric_laurent(value)
    if any(exponent % 2 for exponent in laurent.coefficients):
        raise NotSymmetricInT(
            '{} contains half-integer powers of q.'.format(laurent)
        )
    return _peel(laurent, step=2, poly_cls=TPoly)


@export
def to_y_poly(value):
    """Convert a symmetric Laurent polynomial in ``q^(1/2)`` to a polynomial
    in ``y``.

    Raises
    ------
    NotSymmetricInT
        If the value has a denominator or is not symmetric.
    """
    laurent = _symmetric_laurent(value)
    return _peel(laurent, step=1, poly_cls=YPoly)

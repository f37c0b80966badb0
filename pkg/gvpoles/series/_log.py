# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the formal logarithm and exponential of truncated series.
"""

from fractions import Fraction

from fsc.export import export

from ._degree_series import DegreeSeries


@export
def log_series(series):
    """Formal logarithm ``sum_m (-1)^(m+1) (Z - 1)^m / m``.

    Arguments
    ---------
    series : DegreeSeries
        Series with constant term one.

    Returns
    -------
    DegreeSeries
        Series with constant term zero.
    """
    if series.constant != 1:
        raise ValueError(
            'The logarithm needs constant term 1, got {}'.format(
                series.constant
            )
        )
    shifted = series - 1
    power = shifted
    result = shifted
    for m in range(2, series.max_total_degree + 1):
        power = power * shifted
        if not power.items():
            break
        result = result + power * Fraction((-1)**(m + 1), m)
    return result


@export
def exp_series(series):
    """
    Formal exponential ``sum_m F^m / m!``, the inverse of
    :func:`log_series`.

    Arguments
    ---------
    series : DegreeSeries
        Series with constant term zero.
    """
    if series.constant != 0:
        raise ValueError(
            'The exponential needs constant term 0, got {}'.format(
                series.constant
            )
        )
    result = DegreeSeries.one(
        series.r, series.max_total_degree, support=series.support
    )
    power = result
    factorial = 1
    for m in range(1, series.max_total_degree + 1):
        power = power * series
        if not power.items():
            break
        factorial *= m
        result = result + power * Fraction(1, factorial)
    return result

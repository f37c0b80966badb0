# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the extraction of the pole part at ``t_k = 0``.
"""

from collections import namedtuple

from fsc.export import export

from ._laurent import qnum
from ._ratio import QRatio
from ._univariate import YPoly, t_k_in_t, y_j_in_y
from ._symmetrize import NotSymmetricInT, to_t_poly, to_y_poly
from ._logging import QALGEBRA_LOGGER


@export
class NoSuchDecomposition(ValueError):
    """
    Raised when a value does not have the requested shape of a simple pole at
    ``t_k = 0`` plus a polynomial.
    """


PoleDecomposition = namedtuple('PoleDecomposition', ['g', 'remainder'])
PoleDecomposition.__doc__ = """
Result of :func:`pole_extract`.

Attributes
----------
g : fractions.Fraction
    Coefficient of the pole.
remainder : TPoly or YPoly
    Polynomial part, in ``t`` for the plain mode and in ``y`` for the half
    mode.
"""
__all__ += ['PoleDecomposition']  # pylint: disable=undefined-variable


def _extract_plain(product, k):
    quotient, remainder = divmod(to_t_poly(product), t_k_in_t(k))
    if remainder.degree > 0:
        raise NoSuchDecomposition(
            'Remainder {} modulo t_{} is not constant.'.format(remainder, k)
        )
    return PoleDecomposition(g=remainder[0], remainder=quotient)


def _extract_half(product, k):
    if k % 2:
        raise ValueError(
            'The half mode needs an even k, got {}'.format(k)
        )
    quotient, remainder = divmod(to_y_poly(product), y_j_in_y(2 * k))
    g = remainder[0]
    expected = YPoly((g, )) + y_j_in_y(k) * (g / 2)
    if remainder != expected:
        raise NoSuchDecomposition(
            'Remainder {} modulo t_{} is not of the form g (1 + t_{}/2).'.
            format(remainder, k, k // 2)
        )
    return PoleDecomposition(g=g, remainder=quotient)


_POLE_MODE_LOOKUP = {'plain': _extract_plain, 'half': _extract_half}


@export
def pole_extract(value, k, *, mode='plain'):
    """Split off the pole of a value at ``t_k = 0``.

    In the ``'plain'`` mode, the value is written as ``g / t_k + R(t)``. In the
    ``'half'`` mode (even ``k`` only), it is written as
    ``(g / t_k) (1 + t_(k/2) / 2) + R(y)``.

    Arguments
    ---------
    value : QRatio
        The value to decompose.
    k : int
        Index of the pole ``t_k = [k]^2``.
    mode : str
        Either ``'plain'`` or ``'half'``.

    Returns
    -------
    PoleDecomposition

    Raises
    ------
    NoSuchDecomposition
        If the value does not have the requested shape.
    """
    if k < 1:
        raise ValueError("Invalid value for 'k': {}".format(k))
    try:
        func = _POLE_MODE_LOOKUP[mode]
    except KeyError as exc:
        raise ValueError("Invalid value for 'mode': {}".format(mode)) from exc
    product = QRatio.coerce(value) * QRatio(qnum(k)**2)
    try:
        result = func(product, k)
    except NotSymmetricInT as exc:
        raise NoSuchDecomposition(
            't_{} times the value is not a polynomial: {}'.format(k, exc)
        ) from exc
    QALGEBRA_LOGGER.debug(
        'Pole at t_{} ({} mode): g = {}'.format(k, mode, result.g)
    )
    return result

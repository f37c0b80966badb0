# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the conversion of symmetric Laurent polynomials to polynomials in
t and y, and for the extraction of poles.
"""

from fractions import Fraction

import pytest

from gvpoles.qalgebra import (
    NoSuchDecomposition, NotSymmetricInT, QLaurent, QRatio, TPoly, YPoly,
    pole_extract, qnum, t_k_in_t, to_t_poly, to_y_poly, y_j_in_y
)


@pytest.mark.parametrize(
    'value, expected', [
        (QLaurent({2: 1, -2: 1}), (2, 1)),
        (QRatio(qnum(3)**2, qnum(1)**2), (9, 6, 1)),
        (QRatio(1), (1, )),
        (QRatio(qnum(2)**2), (0, 4, 1)),
    ]
)
def test_to_t_poly(value, expected):
    assert to_t_poly(value) == TPoly(expected)


@pytest.mark.parametrize(
    'value', [
        QRatio(1, qnum(1)),
        QRatio(qnum(1)),
        QRatio(QLaurent({1: 1, -1: 1})),
        QRatio(QLaurent({2: 1})),
    ]
)
def test_not_symmetric(value):
    with pytest.raises(NotSymmetricInT):
        to_t_poly(value)


def test_to_y_poly():
    assert to_y_poly(QLaurent({1: 1, -1: 1})) == YPoly((2, 1))
    with pytest.raises(NotSymmetricInT):
        to_y_poly(qnum(1))


@pytest.mark.parametrize(
    'k, expected', [(1, (0, 1)), (2, (0, 4, 1)), (3, (0, 9, 6, 1))]
)
def test_t_k_in_t(k, expected):
    assert t_k_in_t(k) == TPoly(expected)


@pytest.mark.parametrize('k', range(1, 21))
def test_binomial_formula(k):
    """
    Check the closed form of t_k against the direct expansion of [k]^2.
    """
    assert to_t_poly(qnum(k)**2) == t_k_in_t(k)
    assert t_k_in_t(k).is_integral


@pytest.mark.parametrize('k', [57, 300])
def test_large_degree(k):
    """
    Conversion of high powers, where the pairs are rewritten through the
    three-term recurrence.
    """
    assert to_t_poly(qnum(k)**2) == t_k_in_t(k)
    assert to_y_poly(qnum(k)**2) == YPoly.from_t_poly(t_k_in_t(k))


def test_rational_coefficients():
    half = Fraction(1, 2)
    value = QLaurent({4: half, 2: 3, 0: Fraction(-1, 3), -2: 3, -4: half})
    expected = TPoly((Fraction(20, 3), 5, Fraction(1, 2)))
    assert to_t_poly(value) == expected
    assert expected.to_laurent() == value


def test_lcm_gcd_ratio():
    """
    The lcm-gcd ratio of the triple (18, 19, 20) is an integer polynomial in
    t with constant term 1.
    """
    value = QRatio(
        qnum(3420) * qnum(2), qnum(18) * qnum(19) * qnum(20) * qnum(1)
    )
    result = to_t_poly(value)
    assert result.is_integral
    assert result[0] == 1
    assert result.degree == (3420 + 2 - 18 - 19 - 20 - 1) // 2


def test_substitute_t():
    t_value = QRatio(qnum(1)**2)
    assert to_t_poly(t_value.substitute_power(2)) == TPoly((0, 4, 1))


@pytest.mark.parametrize(
    'coefficients', [(1, ), (0, 1), (3, -2, 5), (1, 0, 0, 2)]
)
def test_laurent_round_trip(coefficients):
    poly = TPoly(coefficients)
    assert to_t_poly(poly.to_laurent()) == poly
    y_poly = YPoly(coefficients)
    assert to_y_poly(y_poly.to_laurent()) == y_poly


def test_y_relation():
    """
    Check t = y (y + 4) and the embedding of polynomials in t.
    """
    assert YPoly.from_t_poly(TPoly((0, 1))) == YPoly((0, 4, 1))
    assert y_j_in_y(2) == YPoly((0, 4, 1))
    poly = TPoly((1, 2, 3))
    assert YPoly.from_t_poly(poly).to_laurent() == poly.to_laurent()


def test_mixing_raises():
    with pytest.raises(TypeError):
        TPoly((1, )) + YPoly((1, ))


def test_divmod():
    quotient, remainder = divmod(TPoly((2, 9, 6, 1)), TPoly((0, 4, 1)))
    assert quotient == TPoly((2, 1))
    assert remainder == TPoly((2, 1))


def test_string_round_trip():
    poly = TPoly((Fraction(1, 2), 0, -3))
    assert TPoly.from_strings(poly.to_strings()) == poly
    assert poly.to_strings() == ['1/2', '0', '-3']


@pytest.mark.parametrize(
    'value, k, mode, g, remainder', [
        (QRatio(qnum(9), qnum(3)**3), 3, 'plain', 3, TPoly((1, ))),
        (QRatio(qnum(1), qnum(1)**3), 1, 'plain', 1, TPoly()),
        (
            QRatio(qnum(12),
                   qnum(6) * qnum(2)**2), 2, 'half', 2, YPoly((2, 4, 1))
        ),
    ]
)
def test_pole_extract(value, k, mode, g, remainder):
    decomposition = pole_extract(value, k, mode=mode)
    assert decomposition.g == g
    assert decomposition.remainder == remainder


def test_pole_extract_plain_mismatch():
    """
    The type III shape has no plain decomposition at t_2.
    """
    with pytest.raises(NoSuchDecomposition):
        pole_extract(QRatio(qnum(12), qnum(6) * qnum(2)**2), 2)


def test_pole_extract_invalid():
    with pytest.raises(ValueError):
        pole_extract(QRatio(1), 1, mode='full')
    with pytest.raises(ValueError):
        pole_extract(QRatio(1), 3, mode='half')
    with pytest.raises(NoSuchDecomposition):
        pole_extract(QRatio(1, qnum(1)**4), 1)

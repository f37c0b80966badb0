# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines :class:`QRatio`, the field of fractions of the Laurent polynomials,
and the free functions operating on it.
"""

import math
import numbers
import operator
from fractions import Fraction

import sympy
from fsc.export import export

from ._laurent import QLaurent

_X = sympy.Symbol('x')


def _to_sympy_poly(laurent, offset):
    """Convert ``x^(-offset) * laurent`` to a univariate sympy polynomial."""
    coefficients = [Fraction(0)] * (laurent.max_exponent - offset + 1)
    for exponent, value in laurent.items():
        coefficients[laurent.max_exponent - exponent] = value
    return sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in coefficients],
        _X,
        domain=sympy.QQ
    )


def _from_sympy_poly(poly):
    coefficients = poly.all_coeffs()
    degree = len(coefficients) - 1
    return QLaurent({
        degree - i: Fraction(int(c.p), int(c.q))
        for i, c in enumerate(coefficients)
    })


def _primitive_scale(laurent):
    """
    Returns the factor which turns ``laurent`` into a primitive polynomial
    with integer coefficients and positive leading coefficient.
    """
    lcm = 1
    for _, value in laurent.items():
        lcm = lcm * value.denominator // math.gcd(lcm, value.denominator)
    content = 0
    for _, value in laurent.items():
        content = math.gcd(content, int(value * lcm))
    scale = Fraction(lcm, content)
    if laurent[laurent.max_exponent] < 0:
        scale = -scale
    return scale


def _normalize(num, den):
    """
    Reduce ``num / den`` and bring the denominator to its normal form:
    primitive with integer coefficients, lowest exponent zero and positive
    leading coefficient.
    """
    if not den:
        raise ZeroDivisionError('Denominator of QRatio is zero.')
    if not num:
        return QLaurent(), QLaurent.constant(1)
    if den.is_monomial:
        (exponent, value), = den.items()
        return num.shift(-exponent) * (1 / value), QLaurent.constant(1)
    num_offset = num.min_exponent
    den_offset = den.min_exponent
    _, num_poly, den_poly = _to_sympy_poly(num, num_offset).cofactors(
        _to_sympy_poly(den, den_offset)
    )
    num = _from_sympy_poly(num_poly).shift(num_offset - den_offset)
    den = _from_sympy_poly(den_poly)
    scale = _primitive_scale(den)
    return num * scale, den * scale


@export
class QRatio:
    """
    Reduced ratio of two :class:`.QLaurent` polynomials. The pair is always
    stored in normal form, so that equal values have equal representations.

    Arguments
    ---------
    num : QLaurent or numbers.Rational
        The numerator.
    den : QLaurent or numbers.Rational
        The denominator, must be non-zero.
    """
    __slots__ = ('num', 'den')

    def __init__(self, num, den=1):
        self.num, self.den = _normalize(
            QLaurent.coerce(num), QLaurent.coerce(den)
        )

    @classmethod
    def _from_normalized(cls, num, den):
        res = cls.__new__(cls)
        res.num = num
        res.den = den
        return res

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, QLaurent):
            return cls._from_normalized(value, QLaurent.constant(1))
        if isinstance(value, numbers.Rational):
            return cls._from_normalized(
                QLaurent.constant(value), QLaurent.constant(1)
            )
        raise TypeError(
            'Cannot convert {} to {}'.format(type(value), cls.__name__)
        )

    @property
    def is_laurent(self):
        """Whether the denominator is trivial."""
        return self.den == 1

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self.is_laurent:
            return hash(self.num)
        return hash((self.num, self.den))

    def __neg__(self):
        return self._from_normalized(-self.num, self.den)

    def __add__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return QRatio(self.num + other.num, self.den)
        return QRatio(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            if not other:
                return QRatio(0)
            return self._from_normalized(self.num * other, self.den)
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return QRatio(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError('Cannot invert the zero QRatio.')
        return QRatio(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        if not other:
            raise ZeroDivisionError('Division by the zero QRatio.')
        return QRatio(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self.coerce(other) / self

    def __pow__(self, power):
        if not isinstance(power, numbers.Integral):
            return NotImplemented
        if power < 0:
            return self.inverse()**(-power)
        return self._from_normalized(self.num**power, self.den**power)

    def substitute_power(self, factor):
        """Apply ``q -> q^factor``. The normal form is preserved."""
        return self._from_normalized(
            self.num.substitute_power(factor),
            self.den.substitute_power(factor)
        )

    def __repr__(self):
        return 'QRatio({!r}, {!r})'.format(self.num, self.den)

    def __str__(self):
        if self.is_laurent:
            return str(self.num)
        return '({}) / ({})'.format(self.num, self.den)

    @classmethod
    def from_string(cls, text):
        """Parse the output of ``str``."""
        text = text.strip()
        if text.startswith('('):
            num, den = text[1:-1].split(') / (')
            return cls(QLaurent.from_string(num), QLaurent.from_string(den))
        return cls(QLaurent.from_string(text))


_FIELD_OPERATIONS = {
    'add': operator.add,
    'mul': operator.mul,
    'div': operator.truediv,
    'sub': operator.sub,
}


@export
def field_arith(operation, a, b=None):
    """Exact field arithmetic on :class:`QRatio` values.

    Arguments
    ---------
    operation : str
        One of ``'add'``, ``'sub'``, ``'mul'``, ``'div'`` or ``'neg'``.
    a, b : QRatio
        The operands. ``b`` is ignored for ``'neg'``.
    """
    a = QRatio.coerce(a)
    if operation == 'neg':
        return -a
    try:
        func = _FIELD_OPERATIONS[operation]
    except KeyError as exc:
        raise ValueError(
            "Invalid value for 'operation': {}".format(operation)
        ) from exc
    return func(a, QRatio.coerce(b))


@export
def substitute_power(value, factor):
    """The ring homomorphism ``q -> q^factor``."""
    if not isinstance(factor, numbers.Integral) or factor < 1:
        raise ValueError("Invalid value for 'factor': {}".format(factor))
    return QRatio.coerce(value).substitute_power(factor)


@export
def q_power(exponent):
    """The monomial ``q^exponent`` for integer or half-integer exponents."""
    doubled = Fraction(exponent) * 2
    if doubled.denominator != 1:
        raise ValueError(
            'Exponent {} is not a multiple of 1/2'.format(exponent)
        )
    return QLaurent.monomial(int(doubled))

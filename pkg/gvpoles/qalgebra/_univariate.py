# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the polynomials in ``t = [1]^2`` and ``y = [1/2]^2``.
"""

import numbers
from fractions import Fraction
from functools import lru_cache

from scipy.special import comb
from fsc.export import export

from ._laurent import QLaurent


class _UnivariatePoly:
    """
    Polynomial with rational coefficients in a single variable, which is
    itself a symmetric Laurent polynomial in ``x``. Coefficients are stored in
    ascending order, with trailing zeros trimmed.
    """
    __slots__ = ('coefficients', )

    VARIABLE = None

    def __init__(self, coefficients=()):
        coeffs = [Fraction(value) for value in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def base_laurent(cls):
        raise NotImplementedError

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, _UnivariatePoly):
            raise TypeError(
                'Cannot mix polynomials in {} and {}.'.format(
                    cls.VARIABLE, other.VARIABLE
                )
            )
        if isinstance(other, numbers.Rational):
            return cls((other, ))
        raise TypeError(
            'Cannot convert {} to {}'.format(type(other), cls.__name__)
        )

    @property
    def degree(self):
        """Degree of the polynomial, ``-1`` for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_integral(self):
        return all(value.denominator == 1 for value in self.coefficients)

    def __getitem__(self, power):
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        if self.degree <= 0:
            return hash(self[0])
        return hash((self.VARIABLE, self.coefficients))

    def __neg__(self):
        return type(self)(-value for value in self.coefficients)

    def __add__(self, other):
        other = self._coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return type(self)(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if not self or not other:
            return type(self)()
        result = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, val_a in enumerate(self.coefficients):
            for j, val_b in enumerate(other.coefficients):
                result[i + j] += val_a * val_b
        return type(self)(result)

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, numbers.Integral) or power < 0:
            return NotImplemented
        result = type(self)((1, ))
        for _ in range(power):
            result = result * self
        return result

    def __divmod__(self, other):
        """Euclidean division over the rationals."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError('Polynomial division by zero.')
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(self.degree - other.degree + 1, 0)
        lead = other.coefficients[-1]
        for shift in range(len(quotient) - 1, -1, -1):
            factor = remainder[shift + other.degree] / lead
            quotient[shift] = factor
            if factor:
                for i, value in enumerate(other.coefficients):
                    remainder[shift + i] -= factor * value
        return type(self)(quotient), type(self)(remainder[:other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def evaluate(self, value):
        """Horner evaluation at an arbitrary ring element."""
        result = 0
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def to_laurent(self):
        """Re-expansion as a Laurent polynomial in ``x``."""
        return QLaurent.coerce(self.evaluate(self.base_laurent()))

    def to_strings(self):
        """Coefficients as exact rational strings, index is the power."""
        return [str(value) for value in self.coefficients]

    @classmethod
    def from_strings(cls, values):
        return cls(Fraction(value) for value in values)

    def __repr__(self):
        return '{}({})'.format(
            type(self).__name__, [str(value) for value in self.coefficients]
        )

    def __str__(self):
        if not self.coefficients:
            return '0'
        terms = []
        for power, value in reversed(list(enumerate(self.coefficients))):
            if not value:
                continue
            if power == 0:
                terms.append(str(value))
            elif power == 1:
                terms.append('{}*{}'.format(value, self.VARIABLE))
            else:
                terms.append('{}*{}^{}'.format(value, self.VARIABLE, power))
        return ' + '.join(terms)


@export
class TPoly(_UnivariatePoly):
    """Polynomial in ``t = [1]^2 = q - 2 + 1/q``."""
    __slots__ = ()

    VARIABLE = 't'

    @classmethod
    def base_laurent(cls):
        return QLaurent({2: 1, 0: -2, -2: 1})


@export
class YPoly(_UnivariatePoly):
    """
    Polynomial in ``y = [1/2]^2 = q^(1/2) - 2 + q^(-1/2)``. Note that
    ``t = y (y + 4)``.
    """
    __slots__ = ()

    VARIABLE = 'y'

    @classmethod
    def base_laurent(cls):
        return QLaurent({1: 1, 0: -2, -1: 1})

    @classmethod
    def from_t_poly(cls, t_poly):
        """Substitute ``t = y (y + 4)``."""
        return t_poly.evaluate(cls((0, 4, 1))) + cls()


@lru_cache(maxsize=None)
def _square_q_number_coefficients(k):
    """
    Coefficients of ``[k]^2`` as a polynomial in ``[1]^2``, which are
    ``(k / j) * binom(j + k - 1, 2j - 1)``.
    """
    if k < 1:
        raise ValueError("Invalid value for 'k': {}".format(k))
    return (0, ) + tuple(
        k * comb(j + k - 1, 2 * j - 1, exact=True) // j
        for j in range(1, k + 1)
    )


@export
def t_k_in_t(k):
    """The polynomial ``t_k = [k]^2`` expressed in ``t``."""
    return TPoly(_square_q_number_coefficients(k))


@export
def y_j_in_y(j):
    """The polynomial ``y_j = [j/2]^2`` expressed in ``y``."""
    return YPoly(_square_q_number_coefficients(j))

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the exact Laurent polynomials in ``x = q^(1/2)`` and the q-numbers.
"""

import numbers
from fractions import Fraction
from types import MappingProxyType

from fsc.export import export


@export
class QLaurent:
    """Laurent polynomial in ``x = q^(1/2)`` with rational coefficients.

    Exponents are integers counting units of ``x``, so ``q^(k/2)`` is stored
    with exponent ``k``. Zero coefficients are never stored, and the zero
    polynomial has no terms.

    Arguments
    ---------
    coefficients : collections.abc.Mapping
        Mapping from exponents to coefficients. Anything accepted by
        :class:`fractions.Fraction` is a valid coefficient.
    """
    __slots__ = ('_coefficients', )

    def __init__(self, coefficients=MappingProxyType({})):
        coeffs = {}
        for exponent, value in dict(coefficients).items():
            value = Fraction(value)
            if value:
                coeffs[int(exponent)] = value
        self._coefficients = coeffs

    @classmethod
    def _from_clean(cls, coefficients):
        res = cls.__new__(cls)
        res._coefficients = coefficients  # pylint: disable=protected-access
        return res

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent, value=1):
        return cls({exponent: value})

    @classmethod
    def coerce(cls, value):
        """Convert integers and fractions to constant Laurent polynomials."""
        if isinstance(value, cls):
            return value
        if isinstance(value, numbers.Rational):
            return cls.constant(value)
        raise TypeError(
            'Cannot convert {} to {}'.format(type(value), cls.__name__)
        )

    @property
    def coefficients(self):
        return MappingProxyType(self._coefficients)

    def items(self):
        return sorted(self._coefficients.items())

    def __getitem__(self, exponent):
        return self._coefficients.get(exponent, Fraction(0))

    @property
    def min_exponent(self):
        if not self._coefficients:
            raise ValueError('The zero polynomial has no exponents.')
        return min(self._coefficients)

    @property
    def max_exponent(self):
        if not self._coefficients:
            raise ValueError('The zero polynomial has no exponents.')
        return max(self._coefficients)

    @property
    def is_monomial(self):
        return len(self._coefficients) == 1

    @property
    def is_constant(self):
        return not self._coefficients or set(self._coefficients) == {0}

    def constant_value(self):
        if not self.is_constant:
            raise ValueError('{} is not a constant.'.format(self))
        return self[0]

    @property
    def is_symmetric(self):
        """Invariance under ``x -> 1/x``."""
        return all(
            self[-exponent] == value
            for exponent, value in self._coefficients.items()
        )

    @property
    def has_integer_coefficients(self):
        return all(
            value.denominator == 1 for value in self._coefficients.values()
        )

    def shift(self, offset):
        """Multiply by ``x^offset``."""
        return self._from_clean({
            exponent + offset: value
            for exponent, value in self._coefficients.items()
        })

    def substitute_power(self, factor):
        """Apply ``q -> q^factor``, which multiplies every exponent."""
        if factor < 1:
            raise ValueError("Invalid value for 'factor': {}".format(factor))
        return self._from_clean({
            exponent * factor: value
            for exponent, value in self._coefficients.items()
        })

    def __bool__(self):
        return bool(self._coefficients)

    def __eq__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self._coefficients == other._coefficients  # pylint: disable=protected-access

    def __hash__(self):
        if self.is_constant:
            return hash(self[0])
        return hash(frozenset(self._coefficients.items()))

    def __neg__(self):
        return self._from_clean({
            exponent: -value
            for exponent, value in self._coefficients.items()
        })

    def __add__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        result = dict(self._coefficients)
        for exponent, value in other._coefficients.items():  # pylint: disable=protected-access
            new_value = result.get(exponent, 0) + value
            if new_value:
                result[exponent] = new_value
            else:
                result.pop(exponent, None)
        return self._from_clean(result)

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
                return QLaurent()
            return self._from_clean({
                exponent: value * other
                for exponent, value in self._coefficients.items()
            })
        if not isinstance(other, QLaurent):
            return NotImplemented
        result = {}
        for exp_a, val_a in self._coefficients.items():
            for exp_b, val_b in other._coefficients.items():  # pylint: disable=protected-access
                exponent = exp_a + exp_b
                result[exponent] = result.get(exponent, 0) + val_a * val_b
        return QLaurent(result)

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, numbers.Integral) or power < 0:
            return NotImplemented
        result = QLaurent.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __repr__(self):
        return 'QLaurent({!r})'.format({
            exponent: str(value)
            for exponent, value in self.items()
        })

    def __str__(self):
        if not self._coefficients:
            return '0'
        return ' + '.join(
            '{}*x^{}'.format(value, exponent)
            for exponent, value in self.items()
        )

    @classmethod
    def from_string(cls, text):
        """Parse the output of ``str``."""
        text = text.strip()
        if text == '0':
            return cls()
        coefficients = {}
        for term in text.split(' + '):
            value, exponent = term.split('*x^')
            coefficients[int(exponent)] = Fraction(value)
        return cls(coefficients)


@export
def qnum(k):
    """The q-number ``[k] = q^(k/2) - q^(-k/2)``."""
    if k == 0:
        return QLaurent()
    return QLaurent({k: 1, -k: -1})


@export
def qnum_product(parts):
    """Product of the q-numbers of the given parts. The empty product is 1."""
    result = QLaurent.constant(1)
    for part in parts:
        result = result * qnum(part)
    return result

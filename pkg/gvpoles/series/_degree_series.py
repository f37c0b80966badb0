# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines truncated formal series in ``Q_1, ..., Q_r`` with coefficients in the
field of :class:`.QRatio` values.
"""

import itertools
import numbers
from fractions import Fraction
from types import MappingProxyType

from fsc.export import export

from ..qalgebra import QRatio


def _vectors_of_total(r, total):
    """Vectors of length ``r`` with the given sum, in decreasing lex order."""
    if r == 1:
        yield (total, )
        return
    for first in range(total, -1, -1):
        for rest in _vectors_of_total(r - 1, total - first):
            yield (first, ) + rest


@export
def degree_vectors(r, max_total_degree, *, include_zero=False):
    """Enumerate the degree vectors up to the given total degree.

    The vectors are ordered by total degree, and in decreasing
    lexicographic order within one total degree.

    Arguments
    ---------
    r : int
        Length of the vectors.
    max_total_degree : int
        Maximum of ``sum(d)``.
    include_zero : bool
        Include the zero vector.

    Returns
    -------
    list(tuple(int))
    """
    if r < 1:
        raise ValueError("Invalid value for 'r': {}".format(r))
    start = 0 if include_zero else 1
    return [
        vec for total in range(start, max_total_degree + 1)
        for vec in _vectors_of_total(r, total)
    ]


def graded_key(degree):
    """Sort key of the graded order used by :func:`degree_vectors`."""
    return (sum(degree), tuple(-d for d in degree))


def downward_closure(degrees):
    """
    All non-zero vectors which are componentwise smaller than or equal to one
    of the given vectors, in graded order.
    """
    result = set()
    for degree in degrees:
        result.update(
            itertools.product(*(range(d + 1) for d in degree))
        )
    return sorted((vec for vec in result if any(vec)), key=graded_key)


def _is_below(first, second):
    return all(a <= b for a, b in zip(first, second))


@export
class DegreeSeries:
    """Truncated series ``sum_d c_d Q^d``.

    Coefficients are only kept for the degree vectors in the support, which
    is closed under taking smaller vectors. Products never produce or
    consult coefficients outside of it.

    Arguments
    ---------
    r : int
        Number of variables.
    max_total_degree : int
        Truncation order of the total degree.
    coefficients : collections.abc.Mapping
        Mapping from degree vectors to coefficients; absent vectors in the
        support have coefficient zero.
    support : list(tuple(int))
        The degree vectors, excluding zero. Defaults to all vectors up to
        ``max_total_degree``.
    """
    __slots__ = ('r', 'max_total_degree', '_support', '_coefficients')

    def __init__(
        self,
        r,
        max_total_degree,
        coefficients=MappingProxyType({}),
        *,
        support=None
    ):
        self.r = int(r)
        self.max_total_degree = int(max_total_degree)
        if support is None:
            support = degree_vectors(self.r, self.max_total_degree)
        self._support = tuple(sorted(set(support), key=graded_key))
        for degree in self._support:
            self._check_degree(degree)
        self._coefficients = {}
        for degree, value in dict(coefficients).items():
            self[degree] = value

    def _check_degree(self, degree):
        if len(degree) != self.r or any(d < 0 for d in degree):
            raise ValueError("Invalid degree vector: {}".format(degree))
        if sum(degree) > self.max_total_degree:
            raise ValueError(
                'Degree {} exceeds the truncation order {}.'.format(
                    degree, self.max_total_degree
                )
            )

    @classmethod
    def one(cls, r, max_total_degree, *, support=None):
        return cls(
            r,
            max_total_degree, {(0, ) * r: 1},
            support=support
        )

    def _like(self, coefficients):
        return DegreeSeries(
            self.r,
            self.max_total_degree,
            coefficients,
            support=self._support
        )

    @property
    def zero_degree(self):
        return (0, ) * self.r

    @property
    def support(self):
        return self._support

    @property
    def constant(self):
        return self[self.zero_degree]

    def __contains__(self, degree):
        return tuple(degree) in self._coefficients

    def __getitem__(self, degree):
        degree = tuple(degree)
        if degree != self.zero_degree and degree not in self._support:
            raise KeyError(
                'Degree {} is outside of the series support.'.format(degree)
            )
        return self._coefficients.get(degree, QRatio(0))

    def __setitem__(self, degree, value):
        degree = tuple(int(d) for d in degree)
        if degree != self.zero_degree and degree not in self._support:
            raise KeyError(
                'Degree {} is outside of the series support.'.format(degree)
            )
        value = QRatio.coerce(value)
        if value:
            self._coefficients[degree] = value
        else:
            self._coefficients.pop(degree, None)

    def items(self):
        """Non-zero coefficients in graded order."""
        return sorted(
            self._coefficients.items(), key=lambda item: graded_key(item[0])
        )

    def _check_compatible(self, other):
        if not isinstance(other, DegreeSeries):
            raise TypeError(
                'Cannot combine DegreeSeries with {}'.format(type(other))
            )
        if (self.r, self.max_total_degree, self._support) != (
            other.r, other.max_total_degree, other.support
        ):
            raise ValueError('Incompatible series truncations.')

    def __eq__(self, other):
        if not isinstance(other, DegreeSeries):
            return NotImplemented
        return self.r == other.r and dict(self.items()) == dict(
            other.items()
        )

    def __add__(self, other):
        if isinstance(other, numbers.Rational):
            other = DegreeSeries.one(
                self.r, self.max_total_degree, support=self._support
            ) * other
        self._check_compatible(other)
        result = dict(self._coefficients)
        for degree, value in other.items():
            result[degree] = result.get(degree, QRatio(0)) + value
        return self._like(result)

    __radd__ = __add__

    def __neg__(self):
        return self._like({
            degree: -value
            for degree, value in self._coefficients.items()
        })

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (numbers.Rational, QRatio)):
            return self._like({
                degree: value * other
                for degree, value in self._coefficients.items()
            })
        self._check_compatible(other)
        result = {}
        targets = (self.zero_degree, ) + self._support
        for target in targets:
            total = QRatio(0)
            for degree, value in self._coefficients.items():
                if not _is_below(degree, target):
                    continue
                rest = tuple(t - d for t, d in zip(target, degree))
                if rest in other:
                    total += value * other[rest]
            if total:
                result[target] = total
        return self._like(result)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / Fraction(scalar))

    def __repr__(self):
        return 'DegreeSeries(r={}, max_total_degree={}, {})'.format(
            self.r, self.max_total_degree, ', '.join(
                '{}: {}'.format(degree, value)
                for degree, value in self.items()
            )
        )

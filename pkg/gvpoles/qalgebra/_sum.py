# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines an accumulator for sums of terms whose denominators are products of
q-numbers.
"""

from fractions import Fraction

from fsc.export import export

from ._laurent import QLaurent, qnum_product
from ._ratio import QRatio


@export
class RatioSum:
    """
    Accumulates terms ``coefficient * numerator / [den_parts]``. Numerators
    sharing the same multiset of denominator parts are added as Laurent
    polynomials, so that the gcd reduction only happens once per group in
    :meth:`total`.
    """
    def __init__(self):
        self._groups = {}
        self._ratios = QRatio(0)

    def add(self, numerator, den_parts=(), coefficient=1):
        """Add ``coefficient * numerator / prod([p] for p in den_parts)``.
        """
        if any(part <= 0 for part in den_parts):
            raise ValueError(
                'Denominator parts must be positive, got {}'.format(
                    den_parts
                )
            )
        key = tuple(sorted(den_parts))
        term = QLaurent.coerce(numerator) * Fraction(coefficient)
        self._groups[key] = self._groups.get(key, QLaurent()) + term

    def add_ratio(self, value):
        """Add an arbitrary :class:`.QRatio`."""
        self._ratios = self._ratios + value

    def total(self):
        result = self._ratios
        for key, numerator in self._groups.items():
            if numerator:
                result = result + QRatio(numerator, qnum_product(key))
        return result

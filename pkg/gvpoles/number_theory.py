# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the divisor and Möbius functions used in the multicover inversion.
"""

from functools import lru_cache

from fsc.export import export


@export
def divisors(n):
    """Positive divisors of ``n``, in increasing order."""
    if n < 1:
        raise ValueError("Invalid value for 'n': {}".format(n))
    small = [i for i in range(1, int(n**0.5) + 2) if i * i <= n and n % i == 0]
    large = [n // i for i in reversed(small) if i * i != n]
    return small + large


@export
@lru_cache(maxsize=None)
def mobius(n):
    """The Möbius function, by trial factorization."""
    if n < 1:
        raise ValueError("Invalid value for 'n': {}".format(n))
    result = 1
    factor = 2
    while factor * factor <= n:
        if n % factor == 0:
            n //= factor
            if n % factor == 0:
                return 0
            result = -result
        factor += 1
    if n > 1:
        result = -result
    return result

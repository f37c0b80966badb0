# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the suite of identities between q-numbers which govern the pole
structure of the amplitudes.
"""

import math
from fractions import Fraction
from functools import reduce

import numpy as np
from fsc.export import export

from ..number_theory import divisors, mobius
from ..partitions import enumerate_partitions
from ..qalgebra import (
    NoSuchDecomposition, NotSymmetricInT, QRatio, YPoly, pole_extract, qnum,
    qnum_product, t_k_in_t, to_t_poly, to_y_poly
)
from ._result import SuiteResult


def _lcm(*values):
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def _try_convert(func, value):
    try:
        return func(value)
    except NotSymmetricInT:
        return None


def _check_t_k(result, max_k):
    for k in range(1, max_k + 1):
        result.check(
            to_t_poly(qnum(k)**2) == t_k_in_t(k),
            't_{} does not match the binomial formula'.format(k)
        )


def _check_mobius(result, max_k):
    for k in range(1, max_k + 1):
        total = sum(mobius(k // divisor) for divisor in divisors(k))
        result.check(
            total == (1 if k == 1 else 0),
            'Sum of the Moebius function over the divisors of {} is {}'.format(
                k, total
            )
        )


def _check_parity(result, random_state, num_samples):
    for _ in range(num_samples):
        size = random_state.randint(1, 7)
        parts = [int(a) for a in random_state.randint(1, 9, size)]
        value = qnum_product(parts)
        in_y = _try_convert(to_y_poly, value) is not None
        in_t = _try_convert(to_t_poly, value) is not None
        result.check(
            in_y == (size % 2 == 0),
            'Membership of [{}] in Q[y] is {}'.format(parts, in_y)
        )
        result.check(
            in_t == (size % 2 == 0 and sum(parts) % 2 == 0),
            'Membership of [{}] in Q[t] is {}'.format(parts, in_t)
        )


def _check_ratio_ka(result, max_value):
    remainder_ideal = YPoly((0, 4, 1))
    for k in range(1, max_value + 1):
        for a in range(1, max_value + 1):
            value = QRatio(qnum(k * a), qnum(a))
            if k % 2 or a % 2 == 0:
                converted = _try_convert(to_t_poly, value)
                result.check(
                    converted is not None and converted[0] == k,
                    '[{0}*{1}]/[{1}] has no constant term {0} in Q[t]'.format(
                        k, a
                    )
                )
            else:
                converted = _try_convert(to_y_poly, value)
                expected = YPoly((k, Fraction(k, 2)))
                result.check(
                    converted is not None and
                    converted % remainder_ideal == expected,
                    '[{0}*{1}]/[{1}] is not {0} (1 + y/2) modulo y(y+4)'.
                    format(k, a)
                )


def _random_triple(random_state, max_value):
    while True:
        triple = tuple(
            int(v) for v in random_state.randint(1, max_value + 1, 3)
        )
        if reduce(math.gcd, triple) == 1:
            return triple


def _check_triples(result, random_state, num_samples, max_value):
    for _ in range(num_samples):
        a, b, c = _random_triple(random_state, max_value)
        value = QRatio(
            qnum_product([
                _lcm(a, b, c),
                math.gcd(a, b),
                math.gcd(b, c),
                math.gcd(c, a)
            ]),
            qnum_product([a, b, c, 1])
        )
        converted = _try_convert(to_t_poly, value)
        result.check(
            converted is not None and converted.is_integral and
            converted[0] == 1,
            'The lcm-gcd ratio of {} is not an integer polynomial with '
            'constant term 1'.format((a, b, c))
        )


def _g2_applies(partition, k):
    parts = list(partition)
    for i in range(len(parts)):
        rest = parts[:i] + parts[i + 1:]
        if reduce(math.gcd, rest, k) != 1:
            return False
    return k % 2 == 1 or partition.weight % 2 == 0


def _check_scaled_partitions(result, max_weight, max_k):
    for weight in range(2, max_weight + 1):
        for partition in enumerate_partitions(weight):
            if len(partition) < 2:
                continue
            for k in range(1, max_k + 1):
                if not _g2_applies(partition, k):
                    continue
                value = QRatio(
                    qnum_product([k * part for part in partition]),
                    qnum(k)**2 * qnum_product(partition)
                )
                expected = k**(len(partition) - 2)
                try:
                    decomposition = pole_extract(value, 1)
                except (NoSuchDecomposition, NotSymmetricInT) as exc:
                    result.check(
                        False, 'No pole at t = 0 for k = {}, {}: {}'.format(
                            k, partition, exc
                        )
                    )
                    continue
                result.check(
                    decomposition.g == expected,
                    'Pole coefficient {} != {} for k = {}, {}'.format(
                        decomposition.g, expected, k, partition
                    )
                )


@export
def q_lemmas_suite(
    *,
    max_k=20,
    max_mobius=24,
    max_ratio=12,
    random_samples=50,
    max_triple=12,
    max_weight=6,
    max_scale=8,
    seed=0
):
    """Check the q-number identities.

    The checks are: the binomial formula for ``t_k``, the divisor sum of the
    Moebius function, the parity rules for products of q-numbers, the ratio
    ``[ka]/[a]``, the lcm-gcd ratio of random triples and the pole at
    ``t = 0`` of ``[k lambda] / ([k]^2 [lambda])``.
    """
    result = SuiteResult('q-lemmas')
    random_state = np.random.RandomState(seed)
    _check_t_k(result, max_k)
    _check_mobius(result, max_mobius)
    _check_parity(result, random_state, random_samples)
    _check_ratio_ka(result, max_ratio)
    _check_triples(result, random_state, random_samples, max_triple)
    _check_scaled_partitions(result, max_weight, max_scale)
    return result

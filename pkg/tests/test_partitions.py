# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the partition and r-set helpers.
"""

import itertools

import pytest

from gvpoles.partitions import (
    EMPTY, Partition, RSet, combine, enumerate_partitions, enumerate_rsets,
    kappa, parse_partition, partition_count, partitions_gcd, z_value
)


@pytest.mark.parametrize(
    'd, expected', [
        (0, [EMPTY]),
        (1, [Partition((1, ))]),
        (3, [Partition((3, )),
             Partition((2, 1)),
             Partition((1, 1, 1))]),
    ]
)
def test_enumerate_small(d, expected):
    """
    Check the enumeration and its reverse-lexicographic order.
    """
    assert list(enumerate_partitions(d)) == expected


@pytest.mark.parametrize('d', range(13))
def test_partition_count(d):
    """
    Check the enumeration against the pentagonal-number recurrence.
    """
    partitions = enumerate_partitions(d)
    assert len(partitions) == partition_count(d)
    assert len(set(partitions)) == len(partitions)
    assert all(p.weight == d for p in partitions)


def test_count_four():
    assert len(enumerate_partitions(4)) == 5


@pytest.mark.parametrize(
    'partition, expected', [
        ((), 0),
        ((2, 1), 0),
        ((3, ), 6),
        ((1, 1, 1), -6),
    ]
)
def test_kappa(partition, expected):
    assert kappa(Partition(partition)) == expected


@pytest.mark.parametrize('d', range(1, 8))
def test_kappa_conjugate(d):
    """
    Check that conjugation flips the sign of kappa.
    """
    for partition in enumerate_partitions(d):
        assert kappa(partition.conjugate()) == -kappa(partition)
        assert partition.conjugate().conjugate() == partition


@pytest.mark.parametrize(
    'partition, expected', [((1, 1), 2), ((2, 2, 1), 8), ((), 1), ((3, ), 3)]
)
def test_z_value(partition, expected):
    assert z_value(Partition(partition)) == expected


def test_conjugate():
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))


def test_combine():
    """
    Check the union and scaling of partitions.
    """
    assert combine('union', Partition((2, )),
                   Partition((3, 1))) == Partition((3, 2, 1))
    assert combine('scale', 3, Partition((2, 1))) == Partition((6, 3))
    assert combine('union', EMPTY, EMPTY) == EMPTY


def test_combine_invalid():
    with pytest.raises(ValueError):
        combine('intersect', EMPTY, EMPTY)
    with pytest.raises(ValueError):
        combine('scale', 0, Partition((1, )))


@pytest.mark.parametrize('parts', [(0, 1), (1, 2), (-1, )])
def test_invalid_partition(parts):
    with pytest.raises(ValueError):
        Partition(parts)


@pytest.mark.parametrize('partition', [(), (1, ), (3, 2, 2, 1)])
def test_parse_partition(partition):
    partition = Partition(partition)
    assert parse_partition(str(partition)) == partition


def test_parse_unsorted():
    assert parse_partition('1,3,2') == Partition((3, 2, 1))


def test_partitions_gcd():
    assert partitions_gcd([Partition((4, 2)), EMPTY, Partition((6, ))]) == 2
    with pytest.raises(ValueError):
        partitions_gcd([EMPTY, EMPTY])


def test_rset_single():
    """
    Check the unique r-set of degree (1, 0).
    """
    rsets = enumerate_rsets(2, (1, 0))
    assert rsets == [
        RSet(mu=((1, ), ()), nu=((1, ), ()), lam=((), ())),
    ]


def _brute_force_rsets(r, degree):
    weights = range(max(degree) + 1)
    result = set()
    partitions = [p for w in weights for p in enumerate_partitions(w)]
    for lam in itertools.product(partitions, repeat=r):
        if any(lam[i].weight > degree[i] for i in range(r)):
            continue
        mus = [
            enumerate_partitions(degree[i] - lam[i].weight) for i in range(r)
        ]
        for mu in itertools.product(*mus):
            nu_weights = [
                mu[i].weight + lam[i].weight - lam[(i + 1) % r].weight
                for i in range(r)
            ]
            if any(w < 0 for w in nu_weights):
                continue
            for nu in itertools.product(
                *(enumerate_partitions(w) for w in nu_weights)
            ):
                result.add(RSet(mu, nu, lam))
    return result


@pytest.mark.parametrize(
    'r, degree', [(2, (1, 0)), (3, (1, 0, 0)), (2, (1, 1)), (3, (1, 1, 0)),
                  (2, (2, 1))]
)
def test_rsets_brute_force(r, degree):
    """
    Compare the r-set enumeration with a brute force search.
    """
    rsets = enumerate_rsets(r, degree)
    assert len(set(rsets)) == len(rsets)
    assert set(rsets) == _brute_force_rsets(r, degree)
    for rset in rsets:
        assert rset.degree == degree


def test_rset_unbalanced():
    with pytest.raises(ValueError):
        RSet(mu=((1, ), ()), nu=((), ()), lam=((), ()))


def test_rset_scale():
    rset = RSet(mu=((1, ), ()), nu=((1, ), ()), lam=((), ()))
    scaled = rset.scale(2)
    assert scaled.mu == (Partition((2, )), EMPTY)
    assert scaled.degree == (2, 0)

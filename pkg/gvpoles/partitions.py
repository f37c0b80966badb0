# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the :class:`Partition` and :class:`RSet` value types, together with
the enumeration helpers used by every other part of the package.
"""

import math
import itertools
from collections import Counter, namedtuple
from functools import lru_cache, reduce

from fsc.export import export


@export
class Partition(tuple):
    """Integer partition, stored as a non-increasing tuple of positive parts.

    The empty tuple is the empty partition. Partitions compare and hash like
    tuples, which makes them usable as memoization keys.

    Arguments
    ---------
    parts : collections.abc.Iterable(int)
        The parts of the partition. Must be positive and non-increasing.
    """
    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(part) for part in parts)
        if any(part <= 0 for part in parts):
            raise ValueError(
                'Partition parts must be positive, got {}'.format(parts)
            )
        if any(left < right for left, right in zip(parts, parts[1:])):
            raise ValueError(
                'Partition parts must be non-increasing, got {}'.format(parts)
            )
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts):
        """Create a partition from parts given in arbitrary order."""
        return cls(sorted(parts, reverse=True))

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicities(self):
        """Returns a :class:`collections.Counter` of the parts."""
        return Counter(self)

    def conjugate(self):
        """Transpose of the Young diagram."""
        if not self:
            return self
        return Partition(
            sum(1 for part in self if part > i) for i in range(self[0])
        )

    def __repr__(self):
        return 'Partition({})'.format(tuple(self))

    def __str__(self):
        return '(' + ','.join(str(part) for part in self) + ')'


EMPTY = Partition()
__all__ += ['EMPTY']  # pylint: disable=undefined-variable


@export
def parse_partition(text):
    """Parse the output of ``str(partition)``. Parts may be given in any order.
    """
    text = text.strip().strip('()').strip()
    if not text:
        return EMPTY
    return Partition.from_parts(int(part) for part in text.split(','))


@export
@lru_cache(maxsize=None)
def enumerate_partitions(d):
    """Returns all partitions of ``d``, in reverse-lexicographic order.

    Arguments
    ---------
    d : int
        The weight of the partitions.

    Returns
    -------
    tuple(Partition)
    """
    if d < 0:
        raise ValueError("Invalid value for 'd': {}".format(d))
    return tuple(Partition(parts) for parts in _partitions_bounded(d, d))


def _partitions_bounded(d, max_part):
    if d == 0:
        yield ()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            yield (first, ) + rest


@export
@lru_cache(maxsize=None)
def partition_count(d):
    """
    Number of partitions of ``d``, from Euler's pentagonal-number recurrence.
    """
    if d < 0:
        return 0
    if d == 0:
        return 1
    total = 0
    for j in itertools.count(1):
        sign = 1 if j % 2 else -1
        first = j * (3 * j - 1) // 2
        if first > d:
            break
        total += sign * partition_count(d - first)
        second = j * (3 * j + 1) // 2
        if second <= d:
            total += sign * partition_count(d - second)
    return total


@export
def kappa(partition):
    """Twice the content sum, ``sum(λ_i (λ_i - 2i + 1))``."""
    return sum(
        part * (part - 2 * i + 1) for i, part in enumerate(partition, start=1)
    )


PartitionStats = namedtuple(
    'PartitionStats', ['z', 'aut_size', 'conjugate', 'content_gcd']
)
__all__ += ['PartitionStats']  # pylint: disable=undefined-variable


@export
@lru_cache(maxsize=None)
def partition_stats(partition):
    """Returns the centralizer order, automorphism count, conjugate and gcd of
    the parts (0 for the empty partition).
    """
    partition = Partition(partition)
    aut_size = 1
    for multiplicity in partition.multiplicities().values():
        aut_size *= math.factorial(multiplicity)
    parts_product = reduce(lambda x, y: x * y, partition, 1)
    return PartitionStats(
        z=parts_product * aut_size,
        aut_size=aut_size,
        conjugate=partition.conjugate(),
        content_gcd=reduce(math.gcd, partition, 0)
    )


@export
def z_value(partition):
    return partition_stats(partition).z


def _union(first, second):
    return Partition.from_parts(tuple(first) + tuple(second))


def _scale(k, partition):
    if k <= 0:
        raise ValueError(
            'Scale factor must be a positive integer, got {}'.format(k)
        )
    return Partition(k * part for part in partition)


_COMBINE_LOOKUP = {'union': _union, 'scale': _scale}


@export
def combine(operation, *args):
    """
    Combine partitions. ``combine('union', mu, nu)`` merges the parts, and
    ``combine('scale', k, mu)`` multiplies every part by ``k``.
    """
    try:
        func = _COMBINE_LOOKUP[operation]
    except KeyError as exc:
        raise ValueError(
            "Invalid value for 'operation': {}, must be one of {}".format(
                operation, sorted(_COMBINE_LOOKUP)
            )
        ) from exc
    return func(*args)


@export
def partitions_gcd(partitions):
    """
    Greatest common divisor of all parts of the given partitions. Empty
    partitions are skipped, but at least one part must exist.
    """
    result = 0
    for partition in partitions:
        result = math.gcd(result, partition_stats(partition).content_gcd)
    if result == 0:
        raise ValueError('The gcd of empty partitions is undefined.')
    return result


@export
class RSet(namedtuple('RSet', ['mu', 'nu', 'lam'])):
    """Triple of partition r-tuples, satisfying the cyclic balance
    ``|mu[i]| + |lam[i]| = |nu[i]| + |lam[i + 1]|``.

    Attributes
    ----------
    mu : tuple(Partition)
        Partitions on the left of each slot.
    nu : tuple(Partition)
        Partitions on the right of each slot.
    lam : tuple(Partition)
        Partitions shared between slot ``i - 1`` (right) and slot ``i``
        (left).
    """
    __slots__ = ()

    def __new__(cls, mu, nu, lam):
        mu, nu, lam = (
            tuple(Partition(part) for part in tup) for tup in (mu, nu, lam)
        )
        if not len(mu) == len(nu) == len(lam):
            raise ValueError(
                'Inconsistent lengths in r-set: {}, {}, {}'.format(
                    len(mu), len(nu), len(lam)
                )
            )
        if len(mu) < 2:
            raise ValueError('An r-set needs r >= 2, got {}'.format(len(mu)))
        r = len(mu)
        for i in range(r):
            left = mu[i].weight + lam[i].weight
            right = nu[i].weight + lam[(i + 1) % r].weight
            if left != right:
                raise ValueError(
                    'Slot {} of the r-set is unbalanced: {} != {}'.format(
                        i, left, right
                    )
                )
        return super().__new__(cls, mu, nu, lam)

    @property
    def r(self):
        return len(self.mu)

    @property
    def degree(self):
        return tuple(m.weight + l.weight for m, l in zip(self.mu, self.lam))

    def left(self, i):
        """The partition ``mu[i] ∪ lam[i]`` entering slot ``i`` from the left."""
        return _union(self.mu[i], self.lam[i])

    def right(self, i):
        """The partition ``nu[i] ∪ lam[i + 1]`` leaving slot ``i``."""
        return _union(self.nu[i], self.lam[(i + 1) % self.r])

    @property
    def length_mu_nu(self):
        return sum(len(p) for p in self.mu + self.nu)

    @property
    def length_lambda(self):
        return sum(len(p) for p in self.lam)

    @property
    def z(self):
        """The product ``z_mu z_nu z_lambda`` over all slots."""
        return reduce(
            lambda x, y: x * y,
            (z_value(p) for p in self.mu + self.nu + self.lam), 1
        )

    def scale(self, k):
        return RSet(*(tuple(_scale(k, p) for p in tup) for tup in self))

    def __str__(self):
        return 'RSet(mu={}, nu={}, lam={})'.format(
            *(' '.join(str(p) for p in tup) for tup in self)
        )


def _partitions_up_to(weight):
    for w in range(weight + 1):
        yield from enumerate_partitions(w)


@export
def enumerate_rsets(r, degree):
    """Returns all r-sets of the given degree vector.

    The lambda partitions are enumerated first, and the remaining weight of
    each slot is then distributed over ``mu`` and ``nu``.

    Arguments
    ---------
    r : int
        Number of slots, at least two.
    degree : tuple(int)
        The degree vector, of length ``r``.

    Returns
    -------
    list(RSet)
    """
    degree = tuple(int(d) for d in degree)
    if r < 2:
        raise ValueError("Invalid value for 'r': {}".format(r))
    if len(degree) != r:
        raise ValueError(
            'Degree vector {} does not have length {}'.format(degree, r)
        )
    if any(d < 0 for d in degree):
        raise ValueError(
            'Degree vector {} has negative entries'.format(degree)
        )
    if not any(degree):
        raise ValueError('The all-zero degree vector has no r-sets.')
    lambda_choices = [
        tuple(_partitions_up_to(min(degree[i], degree[i - 1])))
        for i in range(r)
    ]
    result = []
    for lam in itertools.product(*lambda_choices):
        mu_choices = [
            enumerate_partitions(degree[i] - lam[i].weight) for i in range(r)
        ]
        nu_choices = [
            enumerate_partitions(degree[i] - lam[(i + 1) % r].weight)
            for i in range(r)
        ]
        for mu in itertools.product(*mu_choices):
            for nu in itertools.product(*nu_choices):
                result.append(RSet(mu=mu, nu=nu, lam=lam))
    return result

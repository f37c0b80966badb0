# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the suite checking partition and r-set enumeration, and the
agreement of the direct evaluation paths of the partition function.
"""

from fsc.export import export

from ..partitions import enumerate_partitions, enumerate_rsets, partition_count
from ..series import degree_vectors, z_coefficient_def, z_coefficient_matrix
from ._result import SuiteResult


def _rotations(degree):
    return [degree[i:] + degree[:i] for i in range(1, len(degree))]


@export
def rset_sanity_suite(
    *,
    max_partition_weight=12,
    max_total_degree=3,
    gammas=((-1, -1), (1, 1, 1), (0, 0, 0, 0))
):
    """Check the enumeration of partitions and r-sets.

    The number of enumerated partitions must match the pentagonal-number
    recurrence, each r-set must be enumerated once with the requested
    degree, the definition and the matrix element path of the partition
    function must agree, and for constant ``gamma`` the coefficients must be
    invariant under cyclic rotation of the degree vector.
    """
    result = SuiteResult('rset-sanity')
    for weight in range(max_partition_weight + 1):
        count = len(enumerate_partitions(weight))
        result.check(
            count == partition_count(weight),
            'Enumerated {} partitions of {}, expected {}'.format(
                count, weight, partition_count(weight)
            )
        )
    for gamma in gammas:
        gamma = tuple(gamma)
        r = len(gamma)
        for degree in degree_vectors(r, max_total_degree):
            rsets = enumerate_rsets(r, degree)
            result.check(
                len(set(rsets)) == len(rsets),
                'Duplicate r-sets for degree {}'.format(degree)
            )
            result.check(
                all(rset.degree == degree for rset in rsets),
                'r-set with the wrong degree for degree {}'.format(degree)
            )
            value = z_coefficient_def(gamma, degree)
            result.check(
                value == z_coefficient_matrix(gamma, degree),
                'Definition and matrix elements disagree at gamma = {}, '
                'd = {}'.format(gamma, degree)
            )
            if len(set(gamma)) == 1:
                for rotated in _rotations(degree):
                    result.check(
                        z_coefficient_def(gamma, rotated) == value,
                        'Z is not invariant under the rotation {} -> {} at '
                        'gamma = {}'.format(degree, rotated, gamma)
                    )
    return result

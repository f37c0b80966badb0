# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the suite comparing the logarithm of the partition function with the
sum over connected combined forests.
"""

from fsc.export import export

from ..series import (
    degree_vectors, exp_series, f_connected, log_series, partition_function,
    z_coefficient_graphs
)
from ._result import SuiteResult


@export
def exp_formula_suite(
    *, max_total_degree=2, gammas=((-1, -1), (1, 1, 1))
):
    """Check the exponential formula.

    For each ``gamma``, the free energy ``log Z`` is compared with the sum over
    connected combined forests, and ``Z`` itself with the sum over all
    combined forests.
    """
    result = SuiteResult('exp-formula')
    for gamma in gammas:
        gamma = tuple(gamma)
        z_series = partition_function(gamma, max_total_degree)
        f_series = log_series(z_series)
        result.check(
            exp_series(f_series) == z_series,
            'exp(log Z) != Z for gamma = {}'.format(gamma)
        )
        for degree in degree_vectors(len(gamma), max_total_degree):
            result.check(
                f_connected(gamma, degree) == f_series[degree],
                'connected forests != log Z at gamma = {}, d = {}'.format(
                    gamma, degree
                )
            )
            result.check(
                z_coefficient_graphs(gamma, degree) == z_series[degree],
                'combined forests != Z at gamma = {}, d = {}'.format(
                    gamma, degree
                )
            )
    return result

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the suite comparing the graph expansion of VEVs with the Fock space
action and with the character formula.
"""

import numpy as np
from fsc.export import export

from ..partitions import enumerate_partitions
from ..schur_vertex import matrix_element_char, vev_fock
from ..graph import matrix_element_word, vev_graphs
from ._result import SuiteResult


def random_word(random_state, *, max_length=5, max_entry=3):
    """
    Random operator word with ``c`` labels summing to zero and without
    ``E_0(0)``, or ``None`` if the draw is not admissible.
    """
    length = random_state.randint(2, max_length + 1)
    c_vec = list(random_state.randint(-max_entry, max_entry + 1, length - 1))
    last = -sum(c_vec)
    if abs(last) > max_entry:
        return None
    c_vec.append(last)
    n_vec = list(random_state.randint(-max_entry, max_entry + 1, length))
    if any(c == 0 and n == 0 for c, n in zip(c_vec, n_vec)):
        return None
    return tuple(int(c) for c in c_vec), tuple(int(n) for n in n_vec)


@export
def vev_oracle_suite(
    *, max_weight=3, a_values=(-2, -1, 0, 1, 2), random_samples=20, seed=0
):
    """Compare the three evaluations of VEVs.

    Arguments
    ---------
    max_weight : int
        Largest weight of the partitions ``mu``, ``nu`` of the matrix
        elements ``<mu| q^(a F_2) |nu>``.
    a_values : tuple(int)
        The values of ``a``.
    random_samples : int
        Number of additional random operator words.
    seed : int
        Seed of the random words.
    """
    result = SuiteResult('vev-oracle')
    for weight in range(1, max_weight + 1):
        partitions = enumerate_partitions(weight)
        for mu in partitions:
            for nu in partitions:
                for a in a_values:
                    c_vec, n_vec = matrix_element_word(mu, a, nu)
                    expected = matrix_element_char(mu, a, nu)
                    from_graphs = vev_graphs(c_vec, n_vec)
                    result.check(
                        from_graphs == expected,
                        'graphs != characters for <{}|q^({} F_2)|{}>'.format(
                            mu, a, nu
                        )
                    )
                    result.check(
                        vev_fock(c_vec, n_vec) == expected,
                        'Fock != characters for <{}|q^({} F_2)|{}>'.format(
                            mu, a, nu
                        )
                    )
    random_state = np.random.RandomState(seed)
    num_words = 0
    while num_words < random_samples:
        word = random_word(random_state)
        if word is None:
            continue
        num_words += 1
        result.check(
            vev_graphs(*word) == vev_fock(*word),
            'graphs != Fock for the word c={}, n={}'.format(*word)
        )
    return result

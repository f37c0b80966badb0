# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the verification suites, run at reduced scale.
"""

import inspect

import numpy as np
import pytest

from gvpoles.verify import (
    SCALES, SUITE_NAMES, SuiteResult, exp_formula_suite, pole_structure_suite,
    q_lemmas_suite, rset_sanity_suite, run_suite, run_suites, vev_oracle_suite
)
from gvpoles.verify._vev_oracle import random_word

SMALL_OPTIONS = {
    'vev-oracle': {
        'max_weight': 2,
        'a_values': (-1, 0, 2),
        'random_samples': 5
    },
    'exp-formula': {
        'max_total_degree': 2,
        'gammas': ((-1, -1), )
    },
    'pole-structure': {
        'max_weight': 2,
        'a_values': (1, 3),
        'max_total_degree': 2,
        'gammas': ((1, 1, 1), ),
        'max_k': 2,
        'max_vertices': 4
    },
    'q-lemmas': {
        'max_k': 6,
        'max_mobius': 12,
        'max_ratio': 4,
        'random_samples': 5,
        'max_triple': 6,
        'max_weight': 4,
        'max_scale': 3
    },
    'rset-sanity': {
        'max_partition_weight': 6,
        'max_total_degree': 2,
        'gammas': ((0, 0, 0), (-1, 2))
    },
}


@pytest.mark.parametrize('name', SUITE_NAMES)
def test_suite(name):
    result = run_suite(name, **SMALL_OPTIONS[name])
    assert result.name == name
    assert result.num_checks > 0
    assert result.failures == []
    assert result.passed


def test_run_suites():
    results = run_suites(['q-lemmas', 'rset-sanity'], options=SMALL_OPTIONS)
    assert [result.name for result in results] == ['q-lemmas', 'rset-sanity']
    assert all(result.passed for result in results)


def test_scale_names():
    assert set(SCALES) == {'interactive', 'acceptance'}
    suites = {
        'vev-oracle': vev_oracle_suite,
        'exp-formula': exp_formula_suite,
        'pole-structure': pole_structure_suite,
        'q-lemmas': q_lemmas_suite,
        'rset-sanity': rset_sanity_suite,
    }
    assert set(suites) == set(SUITE_NAMES)
    for options in SCALES.values():
        for name, caps in options.items():
            parameters = inspect.signature(suites[name]).parameters
            assert set(caps) <= set(parameters), name


def test_options_override_scale():
    """
    Explicit options replace the caps of the named scale.
    """
    result, = run_suites(['q-lemmas'],
                         options=SMALL_OPTIONS,
                         scale='acceptance')
    assert result.passed
    assert result.num_checks == run_suite(
        'q-lemmas', **SMALL_OPTIONS['q-lemmas']
    ).num_checks


def test_invalid_scale():
    with pytest.raises(ValueError):
        run_suites(['q-lemmas'], scale='huge')


@pytest.mark.slow
@pytest.mark.parametrize('name', SUITE_NAMES)
def test_acceptance_scale(name):
    result, = run_suites([name], scale='acceptance')
    assert result.failures == []
    assert result.passed


def test_invalid_name():
    with pytest.raises(ValueError):
        run_suite('foo')


def test_result():
    result = SuiteResult('dummy')
    assert result.check(True, 'fine')
    assert not result.check(False, 'broken')
    assert not result.passed
    assert result.to_dict() == {
        'suite': 'dummy',
        'num_checks': 2,
        'passed': False,
        'failures': ['broken']
    }


def test_random_word():
    random_state = np.random.RandomState(1)
    for _ in range(50):
        word = random_word(random_state)
        if word is None:
            continue
        c_vec, n_vec = word
        assert sum(c_vec) == 0
        assert len(c_vec) == len(n_vec)
        assert all(c != 0 or n != 0 for c, n in zip(c_vec, n_vec))

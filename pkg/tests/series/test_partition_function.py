# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the computation of the truncated partition function.
"""

# pylint: disable=redefined-outer-name

import asyncio
import tempfile

import pytest

import gvpoles as gv
from gvpoles.series import (
    ComputationState, degree_vectors, free_energy, partition_function,
    partition_function_async, z_coefficient_def
)

GAMMA = (1, 1, 1)


@pytest.fixture
def reference():
    return partition_function(GAMMA, 2)


def test_coefficients(reference, t_value):
    assert reference.constant == 1
    assert reference[(1, 0, 0)] == -1 / t_value
    for degree in degree_vectors(3, 2):
        assert reference[degree] == z_coefficient_def(GAMMA, degree)


def test_async(reference):
    assert asyncio.run(partition_function_async(GAMMA, 2)) == reference


def test_inside_event_loop(reference):
    """
    The synchronous function can be called from a coroutine, while the event
    loop is running.
    """
    async def inner():
        return partition_function(GAMMA, 2)

    assert asyncio.run(inner()) == reference


@pytest.mark.parametrize('path', ['matrix', 'graphs'])
def test_paths(reference, path):
    assert partition_function(GAMMA, 2, path=path) == reference


def test_jobs(reference):
    assert partition_function(GAMMA, 2, jobs=2) == reference


def test_degrees(reference):
    series = partition_function(GAMMA, 2, degrees=[(1, 1, 0)])
    assert set(series.support) == {(1, 0, 0), (0, 1, 0), (1, 1, 0)}
    for degree in series.support:
        assert series[degree] == reference[degree]


def test_free_energy(reference):
    energy = free_energy(reference)
    assert energy.constant == 0
    assert energy[(1, 0, 0)] == reference[(1, 0, 0)]


@pytest.mark.parametrize(
    'kwargs', [{
        'path': 'foo'
    }, {
        'jobs': 0
    }, {
        'degrees': [(3, 0, 0)]
    }]
)
def test_invalid(kwargs):
    with pytest.raises(ValueError):
        partition_function(GAMMA, 2, **kwargs)


def test_save_load(reference):
    with tempfile.NamedTemporaryFile() as named_file:
        partition_function(GAMMA, 2, save_file=named_file.name)
        state = gv.io.load(named_file.name)
        assert isinstance(state, ComputationState)
        assert state.gamma == GAMMA
        assert len(state.coefficients) == len(degree_vectors(3, 2))

        restart = partition_function(
            GAMMA, 2, save_file=named_file.name, load=True, load_quiet=False
        )
        assert restart == reference


def test_initial_state(reference):
    state = ComputationState(
        gamma=GAMMA,
        path='def',
        coefficients={(1, 0, 0): reference[(1, 0, 0)]}
    )
    assert partition_function(GAMMA, 2, initial_state=state) == reference
    with pytest.raises(ValueError):
        partition_function(
            GAMMA,
            2,
            initial_state=ComputationState(gamma=(0, 0, 0), path='def')
        )


def test_state_json(reference):
    state = ComputationState(
        gamma=GAMMA, path='def', coefficients=dict(reference.items())
    )
    restored = ComputationState.from_json(state.to_json())
    assert restored.gamma == state.gamma
    assert restored.path == state.path
    assert restored.coefficients == state.coefficients

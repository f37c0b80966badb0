# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""pytest configuration file for gvpoles tests."""
# pylint: disable=redefined-outer-name

import os

import pytest

from gvpoles.qalgebra import QRatio, TPoly, qnum


def pytest_addoption(parser):
    parser.addoption(
        '--run-slow',
        action='store_true',
        help='run the full-scale reference checks, which take several minutes'
    )


def pytest_configure(config):
    config.addinivalue_line(
        'markers', 'slow: full-scale reference check, needs --run-slow'
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption('--run-slow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --run-slow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def sample():
    """
    Fixture to get the path to the sample of a given name.
    """
    def inner(name):
        return os.path.join(
            os.path.join(
                os.path.dirname(os.path.abspath(__file__)), 'samples'
            ), name
        )

    return inner


@pytest.fixture
def t_ratio():
    """
    Fixture to turn a list of coefficients (index is the power of ``t``) into
    a :class:`.QRatio`.
    """
    def inner(coefficients):
        return QRatio(TPoly(coefficients).to_laurent())

    return inner


@pytest.fixture
def t_value():
    """The value ``t = [1]^2`` as a :class:`.QRatio`."""
    return QRatio(qnum(1)**2)

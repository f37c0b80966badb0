# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the functions to run the verification suites by name.
"""

from collections import ChainMap
from types import MappingProxyType

from fsc.export import export

from ._vev_oracle import vev_oracle_suite
from ._exp_formula import exp_formula_suite
from ._pole_structure import pole_structure_suite
from ._q_lemmas import q_lemmas_suite
from ._rset_sanity import rset_sanity_suite
from ._logging import VERIFY_LOGGER

_SUITE_LOOKUP = {
    'vev-oracle': vev_oracle_suite,
    'exp-formula': exp_formula_suite,
    'pole-structure': pole_structure_suite,
    'q-lemmas': q_lemmas_suite,
    'rset-sanity': rset_sanity_suite,
}

SUITE_NAMES = tuple(_SUITE_LOOKUP)

# The 'interactive' scale uses the defaults of the suite functions.
SCALES = MappingProxyType({
    'interactive':
    MappingProxyType({}),
    'acceptance':
    MappingProxyType({
        'vev-oracle': {
            'max_weight': 4,
            'a_values': (-2, -1, 0, 1, 2),
            'random_samples': 50
        },
        'exp-formula': {
            'max_total_degree': 3,
            'gammas': ((-1, -1), (0, -2), (1, 1, 1))
        },
        'pole-structure': {
            'max_weight': 4,
            'max_total_degree': 3,
            'max_k': 4
        },
        'q-lemmas': {
            'random_samples': 200,
            'max_triple': 20
        },
    }),
})
__all__ = ['SUITE_NAMES', 'SCALES']


@export
def run_suite(name, **kwargs):
    """Run a verification suite.

    Arguments
    ---------
    name : str
        Name of the suite, one of :data:`SUITE_NAMES`.
    kwargs :
        Scale caps passed on to the suite.

    Returns
    -------
    SuiteResult
    """
    try:
        suite = _SUITE_LOOKUP[name]
    except KeyError as exc:
        raise ValueError(
            "Invalid value for 'name': {}, must be one of {}".format(
                name, SUITE_NAMES
            )
        ) from exc
    VERIFY_LOGGER.info('Running suite {}.'.format(name))
    result = suite(**kwargs)
    VERIFY_LOGGER.info(
        'Suite {}: {} checks, {} failures.'.format(
            name, result.num_checks, len(result.failures)
        )
    )
    return result


@export
def run_suites(names=SUITE_NAMES, options=None, *, scale='interactive'):
    """Run several suites.

    Arguments
    ---------
    names : list(str)
        Names of the suites.
    options : dict, optional
        Per-suite keyword arguments, which take precedence over ``scale``.
    scale : str
        Named set of scale caps from :data:`SCALES`. The ``'acceptance'``
        scale runs the suites at the full size of the reference checks.
    """
    if scale not in SCALES:
        raise ValueError(
            "Invalid value for 'scale': {}, must be one of {}".format(
                scale, tuple(SCALES)
            )
        )
    options = options or {}
    return [
        run_suite(
            name,
            **ChainMap(options.get(name, {}), SCALES[scale].get(name, {}))
        ) for name in names
    ]

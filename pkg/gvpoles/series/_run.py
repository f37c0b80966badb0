# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the functions which assemble the partition function and the free
energy as truncated series.
"""

import asyncio
from concurrent.futures import ThreadPoolExecutor

from fsc.export import export

from ._controller import Controller
from ._degree_series import DegreeSeries, degree_vectors, downward_closure
from ._log import log_series
from ._logging import SERIES_LOGGER


@export
async def partition_function_async(
    gamma,
    max_total_degree,
    *,
    path='def',
    degrees=None,
    jobs=1,
    initial_state=None,
    save_file=None,
    save_delay=5.,
    load=False,
    load_quiet=True
):
    """Compute the truncated partition function.

    Arguments
    ---------
    gamma : tuple(int)
        The integers ``gamma_i``, at least two.
    max_total_degree : int
        Truncation order of the total degree.
    path : str
        Evaluation path of the coefficients, one of ``'def'``, ``'matrix'``
        or ``'graphs'``.
    degrees : list(tuple(int)), optional
        Degree vectors which are needed. All smaller vectors are included
        in the computation. Defaults to all vectors up to
        ``max_total_degree``.
    jobs : int
        Number of worker processes. With ``jobs=1``, the coefficients are
        computed in the current process.
    initial_state : ComputationState, optional
        Previously computed coefficients.
    save_file : str
        Path to the file where the intermediate results are stored.
    save_delay : float
        Minimum delay (in seconds) between saving the results.
    load : bool
        Enable or disable loading the initial state from ``save_file``.
    load_quiet : bool
        When set to ``True``, ignore errors when loading the initial state.

    Returns
    -------
    DegreeSeries
        The series ``Z`` with constant term one.
    """
    r = len(gamma)
    if degrees is None:
        support = degree_vectors(r, max_total_degree)
    else:
        support = downward_closure(degrees)
        if any(sum(degree) > max_total_degree for degree in support):
            raise ValueError(
                'Requested degrees exceed the maximum total degree {}.'.format(
                    max_total_degree
                )
            )
    SERIES_LOGGER.debug('Initializing partition function controller.')
    controller = Controller(
        gamma=gamma,
        degrees=support,
        path=path,
        jobs=jobs,
        initial_state=initial_state,
        save_file=save_file,
        save_delay=save_delay,
        load=load,
        load_quiet=load_quiet
    )
    await controller.run()
    SERIES_LOGGER.info(
        'Computed {} coefficients of Z for gamma = {} ({} path).'.format(
            len(support), tuple(gamma), path
        )
    )
    result = DegreeSeries.one(r, max_total_degree, support=support)
    for degree in support:
        result[degree] = controller.state.coefficients[degree]
    return result


def _run_sync(coroutine_function, *args, **kwargs):
    """
    Run a coroutine function to completion from synchronous code. If an event
    loop is already running in this thread, the coroutine gets its own loop
    in a worker thread.
    """
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return asyncio.run(coroutine_function(*args, **kwargs))
    SERIES_LOGGER.debug('Event loop is running, using a worker thread.')
    with ThreadPoolExecutor(max_workers=1) as executor:
        return executor.submit(
            lambda: asyncio.run(coroutine_function(*args, **kwargs))
        ).result()


@export
def partition_function(gamma, max_total_degree, **kwargs):
    """Compute the truncated partition function ``Z`` synchronously.

    Takes the same arguments as :func:`.partition_function_async`, e.g.
    ``partition_function((1, 1, 1), 3, path='matrix', jobs=2)``. It can also
    be called while an event loop is running.

    Returns
    -------
    DegreeSeries
        The series ``Z`` with constant term one.
    """
    return _run_sync(
        partition_function_async, gamma, max_total_degree, **kwargs
    )


@export
def free_energy(series):
    """The free energy ``F = log Z``."""
    return log_series(series)

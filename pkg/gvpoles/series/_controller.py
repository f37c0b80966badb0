# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the Controller, which schedules the evaluation of the partition
function coefficients.
"""

import os
import asyncio
import tempfile
from concurrent.futures import ProcessPoolExecutor

from fsc.export import export
from fsc.async_tools import PeriodicTask

from .. import io
from ._coefficients import (
    z_coefficient_def, z_coefficient_matrix, z_coefficient_graphs
)
from ._state import ComputationState
from ._logging import SERIES_LOGGER

_PATH_LOOKUP = {
    'def': z_coefficient_def,
    'matrix': z_coefficient_matrix,
    'graphs': z_coefficient_graphs,
}


def get_coefficient_function(path):
    try:
        return _PATH_LOOKUP[path]
    except KeyError as exc:
        raise ValueError("Invalid value for 'path': {}".format(path)) from exc


@export
class Controller:
    """
    Implementation class for the :func:`.series.partition_function` function.

    Arguments are the same as defined in :func:`.series.partition_function`.
    """
    def __init__(
        self,
        *,
        gamma,
        degrees,
        path,
        jobs,
        initial_state,
        save_file,
        save_delay=5.,
        load,
        load_quiet
    ):
        self.gamma = tuple(int(g) for g in gamma)
        self.degrees = [tuple(degree) for degree in degrees]
        self.path = path
        self.coefficient_function = get_coefficient_function(path)
        if jobs < 1:
            raise ValueError("Invalid value for 'jobs': {}".format(jobs))
        self.jobs = jobs
        self.save_file = save_file
        self.save_delay = save_delay
        self.state = self.create_state(
            initial_state=initial_state, load=load, load_quiet=load_quiet
        )

    def create_state(self, *, initial_state, load, load_quiet):
        """
        Load or create the initial state of the calculation.
        """
        if load:
            if initial_state is not None:
                raise ValueError(
                    "Cannot set the initial state explicitly and setting "
                    "'load=True' simultaneously."
                )
            try:
                initial_state = io.load(self.save_file)
            except IOError as exc:
                if not load_quiet:
                    raise exc
        if initial_state is not None:
            if (initial_state.gamma, initial_state.path) != (
                self.gamma, self.path
            ):
                raise ValueError(
                    'The initial state was computed for gamma = {}, path = {}.'
                    .format(initial_state.gamma, initial_state.path)
                )
            SERIES_LOGGER.info(
                'Resuming with {} known coefficients.'.format(
                    len(initial_state.coefficients)
                )
            )
            return ComputationState(
                gamma=self.gamma,
                path=self.path,
                coefficients=initial_state.coefficients
            )
        return ComputationState(gamma=self.gamma, path=self.path)

    @property
    def missing_degrees(self):
        return [
            degree for degree in self.degrees
            if degree not in self.state.coefficients
        ]

    async def run(self):
        async with PeriodicTask(self.save, delay=self.save_delay):
            if self.jobs == 1:
                await self._run_inline()
            else:
                await self._run_pool()
        self.save()

    async def _run_inline(self):
        for degree in self.missing_degrees:
            SERIES_LOGGER.debug('Computing coefficient {}'.format(degree))
            self.state.add(
                degree, self.coefficient_function(self.gamma, degree)
            )
            await asyncio.sleep(0.)

    async def _run_pool(self):
        loop = asyncio.get_event_loop()
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            futures = {}
            for degree in self.missing_degrees:
                SERIES_LOGGER.debug(
                    'Scheduling coefficient {}'.format(degree)
                )
                futures[degree] = loop.run_in_executor(
                    executor, self.coefficient_function, self.gamma, degree
                )
            for degree, future in futures.items():
                self.state.add(degree, await future)

    def save(self):
        """
        Store the current ComputationState to the save file.
        """
        if self.save_file and self.state.needs_saving:
            with tempfile.NamedTemporaryFile(
                dir=os.path.dirname(os.path.abspath(self.save_file)),
                delete=False
            ) as tmpf:
                try:
                    io.save(self.state, tmpf.name)
                    os.rename(tmpf.name, self.save_file)
                    self.state.needs_saving = False
                except Exception as exc:
                    os.remove(tmpf.name)
                    raise exc

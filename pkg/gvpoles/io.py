# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
HDF5 persistence of report containers and computation checkpoints, using
the :mod:`fsc.hdf5_io` registry (:class:`.GvReport`,
:class:`.GvReportContainer` and :class:`.ComputationState` are registered
there).
"""

from fsc.hdf5_io import save, load

__all__ = ['save', 'load']

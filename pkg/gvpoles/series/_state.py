# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the data class for the state of a partition function computation.
"""

import json
from types import SimpleNamespace

from fsc.export import export
from fsc.hdf5_io import subscribe_hdf5, HDF5Enabled

from ..qalgebra import QRatio


def _read_string(value):
    if isinstance(value, bytes):
        return value.decode('utf-8')
    return str(value)


@export
@subscribe_hdf5('gvpoles.computation_state')
class ComputationState(SimpleNamespace, HDF5Enabled):
    """
    Partial result of a partition function computation, which can be saved
    and used to resume the calculation.

    Attributes
    ----------
    gamma : tuple(int)
        The integers ``gamma_i``.
    path : str
        The evaluation path of the coefficients.
    coefficients : dict
        Mapping from degree vectors to the computed coefficients ``Z_d``.
    """
    def __init__(self, *, gamma, path, coefficients=None):
        super().__init__()
        self.gamma = tuple(int(g) for g in gamma)
        self.path = path
        self.coefficients = dict(coefficients or {})
        self.needs_saving = False

    def add(self, degree, value):
        self.coefficients[tuple(degree)] = value
        self.needs_saving = True

    def to_json(self):
        return json.dumps({
            'gamma': list(self.gamma),
            'path': self.path,
            'coefficients': [[list(degree), str(value)]
                             for degree, value in self.coefficients.items()]
        })

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(
            gamma=data['gamma'],
            path=data['path'],
            coefficients={
                tuple(degree): QRatio.from_string(value)
                for degree, value in data['coefficients']
            }
        )

    def to_hdf5(self, hdf5_handle):
        hdf5_handle['state'] = self.to_json()

    @classmethod
    def from_hdf5(cls, hdf5_handle):
        return cls.from_json(_read_string(hdf5_handle['state'][()]))

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""An exact engine for the pole structure of topological string free energies
on toric surfaces, with Gopakumar-Vafa integrality checks.
"""

__version__ = '0.1.0'

from . import number_theory
from . import partitions
from . import qalgebra
from . import characters
from . import schur_vertex
from . import graph
from . import series
from . import gv
from . import verify
from . import cli
from . import io
from . import _logging

__all__ = [
    'number_theory', 'partitions', 'qalgebra', 'characters', 'schur_vertex',
    'graph', 'series', 'gv', 'verify', 'cli', 'io'
]

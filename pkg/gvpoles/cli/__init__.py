# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Submodule for the ``gv`` batch front-end, which computes integrality reports,
runs the verification suites and lists the preset surfaces.
"""

from ._config import *
from ._run import *

__all__ = _config.__all__ + _run.__all__  # pylint: disable=undefined-variable

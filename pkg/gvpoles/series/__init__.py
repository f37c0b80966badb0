# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Submodule for truncated series in the Kähler parameters: the partition
function along its three evaluation paths, the free energy and the
connected-forest form of its coefficients.
"""

from ._degree_series import *
from ._coefficients import *
from ._log import *
from ._state import *
from ._controller import *
from ._run import *

__all__ = _degree_series.__all__ + _coefficients.__all__ + _log.__all__ + _state.__all__ + _controller.__all__ + _run.__all__  # pylint: disable=undefined-variable

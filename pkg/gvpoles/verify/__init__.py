# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Submodule for the executable property suites which check the identities and
integrality statements on which the engine rests.
"""

from ._result import *
from ._vev_oracle import *
from ._exp_formula import *
from ._pole_structure import *
from ._q_lemmas import *
from ._rset_sanity import *
from ._run import *

__all__ = _result.__all__ + _vev_oracle.__all__ + _exp_formula.__all__ + _pole_structure.__all__ + _q_lemmas.__all__ + _rset_sanity.__all__ + _run.__all__  # pylint: disable=undefined-variable

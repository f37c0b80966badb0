# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Submodule for the graph expansion of vacuum expectation values: VEV forests
generated by the commutator recursion, their amplitudes, combined forests of
r-sets, the pole data of trees and the edge maps of contracted graphs.
"""

from ._forest import *
from ._amplitude import *
from ._combined import *
from ._text import *
from ._edge_map import *
from ._poles import *
from ._scaling import *

__all__ = _forest.__all__ + _amplitude.__all__ + _combined.__all__ + _text.__all__ + _edge_map.__all__ + _poles.__all__ + _scaling.__all__  # pylint: disable=undefined-variable

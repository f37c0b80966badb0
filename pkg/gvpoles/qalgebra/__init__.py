# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Submodule for the exact coefficient field: Laurent polynomials in
``x = q^(1/2)``, their reduced ratios, the symmetrization isomorphisms to
polynomials in ``t`` and ``y``, and the extraction of poles at ``t_k = 0``.
"""

from ._laurent import *
from ._ratio import *
from ._univariate import *
from ._symmetrize import *
from ._pole import *
from ._sum import *

__all__ = _laurent.__all__ + _ratio.__all__ + _univariate.__all__ + _symmetrize.__all__ + _pole.__all__ + _sum.__all__  # pylint: disable=undefined-variable

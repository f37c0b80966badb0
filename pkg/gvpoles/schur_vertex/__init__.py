# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Submodule for the vertex weights of the partition function: skew Schur
functions at the principal specialization, the weight ``W_{mu,nu}(q)``,
matrix elements of ``q^(a F_2)`` and the action of the operators
``E_c(n)`` on the charge-zero Fock space.
"""

from ._schur import *
from ._matrix_element import *
from ._fock import *

__all__ = _schur.__all__ + _matrix_element.__all__ + _fock.__all__  # pylint: disable=undefined-variable

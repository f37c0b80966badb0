# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Submodule for the Möbius inversion of the free energy, the integrality
verdict on ``t G_d`` and the extraction of Gopakumar-Vafa numbers.
"""

from ..number_theory import divisors, mobius
from ._inversion import *
from ._report import *

__all__ = ['divisors', 'mobius'] + _inversion.__all__ + _report.__all__  # pylint: disable=undefined-variable

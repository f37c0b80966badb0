# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the logger for the qalgebra submodule.
"""

import logging

QALGEBRA_LOGGER = logging.getLogger('gvpoles.qalgebra')

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the logger for the schur_vertex submodule.
"""

import logging

SCHUR_VERTEX_LOGGER = logging.getLogger('gvpoles.schur_vertex')

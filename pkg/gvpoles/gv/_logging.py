# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the logger for the gv submodule.
"""

import logging

GV_LOGGER = logging.getLogger('gvpoles.gv')

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the logger for the verify submodule.
"""

import logging

VERIFY_LOGGER = logging.getLogger('gvpoles.verify')

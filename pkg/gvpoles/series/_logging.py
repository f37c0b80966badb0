# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the logger for the series submodule.
"""

import logging

SERIES_LOGGER = logging.getLogger('gvpoles.series')

# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the logger for the cli submodule.
"""

import logging

CLI_LOGGER = logging.getLogger('gvpoles.cli')

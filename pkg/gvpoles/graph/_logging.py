# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the logger for the graph submodule.
"""

import logging

GRAPH_LOGGER = logging.getLogger('gvpoles.graph')

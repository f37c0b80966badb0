# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Root logger of gvpoles. Records are written to stderr, the report stream
of the command line goes to stdout.
"""

import sys
import logging

MAIN_LOGGER = logging.getLogger('gvpoles')
DEFAULT_HANDLER = logging.StreamHandler(sys.stderr)
FORMATTER = logging.Formatter(
    fmt='%(asctime)s - %(levelname)s - %(name)s - %(message)s',
)
DEFAULT_HANDLER.setFormatter(FORMATTER)
MAIN_LOGGER.addHandler(DEFAULT_HANDLER)

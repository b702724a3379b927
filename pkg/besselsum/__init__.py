#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
besselsum - Character-twisted Bessel lattice sums and the identities around them.
"""

from __future__ import annotations

# Re-export constants and logging (LAYER 0)
from besselsum.constants import VERSION
from besselsum.logging_setup import logger, setup_logging

# Re-export config (LAYER 1)
from besselsum.config import default_config, load_config, save_config

# Re-export cli (LAYER 4)
from besselsum.cli import build_parser, main, run

__all__ = [
    # Constants
    "VERSION",
    # Logging
    "logger",
    "setup_logging",
    # Config
    "default_config",
    "load_config",
    "save_config",
    # CLI
    "build_parser",
    "main",
    "run",
]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Constants and global variables for besselsum.
"""

from __future__ import annotations

# Version
VERSION = "0.1.0"

# Report format
SCHEMA_VERSION = "1"
THREADS_ENV = "BESSELSUM_THREADS"

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2

# Rich (optional) output, on stderr so reports on stdout stay machine-readable
RICH = False
try:
    from rich.console import Console
    from rich.table import Table
    from rich import box
    RICH = True
    console = Console(highlight=False, stderr=True)
except Exception:
    console = None

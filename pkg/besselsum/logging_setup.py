#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Logging configuration for besselsum.

Diagnostics go to stderr; stdout is reserved for the report.
"""

from __future__ import annotations
import logging
import sys
from typing import List, Optional

try:
    from rich.console import Console
    from rich.logging import RichHandler
    RICH = True
except ImportError:
    RICH = False

# Logger instance
logger = logging.getLogger("besselsum")

# Held at WARNING even under --verbose
QUIET_LOGGERS = ("sympy", "matplotlib", "numba")


def _console_handler(verbose: bool) -> logging.Handler:
    if RICH:
        return RichHandler(
            console=Console(stderr=True),
            show_time=False,
            show_path=verbose,
            markup=False,
            rich_tracebacks=verbose,
        )
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
    return handler


def setup_logging(verbose: bool = False, log_file: Optional[str] = None) -> None:
    """
    Configure logging system.

    Args:
        verbose: DEBUG level (truncation radii, tail bounds, node counts) instead of WARNING.
        log_file: Optional path; the file always receives DEBUG records.
    """
    level = logging.DEBUG if verbose else logging.WARNING
    console = _console_handler(verbose)
    console.setLevel(level)
    handlers: List[logging.Handler] = [console]

    if log_file:
        try:
            file_handler = logging.FileHandler(log_file, mode="a", encoding="utf-8")
            file_handler.setFormatter(logging.Formatter("%(asctime)s - [%(levelname)s] - %(name)s - %(message)s"))
            file_handler.setLevel(logging.DEBUG)
            handlers.append(file_handler)
        except OSError as e:
            logger.warning(f"Failed to create log file {log_file}: {e}")

    logging.basicConfig(level=logging.DEBUG if log_file else level, handlers=handlers, force=True)
    logger.setLevel(logging.DEBUG if log_file else level)
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)

    if log_file:
        logger.debug(f"Logging to file: {log_file}")

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Internal helper functions for command modules.
"""

from __future__ import annotations
import argparse
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

from besselsum.core.errors import BesselSumError
from besselsum.core.reports import ErrorReport, ReportItem
from besselsum.core.special_functions import BesselEvalConfig
from besselsum.logging_setup import logger

TimedItem = Tuple[ReportItem, float]


def config_of(args: argparse.Namespace) -> Dict[str, Any]:
    return getattr(args, "config", None) or {}


def setting(args: argparse.Namespace, section: str, key: str, default: Any) -> Any:
    """Value from the effective config, falling back to `default`."""
    return config_of(args).get(section, {}).get(key, default)


def identity_tolerance(args: argparse.Namespace, default: Optional[float] = None) -> float:
    """--tol, then [tolerances] identity, then the per-identity default."""
    if getattr(args, "tol", None) is not None:
        return float(args.tol)
    if default is not None:
        return default
    return float(setting(args, "tolerances", "identity", 1e-9))


def bessel_config(args: argparse.Namespace) -> BesselEvalConfig:
    return BesselEvalConfig.from_config(config_of(args))


def threads_of(args: argparse.Namespace) -> int:
    return int(getattr(args, "threads", 1) or 1)


def timed(name: str, fn: Callable[[], Any]) -> List[TimedItem]:
    """
    Run one computation and time it.

    `fn` returns a report item or a list of them. Library errors become a
    failed ErrorReport instead of aborting the run.
    """
    start = time.perf_counter()
    try:
        result = fn()
    except BesselSumError as e:
        logger.warning(f"{name}: {e}")
        return [(ErrorReport(name=name, error=str(e), field_name=e.field), time.perf_counter() - start)]
    elapsed = time.perf_counter() - start
    items = result if isinstance(result, list) else [result]
    share = elapsed / max(1, len(items))
    return [(item, share) for item in items]

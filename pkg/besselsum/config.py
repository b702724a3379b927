#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuration management for besselsum.

Precedence for every setting: command-line flag > environment > config file
> built-in default.
"""

from __future__ import annotations
import copy
import hashlib
import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from besselsum.constants import THREADS_ENV
from besselsum.logging_setup import logger

# TOML support (tomllib for Python 3.11+, tomli for <3.11)
try:
    import tomllib
except ModuleNotFoundError:
    try:
        import tomli as tomllib  # type: ignore
    except ModuleNotFoundError:
        tomllib = None  # type: ignore


def config_dir() -> Path:
    """Get the configuration directory path."""
    return Path("~/.config/besselsum").expanduser()


def config_file_path() -> Path:
    """Get the config file path."""
    return config_dir() / "config.toml"


def default_config() -> Dict[str, Any]:
    """Return default configuration."""
    return {
        "tolerances": {
            "abs_tolerance": 1e-12,
            "identity": 1e-9,
        },
        "bessel": {
            "max_series_terms": 10000,
            "quadrature_nodes": 16,
            "max_doublings": 10,
        },
        "truncation": {
            "max_radius": 2000,
        },
        "codes": {
            "enumeration_cap": 1000000,
            "brute_force_cap": 1000000,
        },
        "heat": {
            "kernel_tail": 1e-10,
            "steps_per_unit": 10,
        },
        "runtime": {
            "threads": 1,
        },
    }


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    out = copy.deepcopy(base)
    for section, values in override.items():
        if isinstance(values, dict) and isinstance(out.get(section), dict):
            out[section].update(values)
        else:
            out[section] = values
    return out


def load_config(path: Optional[Path] = None) -> Dict[str, Any]:
    """Load configuration from config.toml over the defaults."""
    config_path = path or config_file_path()

    if not config_path.exists():
        logger.debug("Config file not found, using defaults")
        return default_config()

    # Check tomllib availability
    if tomllib is None:
        logger.warning("TOML library not available, using defaults")
        return default_config()

    try:
        with open(config_path, "rb") as f:
            config = tomllib.load(f)
        logger.debug(f"Loaded config from {config_path}")
        return _merge(default_config(), config)
    except Exception as e:
        logger.error(f"Error loading config: {e}")
        return default_config()


def save_config(config: Dict[str, Any], path: Optional[Path] = None) -> bool:
    """Save configuration to config.toml."""
    config_path = path or config_file_path()

    try:
        config_path.parent.mkdir(parents=True, exist_ok=True)

        lines = []
        for section, values in config.items():
            lines.append(f"[{section}]")
            for key, value in values.items():
                if isinstance(value, bool):
                    lines.append(f"{key} = {str(value).lower()}")
                elif isinstance(value, (int, float)):
                    lines.append(f"{key} = {value!r}")
                elif isinstance(value, str):
                    lines.append(f'{key} = "{value}"')
            lines.append("")

        config_path.write_text("\n".join(lines), encoding="utf-8")
        logger.info(f"Saved config to {config_path}")
        return True
    except Exception as e:
        logger.error(f"Error saving config: {e}")
        return False


def resolve_threads(flag: Optional[int], config: Dict[str, Any]) -> int:
    """--threads, then BESSELSUM_THREADS, then [runtime] threads."""
    if flag is not None:
        return max(1, int(flag))
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            logger.warning(f"Ignoring {THREADS_ENV}={env!r}: not an integer")
    return max(1, int(config.get("runtime", {}).get("threads", 1)))


def config_digest(config: Dict[str, Any], arguments: Dict[str, Any]) -> str:
    """First 16 hex digits of sha256 over the canonical JSON of config and arguments."""
    payload = json.dumps({"config": config, "arguments": arguments}, sort_keys=True, default=str)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Report records shared by the library and the CLI.
"""

from __future__ import annotations
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

import numpy as np

from besselsum.constants import SCHEMA_VERSION


def jsonable(value: Any) -> Any:
    """Convert report values to JSON-ready data; complex numbers become [re, im]."""
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, (complex, np.complexfloating)):
        return [_finite(value.real), _finite(value.imag)]
    if isinstance(value, (float, np.floating)):
        return _finite(float(value))
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in value]
    return str(value)


def _finite(x: float) -> Union[float, str]:
    if math.isfinite(x):
        return float(x)
    return "inf" if x > 0 else ("-inf" if x < 0 else "nan")


@dataclass
class IdentityReport:
    """Both sides of one identity and the bounds that decide the verdict."""
    name: str
    lhs: complex
    rhs: complex
    tolerance: float
    lhs_truncation_radius: int = 0
    lhs_tail_bound: float = 0.0
    rhs_tail_bound: float = 0.0
    guaranteed: bool = True
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def abs_residual(self) -> float:
        return abs(complex(self.lhs) - complex(self.rhs))

    @property
    def passed(self) -> bool:
        return self.abs_residual < self.tolerance + self.lhs_tail_bound + self.rhs_tail_bound

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "kind": "identity",
            "name": self.name,
            "lhs": complex(self.lhs),
            "rhs": complex(self.rhs),
            "abs_residual": self.abs_residual,
            "tolerance": self.tolerance,
            "lhs_truncation_radius": self.lhs_truncation_radius,
            "lhs_tail_bound": self.lhs_tail_bound,
            "rhs_tail_bound": self.rhs_tail_bound,
            "passed": self.passed,
        }
        if not self.guaranteed:
            out["guarantee"] = "none"
        if self.extras:
            out["extras"] = self.extras
        return jsonable(out)


@dataclass
class ValueReport:
    """A computed value without a second side (heat kernel values, probe tables)."""
    name: str
    value: Any
    tail_bound: float = 0.0
    tolerance: float = 0.0
    extras: Dict[str, Any] = field(default_factory=dict)

    passed = True

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "kind": "value",
            "name": self.name,
            "value": self.value,
            "tolerance": self.tolerance,
            "tail_bound": self.tail_bound,
            "passed": True,
        }
        if self.extras:
            out["extras"] = self.extras
        return jsonable(out)


@dataclass
class CheckReport:
    """A boolean check, e.g. a monotone-decrease assertion or an exact polynomial identity."""
    name: str
    ok: bool
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.ok)

    def to_dict(self) -> Dict[str, Any]:
        out = {"kind": "check", "name": self.name, "passed": self.passed}
        if self.extras:
            out["extras"] = self.extras
        return jsonable(out)


@dataclass
class ErrorReport:
    """A library error raised while computing one item; counts as a failed verdict."""
    name: str
    error: str
    field_name: Optional[str] = None

    passed = False

    def to_dict(self) -> Dict[str, Any]:
        return jsonable({"kind": "error", "name": self.name, "error": self.error,
                         "field": self.field_name, "passed": False})


ReportItem = Union[IdentityReport, ValueReport, CheckReport, ErrorReport]


@dataclass
class RunReport:
    """Everything one CLI invocation produced."""
    command: List[str]
    config_digest: str
    items: List[ReportItem] = field(default_factory=list)
    wall_clock: List[float] = field(default_factory=list)
    started_at: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def add(self, item: ReportItem, seconds: float = 0.0) -> None:
        self.items.append(item)
        self.wall_clock.append(seconds)

    def to_dict(self, include_meta: bool = True) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "config_digest": self.config_digest,
            "items": [item.to_dict() for item in self.items],
            "passed": self.passed,
        }
        if include_meta:
            out["meta"] = {"started_at": self.started_at, "wall_clock_seconds": self.wall_clock}
        return jsonable(out)

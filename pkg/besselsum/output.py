#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Output formatting functions for besselsum.

Reports go to stdout as JSON or CSV; the human-facing summary goes to the
stderr console.
"""

from __future__ import annotations
import csv
import json
import sys
from typing import Any, Dict, List, Optional, TextIO, Tuple

from besselsum.constants import RICH, console
from besselsum.core.reports import RunReport

# Conditional imports for rich
if RICH:
    from rich.table import Table
    from rich.text import Text
    from rich import box


CSV_COLUMNS = [
    "name", "kind", "passed",
    "lhs_re", "lhs_im", "rhs_re", "rhs_im", "value_re", "value_im",
    "abs_residual", "tolerance", "lhs_tail_bound", "rhs_tail_bound", "tail_bound",
    "lhs_truncation_radius", "error",
]


def p(text: str = "") -> None:
    """Print text to stderr with optional rich formatting."""
    if RICH and console is not None:
        console.print(text, highlight=False)
    else:
        print(text, file=sys.stderr)


def section(s: str) -> None:
    """Print a section header."""
    if RICH and console is not None:
        console.print(f"\n[bold cyan]● {s}[/bold cyan]")
        console.rule("", style="bold cyan")
    else:
        p(f"\n● {s}")


def line_ok(s: str) -> None:
    """Print a success line."""
    if RICH and console is not None:
        console.print(f"[bold green]✓[/bold green] {s}", highlight=False)
    else:
        p(f"✓ {s}")


def line_warn(s: str) -> None:
    """Print a warning line."""
    if RICH and console is not None:
        console.print(f"[bold yellow]! {s}[/bold yellow]", highlight=False)
    else:
        p(f"! {s}")


def kv_table(title_str: str, rows: List[Tuple[str, str]]) -> None:
    """Print a key-value table."""
    if RICH and console is not None:
        t = Table(title=title_str, box=box.SIMPLE_HEAVY, show_header=False, title_style="bold")
        t.add_column("Key", style="bold")
        t.add_column("Value")
        for k, v in rows:
            t.add_row(k, v)
        console.print(t)
    else:
        p(f"\n-- {title_str} --")
        for k, v in rows:
            p(f"{k}: {v}")


def table(title_str: str, headers: List[str], rows: List[List[Any]]) -> None:
    """Print a formatted table."""
    if RICH and console is not None:
        t = Table(title=title_str, box=box.SIMPLE_HEAVY, header_style="bold", title_style="bold")
        for h in headers:
            t.add_column(h, overflow="fold")
        for r in rows:
            t.add_row(*r)
        console.print(t)
    else:
        p(f"\n-- {title_str} --")
        p(" | ".join(headers))
        p("-" * 80)
        for r in rows:
            p(" | ".join(str(c) for c in r))


def _fmt(value: Any) -> str:
    if isinstance(value, list) and len(value) == 2:
        return f"{value[0]:.6g}{value[1]:+.6g}i" if all(isinstance(v, float) for v in value) else str(value)
    if isinstance(value, float):
        return f"{value:.3e}"
    return "" if value is None else str(value)


def render_summary(report: RunReport) -> None:
    """Verdict table for the items of a run, on stderr."""
    data = report.to_dict(include_meta=False)
    section(" ".join(report.command) or "besselsum")
    rows = []
    for item in data["items"]:
        residual = item.get("abs_residual", item.get("error", ""))
        verdict = "PASS" if item["passed"] else "FAIL"
        if RICH and console is not None:
            rows.append([item["name"], _fmt(residual), _fmt(item.get("tolerance")),
                         Text(verdict, style="green" if item["passed"] else "red")])
        else:
            rows.append([item["name"], _fmt(residual), _fmt(item.get("tolerance")), verdict])
    table("Items", ["Item", "Residual", "Tolerance", "Verdict"], rows)
    kv_table("Run", [("config digest", report.config_digest), ("items", str(len(rows))),
                     ("verdict", "PASS" if report.passed else "FAIL")])
    if report.passed:
        line_ok("all identities hold within tolerance plus tail bounds")
    else:
        line_warn(f"{sum(1 for i in data['items'] if not i['passed'])} item(s) failed")


def emit_json(report: RunReport, include_meta: bool = True, stream: Optional[TextIO] = None) -> None:
    out = stream or sys.stdout
    json.dump(report.to_dict(include_meta=include_meta), out, indent=2, sort_keys=True)
    out.write("\n")


def _csv_row(item: Dict[str, Any]) -> Dict[str, Any]:
    row: Dict[str, Any] = {k: item.get(k, "") for k in CSV_COLUMNS}
    for key in ("lhs", "rhs", "value"):
        v = item.get(key)
        if isinstance(v, list) and len(v) == 2:
            row[f"{key}_re"], row[f"{key}_im"] = v
        elif v is not None and not isinstance(v, (dict, list)):
            row[f"{key}_re"], row[f"{key}_im"] = v, 0.0
    return row


def emit_csv(report: RunReport, stream: Optional[TextIO] = None) -> None:
    """One row per report item; extras are not flattened."""
    out = stream or sys.stdout
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for item in report.to_dict(include_meta=False)["items"]:
        writer.writerow(_csv_row(item))

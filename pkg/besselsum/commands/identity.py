#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Lattice-sum and theta commands: verify-identity, theta-check, continuum-limit,
theta-identity.
"""

from __future__ import annotations
import argparse
from typing import List, Sequence

from besselsum.commands._helpers import (
    TimedItem,
    bessel_config,
    identity_tolerance,
    setting,
    threads_of,
    timed,
)
from besselsum.core.errors import SpecParseError
from besselsum.core.lattice_sums import discrete_torus_trace, verify_identity, verify_one_dimensional
from besselsum.core.reports import CheckReport, ValueReport
from besselsum.core.theta import (
    ContinuumLimitSchedule,
    continuum_limit_probe,
    is_strictly_decreasing,
    jacobi_discrete_check,
    jacobi_theta_identity_check,
    theta_char_sides,
)
from besselsum.parsing import (
    parse_complex_list,
    parse_family,
    parse_int_vector,
    parse_lattice,
    parse_vector,
)


def _per_coordinate(values: Sequence, n: int, field: str) -> List:
    vals = list(values)
    if len(vals) == 1:
        return vals * n
    if len(vals) != n:
        raise SpecParseError(f"{len(vals)} values for dimension {n}", field)
    return vals


def _identity_inputs(args: argparse.Namespace):
    lattice = parse_lattice(args.lattice)
    n = lattice.dimension
    q = args.q
    family = parse_family(args.chi or f"principal:{q}", n, q)
    x = _per_coordinate(parse_int_vector(args.x, "x"), n, "x")
    y = _per_coordinate(parse_vector(args.y, "y"), n, "y")
    return lattice, family, x, y


def cmd_verify_identity(args: argparse.Namespace) -> List[TimedItem]:
    """Twisted Bessel-lattice identity for one configuration."""
    lattice, family, x, y = _identity_inputs(args)
    t = _per_coordinate(parse_complex_list(args.t), lattice.dimension, "t")
    tol = identity_tolerance(args)
    cfg = bessel_config(args)
    max_radius = int(setting(args, "truncation", "max_radius", 2000))
    return timed("bessel-lattice", lambda: verify_identity(
        lattice, family, x, y, t, tol, cfg, max_radius, threads_of(args), args.allow_imprimitive))


def cmd_theta_check(args: argparse.Namespace) -> List[TimedItem]:
    """Character theta transformation (the t -> continuum form of verify-identity)."""
    lattice, family, x, y = _identity_inputs(args)
    t = [z.real for z in _per_coordinate(parse_complex_list(args.t), lattice.dimension, "t")]
    tol = identity_tolerance(args, 1e-11)
    return timed("theta-character", lambda: theta_char_sides(lattice, family, x, y, t, tol))


def cmd_continuum_limit(args: argparse.Namespace) -> List[TimedItem]:
    """Rows of the L-rescaled identity and a monotone-decrease verdict on the limit residuals."""
    lattice, family, x, y = _identity_inputs(args)
    t = [z.real for z in _per_coordinate(parse_complex_list(args.t), lattice.dimension, "t")]
    L_values = parse_int_vector(args.L, "L")
    tol = identity_tolerance(args)

    def run() -> list:
        schedule = ContinuumLimitSchedule(L_values, lattice, family, x, y, t)
        rows = continuum_limit_probe(schedule)
        items: list = [
            ValueReport(
                name=f"continuum-limit L={r.L}",
                value=r.lhs,
                tail_bound=r.lhs_tail_bound,
                tolerance=tol,
                extras={"rhs": r.rhs, "limit": r.limit, "limit_residual": r.limit_residual,
                        "identity_residual": r.identity_residual, "scales": r.scales},
            )
            for r in rows
        ]
        residuals = [r.limit_residual for r in rows]
        items.append(CheckReport("continuum-limit decreasing", is_strictly_decreasing(residuals),
                                 {"limit_residuals": residuals}))
        items.append(CheckReport("continuum-limit identity",
                                 all(r.identity_residual < tol + r.lhs_tail_bound for r in rows),
                                 {"identity_residuals": [r.identity_residual for r in rows]}))
        return items

    return timed("continuum-limit", run)


def cmd_theta_identity(args: argparse.Namespace) -> List[TimedItem]:
    """Jacobi theta identity at each t, with its finite Bessel precursor when --L is given."""
    tol = identity_tolerance(args, 1e-13)
    items: List[TimedItem] = []
    for t in parse_complex_list(args.t):
        items += timed(f"jacobi t={t.real:g}", lambda t=t: jacobi_theta_identity_check(t.real, tol))
        if args.L:
            for L in parse_int_vector(args.L, "L"):
                items += timed(f"jacobi discrete L={L}", lambda L=L, t=t: jacobi_discrete_check(L, t.real))
    return items


def cmd_one_dimensional(args: argparse.Namespace) -> List[TimedItem]:
    """Bessel sums over mZ and the discrete torus heat trace."""
    tol = identity_tolerance(args, 1e-10)
    cfg = bessel_config(args)
    items: List[TimedItem] = []
    for t in parse_complex_list(args.t):
        for m in parse_int_vector(args.m, "m"):
            for x in range(-3, 4):
                items += timed(f"one-dimensional m={m} x={x}",
                               lambda m=m, x=x, t=t: verify_one_dimensional(m, x, t, tol, cfg))
        if args.torus:
            for sides in args.torus.split(";"):
                ms = parse_int_vector(sides, "torus")
                items += timed(f"discrete-torus {ms}", lambda ms=ms, t=t: discrete_torus_trace(ms, t, tol, cfg))
    return items

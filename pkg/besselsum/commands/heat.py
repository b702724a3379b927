#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Heat commands: heat-kernel and heat-solve.
"""

from __future__ import annotations
import argparse
from typing import List

from besselsum.commands._helpers import TimedItem, identity_tolerance, setting, threads_of, timed
from besselsum.core.heat import (
    HeatKernelQuery,
    code_heat_solution,
    heat_kernel,
    heat_solve_convolution,
    kernel_mass_check,
    oracle_check,
)
from besselsum.core.lattice import identity_lattice, same_lattice
from besselsum.core.reports import ValueReport
from besselsum.parsing import parse_code, parse_complex, parse_lattice, parse_u0, parse_vector


def cmd_heat_kernel(args: argparse.Namespace) -> List[TimedItem]:
    """Kernel values at the requested points and the kernel-mass check."""
    lattice = parse_lattice(args.lattice)
    t = parse_complex(args.t).real
    tail = float(setting(args, "heat", "kernel_tail", 1e-10))
    points = [parse_vector(p, "y") for p in args.y.split(";")] if args.y else [[0] * lattice.dimension]
    items: List[TimedItem] = []
    for y in points:
        query = HeatKernelQuery(lattice, tuple(y), t)
        items += timed(f"heat-kernel y={[str(v) for v in y]}",
                       lambda query=query: ValueReport(name=f"heat-kernel y={[str(v) for v in query.y]} t={t:g}",
                                                       value=heat_kernel(query), tolerance=1e-15))
    items += timed("kernel-mass", lambda: kernel_mass_check(lattice, t, tail, identity_tolerance(args, 1e-12)))
    return items


def cmd_heat_solve(args: argparse.Namespace) -> List[TimedItem]:
    """Convolution solution on a box, optionally checked against the RK4 oracle."""
    lattice = parse_lattice(args.lattice)
    n = lattice.dimension
    t = parse_complex(args.t).real
    u0 = parse_u0(args.u0, n)
    tail = float(setting(args, "heat", "kernel_tail", 1e-10))

    def solve() -> ValueReport:
        state = heat_solve_convolution(lattice, u0, t, args.radius, tail, threads_of(args))
        return ValueReport(
            name=f"heat-solve u0={args.u0} t={t:g}",
            value=state.values.tolist(),
            tail_bound=state.error_bound,
            tolerance=tail,
            extras={"radius": args.radius, "time": state.time},
        )

    items = timed("heat-solve", solve)
    if args.oracle:
        tol = identity_tolerance(args, 1e-6)
        steps = int(setting(args, "heat", "steps_per_unit", 10))
        items += timed("formula-vs-rk4", lambda: oracle_check(lattice, u0, t, args.oracle_radius, args.step, tol, tail,
                                                              steps_per_unit=steps))
    if args.u0.startswith("coset:") and same_lattice(lattice, identity_lattice(n)):
        code = parse_code(args.u0.partition(":")[2], field="u0")
        tol = identity_tolerance(args, 1e-8)
        for x in ([0] * n, [1] + [0] * (n - 1)):
            items += timed(f"code-heat x={x}", lambda x=x: code_heat_solution(code, x, t, tol))
    return items

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Dedekind eta commands: eta-check and eta-probe.
"""

from __future__ import annotations
import argparse
from typing import List

from besselsum.commands._helpers import TimedItem, identity_tolerance, timed
from besselsum.core.heat import eta_heat_probe
from besselsum.core.reports import CheckReport
from besselsum.core.theta import eta_periodicity_check, eta_route_check, eta_transformation_check
from besselsum.parsing import parse_complex, parse_complex_list, parse_int_vector


def cmd_eta_check(args: argparse.Namespace) -> List[TimedItem]:
    """Series against product, tau -> -1/tau and tau -> tau + 1 at each tau."""
    tol = identity_tolerance(args, 1e-12)
    items: List[TimedItem] = []
    for tau in parse_complex_list(args.tau, "tau"):
        items += timed(f"eta routes tau={tau}", lambda tau=tau: eta_route_check(tau, tol))
        items += timed(f"eta transformation tau={tau}", lambda tau=tau: eta_transformation_check(tau, tol))
        items += timed(f"eta periodicity tau={tau}", lambda tau=tau: eta_periodicity_check(tau, tol))
    return items


def cmd_eta_probe(args: argparse.Namespace) -> List[TimedItem]:
    """Heat probe values for each L and whether their distance to the limit decreases."""
    t = parse_complex(args.t).real
    L_values = parse_int_vector(args.L, "L")

    def run() -> list:
        probes = [eta_heat_probe(L, t) for L in L_values]
        residuals = [p.extras["limit_residual"] for p in probes]
        decreasing = all(b < a for a, b in zip(residuals, residuals[1:]))
        return probes + [CheckReport(f"eta-probe decreasing t={t:g}", decreasing, {"limit_residuals": residuals})]

    return timed("eta-probe", run)

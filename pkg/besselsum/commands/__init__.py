#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command implementations for besselsum.

Each cmd_* takes the parsed argparse.Namespace and returns the report items
it produced, each paired with its wall-clock time.
"""

from __future__ import annotations

from besselsum.commands.identity import (
    cmd_verify_identity,
    cmd_theta_check,
    cmd_continuum_limit,
    cmd_theta_identity,
    cmd_one_dimensional,
)

from besselsum.commands.eta import (
    cmd_eta_check,
    cmd_eta_probe,
)

from besselsum.commands.codes import (
    cmd_code_cwe,
    cmd_code_macwilliams,
)

from besselsum.commands.heat import (
    cmd_heat_kernel,
    cmd_heat_solve,
)

from besselsum.commands.suite import (
    cmd_suite,
)

__all__ = [
    # lattice sums and theta
    "cmd_verify_identity",
    "cmd_theta_check",
    "cmd_continuum_limit",
    "cmd_theta_identity",
    "cmd_one_dimensional",
    # eta
    "cmd_eta_check",
    "cmd_eta_probe",
    # codes
    "cmd_code_cwe",
    "cmd_code_macwilliams",
    # heat
    "cmd_heat_kernel",
    "cmd_heat_solve",
    # suite
    "cmd_suite",
]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Code commands: code-cwe and code-macwilliams.
"""

from __future__ import annotations
import argparse
from typing import List

import numpy as np

from besselsum.commands._helpers import TimedItem, bessel_config, identity_tolerance, setting, timed
from besselsum.core.codes import (
    LinearCode,
    binary_macwilliams_exact,
    check_preimage_duality,
    coset_cwe,
    cwe,
    dual_code,
    verify_cwe_bessel,
    verify_macwilliams_bessel,
    verify_wood_identity,
)
from besselsum.core.errors import SpecParseError
from besselsum.core.reports import CheckReport, ValueReport
from besselsum.parsing import parse_code, parse_complex, parse_complex_list, parse_int_vector


def code_from_args(args: argparse.Namespace) -> LinearCode:
    """--code, or --m/--n with --generators or --parity-check."""
    cap = int(setting(args, "codes", "enumeration_cap", 10 ** 6))
    if args.code:
        return parse_code(args.code, cap=cap)
    if args.m is None or args.n is None:
        raise SpecParseError("give --code or both --m and --n", "code")
    if args.parity_check:
        return parse_code(f"m={args.m},n={args.n},parity={args.parity_check}", field="parity-check", cap=cap)
    return parse_code(f"m={args.m},n={args.n},gen={args.generators or ''}", field="generators", cap=cap)


def _x_of(args: argparse.Namespace, n: int) -> List[int]:
    if not args.x:
        return [0] * n
    x = parse_int_vector(args.x, "x")
    if len(x) == 1:
        return x * n
    if len(x) != n:
        raise SpecParseError(f"{len(x)} entries for code length {n}", "x")
    return x


def cmd_code_cwe(args: argparse.Namespace) -> List[TimedItem]:
    """Coset weight enumerator and the Bessel-sum form of it."""
    code = code_from_args(args)
    x = _x_of(args, code.length)
    t = parse_complex_list(args.t)
    t_arg = t[0] if len(t) == 1 else t
    tol = identity_tolerance(args)
    cfg = bessel_config(args)

    def enumerator() -> ValueReport:
        poly = coset_cwe(code, x)
        return ValueReport(
            name=f"cwe m={code.modulus} n={code.length}",
            value=poly.total(),
            extras={"polynomial": poly.as_dict(), "hamming": poly.hamming().as_dict(), "code_size": code.size},
        )

    return timed("cwe", enumerator) + timed("cwe-bessel", lambda: verify_cwe_bessel(code, x, t_arg, tol, cfg))


def cmd_code_macwilliams(args: argparse.Namespace) -> List[TimedItem]:
    """MacWilliams-type identities for a code, its dual and the preimage lattices."""
    code = code_from_args(args)
    x = _x_of(args, code.length)
    t = parse_complex(args.t)
    tol = identity_tolerance(args)
    brute = int(setting(args, "codes", "brute_force_cap", 10 ** 6))
    cap = int(setting(args, "codes", "enumeration_cap", 10 ** 6))

    def dual_info() -> list:
        dual = dual_code(code, brute, cap)
        size_ok = code.size * dual.size == code.modulus ** code.length
        double = dual_code(dual, brute, cap).words == code.words
        return [
            ValueReport(name="dual-code", value=dual.size,
                        extras={"polynomial": cwe(dual).as_dict(), "generators": [list(g) for g in dual.generators]}),
            CheckReport("dual size", size_ok, {"code_size": code.size, "dual_size": dual.size}),
            CheckReport("double dual", double),
            CheckReport("preimage duality", check_preimage_duality(code, dual)),
        ]

    items = timed("dual-code", dual_info)
    items += timed("macwilliams-bessel", lambda: verify_macwilliams_bessel(code, x, t, tol))
    sample = np.exp(0.3j * np.arange(code.modulus)) * (1.0 + 0.1 * np.arange(code.modulus))
    items += timed("wood-identity", lambda: verify_wood_identity(code, x[0], sample, tol))
    if code.modulus == 2:
        items += timed("binary-macwilliams", lambda: CheckReport("binary macwilliams exact",
                                                                 binary_macwilliams_exact(code)))
    return items

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
The acceptance suite: every identity family at desk scale.

`--quick` runs a representative subset of each block.
"""

from __future__ import annotations
import argparse
import math
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from besselsum.commands._helpers import TimedItem, bessel_config, setting, threads_of, timed
from besselsum.core.characters import (
    all_characters,
    character_dft,
    gauss_sum,
    is_primitive,
    kronecker_character,
    new_family,
    principal_character,
)
from besselsum.core.codes import (
    binary_macwilliams_exact,
    code_from_generators,
    dual_code,
    parity_check_code,
    verify_cwe_bessel,
    verify_macwilliams_bessel,
)
from besselsum.core.heat import (
    code_heat_solution,
    delta_data,
    eta_heat_probe,
    kernel_mass_check,
    oracle_check,
)
from besselsum.core.lattice import Lattice, identity_lattice, new_lattice
from besselsum.core.lattice_sums import discrete_torus_trace, verify_identity, verify_one_dimensional
from besselsum.core.reports import CheckReport, IdentityReport
from besselsum.core.theta import (
    ContinuumLimitSchedule,
    continuum_limit_probe,
    eta_route_check,
    eta_transformation_check,
    is_strictly_decreasing,
    jacobi_theta_identity_check,
)

SEED = 20240101
CHARACTER_FOR_MODULUS = {1: "principal", 3: -3, 4: -4, 12: 12}
SHAPES = [(1, 1), (1, 2), (1, 3), (3, 1), (3, 2), (4, 1), (4, 2), (12, 1)]
T_CHOICES = [0.5, 2.0, 1 + 0.5j]


def _character(q: int):
    kind = CHARACTER_FOR_MODULUS[q]
    return principal_character(1) if kind == "principal" else kronecker_character(kind)


def random_integral_basis(rng: np.random.Generator, n: int, q: int, max_det: int = 20) -> Lattice:
    """q times an integer matrix of determinant at most max_det / q^n, sheared by a unimodular matrix."""
    budget = max_det // q ** n
    diag = []
    for _ in range(n):
        d = int(rng.integers(1, budget + 1))
        diag.append(d)
        budget //= d
    m = np.diag(diag).astype(np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = int(rng.integers(-2, 3))
    u = np.eye(n, dtype=np.int64)
    for i in range(n):
        for j in range(i):
            u[i, j] = int(rng.integers(-1, 2))
    return new_lattice((q * (m @ u)).tolist())


def main_identity_configs(count: int, seed: int = SEED) -> List[Tuple[Lattice, int, list, list, list]]:
    rng = np.random.default_rng(seed)
    configs = []
    for _ in range(count):
        q, n = SHAPES[int(rng.integers(len(SHAPES)))]
        lattice = random_integral_basis(rng, n, q)
        x = [int(v) for v in rng.integers(-3, 4, size=n)]
        if rng.random() < 0.5:
            y = [Fraction(0)] * n
        else:
            y = [Fraction(int(rng.integers(-d, d + 1)), d) for d in rng.integers(1, 9, size=n)]
        t = [T_CHOICES[int(i)] for i in rng.integers(len(T_CHOICES), size=n)]
        configs.append((lattice, q, x, y, t))
    return configs


def block_main_identity(args: argparse.Namespace, quick: bool) -> List[TimedItem]:
    cfg = bessel_config(args)
    items: List[TimedItem] = []
    for lattice, q, x, y, t in main_identity_configs(6 if quick else 20):
        family = new_family([_character(q)] * lattice.dimension)
        items += timed(f"bessel-lattice q={q} n={lattice.dimension}",
                       lambda lattice=lattice, family=family, x=x, y=y, t=t:
                       verify_identity(lattice, family, x, y, t, 1e-9, cfg, threads=threads_of(args)))
    return items


def block_one_dimensional(args: argparse.Namespace, quick: bool) -> List[TimedItem]:
    cfg = bessel_config(args)
    ms = [1, 2, 3, 8] if quick else list(range(1, 9))
    ts = [0.5, 1 + 1j] if quick else [0.5, 2.0, 1 + 1j]
    xs = [-3, 0, 2] if quick else list(range(-3, 4))
    items: List[TimedItem] = []
    for m in ms:
        for t in ts:
            for x in xs:
                items += timed(f"one-dimensional m={m} x={x}",
                               lambda m=m, x=x, t=t: verify_one_dimensional(m, x, t, 1e-10, cfg))
    tori = [(4,), (2, 3)] if quick else [(4,), (2, 3), (4, 6), (3, 3, 3)]
    for sides in tori:
        for t in (0.5, 1.2):
            items += timed(f"discrete-torus {sides}", lambda sides=sides, t=t: discrete_torus_trace(sides, t, 1e-10, cfg))
    return items


def _gauss_checks(max_q: int) -> List[IdentityReport]:
    g12 = gauss_sum(kronecker_character(12))
    out = [IdentityReport(name="gauss sum (12/.)", lhs=g12, rhs=math.sqrt(12), tolerance=1e-12)]
    worst_abs, worst_dft = 0.0, 0.0
    for q in range(2, max_q + 1):
        for chi in all_characters(q):
            if not is_primitive(chi):
                continue
            g = gauss_sum(chi)
            worst_abs = max(worst_abs, abs(abs(g) ** 2 - q))
            for m in range(q):
                worst_dft = max(worst_dft, abs(character_dft(chi, m) - chi(m).conjugate() * g))
    out.append(IdentityReport(name=f"|G|^2 = q, q <= {max_q}", lhs=worst_abs, rhs=0.0, tolerance=1e-10))
    out.append(IdentityReport(name=f"character dft, q <= {max_q}", lhs=worst_dft, rhs=0.0, tolerance=1e-10))
    return out


def block_gauss_eta_theta(args: argparse.Namespace, quick: bool) -> List[TimedItem]:
    items = timed("gauss sums", lambda: _gauss_checks(12 if quick else 24))
    for tau in (1j, 0.3 + 1.7j, 0.5 + 2j):
        items += timed(f"eta transformation tau={tau}", lambda tau=tau: eta_transformation_check(tau, 1e-12))
        items += timed(f"eta routes tau={tau}", lambda tau=tau: eta_route_check(tau, 1e-12))
    for t in (0.1, 0.25, 1.0, 5.0):
        items += timed(f"jacobi t={t}", lambda t=t: jacobi_theta_identity_check(t, 1e-13))
    return items


def _continuum(lattice: Lattice, chi_q: int, L_values: List[int]) -> list:
    family = new_family([_character(chi_q)])
    rows = continuum_limit_probe(ContinuumLimitSchedule(L_values, lattice, family, [0], [0], [0.5]))
    residuals = [r.limit_residual for r in rows]
    label = f"continuum-limit q={chi_q}"
    return [
        CheckReport(f"{label} decreasing", is_strictly_decreasing(residuals), {"limit_residuals": residuals}),
        CheckReport(f"{label} final residual < 5e-3", residuals[-1] < 5e-3, {"final": residuals[-1]}),
    ]


def block_continuum(args: argparse.Namespace, quick: bool) -> List[TimedItem]:
    L_values = [8, 16, 32] if quick else [8, 16, 32, 64]
    items = timed("continuum-limit Z", lambda: _continuum(identity_lattice(1), 1, L_values))
    items += timed("continuum-limit 12Z", lambda: _continuum(new_lattice([[12]]), 12, L_values))
    return items


def acceptance_codes():
    rng = np.random.default_rng(SEED)
    random_gens = [[int(v) for v in rng.integers(0, 3, size=4)] for _ in range(2)]
    return [
        ("repetition n=3", code_from_generators(2, 3, [[1, 1, 1]])),
        ("repetition n=5", code_from_generators(2, 5, [[1] * 5])),
        ("even weight n=3", parity_check_code(2, [[1, 1, 1]])),
        ("{0,2} in Z/4", code_from_generators(4, 1, [[2]])),
        ("random Z/3 n=4", code_from_generators(3, 4, random_gens)),
    ]


def block_codes(args: argparse.Namespace, quick: bool) -> List[TimedItem]:
    cfg = bessel_config(args)
    items: List[TimedItem] = []
    for label, code in acceptance_codes():
        def run(code=code, label=label) -> list:
            dual = dual_code(code)
            out: list = [CheckReport(f"{label} |C||C^perp| = m^n",
                                     code.size * dual.size == code.modulus ** code.length)]
            outside = [1] + [0] * (code.length - 1)
            for x in ([0] * code.length, outside):
                out.append(verify_cwe_bessel(code, x, 0.7, 1e-9, cfg))
                out.append(verify_macwilliams_bessel(code, x, 0.7, 1e-9, dual))
            if code.modulus == 2 and code.length == 3:
                out.append(CheckReport(f"{label} binary exact", binary_macwilliams_exact(code, dual)))
            return out

        items += timed(label, run)
    return items


def block_heat(args: argparse.Namespace, quick: bool) -> List[TimedItem]:
    skew = new_lattice([[1, 1], [0, 1]])
    lattices = [identity_lattice(1), identity_lattice(2), skew] + ([] if quick else [identity_lattice(3)])
    items: List[TimedItem] = []
    for lat in lattices:
        for t in ((0.5, 5.0) if quick else (0.5, 5.0, 50.0)):
            items += timed(f"kernel-mass t={t}", lambda lat=lat, t=t: kernel_mass_check(lat, t))
    steps = int(setting(args, "heat", "steps_per_unit", 10))
    for lat in lattices[:3]:
        t = 2.0 if quick else 5.0
        items += timed("formula-vs-rk4", lambda lat=lat, t=t: oracle_check(lat, delta_data(lat.dimension), t,
                                                                           20 if quick else 40,
                                                                           steps_per_unit=steps))
    for gens, m, n in (([[1, 1, 1]], 2, 3), ([[2]], 4, 1), ([], 2, 1)):
        code = code_from_generators(m, n, gens)
        for x in ([0] * n, [1] + [0] * (n - 1)):
            items += timed(f"code-heat m={m} n={n} x={x}", lambda code=code, x=x: code_heat_solution(code, x, 1.5))
    for x in range(-2, 3):
        def closed_form(x=x) -> IdentityReport:
            r = code_heat_solution(code_from_generators(2, 1, []), [x], 1.5)
            return IdentityReport(name=f"closed form x={x}", lhs=r.lhs,
                                  rhs=0.5 * (1 + (-1) ** x * math.exp(-3.0)), tolerance=1e-10)
        items += timed(f"closed form x={x}", closed_form)
    return items


def block_eta_probe(args: argparse.Namespace, quick: bool) -> List[TimedItem]:
    items: List[TimedItem] = []
    for t in ((0.2,) if quick else (0.2, 1.0)):
        def run(t=t) -> list:
            probes = [eta_heat_probe(L, t) for L in (5, 25)]
            r = [p.extras["limit_residual"] for p in probes]
            return probes + [CheckReport(f"eta-probe closer at L=25, t={t}", r[1] < r[0], {"limit_residuals": r})]
        items += timed(f"eta-probe t={t}", run)
    return items


BLOCKS = [
    block_main_identity,
    block_one_dimensional,
    block_gauss_eta_theta,
    block_continuum,
    block_codes,
    block_heat,
    block_eta_probe,
]


def cmd_suite(args: argparse.Namespace) -> List[TimedItem]:
    """Run every block of the acceptance matrix."""
    items: List[TimedItem] = []
    for block in BLOCKS:
        items += block(args, bool(args.quick))
    return items

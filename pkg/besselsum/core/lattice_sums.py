#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Character-twisted I-Bessel lattice sums and their finite dual-lattice
evaluations.

For an integral lattice Gamma = Z^n A whose entries are divisible by q, and a
family chi of primitive characters mod q,

    sum_k chi(k) prod_j I_{x_j + (kA)_j/q}(t_j) e^{2 pi i <y, x + kA/q>}
      = prod_j G(chi_j) / |det A|
        * sum'_{g in Gamma*, |y - g| <= 1/2} conj(chi)(g A^T) e^{2 pi i <x, g>}
          prod_j e^{t_j cos 2 pi (y_j - g_j)}

The left side is an infinite Bessel sum (truncated with a reported tail
bound), the right side a finite sum with boundary weights 1/2.
"""

from __future__ import annotations
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from besselsum.core.accumulate import exact_sum, sharded_sum
from besselsum.core.characters import (
    DirichletCharacterFamily,
    family_gauss_product,
    is_primitive,
    new_family,
    principal_character,
)
from besselsum.core.errors import (
    BoundaryAmbiguity,
    DivisibilityViolation,
    NotPrimitive,
    TruncationFailure,
)
from besselsum.core.lattice import Lattice, _as_fraction, dual_lattice, enumerate_box, new_lattice
from besselsum.core.reports import IdentityReport
from besselsum.core.special_functions import (
    DEFAULT_CONFIG,
    BesselEvalConfig,
    a_function,
    bessel_i_table,
    bessel_tail_bound,
    tail_radius,
)
from besselsum.logging_setup import logger

DEFAULT_MAX_RADIUS = 2000
BOUNDARY_GUARD = 1e-12
SHARD_SIZE = 4096


@dataclass
class LhsResult:
    value: complex
    radius: int
    tail_bound: float
    terms: int


@dataclass
class RationalOffset:
    """y as exact rationals (numerators over a common denominator) or as floats."""
    exact: bool
    fractions: Tuple[Fraction, ...]
    floats: np.ndarray
    numerators: np.ndarray
    denominator: int


def normalize_y(y: Sequence) -> RationalOffset:
    exact = not any(isinstance(v, (float, np.floating)) for v in y)
    fr = tuple(Fraction(float(v)) if isinstance(v, (float, np.floating)) else _as_fraction(v) for v in y)
    if exact:
        den = math.lcm(1, *(f.denominator for f in fr))
        nums = np.array([int(f * den) for f in fr], dtype=np.int64)
    else:
        den, nums = 1, np.zeros(len(fr), dtype=np.int64)
        logger.warning("non-rational y: evaluate-only mode, boundary cases are not decidable")
    return RationalOffset(exact, fr, np.array([float(f) for f in fr]), nums, den)


def trivial_family(n: int) -> DirichletCharacterFamily:
    return new_family([principal_character(1)] * n)


def check_inputs(lattice: Lattice, family: DirichletCharacterFamily, x: Sequence, y: Sequence, t: Sequence) -> None:
    n = lattice.dimension
    for name, seq in (("x", x), ("y", y), ("t", t)):
        if len(seq) != n:
            raise ValueError(f"{name} has length {len(seq)}, lattice has dimension {n}")
    if family.dimension != n:
        raise ValueError(f"{family.dimension} characters for a rank-{n} lattice")
    q = family.modulus
    for i, row in enumerate(lattice.integer_basis()):
        for j, v in enumerate(row):
            if v % q:
                raise DivisibilityViolation(f"entry A[{i}][{j}] = {v} is not divisible by q = {q}", field="lattice")


def phase_factor(points: np.ndarray, off: RationalOffset) -> np.ndarray:
    """e^{2 pi i <y, w>} for integer rows w, reduced mod 1 exactly when y is rational."""
    if off.exact:
        r = np.mod(points @ off.numerators, off.denominator)
        return np.exp(2j * np.pi * r / off.denominator)
    return np.exp(2j * np.pi * (points @ off.floats))


def lhs_tail_bound(radius: int, t: Sequence[complex]) -> float:
    """
    Bound on the dropped part of any sum over orders w in Z^n with ||w||_inf > radius.

    Dominates by sum_w prod_j I_{w_j}(|t_j|), which gives
    e^{sum |t_j|} * sum_j bessel_tail_bound(radius, |t_j|).
    """
    s = [abs(complex(v)) for v in t]
    scaled = sum(bessel_tail_bound(radius, sj) for sj in s)
    if scaled == 0.0:
        return 0.0
    if math.isinf(scaled):
        return math.inf
    log_bound = sum(s) + math.log(scaled)
    return math.exp(log_bound) if log_bound < 700 else math.inf


def choose_radius(t: Sequence[complex], target: float, max_radius: int = DEFAULT_MAX_RADIUS) -> int:
    """Smallest radius whose lhs_tail_bound is below target."""
    s = [abs(complex(v)) for v in t]
    try:
        per_coord = target / (len(s) * math.exp(sum(s)))
    except OverflowError:
        raise TruncationFailure(f"e^(sum |t_j|) overflows a double at sum |t_j| = {sum(s):g}", field="t")
    radius = 0
    for sj in s:
        r = tail_radius(sj, per_coord, max_radius)
        if r < 0:
            raise TruncationFailure(f"truncation radius for |t| = {sj} exceeds cap {max_radius}", field="max_radius")
        radius = max(radius, r)
    return radius


def lhs_bessel_sum(
    lattice: Lattice,
    family: DirichletCharacterFamily,
    x: Sequence[int],
    y: Sequence,
    t: Sequence[complex],
    tol: float = 1e-9,
    cfg: BesselEvalConfig = DEFAULT_CONFIG,
    max_radius: int = DEFAULT_MAX_RADIUS,
    threads: int = 1,
) -> LhsResult:
    """
    sum over k in Z^n with ||x + kA/q||_inf <= R of chi(k) prod_j I_{w_j}(t_j) e^{2 pi i <y, w>}.

    Shards of the lexicographic enumeration are each reduced exactly rounded
    and merged in a fixed order, so the value does not depend on `threads`.
    """
    check_inputs(lattice, family, x, y, t)
    q = family.modulus
    n = lattice.dimension
    xs = np.array([int(v) for v in x], dtype=np.int64)
    ts = [complex(v) for v in t]
    off = normalize_y(y)

    radius = choose_radius(ts, 0.01 * tol, max_radius)
    tail = lhs_tail_bound(radius, ts)
    reduced = new_lattice([[v // q for v in row] for row in lattice.integer_basis()])
    box = enumerate_box(reduced, center=[-int(v) for v in xs], half_widths=[radius] * n)
    tables = [bessel_i_table(radius, tj, cfg) for tj in ts]
    logger.debug(f"lhs: radius {radius}, {len(box)} lattice points, tail bound {tail:.3e}")

    orders = box.numerators + xs[None, :]
    chis = family.evaluate_many(box.indices)
    shards = [slice(i, min(i + SHARD_SIZE, len(box))) for i in range(0, len(box), SHARD_SIZE)]

    def evaluate(sl: slice) -> np.ndarray:
        w = orders[sl]
        vals = chis[sl] * phase_factor(w, off)
        for j in range(n):
            vals = vals * tables[j][np.abs(w[:, j])]
        return vals

    value = sharded_sum(evaluate, shards, threads)
    return LhsResult(value=value, radius=radius, tail_bound=tail, terms=len(box))


@dataclass
class _Subset:
    indices: np.ndarray
    numerators: np.ndarray
    denominator: int


def rhs_dual_sum(
    lattice: Lattice,
    family: DirichletCharacterFamily,
    x: Sequence[int],
    y: Sequence,
    t: Sequence[complex],
) -> complex:
    """The finite dual-lattice side, with weight 1/2 per coordinate on the box boundary."""
    check_inputs(lattice, family, x, y, t)
    n = lattice.dimension
    ts = np.array([complex(v) for v in t])
    xs = np.array([int(v) for v in x], dtype=np.int64)
    off = normalize_y(y)

    if off.exact:
        box = enumerate_box(dual_lattice(lattice), center=off.fractions, half_widths=[Fraction(1, 2)] * n)
        offsets = box.offsets / box.denominator
        weights = box.weights
    else:
        # enumerate around a nearby rational centre with a margin, then decide in floats
        approx = [f.limit_denominator(4096) for f in off.fractions]
        widened = Fraction(1, 2) + Fraction(1, 1024)
        box = enumerate_box(dual_lattice(lattice), center=approx, half_widths=[widened] * n)
        offsets = np.abs(box.as_float() - off.floats[None, :])
        if np.any(np.abs(offsets - 0.5) <= BOUNDARY_GUARD):
            raise BoundaryAmbiguity("y is within 1e-12 of a box boundary and is not an exact rational", field="y")
        inside = np.all(offsets <= 0.5, axis=1)
        box_indices, box_nums, offsets = box.indices[inside], box.numerators[inside], offsets[inside]
        weights = np.ones(len(box_indices))
        box = _Subset(box_indices, box_nums, box.denominator)

    chis = family.conjugate().evaluate_many(box.indices)
    r = np.mod(box.numerators @ xs, box.denominator)
    phases = np.exp(2j * np.pi * r / box.denominator)
    envelope = np.exp((np.cos(2 * np.pi * offsets) * ts[None, :]).sum(axis=1))
    terms = weights * chis * phases * envelope
    prefactor = family_gauss_product(family) / float(lattice.covolume)
    logger.debug(f"rhs: {len(terms)} dual points in the box")
    return prefactor * exact_sum(terms)


def _primitivity(family: DirichletCharacterFamily, allow_imprimitive: bool) -> bool:
    if all(is_primitive(c) for c in family.components):
        return True
    if not allow_imprimitive:
        raise NotPrimitive("every character must be primitive for the identity to hold", field="chi")
    logger.warning("imprimitive character: verification carries no guarantee")
    return False


def verify_identity(
    lattice: Lattice,
    family: DirichletCharacterFamily,
    x: Sequence[int],
    y: Sequence,
    t: Sequence[complex],
    tol: float = 1e-9,
    cfg: BesselEvalConfig = DEFAULT_CONFIG,
    max_radius: int = DEFAULT_MAX_RADIUS,
    threads: int = 1,
    allow_imprimitive: bool = False,
) -> IdentityReport:
    """Both sides of the twisted Bessel-lattice identity, side by side."""
    guaranteed = _primitivity(family, allow_imprimitive)
    lhs = lhs_bessel_sum(lattice, family, x, y, t, tol, cfg, max_radius, threads)
    rhs = rhs_dual_sum(lattice, family, x, y, t)
    return IdentityReport(
        name="bessel-lattice",
        lhs=lhs.value,
        rhs=rhs,
        tolerance=tol,
        lhs_truncation_radius=lhs.radius,
        lhs_tail_bound=lhs.tail_bound,
        guaranteed=guaranteed,
        extras={"lhs_terms": lhs.terms, "q": family.modulus},
    )


def verify_one_dimensional(m: int, x: int, t: complex, tol: float = 1e-10,
                           cfg: BesselEvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """sum_{g in mZ} I_{x+g}(t) against (1/m) sum_{j<m} exp(t cos 2 pi j/m) e^{2 pi i x j/m}."""
    lhs = lhs_bessel_sum(new_lattice([[m]]), trivial_family(1), [x], [0], [t], tol, cfg)
    rhs = a_function(x, t, m)
    return IdentityReport(
        name=f"one-dimensional m={m} x={x}",
        lhs=lhs.value,
        rhs=rhs,
        tolerance=tol,
        lhs_truncation_radius=lhs.radius,
        lhs_tail_bound=lhs.tail_bound,
    )


def discrete_torus_trace(m: Sequence[int], t: complex, tol: float = 1e-10,
                         cfg: BesselEvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """
    Heat trace of the discrete torus prod C_{m_j}.

    LHS sum_k prod_j e^{-2t} I_{m_j k_j}(2t), RHS (1/prod m_j) sum over the
    explicit spectrum {2n - 2 sum_j cos(2 pi k_j / m_j)} of e^{-lambda t}.
    """
    ms = [int(v) for v in m]
    if any(v < 1 for v in ms):
        raise ValueError("torus side lengths must be >= 1")
    n = len(ms)
    t = complex(t)
    basis = [[ms[i] if i == j else 0 for j in range(n)] for i in range(n)]
    scale = np.exp(-2 * n * t)
    lhs = lhs_bessel_sum(new_lattice(basis), trivial_family(n), [0] * n, [0] * n, [2 * t] * n, tol, cfg)

    grids = np.meshgrid(*(np.arange(v) for v in ms), indexing="ij")
    lam = 2 * n - 2 * sum(np.cos(2 * np.pi * g.ravel() / v) for g, v in zip(grids, ms))
    rhs = exact_sum(np.exp(-lam * t)) / math.prod(ms)
    return IdentityReport(
        name=f"discrete-torus m={tuple(ms)}",
        lhs=scale * lhs.value,
        rhs=rhs,
        tolerance=tol,
        lhs_truncation_radius=lhs.radius,
        lhs_tail_bound=abs(scale) * lhs.tail_bound,
    )

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Theta series of lattices, the continuum limit of the Bessel lattice identity,
the Dedekind eta function and the Jacobi theta functions theta_2 / theta_4.

Every Gaussian series is truncated on a sup-norm box; the dropped part is
bounded by dominating the summation set with a shifted grid h Z + s per
coordinate, see `gaussian_grid_tail`.
"""

from __future__ import annotations
import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import ive

from besselsum.core.accumulate import exact_sum
from besselsum.core.characters import (
    DirichletCharacter,
    DirichletCharacterFamily,
    family_gauss_product,
    gauss_sum,
    is_primitive,
    kronecker_character,
)
from besselsum.core.errors import NotPrimitive
from besselsum.core.lattice import Lattice, _as_fraction, dual_lattice, enumerate_box, new_lattice
from besselsum.core.lattice_sums import check_inputs, normalize_y, phase_factor
from besselsum.core.reports import IdentityReport
from besselsum.core.special_functions import bessel_tail_bound, tail_radius
from besselsum.logging_setup import logger

SERIES_TARGET = 1e-16
MAX_RADIUS = 10 ** 6


def principal_sqrt(z: complex) -> complex:
    """Square root with the argument of z taken in (-pi, pi]."""
    z = complex(z)
    if z.imag == 0.0 and z.real < 0.0:
        return complex(0.0, math.sqrt(-z.real))
    return cmath.sqrt(z)


@dataclass
class ThetaValue:
    value: complex
    series_terms_used: int
    tail_bound: float


# --- Gaussian truncation ----------------------------------------------------

def gaussian_grid_tail(a: float, radius: float, h: float = 1.0, b: float = 0.0) -> float:
    """
    Bound on sum over u in s + hZ with |u| > radius of exp(-a u^2 + b |u|), any shift s.

    Completing the square moves the peak to b/2a; beyond it the terms decay
    by at least exp(-2 a r h) per step.
    """
    if a <= 0:
        return math.inf
    peak = b / (2 * a)
    r = radius - peak
    if r <= 0:
        return math.inf
    ratio = math.exp(-2 * a * r * h)
    if ratio >= 1.0:
        return math.inf
    log_bound = math.log(2.0) + b * b / (4 * a) - a * r * r - math.log1p(-ratio)
    return math.exp(log_bound) if log_bound < 700 else math.inf


def gaussian_grid_total(a: float, h: float = 1.0) -> float:
    """Bound on the full sum over any shifted grid s + hZ of exp(-a u^2): peak plus integral / h."""
    return 1.0 + math.sqrt(math.pi / a) / h


def box_gaussian_tail(coeffs: Sequence[float], radius: float, h: Sequence[float]) -> float:
    """sum_j tail_j prod_{i != j} total_i for a product of one-dimensional Gaussians."""
    totals = [gaussian_grid_total(a, hh) for a, hh in zip(coeffs, h)]
    out = 0.0
    for j, (a, hh) in enumerate(zip(coeffs, h)):
        others = math.prod(totals[:j] + totals[j + 1:])
        out += gaussian_grid_tail(a, radius, hh) * others
    return out


def gaussian_radius(coeffs: Sequence[float], h: Sequence[float], target: float, step: Fraction = Fraction(1, 8)) -> Fraction:
    """Smallest radius (a multiple of `step`) whose box tail is below target."""
    hi = step
    while box_gaussian_tail(coeffs, float(hi), h) > target:
        hi *= 2
        if hi > MAX_RADIUS:
            raise ValueError("Gaussian series radius exceeds the search cap")
    lo = Fraction(0)
    while hi - lo > step:
        mid = ((lo + hi) / 2 // step) * step
        if mid <= lo:
            break
        if box_gaussian_tail(coeffs, float(mid), h) > target:
            lo = mid
        else:
            hi = mid
    return hi


def _grid_spacing(lattice: Lattice) -> float:
    """Gamma lies in (1/D) Z^n with D the common denominator of its basis."""
    return 1.0 / math.lcm(1, *(v.denominator for row in lattice.basis for v in row))


# --- lattice theta ------------------------------------------------------------

def theta_lattice(lattice: Lattice, t: float) -> ThetaValue:
    """Theta_Gamma(t) = sum_{g in Gamma} exp(-(2 pi)^2 <g, g> t)."""
    if t <= 0:
        raise ValueError("theta_lattice needs t > 0")
    n = lattice.dimension
    a = 4 * math.pi ** 2 * t
    h = _grid_spacing(lattice)
    radius = gaussian_radius([a] * n, [h] * n, 1e-15)
    box = enumerate_box(lattice, [0] * n, [radius] * n)
    pts = box.as_float()
    value = exact_sum(np.exp(-a * np.sum(pts * pts, axis=1)))
    return ThetaValue(value=value, series_terms_used=len(box), tail_bound=box_gaussian_tail([a] * n, float(radius), [h] * n))


def theta_char_sides(
    lattice: Lattice,
    family: DirichletCharacterFamily,
    x: Sequence[int],
    y: Sequence,
    t: Sequence[float],
    tol: float = 1e-11,
) -> IdentityReport:
    """
    Character-twisted theta transformation, the continuum limit of the Bessel identity.

    LHS (2 pi)^{-n/2} sum_k chi(k) exp(-1/2 sum_j w_j^2 / t_j) e^{2 pi i <y, w>}, w = x + kA/q;
    RHS prod G(chi_j)/|det A| sum_g conj(chi)(g A^T) prod sqrt(t_j)
        exp(-2 pi^2 sum_j (y_j - g_j)^2 t_j) e^{2 pi i <x, g>}.
    """
    check_inputs(lattice, family, x, y, t)
    ts = [float(v) for v in t]
    if any(v <= 0 for v in ts):
        raise ValueError("theta_char_sides needs t_j > 0")
    if not all(is_primitive(c) for c in family.components):
        raise NotPrimitive("every character must be primitive for the identity to hold", field="chi")
    n = lattice.dimension
    q = family.modulus
    xs = np.array([int(v) for v in x], dtype=np.int64)
    off = normalize_y([_as_fraction(v) for v in y])

    # left: integer orders w
    a_lhs = [1.0 / (2 * v) for v in ts]
    r_lhs = gaussian_radius(a_lhs, [1.0] * n, 1e-3 * tol)
    r_lhs = math.ceil(r_lhs)
    reduced = new_lattice([[v // q for v in row] for row in lattice.integer_basis()])
    box = enumerate_box(reduced, center=[-int(v) for v in xs], half_widths=[r_lhs] * n)
    w = box.numerators + xs[None, :]
    expo = -0.5 * np.sum(w * w / np.array(ts)[None, :], axis=1)
    terms = family.evaluate_many(box.indices) * np.exp(expo) * phase_factor(w, off)
    norm = (2 * math.pi) ** (-n / 2)
    lhs = norm * exact_sum(terms)
    lhs_tail = norm * box_gaussian_tail(a_lhs, float(r_lhs), [1.0] * n)

    # right: dual points around y
    a_rhs = [2 * math.pi ** 2 * v for v in ts]
    h_dual = 1.0 / float(lattice.covolume)
    r_rhs = gaussian_radius(a_rhs, [h_dual] * n, 1e-3 * tol)
    dual = enumerate_box(dual_lattice(lattice), center=off.fractions, half_widths=[r_rhs] * n)
    d = dual.offsets / dual.denominator
    phase = np.exp(2j * np.pi * np.mod(dual.numerators @ xs, dual.denominator) / dual.denominator)
    envelope = np.exp(-np.sum(d * d * np.array(a_rhs)[None, :], axis=1))
    pref = family_gauss_product(family) / float(lattice.covolume) * math.prod(math.sqrt(v) for v in ts)
    rhs = pref * exact_sum(family.conjugate().evaluate_many(dual.indices) * phase * envelope)
    rhs_tail = abs(pref) * box_gaussian_tail(a_rhs, float(r_rhs), [h_dual] * n)
    logger.debug(f"theta sides: {len(box)} lhs terms (R={r_lhs}), {len(dual)} rhs terms (R={r_rhs})")
    return IdentityReport(
        name="theta-character",
        lhs=lhs,
        rhs=rhs,
        tolerance=tol,
        lhs_truncation_radius=int(r_lhs),
        lhs_tail_bound=lhs_tail,
        rhs_tail_bound=rhs_tail,
        extras={"lhs_terms": len(box), "rhs_terms": len(dual)},
    )


def character_theta_check(chi: DirichletCharacter, ell, alpha: float, b: int, z: float,
                          tol: float = 1e-11) -> IdentityReport:
    """
    One-dimensional character theta identity, for half-integer ell >= 1/2 with q | 2 ell:

    (alpha/sqrt(4 pi z)) sum_k chi(k) exp(-alpha^2 (2 ell k/q + b)^2 / 4z)
      = (G(chi)/2 ell) sum_j conj(chi)(j) exp(-pi^2 j^2 z/(alpha^2 ell^2)) e^{pi i b j/ell}
    """
    two_ell = 2 * _as_fraction(ell)
    q = chi.modulus
    if two_ell.denominator != 1 or two_ell < 1 or int(two_ell) % q:
        raise ValueError(f"ell = {ell} must be a positive half-integer with q = {q} dividing 2 ell")
    if not is_primitive(chi):
        raise NotPrimitive("character must be primitive", field="chi")
    if alpha <= 0 or z <= 0:
        raise ValueError("alpha and z must be positive")
    two_ell = int(two_ell)
    ell_f = two_ell / 2

    # left: u = (2 ell / q) k + b on a grid of spacing 2 ell / q
    a_l = alpha ** 2 / (4 * z)
    h_l = two_ell / q
    r_l = float(gaussian_radius([a_l], [h_l], 1e-3 * tol))
    k_max = math.ceil((r_l + abs(b)) / h_l) + 1
    k = np.arange(-k_max, k_max + 1)
    u = h_l * k + b
    keep = np.abs(u) <= r_l
    k, u = k[keep], u[keep]
    norm = alpha / math.sqrt(4 * math.pi * z)
    lhs = norm * exact_sum(chi.table()[np.mod(k, q)] * np.exp(-a_l * u * u))
    lhs_tail = norm * gaussian_grid_tail(a_l, r_l, h_l)

    # right
    a_r = math.pi ** 2 * z / (alpha ** 2 * ell_f ** 2)
    r_r = math.ceil(gaussian_radius([a_r], [1.0], 1e-3 * tol))
    j = np.arange(-r_r, r_r + 1)
    conj = np.conj(chi.table())[np.mod(j, q)]
    phase = np.exp(1j * np.pi * np.mod(2 * b * j, 2 * two_ell) / two_ell)
    pref = gauss_sum(chi) / two_ell
    rhs = pref * exact_sum(conj * np.exp(-a_r * j * j) * phase)
    rhs_tail = abs(pref) * gaussian_grid_tail(a_r, r_r)
    return IdentityReport(
        name=f"character-theta ell={ell_f:g} alpha={alpha:g} b={b} z={z:g}",
        lhs=lhs,
        rhs=rhs,
        tolerance=tol,
        lhs_truncation_radius=int(math.ceil(r_l)),
        lhs_tail_bound=lhs_tail,
        rhs_tail_bound=rhs_tail,
    )


# --- continuum limit ------------------------------------------------------

@dataclass
class ContinuumLimitSchedule:
    """Bessel identity data plus the increasing list of scale factors L."""
    L_values: List[int]
    lattice: Lattice
    family: DirichletCharacterFamily
    x: List[int]
    y: List
    t: List[float]
    alphas: Optional[List[float]] = None

    def __post_init__(self) -> None:
        if not self.L_values or any(v < 1 for v in self.L_values):
            raise ValueError("L values must be positive integers")
        if any(b <= a for a, b in zip(self.L_values, self.L_values[1:])):
            raise ValueError("L values must be strictly increasing")
        if any(v <= 0 for v in self.t):
            raise ValueError("continuum limit needs t_j > 0")
        if self.alphas is not None and (len(self.alphas) != len(self.t) or any(a <= 0 for a in self.alphas)):
            raise ValueError("alphas must be positive, one per coordinate")

    def scales(self, L: int) -> List[int]:
        """Per-coordinate L_j = round(alpha_j L), at least 1."""
        alphas = self.alphas or [1.0] * len(self.t)
        return [max(1, int(round(a * L))) for a in alphas]


@dataclass
class ContinuumLimitRow:
    L: int
    lhs: complex
    rhs: complex
    limit: complex
    limit_residual: float
    identity_residual: float
    lhs_tail_bound: float
    scales: List[int] = field(default_factory=list)


def _rescaled_tail(L: int, t: float, radius: int) -> Tuple[float, float]:
    """
    (tail, total) bounds for sum_w L sqrt(t) exp(-L^2 t) I_{wL}(L^2 t) over integers w.

    Each term is at most (1 + |w|/(L t))^{-L|w|/2}, which decays like
    exp(-c|w|) with c = (L/2) log(1 + R/(L t)) beyond |w| = R.
    """
    c = 0.5 * L * math.log1p(radius / (L * t))
    tail = 2 * math.exp(-c * (radius + 1)) / -math.expm1(-c)
    c1 = 0.5 * L * math.log1p(1 / (L * t))
    total = 1.0 + 2 * math.exp(-c1) / -math.expm1(-c1)
    return tail, total


def continuum_limit_probe(schedule: ContinuumLimitSchedule, target: float = 1e-13) -> List[ContinuumLimitRow]:
    """
    Evaluate both sides of the L-rescaled Bessel identity for each L and the
    distance of the left side to the theta-series limit.
    """
    lat, fam = schedule.lattice, schedule.family
    check_inputs(lat, fam, schedule.x, schedule.y, schedule.t)
    n = lat.dimension
    q = fam.modulus
    ts = np.array([float(v) for v in schedule.t])
    xs = np.array([int(v) for v in schedule.x], dtype=np.int64)
    off = normalize_y([_as_fraction(v) for v in schedule.y])
    limit = theta_char_sides(lat, fam, schedule.x, schedule.y, schedule.t).lhs
    reduced = new_lattice([[v // q for v in row] for row in lat.integer_basis()])
    gauss = family_gauss_product(fam) / float(lat.covolume)
    rows: List[ContinuumLimitRow] = []

    for L in schedule.L_values:
        Ls = schedule.scales(L)
        radius = 1
        while True:
            parts = [_rescaled_tail(Lj, tj, radius) for Lj, tj in zip(Ls, ts)]
            tail = sum(p[0] * math.prod(o[1] for i, o in enumerate(parts) if i != j) for j, p in enumerate(parts))
            if tail <= target:
                break
            radius *= 2
        box = enumerate_box(reduced, center=[-int(v) for v in xs], half_widths=[radius] * n)
        w = box.numerators + xs[None, :]
        vals = fam.evaluate_many(box.indices) * phase_factor(w, off)
        for j in range(n):
            s = Ls[j] ** 2 * ts[j]
            vals = vals * (Ls[j] * math.sqrt(ts[j]) * ive(np.abs(w[:, j]) * Ls[j], s))
        lhs = exact_sum(vals)

        dual = enumerate_box(dual_lattice(lat), center=off.fractions, half_widths=[Fraction(v, 2) for v in Ls])
        d = dual.offsets / dual.denominator
        Ls_arr = np.array(Ls, dtype=float)
        expo = np.sum((Ls_arr ** 2 * ts)[None, :] * (np.cos(2 * np.pi * d / Ls_arr[None, :]) - 1.0), axis=1)
        phase = np.exp(2j * np.pi * np.mod(dual.numerators @ xs, dual.denominator) / dual.denominator)
        terms = dual.weights * fam.conjugate().evaluate_many(dual.indices) * phase * np.exp(expo)
        rhs = gauss * float(np.prod(np.sqrt(ts))) * exact_sum(terms)

        rows.append(ContinuumLimitRow(
            L=L,
            lhs=lhs,
            rhs=rhs,
            limit=limit,
            limit_residual=abs(lhs - limit),
            identity_residual=abs(lhs - rhs),
            lhs_tail_bound=tail,
            scales=Ls,
        ))
        logger.debug(f"continuum limit L={L}: {len(box)} lhs terms, limit residual {rows[-1].limit_residual:.3e}")
    return rows


def is_strictly_decreasing(values: Sequence[float]) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


# --- eta -------------------------------------------------------------------------

@dataclass
class EtaRoutes:
    series: ThetaValue
    product: ThetaValue


def _eta_series(tau: complex) -> ThetaValue:
    """eta(tau) = 1/2 sum_n (12/n) e^{2 pi i tau n^2 / 24}."""
    chi = kronecker_character(12)
    a = 2 * math.pi * tau.imag / 24
    radius = math.ceil(gaussian_radius([a], [1.0], SERIES_TARGET))
    n = np.arange(-radius, radius + 1)
    n2 = n * n
    phase = np.exp(2j * np.pi * tau.real * n2 / 24)
    terms = chi.table()[np.mod(n, 12)] * np.exp(-a * n2) * phase
    return ThetaValue(value=0.5 * exact_sum(terms), series_terms_used=int(n.size),
                      tail_bound=0.5 * gaussian_grid_tail(a, radius))


def _eta_product(tau: complex) -> ThetaValue:
    """eta(tau) = q^{1/24} prod_{n >= 1} (1 - q^n), q = e^{2 pi i tau}."""
    qv = cmath.exp(2j * math.pi * tau)
    aq = abs(qv)
    value = cmath.exp(2j * math.pi * tau / 24)
    n = 0
    power = 1.0 + 0j
    while True:
        n += 1
        power *= qv
        value *= 1.0 - power
        # |prod_{k>n}(1 - q^k) - 1| <= prod(1 + |q|^k) - 1 <= exp(sum_{k>n} |q|^k) - 1
        rest = math.expm1(aq ** (n + 1) / (1.0 - aq))
        if rest * abs(value) <= SERIES_TARGET or n > 100000:
            break
    return ThetaValue(value=value, series_terms_used=n, tail_bound=rest * abs(value))


def dedekind_eta(tau: complex) -> EtaRoutes:
    """Both routes to eta(tau): the (12/.) character series and the product formula."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("eta needs Im tau > 0")
    return EtaRoutes(series=_eta_series(tau), product=_eta_product(tau))


def eta(tau: complex) -> complex:
    return dedekind_eta(tau).series.value


def eta_route_check(tau: complex, tol: float = 1e-12) -> IdentityReport:
    r = dedekind_eta(tau)
    return IdentityReport(name=f"eta series-vs-product tau={tau}", lhs=r.series.value, rhs=r.product.value,
                          tolerance=tol, lhs_tail_bound=r.series.tail_bound, rhs_tail_bound=r.product.tail_bound)


def eta_transformation_check(tau: complex, tol: float = 1e-12) -> IdentityReport:
    """sqrt(i/tau) eta(-1/tau) = eta(tau)."""
    tau = complex(tau)
    inv = dedekind_eta(-1.0 / tau).series
    direct = dedekind_eta(tau).series
    root = principal_sqrt(1j / tau)
    return IdentityReport(name=f"eta transformation tau={tau}", lhs=root * inv.value, rhs=direct.value,
                          tolerance=tol, lhs_tail_bound=abs(root) * inv.tail_bound,
                          rhs_tail_bound=direct.tail_bound)


def eta_periodicity_check(tau: complex, tol: float = 1e-12) -> IdentityReport:
    """eta(tau + 1) = e^{pi i/12} eta(tau), with the product route on the left."""
    tau = complex(tau)
    shifted = dedekind_eta(tau + 1).product
    direct = dedekind_eta(tau).series
    return IdentityReport(name=f"eta periodicity tau={tau}", lhs=shifted.value,
                          rhs=cmath.exp(1j * math.pi / 12) * direct.value, tolerance=tol,
                          lhs_tail_bound=shifted.tail_bound, rhs_tail_bound=direct.tail_bound)


# --- Jacobi theta --------------------------------------------------------------

def _jacobi_series(tau: complex, v: complex, half_shift: bool) -> ThetaValue:
    a = math.pi * tau.imag
    b = 2 * math.pi * abs(complex(v).imag)
    shift = 0.5 if half_shift else 0.0
    radius = 1.0
    while gaussian_grid_tail(a, radius, 1.0, b) > SERIES_TARGET:
        radius *= 2
    n = np.arange(-math.ceil(radius) - 1, math.ceil(radius) + 1)
    m = n + shift
    n, m = n[np.abs(m) <= radius], m[np.abs(m) <= radius]
    if half_shift:
        terms = np.exp(1j * math.pi * tau * m * m + (2 * n + 1) * 1j * math.pi * v)
    else:
        terms = np.where(n % 2 == 0, 1.0, -1.0) * np.exp(1j * math.pi * tau * m * m + 2j * math.pi * n * v)
    return ThetaValue(value=exact_sum(terms), series_terms_used=int(n.size),
                      tail_bound=gaussian_grid_tail(a, radius, 1.0, b))


def theta2(v: complex, tau: complex) -> ThetaValue:
    """theta_2(v|tau) = sum_n e^{pi i tau (n+1/2)^2} e^{(2n+1) pi i v}."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("theta_2 needs Im tau > 0")
    return _jacobi_series(tau, complex(v), True)


def theta4(v: complex, tau: complex) -> ThetaValue:
    """theta_4(v|tau) = sum_n (-1)^n e^{pi i tau n^2} e^{2 pi i n v}."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("theta_4 needs Im tau > 0")
    return _jacobi_series(tau, complex(v), False)


def jacobi_imaginary_check(v: complex, tau: complex, tol: float = 1e-12) -> IdentityReport:
    """sqrt(i/tau) e^{-pi i v^2/tau} theta_2(v/tau | -1/tau) = theta_4(v | tau)."""
    tau, v = complex(tau), complex(v)
    left = theta2(v / tau, -1.0 / tau)
    right = theta4(v, tau)
    factor = principal_sqrt(1j / tau) * cmath.exp(-1j * math.pi * v * v / tau)
    return IdentityReport(name=f"jacobi imaginary transformation v={v} tau={tau}", lhs=factor * left.value,
                          rhs=right.value, tolerance=tol, lhs_tail_bound=abs(factor) * left.tail_bound,
                          rhs_tail_bound=right.tail_bound)


def jacobi_theta_identity_check(t: float, tol: float = 1e-13) -> IdentityReport:
    """
    (1/sqrt(4 pi t)) sum_k e^{-(2k+1)^2/4t} = (1/2) sum_j (-1)^j e^{-pi^2 j^2 t},
    plus the theta_2 / theta_4 form at tau = i pi t in the extras.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    a_l = 1.0 / (4 * t)
    r_l = math.ceil(gaussian_radius([a_l], [2.0], 1e-3 * tol))
    odd = np.arange(-r_l - 1, r_l + 2)
    odd = odd[(odd % 2 == 1) & (np.abs(odd) <= r_l)]
    norm = 1.0 / math.sqrt(4 * math.pi * t)
    lhs = norm * exact_sum(np.exp(-a_l * odd * odd))
    a_r = math.pi ** 2 * t
    r_r = math.ceil(gaussian_radius([a_r], [1.0], 1e-3 * tol))
    j = np.arange(-r_r, r_r + 1)
    rhs = 0.5 * exact_sum(np.where(j % 2 == 0, 1.0, -1.0) * np.exp(-a_r * j * j))

    tau = 1j * math.pi * t
    th2 = theta2(0, -1.0 / tau)
    th4 = theta4(0, tau)
    theta_lhs = 0.5 * principal_sqrt(1j / tau) * th2.value
    theta_rhs = 0.5 * th4.value
    return IdentityReport(
        name=f"jacobi theta identity t={t:g}",
        lhs=lhs,
        rhs=rhs,
        tolerance=tol,
        lhs_truncation_radius=r_l,
        lhs_tail_bound=norm * gaussian_grid_tail(a_l, r_l, 2.0),
        rhs_tail_bound=0.5 * gaussian_grid_tail(a_r, r_r),
        extras={
            "theta2_side": theta_lhs,
            "theta4_side": theta_rhs,
            "theta_residual": abs(theta_lhs - theta_rhs),
        },
    )


def jacobi_discrete_check(L: int, t: float, tol: float = 1e-12) -> IdentityReport:
    """
    Finite precursor of the Jacobi identity:
    sum_k L e^{-2L^2 t} I_{(2k+1)L}(2 L^2 t) = (1/2) sum'_{j=-L}^{L} (-1)^j exp(2 L^2 t (cos(pi j/L) - 1)).
    """
    if L < 1 or t <= 0:
        raise ValueError("need L >= 1 and t > 0")
    s = 2 * L * L * t
    radius = tail_radius(s, tol * 1e-3 / L, MAX_RADIUS)
    k_max = radius // (2 * L) + 1
    k = np.arange(-k_max - 1, k_max + 1)
    orders = np.abs((2 * k + 1) * L)
    orders = orders[orders <= radius]
    lhs = L * exact_sum(ive(orders, s).astype(complex))
    j = np.arange(-L, L + 1)
    weights = np.where(np.abs(j) == L, 0.5, 1.0)
    signs = np.where(j % 2 == 0, 1.0, -1.0)
    rhs = 0.5 * exact_sum(weights * signs * np.exp(s * (np.cos(np.pi * j / L) - 1.0)))
    return IdentityReport(
        name=f"jacobi discrete L={L} t={t:g}",
        lhs=lhs,
        rhs=rhs,
        tolerance=tol,
        lhs_truncation_radius=int(radius),
        lhs_tail_bound=L * bessel_tail_bound(radius, s),
    )

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Semidiscrete heat equation on a lattice Lambda = Z^n B.

Lambda is a 2n-regular graph with neighbours x +- b_j, so every function on
Lambda is handled through its index vector k = x B^{-1}; the Laplacian
(1/2n) sum_j (f(x + b_j) + f(x - b_j) - 2 f(x)) then acts on index space
exactly as on Z^n. The normalisation 1/(2n) is the canonical one here;
Delta' = n Delta_{Z^n} only appears in plane_wave_check.
"""

from __future__ import annotations
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from besselsum.core.accumulate import exact_sum
from besselsum.core.characters import kronecker_character
from besselsum.core.codes import LinearCode, cwe, dual_code, preimage_lattice
from besselsum.core.errors import (
    BesselSumError,
    NotCoprime,
    NotLatticePoint,
    OutOfWindow,
    StepTooLarge,
    TruncationFailure,
)
from besselsum.core.lattice import Lattice, hermite_basis, identity_lattice, new_lattice
from besselsum.core.reports import IdentityReport, ValueReport
from besselsum.core.special_functions import bessel_i_scaled, bessel_tail_bound, tail_radius
from besselsum.core.theta import eta
from besselsum.logging_setup import logger

DEFAULT_KERNEL_TAIL = 1e-10
DEFAULT_STEPS_PER_UNIT = 10
MAX_KERNEL_RADIUS = 100000
CHUNK_ENTRIES = 1 << 20


@dataclass
class HeatState:
    """Values on the index box [-radius, radius]^n of a lattice at a given time."""
    lattice: Lattice
    radius: int
    values: np.ndarray
    time: float
    error_bound: float = 0.0

    def __post_init__(self) -> None:
        shape = (2 * self.radius + 1,) * self.lattice.dimension
        if self.values.shape != shape:
            raise ValueError(f"values of shape {self.values.shape}, expected {shape}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("heat state values must be finite")

    def indices(self) -> np.ndarray:
        return box_indices(self.lattice.dimension, self.radius)

    def at(self, k: Sequence[int]) -> complex:
        pos = tuple(int(v) + self.radius for v in k)
        if any(p < 0 or p > 2 * self.radius for p in pos):
            raise OutOfWindow(f"index {tuple(k)} outside the box of radius {self.radius}", field="k")
        return self.values[pos]

    def point(self, k: Sequence[int]) -> Tuple[Fraction, ...]:
        return self.lattice.point(k)


@dataclass(frozen=True)
class HeatKernelQuery:
    lattice: Lattice
    y: Tuple[Fraction, ...]
    t: float

    def index(self) -> Tuple[int, ...]:
        """y B^{-1}, which must be an integer vector."""
        coords = self.lattice.coordinates(self.y)
        if any(c.denominator != 1 for c in coords):
            raise NotLatticePoint(f"{tuple(str(v) for v in self.y)} is not a point of the lattice", field="y")
        return tuple(int(c) for c in coords)


def box_indices(n: int, radius: int) -> np.ndarray:
    """All k in [-radius, radius]^n, lexicographic."""
    r = np.arange(-radius, radius + 1, dtype=np.int64)
    return np.stack(np.meshgrid(*([r] * n), indexing="ij"), axis=-1).reshape(-1, n)


# --- initial data -----------------------------------------------------------------

@dataclass(frozen=True)
class WindowData:
    """Values on [-radius, radius]^n, zero outside."""
    radius: int
    values: np.ndarray

    @property
    def dimension(self) -> int:
        return self.values.ndim

    @property
    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def evaluate(self, idx: np.ndarray) -> np.ndarray:
        inside = np.all(np.abs(idx) <= self.radius, axis=1)
        out = np.zeros(idx.shape[0], dtype=self.values.dtype)
        pos = idx[inside] + self.radius
        out[inside] = self.values[tuple(pos.T)]
        return out


@dataclass(frozen=True)
class PeriodicData:
    """
    A function on Z^n invariant under an integral period lattice P.

    `table` maps coset representatives (HNF-reduced index vectors) to values;
    missing cosets are zero.
    """
    period: Lattice
    table: Dict[Tuple[int, ...], complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hnf", np.array(hermite_basis(self.period), dtype=np.int64))
        object.__setattr__(self, "_values", self._quotient_table())

    @property
    def dimension(self) -> int:
        return self.period.dimension

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self._hnf).copy()

    @property
    def sup_norm(self) -> float:
        return max((abs(v) for v in self.table.values()), default=0.0)

    def reduce(self, idx: np.ndarray) -> np.ndarray:
        """Vectorised canonical representatives inside prod [0, h_ii)."""
        h = self._hnf
        w = np.array(idx, dtype=np.int64, copy=True)
        for i in range(h.shape[0] - 1, -1, -1):
            q = np.floor_divide(w[:, i], h[i, i])
            w -= q[:, None] * h[i][None, :]
        return w

    def codes(self, reduced: np.ndarray) -> np.ndarray:
        """Mixed-radix position of a reduced representative in the quotient."""
        d = self.diagonal
        strides = np.ones(d.size, dtype=np.int64)
        for i in range(d.size - 2, -1, -1):
            strides[i] = strides[i + 1] * d[i + 1]
        return reduced @ strides

    def _quotient_table(self) -> np.ndarray:
        d = self.diagonal
        vals = np.zeros(int(np.prod(d)), dtype=complex)
        for rep, v in self.table.items():
            vals[int(self.codes(self.reduce(np.array([rep])))[0])] += v
        return vals

    def evaluate(self, idx: np.ndarray) -> np.ndarray:
        vals = self._values
        out = vals[self.codes(self.reduce(idx))]
        return out.real if np.all(vals.imag == 0) else out


InitialData = Union[WindowData, PeriodicData]


def delta_data(n: int) -> WindowData:
    return WindowData(0, np.ones((1,) * n))


def constant_data(n: int, value: float = 1.0) -> PeriodicData:
    return PeriodicData(identity_lattice(n), {(0,) * n: value})


def coset_indicator(code: LinearCode, shift: Optional[Sequence[int]] = None) -> PeriodicData:
    """1 on shift + rho^{-1}(C), periodic under rho^{-1}(C) itself."""
    n = code.length
    period = preimage_lattice(code)
    data = PeriodicData(period)
    rep = data.reduce(np.array([list(shift) if shift is not None else [0] * n], dtype=np.int64))[0]
    return PeriodicData(period, {tuple(int(v) for v in rep): 1.0})


def table_data(values: Sequence[Sequence[float]]) -> WindowData:
    """Window data from a square table (1-D list or 2-D rows) centred at the origin."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim == 0 or any(s != arr.shape[0] for s in arr.shape) or arr.shape[0] % 2 == 0:
        raise ValueError("a table must be a centred box with odd side length")
    return WindowData((arr.shape[0] - 1) // 2, arr)


# --- Laplacian --------------------------------------------------------------------

def laplacian_apply(state: HeatState, k: Sequence[int]) -> complex:
    """(1/2n) sum_j (f(k + e_j) + f(k - e_j) - 2 f(k)) at an interior index."""
    n = state.lattice.dimension
    if len(k) != n:
        raise ValueError(f"index of length {len(k)} for a rank-{n} lattice")
    if any(abs(int(v)) + 1 > state.radius for v in k):
        raise OutOfWindow(f"{tuple(k)} has neighbours outside the box of radius {state.radius}", field="k")
    center = state.at(k)
    total = 0.0
    for j in range(n):
        plus = list(k)
        minus = list(k)
        plus[j] += 1
        minus[j] -= 1
        total += state.at(plus) + state.at(minus) - 2 * center
    return total / (2 * n)


def _box_laplacian(f: np.ndarray) -> np.ndarray:
    """Laplacian on a box array with zero values outside."""
    n = f.ndim
    padded = np.pad(f, 1)
    core = tuple(slice(1, -1) for _ in range(n))
    out = np.zeros_like(f)
    for j in range(n):
        up = list(core)
        down = list(core)
        up[j] = slice(2, None)
        down[j] = slice(None, -2)
        out += padded[tuple(up)] + padded[tuple(down)] - 2 * f
    return out / (2 * n)


# --- kernel -----------------------------------------------------------------------

def heat_kernel(query: HeatKernelQuery) -> float:
    """K_{Lambda,t}(y) = prod_j e^{-t/n} I_{(y B^{-1})_j}(t/n)."""
    if query.t < 0:
        raise ValueError("heat kernel needs t >= 0")
    k = query.index()
    n = len(k)
    return float(np.prod(bessel_i_scaled(np.array(k), query.t / n)))


def kernel_radius(n: int, t: float, tail: float = DEFAULT_KERNEL_TAIL) -> int:
    """Index radius outside which the kernel mass is below `tail`."""
    r = tail_radius(t / n, tail / n, MAX_KERNEL_RADIUS)
    if r < 0:
        raise TruncationFailure(f"kernel at t={t} needs a window beyond radius {MAX_KERNEL_RADIUS}",
                                field="t")
    return r


def kernel_tail_mass(n: int, t: float, radius: int) -> float:
    """Kernel mass outside [-radius, radius]^n; each factor has mass one."""
    return n * bessel_tail_bound(radius, t / n)


def kernel_window(n: int, t: float, radius: int) -> np.ndarray:
    """Kernel values on the index box as an n-dimensional array."""
    one = bessel_i_scaled(np.arange(-radius, radius + 1), t / n)
    out = np.asarray(one, dtype=float).reshape(-1)
    for _ in range(n - 1):
        out = np.multiply.outer(out, np.asarray(one).reshape(-1))
    return out.reshape((2 * radius + 1,) * n)


def kernel_mass_check(lattice: Lattice, t: float, tail: float = DEFAULT_KERNEL_TAIL,
                      tol: float = 1e-12) -> IdentityReport:
    n = lattice.dimension
    radius = kernel_radius(n, t, tail)
    mass = exact_sum(kernel_window(n, t, radius).ravel())
    return IdentityReport(
        name=f"kernel-mass n={n} t={t}",
        lhs=mass,
        rhs=1.0,
        tolerance=tol,
        lhs_truncation_radius=radius,
        lhs_tail_bound=kernel_tail_mass(n, t, radius),
    )


# --- solutions --------------------------------------------------------------------

def _chunks(total: int, per: int) -> List[slice]:
    step = max(1, per)
    return [slice(i, min(i + step, total)) for i in range(0, total, step)]


def heat_solve_convolution(
    lattice: Lattice,
    u0: InitialData,
    t: float,
    radius: int,
    tail: float = DEFAULT_KERNEL_TAIL,
    threads: int = 1,
) -> HeatState:
    """
    u(k, t) = sum_j u0(k - j) K_t(j) on the index box of `radius`.

    The kernel is cut where its outside mass drops below `tail`; the error
    bound is sup|u0| times that mass.
    """
    n = lattice.dimension
    if u0.dimension != n:
        raise ValueError(f"initial data of rank {u0.dimension} on a rank-{n} lattice")
    if t < 0:
        raise ValueError("t must be >= 0")
    kr = kernel_radius(n, t, tail)
    offsets = box_indices(n, kr)
    weights = kernel_window(n, t, kr).ravel()
    keep = weights > 0
    offsets, weights = offsets[keep], weights[keep]
    queries = box_indices(n, radius)
    logger.debug(f"convolution: {queries.shape[0]} points, kernel radius {kr}, {weights.size} taps")

    def evaluate(sl: slice) -> np.ndarray:
        q = queries[sl]
        pts = (q[:, None, :] - offsets[None, :, :]).reshape(-1, n)
        vals = u0.evaluate(pts).reshape(q.shape[0], -1)
        return vals @ weights

    shards = _chunks(queries.shape[0], CHUNK_ENTRIES // max(1, weights.size))
    if threads > 1 and len(shards) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(evaluate, shards))
    else:
        parts = [evaluate(s) for s in shards]
    values = np.concatenate(parts).reshape((2 * radius + 1,) * n)
    return HeatState(lattice, radius, values, float(t), u0.sup_norm * kernel_tail_mass(n, t, kr))


def rk4_step_count(t: float, step: Optional[float], steps_per_unit: int = DEFAULT_STEPS_PER_UNIT) -> int:
    """ceil(t / step), or ceil(steps_per_unit * t) when no step is given."""
    if step is not None and step > 1.0:
        raise StepTooLarge(f"step {step} exceeds 1, the stability limit for spectrum in [-2, 0]", field="step")
    if step is not None and step <= 0.0:
        raise ValueError("step must be > 0")
    if step is None and steps_per_unit < 1:
        raise ValueError("steps_per_unit must be >= 1")
    return math.ceil(t / step) if step is not None else math.ceil(steps_per_unit * t)


def _rk4(f: np.ndarray, rhs, t: float, step: Optional[float], steps_per_unit: int) -> np.ndarray:
    count = rk4_step_count(t, step, steps_per_unit)
    if count == 0:
        return f
    h = t / count
    for _ in range(count):
        k1 = rhs(f)
        k2 = rhs(f + 0.5 * h * k1)
        k3 = rhs(f + 0.5 * h * k2)
        k4 = rhs(f + h * k3)
        f = f + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    logger.debug(f"rk4: {count} steps of {h:.4g}")
    return f


def _quotient_neighbours(data: PeriodicData) -> Tuple[np.ndarray, List[Tuple[np.ndarray, np.ndarray]]]:
    d = data.diagonal
    reps = np.stack(np.meshgrid(*(np.arange(v) for v in d), indexing="ij"), axis=-1).reshape(-1, d.size)
    nbrs = []
    for j in range(d.size):
        e = np.zeros(d.size, dtype=np.int64)
        e[j] = 1
        nbrs.append((data.codes(data.reduce(reps + e)), data.codes(data.reduce(reps - e))))
    return reps, nbrs


def heat_solve_ode_oracle(
    lattice: Lattice,
    u0: InitialData,
    t_final: float,
    box_radius: int,
    step: Optional[float] = None,
    steps_per_unit: int = DEFAULT_STEPS_PER_UNIT,
) -> HeatState:
    """
    Integrate du/dt = Delta u with classical RK4.

    Periodic data are integrated on one period with wrap-around neighbours
    (the quotient graph), which is exact up to time stepping; window data on
    the box of `box_radius` with zero values outside it.
    """
    n = lattice.dimension
    if u0.dimension != n:
        raise ValueError(f"initial data of rank {u0.dimension} on a rank-{n} lattice")
    if t_final < 0:
        raise ValueError("t_final must be >= 0")
    if isinstance(u0, PeriodicData):
        reps, nbrs = _quotient_neighbours(u0)
        f0 = u0.evaluate(reps).astype(complex)

        def rhs(f: np.ndarray) -> np.ndarray:
            return sum(f[p] + f[m] - 2 * f for p, m in nbrs) / (2 * n)

        f = _rk4(f0, rhs, t_final, step, steps_per_unit)
        if np.all(np.abs(f.imag) == 0):
            f = f.real
        values = f[u0.codes(u0.reduce(box_indices(n, box_radius)))]
        values = values.reshape((2 * box_radius + 1,) * n)
    else:
        f0 = u0.evaluate(box_indices(n, box_radius)).reshape((2 * box_radius + 1,) * n).astype(float)
        values = _rk4(f0, _box_laplacian, t_final, step, steps_per_unit)
    return HeatState(lattice, box_radius, values, float(t_final))


def oracle_check(lattice: Lattice, u0: InitialData, t: float, radius: int, step: Optional[float] = None,
                 tol: float = 1e-6, tail: float = DEFAULT_KERNEL_TAIL,
                 steps_per_unit: int = DEFAULT_STEPS_PER_UNIT) -> IdentityReport:
    """Largest pointwise gap between the convolution solution and the RK4 oracle on the box."""
    formula = heat_solve_convolution(lattice, u0, t, radius, tail)
    oracle = heat_solve_ode_oracle(lattice, u0, t, radius, step, steps_per_unit)
    gap = np.abs(formula.values - oracle.values)
    worst = np.unravel_index(int(np.argmax(gap)), gap.shape)
    return IdentityReport(
        name=f"formula-vs-rk4 n={lattice.dimension} t={t}",
        lhs=complex(formula.values[worst]),
        rhs=complex(oracle.values[worst]),
        tolerance=tol,
        lhs_tail_bound=formula.error_bound,
        extras={"worst_index": [int(v) - radius for v in worst], "box_radius": radius,
                "rk4_steps": rk4_step_count(t, step, steps_per_unit)},
    )


def code_heat_solution(code: LinearCode, x: Sequence[int], t: float, tol: float = 1e-8,
                       dual: Optional[LinearCode] = None) -> IdentityReport:
    """
    u(x, t) for u0 = 1_{rho^{-1}(C)} on Z^n:

        e^{-t} (|C|/m^n) sum_{c in C^perp} prod_j e^{(t/n) cos(2 pi c_j/m)} e^{2 pi i x_j c_j/m}

    compared with the truncated convolution; when rho(x) is in C the value is
    also checked against e^{-t} (|C|/m^n) cwe_{C^perp}(e^{(t/n) cos(2 pi l/m)}).
    """
    m, n = code.modulus, code.length
    dual = dual or dual_code(code)
    xs = np.array([int(v) for v in x], dtype=np.int64)
    d = dual.array()
    terms = np.exp((t / n) * np.sum(np.cos(2 * np.pi * d / m), axis=1) - t) \
        * np.exp(2j * np.pi * np.mod(d @ xs, m) / m)
    value = code.size / m ** n * exact_sum(terms)
    if abs(value.imag) >= 1e-12:
        raise BesselSumError(f"heat solution has imaginary part {value.imag:.3e}", field="code")

    u0 = coset_indicator(code)
    conv = heat_solve_convolution(identity_lattice(n), u0, t, int(np.max(np.abs(xs))) if n else 0)
    conv_value = conv.at(xs)
    extras: Dict[str, object] = {"formula": value.real, "convolution": conv_value}
    if tuple(int(v) % m for v in xs) in code:
        ell = np.arange(m)
        enum_value = math.exp(-t) * code.size / m ** n * cwe(dual).evaluate(np.exp((t / n) * np.cos(2 * np.pi * ell / m)))
        extras["weight_enumerator"] = enum_value
        extras["weight_enumerator_residual"] = abs(enum_value - value)
        if abs(enum_value - value) >= tol:
            raise BesselSumError(f"weight-enumerator form differs by {abs(enum_value - value):.3e}", field="code")
    return IdentityReport(
        name=f"code-heat m={m} n={n} x={tuple(int(v) for v in xs)} t={t}",
        lhs=value.real,
        rhs=conv_value,
        tolerance=tol,
        rhs_tail_bound=conv.error_bound,
        extras=extras,
    )


# --- eta probe ----------------------------------------------------------------------

def eta_heat_probe_limit(t: float) -> complex:
    """(1/sqrt 3) eta(i pi t)."""
    return eta(1j * math.pi * t) / math.sqrt(3.0)


def eta_heat_probe(L: int, t: float, tail: float = 1e-14) -> ValueReport:
    """
    L (12/L) (psi * K_{Z, 6 L^2 t})(0) with psi = (12/.) 1_{LZ}.

    psi is periodic under 12 L Z, so the value is a periodic-data convolution.
    The finite dual form (1/sqrt 12) sum'_{|j| <= 6L} (12/j) exp(6 L^2 t (cos(pi j/6L) - 1))
    is reported alongside.
    """
    if L < 1 or math.gcd(L, 12) != 1:
        raise NotCoprime(f"L = {L} must be a positive integer coprime to 12", field="L")
    if t <= 0:
        raise ValueError("t must be > 0")
    chi = kronecker_character(12)
    table = {(r,): chi(r) for r in range(0, 12 * L, L) if chi(r) != 0}
    psi = PeriodicData(new_lattice([[12 * L]]), table)
    s = 6 * L * L * t
    state = heat_solve_convolution(identity_lattice(1), psi, s, 0, tail / L)
    value = L * chi(L).real * state.at([0]).real

    j = np.arange(-6 * L + 1, 6 * L)
    dual_side = exact_sum(chi.table()[np.mod(j, 12)].real * np.exp(s * (np.cos(np.pi * j / (6 * L)) - 1.0)))
    dual_side /= math.sqrt(12.0)
    limit = eta_heat_probe_limit(t)
    return ValueReport(
        name=f"eta-probe L={L} t={t}",
        value=value,
        tail_bound=L * state.error_bound,
        tolerance=tail,
        extras={
            "dual_side": dual_side,
            "dual_residual": abs(dual_side - value),
            "limit": limit,
            "limit_residual": abs(value - limit),
        },
    )


# --- further checks -------------------------------------------------------------------

def plane_wave_check(gamma: Sequence[float], radius: int = 3, tol: float = 1e-12) -> IdentityReport:
    """
    On Z^n, Delta' = n Delta_{Z^n} has eigenfunction e^{2 pi i <x, g>} with
    eigenvalue sum_j (cos 2 pi g_j - 1); checked at every interior box point.
    """
    g = np.array([float(v) for v in gamma])
    n = g.size
    idx = box_indices(n, radius)
    f = np.exp(2j * np.pi * (idx @ g)).reshape((2 * radius + 1,) * n)
    state = HeatState(identity_lattice(n), radius, f, 0.0)
    eigen = float(np.sum(np.cos(2 * np.pi * g) - 1.0))
    worst, worst_ratio = None, eigen
    for k in box_indices(n, radius - 1):
        ratio = n * laplacian_apply(state, k) / state.at(k)
        if worst is None or abs(ratio - eigen) > abs(worst_ratio - eigen):
            worst, worst_ratio = k, ratio
    return IdentityReport(
        name=f"plane-wave g={tuple(g.tolist())}",
        lhs=worst_ratio,
        rhs=eigen,
        tolerance=tol,
        extras={"worst_index": [int(v) for v in worst] if worst is not None else []},
    )


def semigroup_check(lattice: Lattice, s: float, t: float, radius: int = 5, tol: float = 1e-8,
                    tail: float = DEFAULT_KERNEL_TAIL) -> IdentityReport:
    """(K_s * K_t)(y) = K_{s+t}(y) on the index box."""
    n = lattice.dimension
    rs = kernel_radius(n, s, tail)
    ks = WindowData(rs, kernel_window(n, s, rs))
    conv = heat_solve_convolution(lattice, ks, t, radius, tail)
    direct = kernel_window(n, s + t, radius)
    gap = np.abs(conv.values - direct)
    worst = np.unravel_index(int(np.argmax(gap)), gap.shape)
    return IdentityReport(
        name=f"semigroup n={n} s={s} t={t}",
        lhs=float(conv.values[worst]),
        rhs=float(direct[worst]),
        tolerance=tol,
        lhs_tail_bound=conv.error_bound + kernel_tail_mass(n, s, rs),
    )

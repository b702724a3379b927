#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Integer-order I-Bessel functions, the cosine-integral generalisation
I~_x(t) = (1/pi) int_0^pi exp(t cos s) cos(x s) ds, and the residue-class sums
A_y(t) = sum_{g in y + mZ} I_g(t).

All internal evaluations work with the scaled value exp(-|Re t|) I_x(t), so
tolerances refer to that scaled value.
"""

from __future__ import annotations
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Tuple, Union

import numpy as np
from scipy.special import gammaln, ive, roots_legendre

from besselsum.core.accumulate import Accumulator, exact_sum
from besselsum.core.errors import QuadratureNotConverged, TermBudgetExceeded
from besselsum.logging_setup import logger

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class BesselEvalConfig:
    """Evaluation knobs for I-Bessel values."""
    abs_tolerance: float = 1e-12
    max_series_terms: int = 10000
    quadrature_nodes: int = 16
    max_doublings: int = 10

    def __post_init__(self) -> None:
        if not self.abs_tolerance > 0:
            raise ValueError("abs_tolerance must be positive")
        if self.max_series_terms < 1:
            raise ValueError("max_series_terms must be a positive integer")
        if self.quadrature_nodes < 16:
            raise ValueError("quadrature_nodes must be at least 16")

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "BesselEvalConfig":
        """Build from the [bessel] and [tolerances] sections of a loaded config."""
        bessel = config.get("bessel", {})
        tol = config.get("tolerances", {})
        return cls(
            abs_tolerance=float(tol.get("abs_tolerance", cls.abs_tolerance)),
            max_series_terms=int(bessel.get("max_series_terms", cls.max_series_terms)),
            quadrature_nodes=int(bessel.get("quadrature_nodes", cls.quadrature_nodes)),
            max_doublings=int(bessel.get("max_doublings", cls.max_doublings)),
        )


DEFAULT_CONFIG = BesselEvalConfig()


def _series_scaled(order: int, x: float, cfg: BesselEvalConfig) -> float:
    """exp(-|x|) I_order(x) for real x from the power series, order >= 0."""
    a = abs(x)
    if a == 0.0:
        return 1.0 if order == 0 else 0.0
    q = 0.25 * a * a
    log_q = math.log(q)
    log_term = order * math.log(0.5 * a) - float(gammaln(order + 1)) - a
    acc = Accumulator()
    k = 0
    while True:
        term = math.exp(log_term)
        acc.add(term)
        ratio = q / ((k + 1) * (k + order + 1))
        if ratio < 1.0:
            tail = term * ratio / (1.0 - ratio)
            if tail <= cfg.abs_tolerance * 1e-3:
                break
        k += 1
        if k >= cfg.max_series_terms:
            raise TermBudgetExceeded(
                f"series for I_{order}({x}) not converged after {k} terms", field="max_series_terms"
            )
        log_term += log_q - math.log(k) - math.log(k + order)
    value = acc.value.real
    if x < 0 and order % 2 == 1:
        value = -value
    return value


@lru_cache(maxsize=32)
def _legendre_rule(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    x, w = roots_legendre(nodes)
    return np.asarray(x), np.asarray(w)


def _composite_rule(panels: int, nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes and weights on [0, pi]."""
    x, w = _legendre_rule(nodes)
    edges = np.linspace(0.0, math.pi, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    theta = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return theta, weights


def _quadrature_scaled(orders: np.ndarray, t: complex, cfg: BesselEvalConfig) -> np.ndarray:
    """
    (1/pi) int_0^pi exp(t cos s - |Re t|) cos(x s) ds for every x in `orders`.

    Panels double until two successive levels agree to abs_tolerance.
    """
    orders = np.abs(np.asarray(orders, dtype=float))
    shift = abs(t.real)
    previous = None
    panels = 1
    for level in range(cfg.max_doublings + 1):
        theta, weights = _composite_rule(panels, cfg.quadrature_nodes)
        envelope = np.exp(t * np.cos(theta) - shift)
        values = (np.cos(np.outer(orders, theta)) * envelope[None, :]) @ weights / math.pi
        if previous is not None:
            gap = float(np.max(np.abs(values - previous)))
            if gap <= cfg.abs_tolerance:
                logger.debug(f"quadrature converged with {panels} panels (gap {gap:.2e})")
                return values
        previous = values
        panels *= 2
    raise QuadratureNotConverged(
        f"quadrature for t={t} did not settle after {cfg.max_doublings} doublings", field="quadrature_nodes"
    )


def bessel_i_int(order: int, t: complex, cfg: BesselEvalConfig = DEFAULT_CONFIG) -> complex:
    """
    I_order(t) for integer order.

    Real t goes through the power series, complex t through quadrature.
    The order is reduced to |order| first, so I_{-x} = I_x holds exactly.
    """
    n = abs(int(order))
    t = complex(t)
    if t.imag == 0.0:
        x = t.real
        return complex(math.exp(abs(x)) * _series_scaled(n, x, cfg))
    scaled = _quadrature_scaled(np.array([n]), t, cfg)[0]
    return complex(math.exp(abs(t.real)) * scaled)


def bessel_i_scaled(order: ArrayLike, t: ArrayLike) -> ArrayLike:
    """exp(-t) I_order(t) for real t >= 0, safe far beyond the overflow range of I."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise ValueError("bessel_i_scaled needs t >= 0")
    result = ive(np.abs(np.asarray(order, dtype=float)), t_arr)
    return float(result) if np.ndim(result) == 0 else result


def bessel_i_tilde(order: float, t: complex, cfg: BesselEvalConfig = DEFAULT_CONFIG) -> complex:
    """(1/pi) int_0^pi exp(t cos s) cos(order s) ds for real order."""
    t = complex(t)
    scaled = _quadrature_scaled(np.array([abs(float(order))]), t, cfg)[0]
    return complex(math.exp(abs(t.real)) * scaled)


def bessel_i_table(max_order: int, t: complex, cfg: BesselEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Array of I_v(t) for v = 0..max_order."""
    t = complex(t)
    orders = np.arange(max_order + 1)
    if t.imag == 0.0:
        scale = math.exp(abs(t.real))
        return np.array([scale * _series_scaled(int(v), t.real, cfg) for v in orders], dtype=complex)
    return math.exp(abs(t.real)) * _quadrature_scaled(orders, t, cfg)


def a_function(y: int, t: complex, m: int) -> complex:
    """A_y(t) = (1/m) sum_{j<m} exp(t cos(2 pi j/m)) exp(2 pi i y j/m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    j = np.arange(m)
    r = int(y) % m
    terms = np.exp(complex(t) * np.cos(2 * np.pi * j / m) + 2j * np.pi * ((r * j) % m) / m)
    return exact_sum(terms) / m


def bessel_tail_bound(radius: int, s: float) -> float:
    """
    Bound on sum_{|v| > radius} exp(-s) I_v(s) for real s >= 0.

    Uses sqrt(s) exp(-s) I_v(s) <= (1 + |v|/s)^(-|v|/2) and integrates the
    right-hand side over v > radius.
    """
    if s <= 0.0:
        return 0.0
    if radius <= 0:
        return math.inf
    c = 0.5 * math.log1p(radius / s)
    log_bound = math.log(2.0) - c * radius - math.log(c) - 0.5 * math.log(s)
    return math.exp(log_bound) if log_bound < 700 else math.inf


def tail_radius(s: float, tol: float, max_radius: int = 100000) -> int:
    """Smallest radius R with bessel_tail_bound(R, s) <= tol, or -1 beyond max_radius."""
    if s <= 0.0:
        return 0
    lo, hi = 0, 1
    while bessel_tail_bound(hi, s) > tol:
        lo, hi = hi, hi * 2
        if hi > max_radius:
            if bessel_tail_bound(max_radius, s) > tol:
                return -1
            hi = max_radius
            break
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if bessel_tail_bound(mid, s) > tol:
            lo = mid
        else:
            hi = mid
    return hi

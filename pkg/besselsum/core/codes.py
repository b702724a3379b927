#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Linear codes over Z/mZ, complete weight enumerators and the Bessel-sum
forms of the MacWilliams identity.

Codes are kept extensionally (every codeword enumerated); caps guard the
enumeration size.
"""

from __future__ import annotations
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from besselsum.core.accumulate import exact_sum
from besselsum.core.errors import BesselSumError, EnumerationTooLarge
from besselsum.core.lattice import (
    Lattice,
    dual_lattice,
    lattice_from_generators,
    same_lattice,
    scaled_lattice,
    smith_form,
)
from besselsum.core.lattice_sums import lhs_bessel_sum, trivial_family
from besselsum.core.reports import IdentityReport
from besselsum.core.special_functions import DEFAULT_CONFIG, BesselEvalConfig, a_function
from besselsum.logging_setup import logger

DEFAULT_ENUMERATION_CAP = 10 ** 6
DEFAULT_BRUTE_FORCE_CAP = 10 ** 6

Word = Tuple[int, ...]


@dataclass(frozen=True)
class LinearCode:
    """Submodule of (Z/mZ)^n; `words` is sorted lexicographically."""
    modulus: int
    length: int
    generators: Tuple[Word, ...]
    words: Tuple[Word, ...]

    @property
    def size(self) -> int:
        return len(self.words)

    def array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64).reshape(len(self.words), self.length)

    def __contains__(self, word: Sequence[int]) -> bool:
        return tuple(int(v) % self.modulus for v in word) in set(self.words)

    def coset(self, x: Sequence[int]) -> np.ndarray:
        """Words of rho(x) + C."""
        shift = np.array([int(v) for v in x], dtype=np.int64)
        return np.mod(self.array() + shift[None, :], self.modulus)


def _check_vectors(m: int, n: int, vectors: Iterable[Sequence[int]], name: str) -> List[Word]:
    out = []
    for i, v in enumerate(vectors):
        if len(v) != n:
            raise ValueError(f"{name}[{i}] has length {len(v)}, expected {n}")
        out.append(tuple(int(x) for x in v))
    return out


def _span(m: int, n: int, generators: Sequence[Word], cap: int) -> np.ndarray:
    """Z/mZ-span by successive sumsets with the cyclic subgroup of each generator."""
    words = np.zeros((1, n), dtype=np.int64)
    for g in generators:
        gv = np.mod(np.array(g, dtype=np.int64), m)
        multiples = np.mod(np.arange(m)[:, None] * gv[None, :], m)
        multiples = np.unique(multiples, axis=0)
        if words.shape[0] * multiples.shape[0] > cap * m:
            raise EnumerationTooLarge(f"span exceeds enumeration cap {cap}", field="enumeration_cap")
        words = np.unique(np.mod(words[:, None, :] + multiples[None, :, :], m).reshape(-1, n), axis=0)
        if words.shape[0] > cap:
            raise EnumerationTooLarge(f"span has more than {cap} codewords", field="enumeration_cap")
    return words


def _as_code(m: int, n: int, generators: Sequence[Word], words: np.ndarray) -> LinearCode:
    words = np.unique(words.reshape(-1, n), axis=0)
    return LinearCode(m, n, tuple(generators), tuple(tuple(int(v) for v in row) for row in words))


def code_from_generators(m: int, n: int, generators: Sequence[Sequence[int]],
                         cap: int = DEFAULT_ENUMERATION_CAP) -> LinearCode:
    """The code spanned by `generators` (entries in [0, m))."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if n < 1:
        raise ValueError("length must be >= 1")
    gens = _check_vectors(m, n, generators, "generators")
    for i, g in enumerate(gens):
        if any(v < 0 or v >= m for v in g):
            raise ValueError(f"generators[{i}] has entries outside [0, {m})")
    words = _span(m, n, gens, cap)
    logger.debug(f"code over Z/{m}Z of length {n}: {words.shape[0]} codewords")
    return _as_code(m, n, gens, words)


def kernel_generators(m: int, n: int, rows: Sequence[Sequence[int]]) -> List[Word]:
    """
    Generators of {c in (Z/mZ)^n : H c = 0 mod m} from the Smith form S H T = D.

    With c = T y the condition becomes d_i y_i = 0 mod m, so y_i runs over
    multiples of m / gcd(d_i, m).
    """
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    d, _, t = smith_form([[int(v) for v in r] for r in rows])
    gens = []
    for i in range(n):
        di = d[i] if i < len(d) else 0
        factor = m // math.gcd(di, m)
        g = tuple((factor * t[r][i]) % m for r in range(n))
        if any(g):
            gens.append(g)
    return gens


def _all_vectors(m: int, n: int) -> np.ndarray:
    return np.indices((m,) * n).reshape(n, -1).T.astype(np.int64)


def _annihilator(m: int, n: int, rows: Sequence[Word], brute_cap: int, cap: int) -> Tuple[List[Word], np.ndarray]:
    gens = kernel_generators(m, n, rows)
    if m ** n <= brute_cap:
        space = _all_vectors(m, n)
        if rows:
            h = np.array(rows, dtype=np.int64)
            space = space[np.all(np.mod(space @ h.T, m) == 0, axis=1)]
        if space.shape[0] > cap:
            raise EnumerationTooLarge(f"kernel has more than {cap} codewords", field="enumeration_cap")
        return gens, space
    return gens, _span(m, n, gens, cap)


def dual_code(code: LinearCode, brute_cap: int = DEFAULT_BRUTE_FORCE_CAP,
              cap: int = DEFAULT_ENUMERATION_CAP) -> LinearCode:
    """C^perp = {x : x . c = 0 for all c in C}; checks |C| |C^perp| = m^n."""
    m, n = code.modulus, code.length
    rows = [g for g in code.generators if any(g)]
    gens, words = _annihilator(m, n, rows, brute_cap, cap)
    dual = _as_code(m, n, gens, words)
    if code.size * dual.size != m ** n:
        raise BesselSumError(f"|C| |C^perp| = {code.size * dual.size} differs from m^n = {m ** n}", field="code")
    return dual


def parity_check_code(m: int, h: Sequence[Sequence[int]], n: Optional[int] = None,
                      brute_cap: int = DEFAULT_BRUTE_FORCE_CAP, cap: int = DEFAULT_ENUMERATION_CAP) -> LinearCode:
    """C = {c : rho(H) c^T = 0}."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    length = n if n is not None else len(h[0])
    rows = [tuple(int(v) % m for v in r) for r in _check_vectors(m, length, h, "parity_check")]
    gens, words = _annihilator(m, length, [r for r in rows if any(r)], brute_cap, cap)
    return _as_code(m, length, gens, words)


def preimage_lattice(code: LinearCode) -> Lattice:
    """rho^{-1}(C): spanned by the generators and m e_i; covolume m^n / |C|."""
    m, n = code.modulus, code.length
    rows = [list(g) for g in code.generators] + [[m if i == j else 0 for j in range(n)] for i in range(n)]
    return lattice_from_generators(rows)


def check_preimage_duality(code: LinearCode, dual: Optional[LinearCode] = None) -> bool:
    """rho^{-1}(C^perp) = m (rho^{-1}(C))^* as point sets."""
    dual = dual or dual_code(code)
    target = scaled_lattice(dual_lattice(preimage_lattice(code)), code.modulus)
    return same_lattice(preimage_lattice(dual), target)


# --- weight enumerators ----------------------------------------------------------

@dataclass(frozen=True)
class WeightEnumeratorPolynomial:
    """Sparse homogeneous polynomial: exponent vector (n_0, ..., n_{k-1}) -> count."""
    modulus: int
    degree: int
    coefficients: Dict[Tuple[int, ...], int]

    @property
    def variables(self) -> int:
        return len(next(iter(self.coefficients))) if self.coefficients else self.modulus

    def total(self) -> int:
        return sum(self.coefficients.values())

    def is_homogeneous(self) -> bool:
        return all(sum(e) == self.degree for e in self.coefficients)

    def evaluate(self, values: Sequence[complex]) -> complex:
        vals = np.array([complex(v) for v in values])
        if vals.size != self.variables:
            raise ValueError(f"{self.variables} values expected, got {vals.size}")
        terms = [c * np.prod(vals ** np.array(e)) for e, c in sorted(self.coefficients.items())]
        return exact_sum(terms)

    def hamming(self) -> "WeightEnumeratorPolynomial":
        """W(X, Y) = cwe(X, Y, ..., Y); exponents (n - wt, wt)."""
        out: Dict[Tuple[int, ...], int] = {}
        for e, c in self.coefficients.items():
            key = (e[0], sum(e[1:]))
            out[key] = out.get(key, 0) + c
        return WeightEnumeratorPolynomial(2, self.degree, out)

    def to_sympy(self, symbols: Sequence[sympy.Symbol]) -> sympy.Expr:
        return sympy.Add(*[c * sympy.Mul(*[s ** k for s, k in zip(symbols, e)])
                           for e, c in self.coefficients.items()])

    def as_dict(self) -> Dict[str, int]:
        return {",".join(map(str, e)): c for e, c in sorted(self.coefficients.items())}


def cwe(words: Union[LinearCode, np.ndarray], modulus: Optional[int] = None) -> WeightEnumeratorPolynomial:
    """Complete weight enumerator of a code or of an explicit set of words."""
    if isinstance(words, LinearCode):
        modulus, arr = words.modulus, words.array()
    else:
        arr = np.asarray(words, dtype=np.int64)
        if modulus is None:
            raise ValueError("modulus is required for a raw word array")
    n = arr.shape[1]
    counts = np.stack([np.sum(arr == j, axis=1) for j in range(modulus)], axis=1)
    keys, freq = np.unique(counts, axis=0, return_counts=True)
    coeffs = {tuple(int(v) for v in k): int(f) for k, f in zip(keys, freq)}
    return WeightEnumeratorPolynomial(modulus, n, coeffs)


def coset_cwe(code: LinearCode, x: Sequence[int]) -> WeightEnumeratorPolynomial:
    return cwe(code.coset(x), code.modulus)


def hamming_we(words: Union[LinearCode, np.ndarray], modulus: Optional[int] = None) -> WeightEnumeratorPolynomial:
    return cwe(words, modulus).hamming()


# --- identities -------------------------------------------------------------------

def _a_values(m: int, t: complex, scale: float = 1.0) -> List[complex]:
    return [scale * a_function(i, t, m) for i in range(m)]


def verify_cwe_bessel(code: LinearCode, x: Sequence[int], t: Union[complex, Sequence[complex]],
                      tol: float = 1e-9, cfg: BesselEvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """
    sum_{g in x + rho^{-1}(C)} prod_j I_{g_j}(t_j) against
    sum_{c in rho(x)+C} prod_j A_{c_j}(t_j), and against cwe_{rho(x)+C}(A_0(t), ...) for scalar t.
    """
    m, n = code.modulus, code.length
    ts = [complex(v) for v in t] if isinstance(t, (list, tuple, np.ndarray)) else [complex(t)] * n
    if len(ts) != n or len(x) != n:
        raise ValueError("x and t must have one entry per coordinate")
    lhs = lhs_bessel_sum(preimage_lattice(code), trivial_family(n), x, [0] * n, ts, tol, cfg)

    coset = code.coset(x)
    tables = np.array([_a_values(m, tj) for tj in ts])
    per_word = np.prod(tables[np.arange(n)[None, :], coset], axis=1)
    general = exact_sum(per_word)
    extras = {"general_t_rhs": general}
    rhs = general
    if all(tj == ts[0] for tj in ts):
        rhs = coset_cwe(code, x).evaluate(_a_values(m, ts[0]))
        extras["general_t_residual"] = abs(lhs.value - general)
    return IdentityReport(
        name=f"cwe-bessel m={m} n={n}",
        lhs=lhs.value,
        rhs=rhs,
        tolerance=tol,
        lhs_truncation_radius=lhs.radius,
        lhs_tail_bound=lhs.tail_bound,
        extras=extras,
    )


def verify_macwilliams_bessel(code: LinearCode, x: Sequence[int], t: complex, tol: float = 1e-9,
                              dual: Optional[LinearCode] = None) -> IdentityReport:
    """
    cwe_{rho(x)+C}(m A_0(t), ..., m A_{m-1}(t))
      = |C| sum_{c in C^perp} prod_j e^{t cos(2 pi c_j/m)} e^{2 pi i x_j c_j/m}.

    For constant x = (x0, ..., x0) the right side is also evaluated as
    |C| cwe_{C^perp}(z_0, ..., z_{m-1}), z_l = e^{t cos(2 pi l/m)} e^{2 pi i x0 l/m}.
    """
    m, n = code.modulus, code.length
    t = complex(t)
    dual = dual or dual_code(code)
    xs = np.array([int(v) for v in x], dtype=np.int64)
    lhs = coset_cwe(code, xs).evaluate(_a_values(m, t, float(m)))

    d = dual.array()
    expo = t * np.sum(np.cos(2 * np.pi * d / m), axis=1)
    phase = np.exp(2j * np.pi * np.mod(d @ xs, m) / m)
    rhs = code.size * exact_sum(np.exp(expo) * phase)
    extras = {"dual_size": dual.size, "coset_in_code": tuple(int(v) % m for v in xs) in code}
    if np.all(xs == xs[0]):
        ell = np.arange(m)
        z = np.exp(t * np.cos(2 * np.pi * ell / m) + 2j * np.pi * np.mod(int(xs[0]) * ell, m) / m)
        diag = code.size * cwe(dual).evaluate(z)
        extras["diagonal_rhs"] = diag
        extras["diagonal_residual"] = abs(lhs - diag)
    return IdentityReport(name=f"macwilliams-bessel m={m} n={n}", lhs=lhs, rhs=rhs, tolerance=tol, extras=extras)


def verify_wood_identity(code: LinearCode, x0: int, values: Sequence[complex], tol: float = 1e-9,
                         dual: Optional[LinearCode] = None) -> IdentityReport:
    """
    cwe_{iota(x0)+C}(sum_l X_l, sum_l zeta^l X_l, ..., sum_l zeta^{(m-1) l} X_l)
      = |C| cwe_{C^perp}(X_0, X_1 zeta^{x0}, ..., X_{m-1} zeta^{(m-1) x0}),  zeta = e^{2 pi i/m}.
    """
    m, n = code.modulus, code.length
    X = np.array([complex(v) for v in values])
    if X.size != m:
        raise ValueError(f"{m} values expected")
    dual = dual or dual_code(code)
    ell = np.arange(m)
    transformed = [exact_sum(np.exp(2j * np.pi * np.mod(j * ell, m) / m) * X) for j in range(m)]
    lhs = coset_cwe(code, [x0] * n).evaluate(transformed)
    twisted = X * np.exp(2j * np.pi * np.mod(int(x0) * ell, m) / m)
    rhs = code.size * cwe(dual).evaluate(twisted)
    return IdentityReport(name=f"wood-identity m={m} n={n} x0={x0}", lhs=lhs, rhs=rhs, tolerance=tol)


def binary_macwilliams_exact(code: LinearCode, dual: Optional[LinearCode] = None) -> bool:
    """W_{C^perp}(X, Y) = 2^{-k} W_C(X + Y, X - Y) as exact polynomials, binary codes only."""
    if code.modulus != 2:
        raise ValueError("the exact binary identity needs m = 2")
    dual = dual or dual_code(code)
    X, Y = sympy.symbols("X Y")
    w_c = hamming_we(code).to_sympy([X, Y])
    w_dual = hamming_we(dual).to_sympy([X, Y])
    transformed = sympy.expand(w_c.subs({X: X + Y, Y: X - Y}, simultaneous=True) / code.size)
    return sympy.expand(w_dual - transformed) == 0

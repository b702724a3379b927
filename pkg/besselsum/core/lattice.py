#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exact lattice arithmetic for full-rank lattices Gamma = Z^n A.

Everything that decides membership or box boundaries is done with exact
rationals (`fractions.Fraction`); normal forms come from sympy's DomainMatrix
routines over ZZ.
"""

from __future__ import annotations
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from besselsum.core.errors import NotIntegral, SingularBasis, TruncationFailure
from besselsum.logging_setup import logger

RowMatrix = Tuple[Tuple[Fraction, ...], ...]
IntMatrix = List[List[int]]

MAX_BOX_CANDIDATES = 10 ** 7


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return Fraction(repr(value))
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value))


def _lcm_denominators(values: Iterable[Fraction]) -> int:
    return math.lcm(1, *(v.denominator for v in values))


@dataclass(frozen=True)
class Lattice:
    """Lattice spanned by the rows of `basis`."""
    basis: RowMatrix
    inverse: RowMatrix = field(init=False, repr=False, compare=False)
    determinant: Fraction = field(init=False, repr=False, compare=False)
    gram: RowMatrix = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = Matrix(self.basis)
        det = m.det()
        if det == 0:
            raise SingularBasis("basis matrix has zero determinant", field="lattice")
        inv = m.inv()
        n = self.dimension
        object.__setattr__(self, "determinant", _as_fraction(det))
        object.__setattr__(
            self, "inverse", tuple(tuple(_as_fraction(inv[i, j]) for j in range(n)) for i in range(n))
        )
        object.__setattr__(
            self,
            "gram",
            tuple(tuple(sum(self.basis[i][k] * self.basis[j][k] for k in range(n)) for j in range(n)) for i in range(n)),
        )

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def covolume(self) -> Fraction:
        return abs(self.determinant)

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for row in self.basis for v in row)

    def integer_basis(self) -> IntMatrix:
        if not self.is_integral:
            raise NotIntegral("lattice basis has non-integer entries", field="lattice")
        return [[int(v) for v in row] for row in self.basis]

    def basis_array(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.basis])

    def coordinates(self, v: Sequence) -> Tuple[Fraction, ...]:
        """Exact coefficients c with v = c A."""
        vv = [_as_fraction(x) for x in v]
        n = self.dimension
        return tuple(sum(vv[i] * self.inverse[i][j] for i in range(n)) for j in range(n))

    def point(self, k: Sequence[int]) -> Tuple[Fraction, ...]:
        n = self.dimension
        return tuple(sum(Fraction(int(k[i])) * self.basis[i][j] for i in range(n)) for j in range(n))


def new_lattice(rows: Sequence[Sequence]) -> Lattice:
    """Build a lattice from a square basis; entries may be ints, Fractions or "p/q" strings."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise SingularBasis("basis matrix must be square and non-empty", field="lattice")
    return Lattice(tuple(tuple(_as_fraction(v) for v in r) for r in rows))


def identity_lattice(n: int) -> Lattice:
    return new_lattice([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def dual_lattice(lattice: Lattice) -> Lattice:
    """Gamma* with basis (A^{-1})^T."""
    n = lattice.dimension
    return Lattice(tuple(tuple(lattice.inverse[j][i] for j in range(n)) for i in range(n)))


def scaled_lattice(lattice: Lattice, factor) -> Lattice:
    f = _as_fraction(factor)
    return Lattice(tuple(tuple(f * v for v in row) for row in lattice.basis))


def contains(lattice: Lattice, v: Sequence) -> bool:
    """True iff v A^{-1} is an integer vector (exact)."""
    return all(c.denominator == 1 for c in lattice.coordinates(v))


def same_lattice(a: Lattice, b: Lattice) -> bool:
    """Equal point sets: each basis lies in the other lattice."""
    return all(contains(b, row) for row in a.basis) and all(contains(a, row) for row in b.basis)


# --- normal forms ---------------------------------------------------------

def _to_domain(rows: IntMatrix) -> DomainMatrix:
    return DomainMatrix([[ZZ(int(v)) for v in r] for r in rows], (len(rows), len(rows[0])), ZZ)


def row_hermite_form(generators: IntMatrix) -> IntMatrix:
    """
    Lower-triangular row basis of the Z-span of integer row vectors.

    sympy's HNF is column-style, so the row span of G is handled as the column
    span of G^T; the result rows have positive diagonal entries and entries
    left of the diagonal reduced modulo it.
    """
    if not generators:
        raise SingularBasis("no generators", field="lattice")
    n = len(generators[0])
    cols = [[generators[r][c] for r in range(len(generators))] for c in range(n)]
    w = hermite_normal_form(_to_domain(cols)).to_Matrix()
    if w.shape[1] != n:
        raise SingularBasis(f"generators span a rank-{w.shape[1]} lattice, need rank {n}", field="lattice")
    return [[int(w[j, i]) for j in range(n)] for i in range(n)]


def hermite_basis(lattice: Lattice) -> IntMatrix:
    return row_hermite_form(lattice.integer_basis())


def lattice_from_generators(generators: IntMatrix) -> Lattice:
    return new_lattice(row_hermite_form(generators))


def _to_int_rows(m: DomainMatrix) -> IntMatrix:
    return [[int(v) for v in row] for row in m.to_Matrix().tolist()]


def smith_form(rows: IntMatrix) -> Tuple[List[int], IntMatrix, IntMatrix]:
    """Invariant factors d and unimodular S, T with S M T = diag(d)."""
    snf, s, t = smith_normal_decomp(_to_domain(rows))
    d_mat = snf.to_Matrix()
    k = min(d_mat.shape)
    diag = [int(d_mat[i, i]) for i in range(k)]
    return diag, _to_int_rows(s), _to_int_rows(t)


def reduce_mod(lattice: Lattice, v: Sequence[int], hnf: Optional[IntMatrix] = None) -> Tuple[int, ...]:
    """Canonical representative of v + Gamma inside the HNF box prod [0, h_ii)."""
    h = hnf if hnf is not None else hermite_basis(lattice)
    w = [int(x) for x in v]
    for i in range(len(h) - 1, -1, -1):
        q = w[i] // h[i][i]
        if q:
            for j in range(i + 1):
                w[j] -= q * h[i][j]
    return tuple(w)


def coset_representatives(lattice: Lattice) -> List[Tuple[int, ...]]:
    """|det A| pairwise inequivalent vectors covering Z^n / Gamma."""
    h = hermite_basis(lattice)
    reps = list(itertools.product(*(range(h[i][i]) for i in range(len(h)))))
    logger.debug(f"{len(reps)} coset representatives from HNF diagonal {[h[i][i] for i in range(len(h))]}")
    return reps


# --- box enumeration --------------------------------------------------------

@dataclass(frozen=True)
class BoxPoints:
    """
    Lattice points p = k B with |p_j - c_j| <= h_j, in lexicographic order of k.

    Points are held as integer numerators over a common denominator so that
    boundary membership is an integer comparison.
    """
    indices: np.ndarray
    numerators: np.ndarray
    denominator: int
    offsets: np.ndarray
    half_widths: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return int(self.indices.shape[0])

    def as_float(self) -> np.ndarray:
        return self.numerators / self.denominator

    def point(self, i: int) -> Tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self.denominator) for v in self.numerators[i])


def enumerate_box(
    lattice: Lattice,
    center: Optional[Sequence] = None,
    half_widths: Optional[Sequence] = None,
    max_candidates: int = MAX_BOX_CANDIDATES,
) -> BoxPoints:
    """
    Every lattice point in the closed box prod [c_j - h_j, c_j + h_j].

    Coefficient ranges come from k = p B^{-1}; candidates are filtered with
    exact integer comparisons. weights[i] is prod_j (1/2 if the point sits on
    face j else 1). Raises TruncationFailure when the candidate grid
    would exceed `max_candidates` points.
    """
    n = lattice.dimension
    c = [_as_fraction(v) for v in (center if center is not None else [0] * n)]
    h = [_as_fraction(v) for v in (half_widths if half_widths is not None else [Fraction(1, 2)] * n)]
    if any(v < 0 for v in h):
        raise ValueError("half widths must be non-negative")
    inv = lattice.inverse
    ranges = []
    for i in range(n):
        mid = sum(c[j] * inv[j][i] for j in range(n))
        spread = sum(h[j] * abs(inv[j][i]) for j in range(n))
        ranges.append(np.arange(math.floor(mid - spread), math.ceil(mid + spread) + 1, dtype=np.int64))
    candidates = math.prod(r.size for r in ranges)
    if candidates > max_candidates:
        raise TruncationFailure(
            f"box needs {candidates} candidate points, more than the cap of {max_candidates}", field="lattice")

    d_basis = _lcm_denominators(v for row in lattice.basis for v in row)
    denom = math.lcm(d_basis, _lcm_denominators(c + h))
    int_basis = np.array([[int(v * denom) for v in row] for row in lattice.basis], dtype=np.int64)
    c_num = np.array([int(v * denom) for v in c], dtype=np.int64)
    h_num = np.array([int(v * denom) for v in h], dtype=np.int64)

    grid = np.stack(np.meshgrid(*ranges, indexing="ij"), axis=-1).reshape(-1, n)
    nums = grid @ int_basis
    off = np.abs(nums - c_num[None, :])
    keep = np.all(off <= h_num[None, :], axis=1)
    grid, nums, off = grid[keep], nums[keep], off[keep]
    on_face = off == h_num[None, :]
    weights = np.power(0.5, on_face.sum(axis=1))
    logger.debug(f"box enumeration: {keep.size} candidates, {int(keep.sum())} inside")
    return BoxPoints(
        indices=grid,
        numerators=nums,
        denominator=denom,
        offsets=off,
        half_widths=h_num,
        weights=weights,
    )


@dataclass(frozen=True)
class WeightedDualPoint:
    coordinates: Tuple[Fraction, ...]
    weight: Fraction
    integer_preimage: Tuple[int, ...]


def dual_points_in_box(
    lattice: Lattice,
    center: Optional[Sequence] = None,
    half_widths: Optional[Sequence] = None,
) -> List[WeightedDualPoint]:
    """Points of Gamma* in [c - h, c + h] (default [-1/2, 1/2]^n) with boundary weights."""
    lattice.integer_basis()  # NotIntegral otherwise
    box = enumerate_box(dual_lattice(lattice), center, half_widths)
    out = []
    for i in range(len(box)):
        faces = int(np.sum(box.offsets[i] == box.half_widths))
        out.append(
            WeightedDualPoint(
                coordinates=box.point(i),
                weight=Fraction(1, 2 ** faces),
                integer_preimage=tuple(int(v) for v in box.indices[i]),
            )
        )
    return out

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Dirichlet characters modulo q, stored as value tables.
"""

from __future__ import annotations
import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import divisors, factorint, primitive_root
from sympy.functions.combinatorial.numbers import reduced_totient
from sympy.ntheory import jacobi_symbol

from besselsum.core.accumulate import exact_sum
from besselsum.core.errors import NotMultiplicative, NotRootOfUnity, UnsupportedModulus, WrongSupport
from besselsum.logging_setup import logger

VALUE_TOL = 1e-12


@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod q; values[a] is chi(a) for a = 0..q-1."""
    modulus: int
    values: Tuple[complex, ...]
    label: str = ""

    def __call__(self, a: int) -> complex:
        return self.values[int(a) % self.modulus]

    def conjugate(self) -> "DirichletCharacter":
        label = f"conj({self.label})" if self.label else ""
        return DirichletCharacter(self.modulus, tuple(v.conjugate() for v in self.values), label)

    def table(self) -> np.ndarray:
        return np.array(self.values, dtype=complex)

    @property
    def is_real(self) -> bool:
        return all(abs(v.imag) <= VALUE_TOL for v in self.values)


@dataclass(frozen=True)
class DirichletCharacterFamily:
    """n characters sharing one modulus; acts on Z^n by chi(a) = prod_j chi_j(a_j)."""
    modulus: int
    components: Tuple[DirichletCharacter, ...]

    def __post_init__(self) -> None:
        if any(c.modulus != self.modulus for c in self.components):
            raise UnsupportedModulus("all characters in a family must share one modulus", field="chi")

    @property
    def dimension(self) -> int:
        return len(self.components)

    def conjugate(self) -> "DirichletCharacterFamily":
        return DirichletCharacterFamily(self.modulus, tuple(c.conjugate() for c in self.components))

    def tables(self) -> np.ndarray:
        """(n, q) array of value tables, for vectorised lookups."""
        return np.array([c.values for c in self.components], dtype=complex)

    def evaluate_many(self, residues: np.ndarray) -> np.ndarray:
        """chi(a) for each row a of an integer array."""
        tabs = self.tables()
        idx = np.mod(residues, self.modulus)
        out = np.ones(idx.shape[0], dtype=complex)
        for j in range(self.dimension):
            out *= tabs[j][idx[:, j]]
        return out


def new_family(components: Sequence[DirichletCharacter]) -> DirichletCharacterFamily:
    comps = tuple(components)
    if not comps:
        raise UnsupportedModulus("a character family needs at least one component", field="chi")
    return DirichletCharacterFamily(comps[0].modulus, comps)


def character_from_table(q: int, values: Sequence[complex], label: str = "") -> DirichletCharacter:
    """Validate a value table and wrap it as a character."""
    if q < 1:
        raise UnsupportedModulus(f"modulus must be >= 1, got {q}", field="modulus")
    vals = tuple(complex(v) for v in values)
    if len(vals) != q:
        raise WrongSupport(f"expected {q} values, got {len(vals)}", field="values")
    units = [a for a in range(q) if math.gcd(a, q) == 1]
    for a in range(q):
        is_unit = math.gcd(a, q) == 1
        if is_unit and abs(vals[a]) <= VALUE_TOL:
            raise WrongSupport(f"chi({a}) vanishes although gcd({a},{q}) = 1", field=f"values[{a}]")
        if not is_unit and abs(vals[a]) > VALUE_TOL:
            raise WrongSupport(f"chi({a}) must vanish since gcd({a},{q}) != 1", field=f"values[{a}]")
    exponent = int(reduced_totient(q)) if q > 1 else 1
    for a in units:
        v = vals[a]
        if abs(abs(v) - 1.0) > VALUE_TOL or abs(v ** exponent - 1.0) > 1e-10:
            raise NotRootOfUnity(f"chi({a}) = {v} is not a root of unity of order dividing {exponent}",
                                 field=f"values[{a}]")
    if abs(vals[1 % q] - 1.0) > VALUE_TOL:
        raise NotMultiplicative("chi(1) must equal 1", field="values[1]")
    for a, b in itertools.product(units, repeat=2):
        if abs(vals[(a * b) % q] - vals[a] * vals[b]) > 1e-10:
            raise NotMultiplicative(f"chi({a}*{b}) != chi({a}) chi({b})", field=f"values[{(a * b) % q}]")
    return DirichletCharacter(q, vals, label)


def principal_character(q: int) -> DirichletCharacter:
    return character_from_table(q, [1 if math.gcd(a, q) == 1 else 0 for a in range(q)], label=f"principal:{q}")


def _kronecker(d: int, a: int) -> int:
    """Kronecker symbol (d/a) for a >= 1."""
    if math.gcd(d, a) != 1:
        return 0
    result = 1
    while a % 2 == 0:
        a //= 2
        result *= 1 if d % 8 in (1, 7) else -1
    if a > 1:
        result *= jacobi_symbol(d % a, a)
    return result


def kronecker_character(d: int) -> DirichletCharacter:
    """The real character a -> (d/a) as a table mod |d|; d must be a discriminant."""
    if abs(d) <= 1 or d % 4 not in (0, 1):
        raise UnsupportedModulus(f"kronecker:{d} needs d = 0 or 1 mod 4 and |d| > 1", field="chi")
    q = abs(d)
    values = [0] + [_kronecker(d, a) for a in range(1, q)]
    return character_from_table(q, values, label=f"kronecker:{d}")


def gauss_sum(chi: DirichletCharacter) -> complex:
    """G(chi) = sum_a chi(a) e^{2 pi i a / q}; 1 for q = 1."""
    if chi.modulus == 1:
        return 1.0 + 0.0j
    return character_dft(chi, 1)


def character_dft(chi: DirichletCharacter, m: int) -> complex:
    """sum_a chi(a) e^{2 pi i a m / q}."""
    q = chi.modulus
    a = np.arange(q)
    return exact_sum(chi.table() * np.exp(2j * np.pi * ((a * int(m)) % q) / q))


def conductor(chi: DirichletCharacter) -> int:
    """Smallest f | q such that chi is trivial on units congruent to 1 mod f."""
    q = chi.modulus
    units = [a for a in range(q) if math.gcd(a, q) == 1]
    for f in divisors(q):
        if all(abs(chi(a) - 1.0) <= 1e-10 for a in units if a % f == 1 % f):
            return int(f)
    return q


def is_primitive(chi: DirichletCharacter) -> bool:
    return conductor(chi) == chi.modulus


def family_eval(family: DirichletCharacterFamily, a: Sequence[int]) -> complex:
    if len(a) != family.dimension:
        raise ValueError(f"vector of length {len(a)} for a family of {family.dimension} characters")
    out = 1.0 + 0.0j
    for chi, v in zip(family.components, a):
        out *= chi(v)
    return out


def family_gauss_product(family: DirichletCharacterFamily) -> complex:
    out = 1.0 + 0.0j
    for chi in family.components:
        out *= gauss_sum(chi)
    return out


def _cyclic_factors(q: int) -> List[Tuple[int, int, int]]:
    """(prime-power modulus M, generator g, order) so that (Z/qZ)^x = prod <g>."""
    factors = []
    for p, e in sorted(factorint(q).items()):
        pe = p ** e
        if p == 2:
            if e == 2:
                factors.append((pe, 3, 2))
            elif e >= 3:
                factors.append((pe, pe - 1, 2))
                factors.append((pe, 5, 2 ** (e - 2)))
        else:
            factors.append((pe, int(primitive_root(pe)), pe // p * (p - 1)))
    return factors


def all_characters(q: int) -> List[DirichletCharacter]:
    """Every character mod q (phi(q) of them), built from a cyclic decomposition of the unit group."""
    if q == 1:
        return [character_from_table(1, [1], label="principal:1")]
    factors = _cyclic_factors(q)
    # discrete logs of each unit along the generators, part by prime power
    logs: Dict[int, Tuple[int, ...]] = {}
    parts: Dict[int, Dict[int, Tuple[int, ...]]] = {}
    for pe in sorted({f[0] for f in factors}):
        gens = [(g, o) for (m, g, o) in factors if m == pe]
        table: Dict[int, Tuple[int, ...]] = {}
        for exps in itertools.product(*(range(o) for _, o in gens)):
            v = 1
            for (g, _), e in zip(gens, exps):
                v = v * pow(g, e, pe) % pe
            table[v] = exps
        parts[pe] = table
    for a in range(q):
        if math.gcd(a, q) == 1:
            logs[a] = tuple(itertools.chain.from_iterable(parts[pe][a % pe] for pe in sorted(parts)))
    orders = [o for (_, _, o) in factors]
    chars = []
    for choice in itertools.product(*(range(o) for o in orders)):
        values = [0j] * q
        for a, lg in logs.items():
            phase = sum(_phase(c * e, o) for c, e, o in zip(choice, lg, orders))
            values[a] = cmath.exp(2j * math.pi * phase)
        chars.append(DirichletCharacter(q, tuple(values), label=f"mod{q}:{','.join(map(str, choice))}"))
    logger.debug(f"{len(chars)} characters mod {q}")
    return chars


def _phase(num: int, den: int) -> float:
    return (num % den) / den

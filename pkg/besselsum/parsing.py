#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
String specifications used on the command line, and their inverse formatters.

    lattice    "2,1;0,3"  rows separated by ';', entries integers or "p/q"
    vector     "0,1/2,-3"
    complex    "2.0", "1+0.5i", "-0.5i"
    character  "kronecker:12", "principal:5", "table:4:0,1,0,-1",
               {"kronecker": 12}, {"modulus": 4, "values": [[0,0],[1,0],[0,0],[-1,0]]}
    code       "m=2,n=3,gen=111;011" or "m=2,n=3,parity=111"
    u0         "delta", "ones", "coset:<code>", "table:<file>"
"""

from __future__ import annotations
import json
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from besselsum.core.characters import (
    DirichletCharacter,
    DirichletCharacterFamily,
    character_from_table,
    kronecker_character,
    new_family,
    principal_character,
)
from besselsum.core.codes import LinearCode, code_from_generators, parity_check_code
from besselsum.core.errors import BesselSumError, SpecParseError
from besselsum.core.heat import InitialData, coset_indicator, constant_data, delta_data, table_data
from besselsum.core.lattice import Lattice, new_lattice


def _fraction(token: str, field: str, position: int) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        raise SpecParseError(f"{token.strip()!r} is not an integer or p/q rational", field, position)


def _split(text: str, sep: str) -> List[tuple]:
    """Pieces of `text` with their start offsets."""
    out, pos = [], 0
    for piece in text.split(sep):
        out.append((piece, pos))
        pos += len(piece) + 1
    return out


def parse_vector(text: str, field: str = "vector") -> List[Fraction]:
    if not text.strip():
        raise SpecParseError("empty vector", field, 0)
    return [_fraction(tok, field, pos) for tok, pos in _split(text, ",")]


def parse_int_vector(text: str, field: str = "vector") -> List[int]:
    out = []
    for v, (_, pos) in zip(parse_vector(text, field), _split(text, ",")):
        if v.denominator != 1:
            raise SpecParseError(f"{v} is not an integer", field, pos)
        out.append(int(v))
    return out


def parse_matrix(text: str, field: str = "lattice") -> List[List[Fraction]]:
    rows = []
    for row_text, row_pos in _split(text, ";"):
        if not row_text.strip():
            raise SpecParseError("empty row", field, row_pos)
        rows.append([_fraction(tok, field, row_pos + pos) for tok, pos in _split(row_text, ",")])
    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise SpecParseError(f"row {i} has {len(r)} entries, row 0 has {width}", field)
    if len(rows) != width:
        raise SpecParseError(f"basis must be square, got {len(rows)}x{width}", field)
    return rows


def parse_lattice(text: str, field: str = "lattice") -> Lattice:
    rows = parse_matrix(text, field)
    try:
        return new_lattice(rows)
    except BesselSumError as e:
        raise SpecParseError(str(e), field)


def _entry(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_vector(v: Sequence) -> str:
    return ",".join(_entry(Fraction(x)) for x in v)


def format_lattice(lattice: Lattice) -> str:
    return ";".join(format_vector(row) for row in lattice.basis)


def parse_complex(text: str, field: str = "t") -> complex:
    s = text.strip().replace(" ", "")
    if not s:
        raise SpecParseError("empty number", field, 0)
    if s.endswith("i"):
        s = s[:-1] + "j"
        if s == "j" or s[-2] in "+-":
            s = s[:-1] + "1j"
    try:
        return complex(s)
    except ValueError:
        raise SpecParseError(f"{text!r} is not a real or complex number", field, 0)


def parse_complex_list(text: str, field: str = "t") -> List[complex]:
    return [parse_complex(tok, field) for tok, _ in _split(text, ",")]


def format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    return f"{z.real!r}{'+' if z.imag >= 0 else ''}{z.imag!r}i"


def _json_character(text: str, field: str) -> DirichletCharacter:
    """{"kronecker": D} or {"modulus": q, "values": [[re, im], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecParseError(f"invalid JSON character: {e.msg}", field, e.pos)
    if not isinstance(data, dict):
        raise SpecParseError("JSON character must be an object", field, 0)
    if "kronecker" in data:
        if not isinstance(data["kronecker"], int) or isinstance(data["kronecker"], bool):
            raise SpecParseError("kronecker discriminant must be an integer", field)
        return kronecker_character(data["kronecker"])
    if "modulus" not in data or "values" not in data:
        raise SpecParseError('expected {"kronecker": D} or {"modulus": q, "values": [...]}', field)
    modulus, raw = data["modulus"], data["values"]
    if not isinstance(modulus, int) or not isinstance(raw, list):
        raise SpecParseError("modulus must be an integer and values a list", field)
    values = []
    for i, pair in enumerate(raw):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)):
            raise SpecParseError(f"values[{i}] must be a [re, im] pair of numbers", field)
        values.append(complex(pair[0], pair[1]))
    return character_from_table(modulus, values)


def parse_character(text: str, q: Optional[int] = None, field: str = "chi") -> DirichletCharacter:
    """Colon form ("kronecker:12", "table:4:0,1,0,-1") or the JSON object form."""
    kind, _, rest = text.strip().partition(":")
    try:
        if text.lstrip().startswith("{"):
            chi = _json_character(text, field)
        elif kind == "kronecker":
            chi = kronecker_character(int(rest))
        elif kind == "principal":
            chi = principal_character(int(rest))
        elif kind == "table":
            modulus, _, values = rest.partition(":")
            chi = character_from_table(int(modulus), [parse_complex(v, field) for v, _ in _split(values, ",")])
        else:
            raise SpecParseError(f"unknown character kind {kind!r}", field, 0)
    except ValueError:
        raise SpecParseError(f"malformed character {text!r}", field, len(kind) + 1)
    except SpecParseError:
        raise
    except BesselSumError as e:
        raise SpecParseError(str(e), field)
    if q is not None and chi.modulus != q:
        raise SpecParseError(f"character has modulus {chi.modulus}, --q is {q}", field)
    return chi


def format_character(chi: DirichletCharacter) -> str:
    if chi.label.startswith(("kronecker:", "principal:")):
        return chi.label
    return f"table:{chi.modulus}:" + ",".join(format_complex(v) for v in chi.values)


def parse_family(text: str, n: int, q: Optional[int] = None, field: str = "chi") -> DirichletCharacterFamily:
    """';'-separated characters, or a single one used for every coordinate."""
    parts = [p for p, _ in _split(text, ";")]
    chars = [parse_character(p, q, field) for p in parts]
    if len(chars) == 1:
        chars = chars * n
    if len(chars) != n:
        raise SpecParseError(f"{len(chars)} characters for dimension {n}", field)
    try:
        return new_family(chars)
    except BesselSumError as e:
        raise SpecParseError(str(e), field)


def _code_vector(text: str, m: int, n: int, field: str, position: int) -> List[int]:
    tokens = text.split(".") if "." in text else list(text)
    try:
        vec = [int(tok) for tok in tokens]
    except ValueError:
        raise SpecParseError(f"bad code vector {text!r}", field, position)
    if len(vec) != n:
        raise SpecParseError(f"vector {text!r} has length {len(vec)}, expected n={n}", field, position)
    return vec


def parse_code(text: str, field: str = "code", cap: int = 10 ** 6) -> LinearCode:
    values = {}
    for part, pos in _split(text.strip(), ","):
        key, sep, value = part.partition("=")
        if not sep:
            raise SpecParseError(f"expected key=value, got {part!r}", field, pos)
        values[key.strip()] = (value.strip(), pos + len(key) + 1)
    try:
        m = int(values["m"][0])
        n = int(values["n"][0])
    except KeyError as e:
        raise SpecParseError(f"missing {e.args[0]}=", field)
    except ValueError:
        raise SpecParseError("m and n must be integers", field)
    try:
        if "parity" in values:
            raw, pos = values["parity"]
            rows = [_code_vector(v, m, n, field, pos + off) for v, off in _split(raw, ";")]
            return parity_check_code(m, rows, n)
        raw, pos = values.get("gen", ("", 0))
        gens = [_code_vector(v, m, n, field, pos + off) for v, off in _split(raw, ";") if v]
        return code_from_generators(m, n, gens, cap)
    except SpecParseError:
        raise
    except (BesselSumError, ValueError) as e:
        raise SpecParseError(str(e), field)


def format_code(code: LinearCode) -> str:
    sep = "" if code.modulus <= 10 else "."
    gens = ";".join(sep.join(str(v) for v in g) for g in code.generators)
    return f"m={code.modulus},n={code.length},gen={gens}"


def parse_u0(text: str, n: int, field: str = "u0") -> InitialData:
    kind, _, rest = text.strip().partition(":")
    if kind == "delta":
        return delta_data(n)
    if kind == "ones":
        return constant_data(n)
    if kind == "coset":
        code = parse_code(rest, field)
        if code.length != n:
            raise SpecParseError(f"code of length {code.length} on a rank-{n} lattice", field)
        return coset_indicator(code)
    if kind == "table":
        try:
            data = json.loads(Path(rest).read_text(encoding="utf-8"))
            table = table_data(data)
        except (OSError, json.JSONDecodeError, ValueError) as e:
            raise SpecParseError(f"cannot read table {rest!r}: {e}", field)
        if table.dimension != n:
            raise SpecParseError(f"table of rank {table.dimension} on a rank-{n} lattice", field)
        return table
    raise SpecParseError(f"unknown initial data {kind!r}", field, 0)

"""JSON file format for algebras and bimodule fixtures.

Example::

    {
      "dim": 2,
      "basis": ["a", "b"],
      "brackets": {"1,0": {"0": "1"}, "1,1": {"0": "1"}},
      "metadata": {"name": "L2ii", "source": "..."}
    }

``brackets["i,j"]["k"]`` is the coefficient of e_k in [e_i, e_j] (0-based),
written as an exact rational string "p" or "p/q".  Omitted pairs are zero.
An optional ``carrier`` block describes a bimodule::

    "carrier": {"dim": 3, "left": {"1": [["0","0","0"], ...]}, "right": {...}}

with one matrix (rows of rational strings) per algebra basis index; omitted
indices act as zero.  An optional ``automorphisms`` list holds n x n
matrices (columns are images of basis vectors).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebra import LeibnizAlgebra
from .errors import ParseError
from .exactla import Matrix
from .reps import Bimodule

__all__ = ["AlgebraFile", "parse_rational", "format_rational", "loads", "load", "dumps", "dump"]

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"rational must be a string 'p' or 'p/q', got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"malformed rational {text!r}")
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), q)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class AlgebraFile:
    algebra: LeibnizAlgebra
    metadata: dict = field(default_factory=dict)
    bimodule: Optional[Bimodule] = None
    automorphisms: tuple = ()

    @property
    def name(self) -> str:
        return self.metadata.get("name", self.algebra.name)


def _index(key: str, n: int, what: str) -> int:
    try:
        i = int(key)
    except (TypeError, ValueError):
        raise ParseError(f"{what} index {key!r} is not an integer") from None
    if not 0 <= i < n:
        raise ParseError(f"{what} index {i} out of range 0..{n - 1}")
    return i


def _matrix(rows, m: int, what: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != m or \
            any(not isinstance(r, list) or len(r) != m for r in rows):
        raise ParseError(f"{what} must be a {m}x{m} list of rows")
    return Matrix.from_rows([[parse_rational(a) for a in r] for r in rows], m)


def from_dict(data: dict) -> AlgebraFile:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    for key in ("dim", "basis"):
        if key not in data:
            raise ParseError(f"missing required key {key!r}")
    n = data["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("dim must be a non-negative integer")
    basis = data["basis"]
    if not isinstance(basis, list) or len(basis) != n or \
            any(not isinstance(s, str) for s in basis):
        raise ParseError(f"basis must list {n} string labels")
    if len(set(basis)) != n:
        raise ParseError("basis labels must be distinct")
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    brackets = data.get("brackets", {})
    if not isinstance(brackets, dict):
        raise ParseError("brackets must be an object")
    for pair, out in brackets.items():
        parts = pair.split(",")
        if len(parts) != 2:
            raise ParseError(f"bracket key {pair!r} must look like 'i,j'")
        i, j = (_index(p.strip(), n, "bracket") for p in parts)
        if not isinstance(out, dict):
            raise ParseError(f"bracket {pair!r} must map indices to rationals")
        for k, coeff in out.items():
            c[i][j][_index(k, n, "bracket output")] = parse_rational(coeff)
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be an object")
    alg = LeibnizAlgebra.from_tensor(c, basis, metadata.get("name", ""))

    bimodule = None
    if "carrier" in data:
        car = data["carrier"]
        if not isinstance(car, dict) or not isinstance(car.get("dim"), int):
            raise ParseError("carrier must be an object with an integer dim")
        m = car["dim"]
        acts = {}
        for side in ("left", "right"):
            mats = [Matrix.zeros(m, m) for _ in range(n)]
            for k, rows in car.get(side, {}).items():
                mats[_index(k, n, f"{side} action")] = _matrix(rows, m, f"{side} action {k}")
            acts[side] = tuple(mats)
        bimodule = Bimodule(alg, m, acts["left"], acts["right"])

    autos = tuple(_matrix(rows, n, "automorphism") for rows in data.get("automorphisms", []))
    return AlgebraFile(alg, dict(metadata), bimodule, autos)


def loads(text: str) -> AlgebraFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_dict(data)


def load(path) -> AlgebraFile:
    return loads(Path(path).read_text())


def _matrix_rows(m: Matrix) -> list:
    return [[format_rational(a) for a in r] for r in m.entries]


def to_dict(af: AlgebraFile) -> dict:
    alg = af.algebra
    n = alg.dim
    brackets = {}
    for i in range(n):
        for j in range(n):
            out = {str(k): format_rational(a) for k, a in enumerate(alg.c[i][j]) if a}
            if out:
                brackets[f"{i},{j}"] = out
    data = {"dim": n, "basis": list(alg.basis_names), "brackets": brackets}
    if af.metadata:
        data["metadata"] = dict(af.metadata)
    if af.bimodule is not None:
        b = af.bimodule
        data["carrier"] = {
            "dim": b.carrier_dim,
            "left": {str(k): _matrix_rows(a) for k, a in enumerate(b.left_action)
                     if not a.is_zero()},
            "right": {str(k): _matrix_rows(a) for k, a in enumerate(b.right_action)
                      if not a.is_zero()},
        }
    if af.automorphisms:
        data["automorphisms"] = [_matrix_rows(a) for a in af.automorphisms]
    return data


def dumps(af: AlgebraFile) -> str:
    return json.dumps(to_dict(af), indent=2) + "\n"


def dump(af: AlgebraFile, path) -> None:
    Path(path).write_text(dumps(af))


def algebra_file(alg: LeibnizAlgebra, **metadata) -> AlgebraFile:
    meta = {"name": alg.name} if alg.name else {}
    meta.update(metadata)
    return AlgebraFile(alg, meta)

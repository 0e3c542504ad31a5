"""Leibniz algebras given by structure constants.

Convention: ``[e_i, e_j] = sum_k c[i][j][k] e_k``.  Vectors are coordinate
tuples in the basis ``e_0 .. e_{n-1}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import DimensionMismatch, NotLeftLeibniz
from .exactla import (
    Matrix,
    Subspace,
    as_fraction,
    nullspace,
    span,
    unit_vector,
    vadd,
    vec,
    vlincomb,
    vsub,
    zero_vector,
)

__all__ = [
    "LeibnizAlgebra",
    "MultOperator",
    "Violation",
    "ViolationReport",
    "bracket",
    "left_mult",
    "right_mult",
    "check_left_leibniz",
    "check_right_leibniz",
    "is_lie",
    "opposite",
    "identity_suite",
    "check_power_identity",
    "power_test_vectors",
    "derivations",
    "is_derivation",
    "require_left_leibniz",
]


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    basis_names: tuple
    c: tuple  # c[i][j] is a tuple of n Fractions
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.dim
        if len(self.basis_names) != n or len(set(self.basis_names)) != n:
            raise ValueError("basis names must be n distinct labels")
        if len(self.c) != n or any(len(row) != n or any(len(v) != n for v in row)
                                    for row in self.c):
            raise DimensionMismatch(f"structure tensor is not {n}x{n}x{n}")

    @classmethod
    def from_brackets(cls, basis_names: Sequence[str], brackets: Mapping, name: str = "") \
            -> "LeibnizAlgebra":
        """Build from ``{(x, y): {z: coeff}}`` with labels or indices; omitted pairs are 0.

        >>> L = LeibnizAlgebra.from_brackets("ab", {("b", "a"): {"a": 1}, ("b", "b"): {"a": 1}})
        >>> L.bracket_basis(1, 1)
        (Fraction(1, 1), Fraction(0, 1))
        """
        names = tuple(basis_names)
        n = len(names)
        idx = {s: i for i, s in enumerate(names)}

        def index(key):
            return key if isinstance(key, int) else idx[key]

        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (x, y), out in brackets.items():
            for z, coeff in out.items():
                c[index(x)][index(y)][index(z)] += as_fraction(coeff)
        return cls.from_tensor(c, names, name)

    @classmethod
    def from_tensor(cls, c, basis_names: Optional[Sequence[str]] = None, name: str = "") \
            -> "LeibnizAlgebra":
        n = len(c)
        names = tuple(basis_names) if basis_names is not None else tuple(f"e{i}" for i in range(n))
        tensor = tuple(tuple(vec(c[i][j]) for j in range(n)) for i in range(n))
        return cls(n, names, tensor, name)

    @classmethod
    def abelian(cls, n: int, name: str = "") -> "LeibnizAlgebra":
        return cls.from_tensor([[[0] * n for _ in range(n)] for _ in range(n)], name=name)

    def bracket_basis(self, i: int, j: int):
        return self.c[i][j]

    def bracket(self, x: Sequence, y: Sequence):
        return bracket(self, x, y)

    def basis(self) -> list:
        return [unit_vector(self.dim, i) for i in range(self.dim)]

    def nonzero_brackets(self):
        """Yield ``(i, j, k, coeff)`` for every nonzero structure constant."""
        n = self.dim
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.c[i][j][k]:
                yield i, j, k, self.c[i][j][k]

    def change_basis(self, p: Matrix, basis_names: Optional[Sequence[str]] = None) \
            -> "LeibnizAlgebra":
        """Structure constants in the new basis f_j = sum_i p[i, j] e_i (columns of p)."""
        n = self.dim
        if p.shape != (n, n):
            raise DimensionMismatch("basis change must be n x n")
        pinv = p.inverse()
        cols = p.columns()
        c = [[pinv.apply(self.bracket(cols[i], cols[j])) for j in range(n)] for i in range(n)]
        return LeibnizAlgebra.from_tensor(c, basis_names or self.basis_names, self.name)

    def __repr__(self):
        rels = []
        for i, j in itertools.product(range(self.dim), repeat=2):
            out = self.c[i][j]
            if any(out):
                terms = " + ".join(f"{a}*{self.basis_names[k]}" for k, a in enumerate(out) if a)
                rels.append(f"[{self.basis_names[i]},{self.basis_names[j]}]={terms}")
        label = f"{self.name}: " if self.name else ""
        return f"LeibnizAlgebra({label}dim={self.dim}; {', '.join(rels) or 'abelian'})"


def _check_len(alg: LeibnizAlgebra, *vs):
    for v in vs:
        if len(v) != alg.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a {alg.dim}-dim algebra")


def bracket(alg: LeibnizAlgebra, x: Sequence, y: Sequence):
    _check_len(alg, x, y)
    n = alg.dim
    out = [Fraction(0)] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = alg.c[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            f = xi * yj
            for k, a in enumerate(row[j]):
                if a:
                    out[k] += f * a
    return tuple(out)


@dataclass(frozen=True)
class MultOperator:
    kind: str  # "left" or "right"
    element: tuple
    matrix: Matrix


def left_mult(alg: LeibnizAlgebra, x: Sequence) -> MultOperator:
    """l_x : v -> [x, v]."""
    x = vec(x)
    _check_len(alg, x)
    cols = [bracket(alg, x, e) for e in alg.basis()]
    return MultOperator("left", x, Matrix.from_columns(cols, alg.dim) if cols else Matrix.zeros(0, 0))


def right_mult(alg: LeibnizAlgebra, x: Sequence) -> MultOperator:
    """r_x : v -> [v, x]."""
    x = vec(x)
    _check_len(alg, x)
    cols = [bracket(alg, e, x) for e in alg.basis()]
    return MultOperator("right", x, Matrix.from_columns(cols, alg.dim) if cols else Matrix.zeros(0, 0))


def lmat(alg: LeibnizAlgebra, x: Sequence) -> Matrix:
    return left_mult(alg, x).matrix


def rmat(alg: LeibnizAlgebra, x: Sequence) -> Matrix:
    return right_mult(alg, x).matrix


@dataclass(frozen=True)
class Violation:
    identity: str
    indices: tuple
    residual: tuple

    def __str__(self):
        return f"{self.identity} at {self.indices}: residual {tuple(str(a) for a in self.residual)}"


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None


def _basis_triples(alg):
    return itertools.product(range(alg.dim), repeat=3)


def check_left_leibniz(alg: LeibnizAlgebra) -> ViolationReport:
    """Residuals of [a,[b,c]] - [[a,b],c] - [b,[a,c]] over basis triples."""
    e = alg.basis()
    out = []
    for i, j, k in _basis_triples(alg):
        a, b, c = e[i], e[j], e[k]
        lhs = bracket(alg, a, bracket(alg, b, c))
        rhs1 = bracket(alg, bracket(alg, a, b), c)
        rhs2 = bracket(alg, b, bracket(alg, a, c))
        res = vsub(vsub(lhs, rhs1), rhs2)
        if any(res):
            out.append(Violation("left Leibniz", (i, j, k), res))
    return ViolationReport(tuple(out))


def check_right_leibniz(alg: LeibnizAlgebra) -> ViolationReport:
    """Residuals of x(yz) - (xy)z + (xz)y over basis triples."""
    e = alg.basis()
    out = []
    for i, j, k in _basis_triples(alg):
        x, y, z = e[i], e[j], e[k]
        lhs = bracket(alg, x, bracket(alg, y, z))
        rhs = vsub(bracket(alg, bracket(alg, x, y), z), bracket(alg, bracket(alg, x, z), y))
        res = vsub(lhs, rhs)
        if any(res):
            out.append(Violation("right Leibniz", (i, j, k), res))
    return ViolationReport(tuple(out))


def is_antisymmetric(alg: LeibnizAlgebra) -> bool:
    n = alg.dim
    return all(alg.c[i][j][k] == -alg.c[j][i][k]
               for i in range(n) for j in range(n) for k in range(n))


def is_lie(alg: LeibnizAlgebra) -> bool:
    return is_antisymmetric(alg) and check_left_leibniz(alg).ok


def require_left_leibniz(alg: LeibnizAlgebra) -> None:
    report = check_left_leibniz(alg)
    if not report.ok:
        raise NotLeftLeibniz(f"left Leibniz identity fails: {report.first()}")


def opposite(alg: LeibnizAlgebra) -> LeibnizAlgebra:
    n = alg.dim
    c = [[alg.c[j][i] for j in range(n)] for i in range(n)]
    return LeibnizAlgebra.from_tensor(c, alg.basis_names, alg.name and f"{alg.name}^op")


def identity_suite(alg: LeibnizAlgebra) -> ViolationReport:
    """Consequences of the left Leibniz identity, checked on basis tuples.

    * r_[a,b] = r_b r_a + l_a r_b
    * r_[a,b] = l_a r_b - r_b l_a
    * [[a,b],c] = -[[b,a],c]
    * [[a,a],b] = 0
    * (r_x)^m = (-1)^(m-1) r_x (l_x)^(m-1) for 1 <= m <= dim (see check_power_identity)
    """
    n = alg.dim
    e = alg.basis()
    L = [lmat(alg, v) for v in e]
    R = [rmat(alg, v) for v in e]
    out = []

    def record(name, idx, m: Matrix):
        if not m.is_zero():
            out.append(Violation(name, idx, m.flatten()))

    for i, j in itertools.product(range(n), repeat=2):
        r_ab = rmat(alg, bracket(alg, e[i], e[j]))
        record("r_[a,b] = r_b r_a + l_a r_b", (i, j), r_ab - (R[j] @ R[i]) - (L[i] @ R[j]))
        record("r_[a,b] = l_a r_b - r_b l_a", (i, j), r_ab - (L[i] @ R[j]) + (R[j] @ L[i]))
        for k in range(n):
            res = vlincomb((1, 1), (bracket(alg, bracket(alg, e[i], e[j]), e[k]),
                                    bracket(alg, bracket(alg, e[j], e[i]), e[k])), n)
            if any(res):
                out.append(Violation("[[a,b],c] = -[[b,a],c]", (i, j, k), res))
        res = bracket(alg, bracket(alg, e[i], e[i]), e[j])
        if any(res):
            out.append(Violation("[[a,a],b] = 0", (i, j), res))
    out.extend(check_power_identity(alg))
    return ViolationReport(tuple(out))


def power_test_vectors(alg: LeibnizAlgebra) -> list:
    """(label, vector) pairs: the basis, then e_i + e_j for i < j."""
    e, names = alg.basis(), alg.basis_names
    out = list(zip(names, e))
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            out.append((f"{names[i]}+{names[j]}", vadd(e[i], e[j])))
    return out


def check_power_identity(alg: LeibnizAlgebra, shift: int = 1, vectors=None) -> ViolationReport:
    """Residuals of (r_x)^m - (-1)^(m+shift) r_x (l_x)^(m-1) for 1 <= m <= dim.

    ``shift=1`` is the identity that holds in every left Leibniz algebra:
    (r_x)^2 a = [[a,x],x] = -[[x,a],x] = -r_x l_x a, then induct.  ``shift=0``
    is the opposite sign convention, which already fails at m = 1 unless r_x = 0.
    The identity is not linear in x, so by default x runs over the basis and
    the pairwise sums e_i + e_j.  Violation indices are (vector index, m).
    """
    n = alg.dim
    xs = [v for _, v in power_test_vectors(alg)] if vectors is None else list(vectors)
    name = "(r_x)^m = (-1)^(m-1) r_x (l_x)^(m-1)" if shift % 2 else \
        "(r_x)^m = (-1)^m r_x (l_x)^(m-1)"
    out = []
    for idx, x in enumerate(xs):
        lx, rx = lmat(alg, x), rmat(alg, x)
        for m in range(1, n + 1):
            res = rx ** m - (rx @ (lx ** (m - 1))).scale((-1) ** (m + shift))
            if not res.is_zero():
                out.append(Violation(name, (idx, m), res.flatten()))
    return ViolationReport(tuple(out))


def _derivation_system(alg: LeibnizAlgebra) -> Matrix:
    """Linear conditions on the n*n entries of D (row-major) for D to be a derivation."""
    n = alg.dim
    rows = []
    # D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0; D e_i = sum_p D[p][i] e_p
    for i, j in itertools.product(range(n), repeat=2):
        cij = alg.c[i][j]
        for k in range(n):
            row = [Fraction(0)] * (n * n)
            for p in range(n):
                if cij[p]:
                    row[k * n + p] += cij[p]
                if alg.c[p][j][k]:
                    row[p * n + i] -= alg.c[p][j][k]
                if alg.c[i][p][k]:
                    row[p * n + j] -= alg.c[i][p][k]
            rows.append(row)
    return Matrix.from_rows(rows, n * n) if rows else Matrix.zeros(0, 0)


def derivations(alg: LeibnizAlgebra) -> Subspace:
    """Der(L) as a subspace of the n^2-dim space of matrices flattened row-major."""
    n = alg.dim
    if n == 0:
        return Subspace.zero(0)
    return nullspace(_derivation_system(alg))


def derivation_matrices(alg: LeibnizAlgebra) -> list:
    n = alg.dim
    return [Matrix(n, n, tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n)))
            for v in derivations(alg).basis]


def is_derivation(alg: LeibnizAlgebra, d: Matrix) -> bool:
    n = alg.dim
    if d.shape != (n, n):
        raise DimensionMismatch(f"derivation must be {n}x{n}, got {d.shape}")
    e = alg.basis()
    for i, j in itertools.product(range(n), repeat=2):
        lhs = d.apply(bracket(alg, e[i], e[j]))
        rhs = vlincomb((1, 1), (bracket(alg, d.column(i), e[j]),
                                bracket(alg, e[i], d.column(j))), n)
        if lhs != rhs:
            return False
    return True


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return (a @ b) - (b @ a)


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra, name: str = "") -> LeibnizAlgebra:
    n, m = a.dim, b.dim
    c = [[zero_vector(n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i, j, k, v in a.nonzero_brackets():
        row = list(c[i][j]); row[k] = v; c[i][j] = tuple(row)
    for i, j, k, v in b.nonzero_brackets():
        row = list(c[n + i][n + j]); row[n + k] = v; c[n + i][n + j] = tuple(row)
    names = tuple(a.basis_names) + tuple(
        s if s not in a.basis_names else f"{s}'" for s in b.basis_names)
    return LeibnizAlgebra.from_tensor(c, names, name)


def subalgebra_structure(alg: LeibnizAlgebra, s: Subspace, name: str = "") -> LeibnizAlgebra:
    """Induced structure constants on a subalgebra, in its canonical basis."""
    from .errors import VerificationError

    k = s.dim
    c = [[None] * k for _ in range(k)]
    for i, j in itertools.product(range(k), repeat=2):
        coords = s.coordinates(bracket(alg, s.basis[i], s.basis[j]))
        if coords is None:
            raise VerificationError("subspace is not closed under the bracket")
        c[i][j] = coords
    return LeibnizAlgebra.from_tensor(c, name=name)


def span_of(alg: LeibnizAlgebra, *labels: str) -> Subspace:
    """Span of named basis vectors, e.g. ``span_of(L, "a")``."""
    idx = {s: i for i, s in enumerate(alg.basis_names)}
    return span([unit_vector(alg.dim, idx[s]) for s in labels], alg.dim)

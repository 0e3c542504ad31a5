"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`.  Matrices and
subspaces are immutable; subspaces carry a canonical reduced row-echelon
basis so that equality of subspaces is plain equality of their bases.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

__all__ = [
    "Rational",
    "Matrix",
    "Subspace",
    "Flag",
    "QuotientData",
    "as_fraction",
    "vec",
    "zero_vector",
    "unit_vector",
    "vadd",
    "vsub",
    "vscale",
    "vlincomb",
    "is_zero_vector",
    "rref",
    "nullspace",
    "solve",
    "span",
    "sum_subspaces",
    "intersect",
    "contains",
    "quotient_data",
    "charpoly",
    "rational_eigenvalues",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or str")
    return Fraction(x)


def vec(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(alpha, v: Vector) -> Vector:
    return tuple(alpha * a for a in v)


def vlincomb(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def is_zero_vector(v: Vector) -> bool:
    return not any(v)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix stored row-major as nested tuples."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(
                f"entry grid does not match declared shape {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [vec(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        columns = [vec(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("cannot infer row count of an empty matrix")
            rows = len(columns[0])
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                      tuple(() for _ in range(self.cols)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(vadd(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(vsub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, alpha) -> "Matrix":
        alpha = as_fraction(alpha)
        return Matrix(self.rows, self.cols, tuple(vscale(alpha, r) for r in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Matrix(self.rows, other.cols, tuple(
                tuple(_dot(r, c) for c in cols) for r in self.entries))
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(_dot(r, v) for r in self.entries)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square() or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        out = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] * inv
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return d

    def inverse(self) -> "Matrix":
        n = self.rows
        aug = Matrix.from_rows([list(r) + list(e) for r, e in
                                zip(self.entries, Matrix.identity(n).entries)], 2 * n)
        red, rank = rref(aug)
        if not self.is_square() or any(red[i, i] != 1 for i in range(n)) or \
                any(red[i, j] != 0 for i in range(n) for j in range(n) if i != j):
            raise ValueError("matrix is singular")
        return Matrix.from_rows([r[n:] for r in red.entries], n)

    def is_nilpotent(self) -> bool:
        return (self ** self.rows).is_zero()

    def is_upper_triangular(self, strict: bool = False) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.rows)
                   for j in range(self.cols) if (j <= i if strict else j < i))

    def flatten(self) -> Vector:
        return tuple(a for r in self.entries for a in r)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _dot(u, v) -> Fraction:
    s = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def hstack(*blocks: Matrix) -> Matrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionMismatch("hstack needs equal row counts")
    return Matrix(rows, sum(b.cols for b in blocks),
                  tuple(sum((b.entries[i] for b in blocks), ()) for i in range(rows)))


def vstack(*blocks: Matrix) -> Matrix:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionMismatch("vstack needs equal column counts")
    return Matrix(sum(b.rows for b in blocks), cols, sum((b.entries for b in blocks), ()))


def _rref_rows(rows: list, ncols: int, stop: Optional[int] = None):
    """In-place Gauss-Jordan on a list of row lists.  Returns the pivot columns."""
    stop = ncols if stop is None else stop
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(stop):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [a * inv for a in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple:
    """Reduced row-echelon form of ``m`` (same shape, zero rows last) and its rank."""
    rows = [list(r) for r in m.entries]
    pivots = _rref_rows(rows, m.cols)
    return Matrix(m.rows, m.cols, tuple(tuple(r) for r in rows)), len(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^n held by its canonical RREF basis (one vector per row)."""

    ambient_dim: int
    basis: tuple  # tuple of Vectors in canonical RREF

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(j for j, a in enumerate(v) if a != 0) for v in self.basis)

    def basis_matrix(self) -> Matrix:
        """Basis vectors as the rows of a ``dim x ambient_dim`` matrix."""
        return Matrix(self.dim, self.ambient_dim, self.basis)

    def inclusion(self) -> Matrix:
        """Basis vectors as columns, i.e. the inclusion map k^dim -> k^n."""
        return Matrix.from_columns(self.basis, self.ambient_dim) if self.basis else \
            Matrix.zeros(self.ambient_dim, 0)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coordinates of ``v`` in the canonical basis, or None if ``v`` is outside."""
        v = vec(v)
        coords = tuple(v[p] for p in self.pivots)
        if vlincomb(coords, self.basis, self.ambient_dim) != v:
            return None
        return coords

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return all(contains(other, v) for v in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_subspaces(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    def __repr__(self):
        vs = ", ".join("(" + ",".join(str(a) for a in v) + ")" for v in self.basis)
        return f"Subspace(n={self.ambient_dim}, dim={self.dim}, [{vs}])"


def span(vectors: Iterable[Sequence], ambient_dim: Optional[int] = None) -> Subspace:
    rows = [list(vec(v)) for v in vectors]
    if ambient_dim is None:
        if not rows:
            raise ValueError("ambient dimension needed for an empty spanning set")
        ambient_dim = len(rows[0])
    if any(len(r) != ambient_dim for r in rows):
        raise DimensionMismatch("spanning vectors must all have the ambient length")
    pivots = _rref_rows(rows, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in rows[:len(pivots)]))


def nullspace(m: Matrix) -> Subspace:
    """{v : m v = 0}."""
    rows = [list(r) for r in m.entries]
    pivots = _rref_rows(rows, m.cols)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    out = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        out.append(v)
    return span(out, m.cols)


def solve(a: Matrix, b: Sequence) -> Optional[Vector]:
    """A solution of ``a x = b`` with every free variable set to zero, or None."""
    b = vec(b)
    if len(b) != a.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {a.rows} equations")
    rows = [list(r) + [bi] for r, bi in zip(a.entries, b)]
    pivots = _rref_rows(rows, a.cols + 1, stop=a.cols)
    rank = len(pivots)
    if any(rows[i][-1] != 0 for i in range(rank, a.rows)):
        return None
    x = [Fraction(0)] * a.cols
    for r, p in enumerate(pivots):
        x[p] = rows[r][-1]
    return tuple(x)


def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim}")


def sum_subspaces(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return span(a.basis + b.basis, a.ambient_dim)


def annihilator(s: Subspace) -> Subspace:
    """Linear functionals (as vectors) vanishing on ``s``."""
    if s.is_zero():
        return Subspace.full(s.ambient_dim)
    return nullspace(s.basis_matrix())


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    n = a.ambient_dim
    eqs = annihilator(a).basis + annihilator(b).basis
    if not eqs:
        return Subspace.full(n)
    return nullspace(Matrix(len(eqs), n, eqs))


def contains(s: Subspace, v: Sequence) -> bool:
    if len(v) != s.ambient_dim:
        raise DimensionMismatch("vector length differs from the ambient dimension")
    return s.coordinates(v) is not None


def preimage(m: Matrix, target: Subspace) -> Subspace:
    """{v : m v in target}."""
    if m.rows != target.ambient_dim:
        raise DimensionMismatch("matrix codomain differs from target ambient dimension")
    eqs = annihilator(target).basis
    if not eqs:
        return Subspace.full(m.cols)
    return nullspace(Matrix(len(eqs), m.rows, eqs) @ m)


def image(m: Matrix, s: Optional[Subspace] = None) -> Subspace:
    vectors = m.columns() if s is None else [m.apply(v) for v in s.basis]
    return span(vectors, m.rows)


@dataclass(frozen=True)
class QuotientData:
    """Projection onto k^n / w and the canonical section of it.

    ``section`` has the complement basis vectors (unit vectors at the non-pivot
    coordinates of ``w``) as columns; ``projection @ section`` is the identity.
    """

    subspace: Subspace
    projection: Matrix
    section: Matrix

    @property
    def dim(self) -> int:
        return self.projection.rows

    def induced(self, op: Matrix) -> Matrix:
        """Operator induced on the quotient by an ``op`` that preserves ``subspace``."""
        return self.projection @ op @ self.section

    def lift(self, coords: Sequence) -> Vector:
        return self.section.apply(coords)

    def project(self, v: Sequence) -> Vector:
        return self.projection.apply(v)

    def lift_subspace(self, s: Subspace) -> Subspace:
        """Full preimage of a quotient subspace ``s``."""
        return span([self.lift(v) for v in s.basis] + list(self.subspace.basis),
                    self.subspace.ambient_dim)


def quotient_data(w: Subspace) -> QuotientData:
    n = w.ambient_dim
    pivots = w.pivots
    free = [j for j in range(n) if j not in set(pivots)]
    proj = []
    for j in free:
        row = [Fraction(0)] * n
        row[j] = Fraction(1)
        for r, p in enumerate(pivots):
            row[p] = -w.basis[r][j]
        proj.append(row)
    projection = Matrix(len(free), n, tuple(tuple(r) for r in proj))
    section = Matrix.from_columns([unit_vector(n, j) for j in free], n) if free else \
        Matrix.zeros(n, 0)
    return QuotientData(w, projection, section)


@dataclass(frozen=True)
class Flag:
    """A complete flag 0 = V_0 < V_1 < ... < V_n = k^n."""

    ambient_dim: int
    chain: tuple

    def __post_init__(self):
        n = self.ambient_dim
        if len(self.chain) != n + 1:
            raise ValueError(f"a complete flag in k^{n} has {n + 1} terms")
        for k, s in enumerate(self.chain):
            if s.ambient_dim != n or s.dim != k:
                raise ValueError(f"flag term {k} has dimension {s.dim}")
            if k and not self.chain[k - 1] <= s:
                raise ValueError(f"flag term {k - 1} is not contained in term {k}")

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence], n: int) -> "Flag":
        chain = [Subspace.zero(n)]
        for v in vectors:
            chain.append(span(chain[-1].basis + (vec(v),), n))
        return cls(n, tuple(chain))

    def adapted_basis(self) -> Matrix:
        """Columns b_1..b_n with b_k in V_k outside V_{k-1}."""
        cols = []
        for k in range(1, self.ambient_dim + 1):
            prev = self.chain[k - 1]
            cols.append(next(v for v in self.chain[k].basis if not contains(prev, v)))
        return Matrix.from_columns(cols, self.ambient_dim) if cols else Matrix.zeros(0, 0)

    def conjugate(self, op: Matrix) -> Matrix:
        """Matrix of ``op`` in the flag-adapted basis."""
        b = self.adapted_basis()
        return b.inverse() @ op @ b

    def is_invariant(self, op: Matrix, strict: bool = False) -> bool:
        """op(V_k) within V_k, or within V_{k-1} when ``strict``."""
        for k in range(1, self.ambient_dim + 1):
            target = self.chain[k - 1] if strict else self.chain[k]
            if any(not contains(target, op.apply(v)) for v in self.chain[k].basis):
                return False
        return True


def charpoly(m: Matrix) -> tuple:
    """Coefficients (c_n, ..., c_0) of det(tI - m), leading coefficient 1.

    Faddeev-LeVerrier recursion; exact in characteristic zero.
    """
    if not m.is_square():
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(1)]
    mk = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(coeffs[-1]))
        coeffs.append(-mk.trace() / k)
    return tuple(coeffs)


def rational_eigenvalues(m: Matrix) -> list:
    """Distinct rational roots of the characteristic polynomial, sorted."""
    import sympy

    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in charpoly(m)],
                      t, domain="QQ")
    roots = poly.ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)

"""Ideals, centers, normalizers, series, generation and quotients."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    LeibnizAlgebra,
    bracket,
    is_lie,
    lmat,
    rmat,
    subalgebra_structure,
)
from .errors import DimensionMismatch, NotAnIdeal, VerificationError
from .exactla import (
    Matrix,
    Subspace,
    intersect,
    preimage,
    quotient_data,
    span,
    sum_subspaces,
    vadd,
)

__all__ = [
    "SeriesResult",
    "QuotientAlgebra",
    "product_subspace",
    "commutant",
    "is_left_ideal",
    "is_right_ideal",
    "is_ideal",
    "is_subalgebra",
    "derived_series",
    "lower_central_series",
    "is_solvable",
    "is_nilpotent",
    "is_nilpotent_subspace",
    "ker_ideal",
    "liezation",
    "quotient",
    "left_center",
    "right_center",
    "left_normalizer",
    "right_normalizer",
    "ideal_closure",
    "subalgebra_closure",
    "generates",
    "min_generators",
]


def _full(alg):
    return Subspace.full(alg.dim)


def _check(alg, *subs):
    for s in subs:
        if s.ambient_dim != alg.dim:
            raise DimensionMismatch(f"subspace of k^{s.ambient_dim} in a {alg.dim}-dim algebra")


def product_subspace(alg: LeibnizAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """[a, b] = span of brackets of basis vectors."""
    _check(alg, a, b)
    return span([bracket(alg, u, v) for u in a.basis for v in b.basis], alg.dim)


def commutant(alg: LeibnizAlgebra) -> Subspace:
    return product_subspace(alg, _full(alg), _full(alg))


def is_left_ideal(alg, s: Subspace) -> bool:
    """[L, s] within s."""
    return product_subspace(alg, _full(alg), s) <= s


def is_right_ideal(alg, s: Subspace) -> bool:
    return product_subspace(alg, s, _full(alg)) <= s


def is_ideal(alg, s: Subspace) -> bool:
    return is_left_ideal(alg, s) and is_right_ideal(alg, s)


def is_subalgebra(alg, s: Subspace) -> bool:
    return product_subspace(alg, s, s) <= s


@dataclass(frozen=True)
class SeriesResult:
    terms: tuple
    stabilized: bool
    terminal_dim: int

    @property
    def dims(self) -> list:
        return [t.dim for t in self.terms]

    @property
    def reaches_zero(self) -> bool:
        return self.terminal_dim == 0


def _run_series(alg, step) -> SeriesResult:
    terms = [commutant(alg)]
    # dimensions strictly decrease until the series stabilizes
    for _ in range(alg.dim + 1):
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return SeriesResult(tuple(terms), True, terms[-1].dim)
        terms.append(nxt)
    raise VerificationError("series failed to stabilize within dim+1 steps")


def derived_series(alg: LeibnizAlgebra) -> SeriesResult:
    """D^1 = [L, L], D^{k+1} = [D^k, D^k]; every term checked to be a two-sided ideal."""
    res = _run_series(alg, lambda t: product_subspace(alg, t, t))
    for t in res.terms:
        if not is_ideal(alg, t):
            raise VerificationError(f"derived series term {t} is not an ideal")
    return res


def lower_central_series(alg: LeibnizAlgebra) -> SeriesResult:
    """C^1 = [L, L], C^{k+1} = [L, C^k].

    Each term is checked to be a two-sided ideal with [C^k, L] inside [L, C^k], and
    [C^p, C^q] within C^{p+q} is checked for every pair of computed terms.
    """
    full = _full(alg)
    res = _run_series(alg, lambda t: product_subspace(alg, full, t))
    terms = list(res.terms)

    def term(k):  # C^k with C^0 = L; constant past the end
        if k == 0:
            return full
        return terms[min(k, len(terms)) - 1]

    for t in terms:
        if not product_subspace(alg, t, full) <= product_subspace(alg, full, t) or \
                not is_ideal(alg, t):
            raise VerificationError(f"central series term {t} is not a two-sided ideal")
    for p, q in itertools.product(range(1, len(terms) + 1), repeat=2):
        if not product_subspace(alg, term(p), term(q)) <= term(p + q):
            raise VerificationError(f"[C^{p}, C^{q}] is not inside C^{p + q}")
    return res


def is_solvable(alg: LeibnizAlgebra) -> bool:
    return derived_series(alg).reaches_zero


def is_nilpotent(alg: LeibnizAlgebra) -> tuple:
    """(nilpotent?, class) where class is the least m with C^m = 0 (C^1 = [L, L])."""
    if alg.dim == 0:
        return True, 0
    res = lower_central_series(alg)
    if not res.reaches_zero:
        return False, None
    return True, len(res.terms)


def induced_algebra(alg: LeibnizAlgebra, s: Subspace) -> LeibnizAlgebra:
    """Structure constants induced on a subalgebra, in its canonical basis."""
    return subalgebra_structure(alg, s)


def is_nilpotent_subspace(alg: LeibnizAlgebra, s: Subspace) -> bool:
    """Nilpotency of a subalgebra ``s`` as an algebra in its own right."""
    return is_nilpotent(induced_algebra(alg, s))[0]


def is_solvable_subspace(alg: LeibnizAlgebra, s: Subspace) -> bool:
    return is_solvable(induced_algebra(alg, s))


def ker_ideal(alg: LeibnizAlgebra) -> Subspace:
    """Span of [e_i, e_j] + [e_j, e_i]; equals the span of all squares [x, x]."""
    e = alg.basis()
    n = alg.dim
    gens = [vadd(bracket(alg, e[i], e[j]), bracket(alg, e[j], e[i]))
            for i in range(n) for j in range(i, n)]
    k = span(gens, n)
    if not is_ideal(alg, k):
        raise VerificationError("Ker(L) is not a two-sided ideal; is the algebra left Leibniz?")
    if not product_subspace(alg, k, _full(alg)).is_zero():
        raise VerificationError("[Ker(L), L] is not zero; is the algebra left Leibniz?")
    return k


@dataclass(frozen=True)
class QuotientAlgebra:
    """L / I on the canonical complement of I."""

    algebra: LeibnizAlgebra
    ideal: Subspace
    projection: Matrix
    section: Matrix

    def project(self, v):
        return self.projection.apply(v)

    def lift(self, v):
        return self.section.apply(v)

    def preimage(self, s: Subspace) -> Subspace:
        """Full preimage in L of a subspace of the quotient."""
        return span([self.lift(v) for v in s.basis] + list(self.ideal.basis),
                    self.ideal.ambient_dim)


def quotient(alg: LeibnizAlgebra, ideal: Subspace) -> QuotientAlgebra:
    _check(alg, ideal)
    if not is_left_ideal(alg, ideal) or not is_right_ideal(alg, ideal):
        raise NotAnIdeal(f"{ideal} is not a two-sided ideal")
    q = quotient_data(ideal)
    m = q.dim
    lifts = q.section.columns()
    c = [[q.project(bracket(alg, lifts[i], lifts[j])) for j in range(m)] for i in range(m)]
    pivots = set(ideal.pivots)
    names = [s for k, s in enumerate(alg.basis_names) if k not in pivots]
    qa = LeibnizAlgebra.from_tensor(c, names, alg.name and f"{alg.name}/I")
    # projection must be an algebra map
    e = alg.basis()
    for x, y in itertools.product(e, repeat=2):
        if q.project(bracket(alg, x, y)) != bracket(qa, q.project(x), q.project(y)):
            raise VerificationError("quotient projection is not multiplicative")
    return QuotientAlgebra(qa, ideal, q.projection, q.section)


def liezation(alg: LeibnizAlgebra) -> QuotientAlgebra:
    """L / Ker(L), a Lie algebra (checked)."""
    k = ker_ideal(alg)
    res = quotient(alg, k)
    if not is_lie(res.algebra):
        raise VerificationError("L / Ker(L) is not a Lie algebra")
    return res


def liezation_minimality_probe(alg: LeibnizAlgebra) -> bool:
    """Every proper subideal of Ker(L) spanned by canonical basis vectors has non-Lie quotient."""
    k = ker_ideal(alg)
    for r in range(k.dim):
        for subset in itertools.combinations(k.basis, r):
            sub = span(subset, alg.dim)
            if is_ideal(alg, sub) and is_lie(quotient(alg, sub).algebra):
                return False
    return True


def left_center(alg: LeibnizAlgebra) -> Subspace:
    """Z^l = {x : [x, L] = 0}, the common kernel of all r_{e_j}."""
    z = _full(alg)
    for e in alg.basis():
        z = intersect(z, preimage(rmat(alg, e), Subspace.zero(alg.dim)))
    return z


def right_center(alg: LeibnizAlgebra) -> Subspace:
    """Z^r = {x : [L, x] = 0}, the common kernel of all l_{e_j}."""
    z = _full(alg)
    for e in alg.basis():
        z = intersect(z, preimage(lmat(alg, e), Subspace.zero(alg.dim)))
    return z


def left_normalizer(alg: LeibnizAlgebra, u: Subspace) -> Subspace:
    """{x : [x, U] within U}."""
    _check(alg, u)
    out = _full(alg)
    for v in u.basis:
        out = intersect(out, preimage(rmat(alg, v), u))
    return out


def right_normalizer(alg: LeibnizAlgebra, u: Subspace) -> Subspace:
    """{x : [U, x] within U}."""
    _check(alg, u)
    out = _full(alg)
    for v in u.basis:
        out = intersect(out, preimage(lmat(alg, v), u))
    return out


def _closure(alg, w: Subspace, grow) -> Subspace:
    _check(alg, w)
    while True:
        nxt = sum_subspaces(w, grow(w))
        if nxt == w:
            return w
        w = nxt


def ideal_closure(alg: LeibnizAlgebra, v: Subspace) -> Subspace:
    """Smallest two-sided ideal containing ``v``."""
    full = _full(alg)
    return _closure(alg, v, lambda w: sum_subspaces(product_subspace(alg, full, w),
                                                    product_subspace(alg, w, full)))


def subalgebra_closure(alg: LeibnizAlgebra, v: Subspace) -> Subspace:
    """Subalgebra generated by ``v``."""
    return _closure(alg, v, lambda w: product_subspace(alg, w, w))


def generates(alg: LeibnizAlgebra, v: Subspace) -> bool:
    return subalgebra_closure(alg, v).is_full()


def generates_by_commutant(alg: LeibnizAlgebra, v: Subspace) -> bool:
    """The linear criterion V + [L, L] = L (equivalent to ``generates`` for nilpotent L)."""
    return sum_subspaces(v, commutant(alg)).is_full()


def min_generators(alg: LeibnizAlgebra) -> int:
    return alg.dim - commutant(alg).dim

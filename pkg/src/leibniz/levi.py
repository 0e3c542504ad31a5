"""Levi decompositions via linear splitting systems.

Lie case: induct on the derived series of the radical.  At each step the
last nonzero derived term A of the radical is an abelian ideal; a Levi
factor of g/A is lifted along the canonical section sigma and corrected by
h: S -> A solving

    [sigma x, sigma y] - sigma[x, y] = x.h(y) - y.h(x) - h([x, y]).

Leibniz case: Ker(L) is left central, so for F = preimage of a Levi factor
of L/Ker(L) the correction h: S* -> Ker(L) solves the one-sided system

    [sigma x, sigma y] - sigma[x, y] = [sigma x, h(y)] - h([x, y]),

because [h(x), -] vanishes.  S = {sigma x - h(x)}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LeibnizAlgebra, bracket, is_lie, subalgebra_structure
from .errors import NotLie, SplittingFailed, VerificationError
from .exactla import Matrix, Subspace, intersect, solve, span, sum_subspaces, vsub
from .radicals import lie_radical, radical
from .structure import (
    derived_series,
    is_subalgebra,
    left_center,
    liezation,
    product_subspace,
    quotient,
)

__all__ = [
    "LeviDecomposition",
    "lie_levi",
    "levi_decomposition",
    "verify_levi",
    "is_semisimple",
    "ReductiveReport",
    "reductive_check",
]


def is_semisimple(alg: LeibnizAlgebra) -> bool:
    """Lie with zero radical (the zero algebra counts as semisimple)."""
    return is_lie(alg) and lie_radical(alg).is_zero()


def _coords_matrix(sub: Subspace, vectors) -> list:
    out = []
    for v in vectors:
        c = sub.coordinates(v)
        if c is None:
            raise VerificationError("vector expected in subspace is outside it")
        out.append(c)
    return out


def _split(alg, lifts: list, quotient_bracket, kernel: Subspace, one_sided: bool) -> list:
    """Solve for h on the lifted basis; return the corrected lifts sigma x_i - h(x_i).

    ``quotient_bracket(i, j)`` gives coordinates of [x_i, x_j] in the x-basis.
    Unknowns: h(x_i) = sum_a t[i][a] k_a, flattened as i * dim(kernel) + a.
    """
    n = alg.dim
    s, d = len(lifts), kernel.dim
    if s == 0 or d == 0:
        return list(lifts)
    kb = kernel.basis
    nunk = s * d
    rows, rhs = [], []
    for i, j in itertools.product(range(s), repeat=2):
        structure = quotient_bracket(i, j)
        f = vsub(bracket(alg, lifts[i], lifts[j]),
                 _lincomb(structure, lifts, n))
        fk = kernel.coordinates(f)
        if fk is None:
            raise SplittingFailed("extension cocycle leaves the kernel")
        # coefficient of unknown t[p][a] in kernel coordinate b of the residual
        block = [[Fraction(0)] * nunk for _ in range(d)]
        for a in range(d):
            left_i = kernel.coordinates(bracket(alg, lifts[i], kb[a]))
            for b in range(d):
                block[b][j * d + a] += left_i[b]
            if not one_sided:
                left_j = kernel.coordinates(bracket(alg, lifts[j], kb[a]))
                for b in range(d):
                    block[b][i * d + a] -= left_j[b]
            for p in range(s):
                if structure[p]:
                    block[a][p * d + a] -= structure[p]
        rows.extend(block)
        rhs.extend(fk)
    t = solve(Matrix.from_rows(rows, nunk), rhs)
    if t is None:
        raise SplittingFailed("splitting system is inconsistent")
    out = []
    for i in range(s):
        h = _lincomb(t[i * d:(i + 1) * d], kb, n)
        out.append(vsub(lifts[i], h))
    return out


def _lincomb(coeffs, vectors, n):
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def lie_levi(alg: LeibnizAlgebra) -> Subspace:
    """A Levi subalgebra of a Lie algebra."""
    if not is_lie(alg):
        raise NotLie("lie_levi needs a Lie algebra")
    n = alg.dim
    rad = lie_radical(alg)
    if rad.is_zero():
        return Subspace.full(n)
    if rad.is_full():
        return Subspace.zero(n)
    rad_alg = subalgebra_structure(alg, rad)
    terms = [t for t in derived_series(rad_alg).terms if not t.is_zero()]
    # last nonzero derived term of the radical, pushed back into alg
    a_local = terms[-1] if terms else Subspace.full(rad.dim)
    a = span([_lincomb(v, rad.basis, n) for v in a_local.basis], n)
    q = quotient(alg, a)
    s_bar = lie_levi(q.algebra)
    if s_bar.is_zero():
        return Subspace.zero(n)
    xs = list(s_bar.basis)
    lifts = [q.lift(x) for x in xs]

    def qbracket(i, j):
        return s_bar.coordinates(bracket(q.algebra, xs[i], xs[j]))

    corrected = _split(alg, lifts, qbracket, a, one_sided=False)
    s = span(corrected, n)
    if s.dim != s_bar.dim or not is_subalgebra(alg, s):
        raise SplittingFailed("corrected lift is not a subalgebra")
    return s


@dataclass(frozen=True)
class LeviDecomposition:
    semisimple_part: Subspace
    radical_part: Subspace
    verified: dict = field(default_factory=dict)


def levi_decomposition(alg: LeibnizAlgebra) -> LeviDecomposition:
    lz = liezation(alg)
    s_star = lie_levi(lz.algebra)
    n = alg.dim
    rad = radical(alg)
    xs = list(s_star.basis)
    lifts = [lz.lift(x) for x in xs]

    def qbracket(i, j):
        return s_star.coordinates(bracket(lz.algebra, xs[i], xs[j]))

    corrected = _split(alg, lifts, qbracket, lz.ideal, one_sided=True)
    s = span(corrected, n) if corrected else Subspace.zero(n)
    checks = _levi_checks(alg, s, rad)
    checks["projection_injective_on_S"] = span([lz.project(v) for v in s.basis],
                                               lz.algebra.dim).dim == s.dim if s.basis else True
    if not all(checks.values()):
        failed = ", ".join(k for k, ok in checks.items() if not ok)
        raise SplittingFailed(f"Levi decomposition failed verification: {failed}")
    return LeviDecomposition(s, rad, checks)


def _levi_checks(alg, s: Subspace, rad: Subspace) -> dict:
    closed = is_subalgebra(alg, s)
    return {
        "subalgebra": closed,
        "trivial_intersection": intersect(s, rad).is_zero(),
        "spans_L": sum_subspaces(s, rad).is_full(),
        "semisimple_lie": closed and is_semisimple(subalgebra_structure(alg, s)),
    }


def verify_levi(alg: LeibnizAlgebra, s: Subspace) -> bool:
    return all(_levi_checks(alg, s, radical(alg)).values())


@dataclass(frozen=True)
class ReductiveReport:
    hypothesis_left_center_annihilated: bool
    hypothesis_quotient_semisimple: bool
    conclusion: dict = field(default_factory=dict)

    @property
    def hypothesis(self) -> bool:
        return self.hypothesis_left_center_annihilated and self.hypothesis_quotient_semisimple

    @property
    def reductive(self) -> bool:
        return self.hypothesis and bool(self.conclusion) and all(self.conclusion.values())


def reductive_check(alg: LeibnizAlgebra) -> ReductiveReport:
    """If [L, Z^l] = 0 and L/Z^l is semisimple, check that L is a reductive Lie algebra."""
    full = Subspace.full(alg.dim)
    zl = left_center(alg)
    annihilated = product_subspace(alg, full, zl).is_zero()
    semisimple = is_semisimple(quotient(alg, zl).algebra)
    conclusion = {}
    if annihilated and semisimple:
        lev = levi_decomposition(alg)
        s, r = lev.semisimple_part, lev.radical_part
        conclusion = {
            "is_lie": liezation(alg).ideal.is_zero(),
            "radical_central": product_subspace(alg, full, r).is_zero()
            and product_subspace(alg, r, full).is_zero(),
            "direct_sum": product_subspace(alg, s, r).is_zero()
            and product_subspace(alg, r, s).is_zero(),
        }
    return ReductiveReport(annihilated, semisimple, conclusion)

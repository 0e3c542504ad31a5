"""Radical, nilradical, Engel flags and triangularizing flags."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LeibnizAlgebra, is_lie, lmat, rmat
from .errors import (
    NilradicalUnverified,
    NotEngelNilpotent,
    NotLie,
    NotSolvable,
    NotSplitOverField,
    VerificationError,
)
from .exactla import (
    Flag,
    Matrix,
    Subspace,
    charpoly,
    intersect,
    nullspace,
    preimage,
    quotient_data,
    rational_eigenvalues,
    span,
    sum_subspaces,
    vlincomb,
)
from .structure import (
    commutant,
    ideal_closure,
    is_ideal,
    is_nilpotent_subspace,
    is_solvable,
    is_solvable_subspace,
    ker_ideal,
    left_center,
    liezation,
    product_subspace,
    right_center,
)

__all__ = [
    "RadicalReport",
    "killing_form",
    "lie_radical",
    "radical",
    "nilradical",
    "liezation_preimage_nilradical",
    "radical_report",
    "engel_flag",
    "strong_engel_check",
    "common_null_space",
    "lie_flag",
]


def killing_form(alg: LeibnizAlgebra) -> Matrix:
    """Gram matrix of (x, y) -> trace(l_x l_y) on the basis."""
    ls = [lmat(alg, e) for e in alg.basis()]
    return Matrix.from_rows([[(a @ b).trace() for b in ls] for a in ls], alg.dim)


def lie_radical(alg: LeibnizAlgebra) -> Subspace:
    """Radical of a Lie algebra: the Killing-orthogonal of [L, L]."""
    if not is_lie(alg):
        raise NotLie("lie_radical needs a Lie algebra")
    n = alg.dim
    if n == 0:
        return Subspace.zero(0)
    d = commutant(alg)
    if d.is_zero():
        rad = Subspace.full(n)
    else:
        rad = nullspace(d.basis_matrix() @ killing_form(alg))
    if not is_ideal(alg, rad) or not is_solvable_subspace(alg, rad):
        raise VerificationError("Killing-orthogonal of [L, L] is not a solvable ideal")
    for e in alg.basis():
        cand = ideal_closure(alg, span([e], n))
        if is_solvable_subspace(alg, cand) and not cand <= rad:
            raise VerificationError("a solvable ideal escapes the computed radical")
    return rad


def radical(alg: LeibnizAlgebra) -> Subspace:
    """Largest solvable ideal: preimage of the radical of L / Ker(L)."""
    lz = liezation(alg)
    rad = lz.preimage(lie_radical(lz.algebra))
    if not is_ideal(alg, rad) or not is_solvable_subspace(alg, rad):
        raise VerificationError("radical preimage is not a solvable ideal")
    if not lz.ideal <= rad:
        raise VerificationError("Ker(L) is not inside the radical")
    return rad


def _associative_span(gens: list, n: int) -> list:
    """Basis (as matrices) of the associative algebra generated by ``gens``."""
    flat = lambda m: m.flatten()  # noqa: E731
    unflat = lambda v: Matrix(n, n, tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)))  # noqa: E731
    space = span([flat(g) for g in gens], n * n)
    while True:
        basis = [unflat(v) for v in space.basis]
        grown = span(list(space.basis) + [flat(g @ b) for g in gens for b in basis], n * n)
        if grown == space:
            return basis
        space = grown


def _trace_radical_members(alg: LeibnizAlgebra, r: Subspace) -> Subspace:
    """{x in r : l_x lies in the trace-form radical of the algebra generated by l_r}."""
    n = alg.dim
    ops = [lmat(alg, v) for v in r.basis]
    if not ops:
        return Subspace.zero(n)
    a_basis = _associative_span(ops, n)
    if not a_basis:
        return r
    gram = Matrix.from_rows([[(a @ b).trace() for b in a_basis] for a in a_basis], len(a_basis))
    coeffs = nullspace(gram)  # Gram is symmetric
    j_space = span([vlincomb(c, [a.flatten() for a in a_basis], n * n) for c in coeffs.basis],
                   n * n)
    # beta -> flatten(sum beta_k l_{r_k})
    assemble = Matrix.from_columns([op.flatten() for op in ops], n * n)
    betas = preimage(assemble, j_space)
    return span([vlincomb(b, r.basis, n) for b in betas.basis], n)


def _probe_vectors(comp: list) -> list:
    out = list(comp)
    for u, v in itertools.combinations(comp, 2):
        out.append(vlincomb((1, 1), (u, v), len(u)))
        out.append(vlincomb((1, -2), (u, v), len(u)))
    if len(comp) > 2:
        out.append(vlincomb([Fraction(k + 1) for k in range(len(comp))], comp, len(comp[0])))
    return out


def verify_nilradical(alg: LeibnizAlgebra, nil: Subspace) -> dict:
    checks = {
        "ideal": is_ideal(alg, nil),
        "nilpotent": is_nilpotent_subspace(alg, nil),
    }
    maximal = True
    q = quotient_data(nil)
    for y in _probe_vectors(q.section.columns()):
        grown = ideal_closure(alg, sum_subspaces(nil, span([y], alg.dim)))
        if is_nilpotent_subspace(alg, grown):
            maximal = False
            break
    checks["maximal_probe"] = maximal
    return checks


def nilradical(alg: LeibnizAlgebra) -> Subspace:
    """Largest nilpotent ideal.

    Elements x of the radical whose left multiplication lies in the radical of
    the associative operator algebra generated by l_R; the result is checked to
    be a nilpotent ideal that no probe vector can enlarge.
    """
    nil = _trace_radical_members(alg, radical(alg))
    checks = verify_nilradical(alg, nil)
    if not all(checks.values()):
        failed = ", ".join(k for k, ok in checks.items() if not ok)
        raise NilradicalUnverified(f"computed nilradical {nil} fails: {failed}")
    return nil


def liezation_preimage_nilradical(alg: LeibnizAlgebra) -> Subspace:
    """Preimage in L of the nilradical of L / Ker(L).

    Not the nilradical of L in general: it need not be nilpotent.
    """
    lz = liezation(alg)
    return lz.preimage(nilradical(lz.algebra))


@dataclass(frozen=True)
class RadicalReport:
    radical: Subspace
    nilradical: Subspace
    checks: dict = field(default_factory=dict)
    warnings: tuple = ()


def radical_report(alg: LeibnizAlgebra) -> RadicalReport:
    """Radical and nilradical together with the standard inclusions between them."""
    rad = radical(alg)
    nil = nilradical(alg)
    full = Subspace.full(alg.dim)
    ker = ker_ideal(alg)
    checks = {
        "nilradical_in_radical": nil <= rad,
        "ker_in_nilradical": ker <= nil,
        "left_center_in_nilradical": left_center(alg) <= nil,
        "right_center_in_nilradical": right_center(alg) <= nil,
        "[L,R]_in_nilradical": product_subspace(alg, full, rad) <= nil,
        "[R,R]_in_nilradical": product_subspace(alg, rad, rad) <= nil,
        "[R,R]_nilpotent": is_nilpotent_subspace(alg, product_subspace(alg, rad, rad)),
    }
    warnings = []
    pre = liezation_preimage_nilradical(alg)
    if pre != nil:
        nilp = is_ideal(alg, pre) and is_nilpotent_subspace(alg, pre)
        warnings.append(
            "preimage of the nilradical of L/Ker(L) differs from the nilradical of L "
            f"(dim {pre.dim} vs {nil.dim}; preimage nilpotent: {'yes' if nilp else 'no'})"
        )
    return RadicalReport(rad, nil, checks, tuple(warnings))


def _lex_first(vectors):
    return min(vectors)


def common_null_space(ops: list, m: int) -> Subspace:
    out = Subspace.full(m)
    for op in ops:
        out = intersect(out, nullspace(op)) if op.rows else out
    return out


def engel_flag(alg: LeibnizAlgebra) -> Flag:
    """Complete flag in which every l_x and every r_x is strictly upper triangular.

    Each step adds a vector killed, modulo the current term, by all left and
    right multiplications; the lexicographically first canonical basis vector
    of that common kernel is taken.
    """
    n = alg.dim
    ls = [lmat(alg, e) for e in alg.basis()]
    rs = [rmat(alg, e) for e in alg.basis()]
    for i, op in enumerate(ls):
        if not op.is_nilpotent():
            raise NotEngelNilpotent(f"l_{alg.basis_names[i]} is not nilpotent")
    chain = [Subspace.zero(n)]
    while chain[-1].dim < n:
        q = quotient_data(chain[-1])
        ker = common_null_space([q.induced(op) for op in ls + rs], q.dim)
        if ker.is_zero():
            raise NotEngelNilpotent("no common null vector; the algebra is not nilpotent")
        v = q.lift(_lex_first(ker.basis))
        chain.append(span(chain[-1].basis + (v,), n))
    flag = Flag(n, tuple(chain))
    if not all(flag.is_invariant(op, strict=True) for op in ls + rs):
        raise VerificationError("Engel flag does not strictly triangularize l_x and r_x")
    return flag


def strong_engel_check(alg: LeibnizAlgebra) -> bool:
    """Right multiplications nilpotent, strictly triangular in the Engel flag, and a
    common null vector of all l_x and r_x exists."""
    rs = [rmat(alg, e) for e in alg.basis()]
    ls = [lmat(alg, e) for e in alg.basis()]
    if not all(r.is_nilpotent() for r in rs):
        return False
    try:
        flag = engel_flag(alg)
    except NotEngelNilpotent:
        return False
    if not all(flag.is_invariant(r, strict=True) for r in rs):
        return False
    return alg.dim == 0 or not common_null_space(ls + rs, alg.dim).is_zero()


def _common_eigenvector(ops: list, m: int):
    """A rational common eigenvector of ``ops`` on k^m, or None."""
    candidates = [Subspace.full(m)]
    for op in ops:
        nxt = []
        # larger eigenvalues first; deterministic choice among valid flags
        for lam in sorted(rational_eigenvalues(op), reverse=True):
            shifted = op - Matrix.identity(m).scale(lam)
            for w in candidates:
                cut = intersect(w, nullspace(shifted))
                if not cut.is_zero():
                    nxt.append(cut)
        candidates = nxt
        if not candidates:
            return None
    return _lex_first(candidates[0].basis)


def lie_flag(alg: LeibnizAlgebra) -> Flag:
    """Complete flag invariant under every left multiplication, over the rationals.

    Raises NotSplitOverField when some step has no rational common eigenvector.
    """
    if not is_solvable(alg):
        raise NotSolvable("lie_flag needs a solvable algebra")
    n = alg.dim
    ls = [lmat(alg, e) for e in alg.basis()]
    chain = [Subspace.zero(n)]
    while chain[-1].dim < n:
        q = quotient_data(chain[-1])
        induced = [q.induced(op) for op in ls]
        v = _common_eigenvector(induced, q.dim)
        if v is None:
            polys = sorted({str(tuple(str(c) for c in charpoly(op))) for op in induced})
            raise NotSplitOverField(
                "no rational common eigenvector for left multiplications on a "
                f"{q.dim}-dim quotient; characteristic polynomials {', '.join(polys)}"
            )
        chain.append(span(chain[-1].basis + (q.lift(v),), n))
    flag = Flag(n, tuple(chain))
    if not all(flag.is_invariant(op) for op in ls):
        raise VerificationError("Lie flag is not invariant under left multiplication")
    return flag


def degeneracy_failures(alg: LeibnizAlgebra, vectors) -> list:
    """Vectors x among ``vectors`` with det l_x != 0 or det r_x != 0."""
    bad = []
    for x in vectors:
        if lmat(alg, x).det() != 0 or rmat(alg, x).det() != 0:
            bad.append(x)
    return bad


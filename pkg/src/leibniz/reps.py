"""Leibniz bimodules.

A bimodule over L is a space M with a left action ``a.m`` and a right action
``m.a`` such that, for all a, b in L and m in M,

    a(bm) = [ab]m + b(am)
    a(mb) = (am)b + m[ab]
    m[ab] = (ma)b + a(mb)

Actions are stored as one matrix per basis element of L.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import LeibnizAlgebra, Violation, ViolationReport, bracket, lmat, rmat
from .errors import DimensionMismatch
from .exactla import Matrix, Subspace, intersect, nullspace

__all__ = [
    "Bimodule",
    "check_bimodule_axioms",
    "regular_bimodule",
    "is_faithful",
    "joint_kernel",
]


@dataclass(frozen=True)
class Bimodule:
    algebra: LeibnizAlgebra
    carrier_dim: int
    left_action: tuple
    right_action: tuple

    def __post_init__(self):
        n, m = self.algebra.dim, self.carrier_dim
        for acts in (self.left_action, self.right_action):
            if len(acts) != n or any(a.shape != (m, m) for a in acts):
                raise DimensionMismatch(f"need {n} action matrices of shape {m}x{m}")

    def left(self, x) -> Matrix:
        """Matrix of m -> x.m for an algebra element x."""
        return _combine(x, self.left_action, self.carrier_dim)

    def right(self, x) -> Matrix:
        """Matrix of m -> m.x."""
        return _combine(x, self.right_action, self.carrier_dim)


def _combine(x, mats, m) -> Matrix:
    out = Matrix.zeros(m, m)
    for c, a in zip(x, mats):
        if c:
            out = out + a.scale(c)
    return out


def check_bimodule_axioms(b: Bimodule) -> ViolationReport:
    alg = b.algebra
    e = alg.basis()
    lam = list(b.left_action)
    rho = list(b.right_action)
    out = []
    for i, j in itertools.product(range(alg.dim), repeat=2):
        ab = bracket(alg, e[i], e[j])
        lam_ab, rho_ab = b.left(ab), b.right(ab)
        residuals = {
            "a(bm) = [ab]m + b(am)": lam[i] @ lam[j] - lam_ab - lam[j] @ lam[i],
            "a(mb) = (am)b + m[ab]": lam[i] @ rho[j] - rho[j] @ lam[i] - rho_ab,
            "m[ab] = (ma)b + a(mb)": rho_ab - rho[j] @ rho[i] - lam[i] @ rho[j],
        }
        for name, res in residuals.items():
            if not res.is_zero():
                out.append(Violation(name, (i, j), res.flatten()))
    return ViolationReport(tuple(out))


def regular_bimodule(alg: LeibnizAlgebra) -> Bimodule:
    """L acting on itself: left action l_x, right action r_x."""
    e = alg.basis()
    return Bimodule(alg, alg.dim, tuple(lmat(alg, v) for v in e), tuple(rmat(alg, v) for v in e))


def joint_kernel(b: Bimodule) -> Subspace:
    """{x in L : x acts as zero from both sides}."""
    n, m = b.algebra.dim, b.carrier_dim
    if n == 0:
        return Subspace.zero(0)
    if m == 0:
        return Subspace.full(n)
    left = Matrix.from_columns([a.flatten() for a in b.left_action], m * m)
    right = Matrix.from_columns([a.flatten() for a in b.right_action], m * m)
    return intersect(nullspace(left), nullspace(right))


def is_faithful(b: Bimodule) -> bool:
    return joint_kernel(b).is_zero()


def zero_bimodule(alg: LeibnizAlgebra, m: int) -> Bimodule:
    z = tuple(Matrix.zeros(m, m) for _ in range(alg.dim))
    return Bimodule(alg, m, z, z)


def swapped(b: Bimodule) -> Bimodule:
    """Exchange the left and right actions (generally not a bimodule)."""
    return Bimodule(b.algebra, b.carrier_dim, b.right_action, b.left_action)


"""Leibniz algebras of dimension at most two, invariant fingerprints, isomorphism witnesses."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache

from .algebra import (
    LeibnizAlgebra,
    bracket,
    check_left_leibniz,
    check_right_leibniz,
    is_lie,
    require_left_leibniz,
)
from .errors import NoMatch, VerificationError
from .exactla import Matrix, Subspace, quotient_data, vadd, vscale
from .radicals import nilradical, radical
from .structure import (
    commutant,
    derived_series,
    ker_ideal,
    left_center,
    lower_central_series,
    min_generators,
    right_center,
)

__all__ = [
    "Fingerprint",
    "CANONICAL_NAMES",
    "canonical_algebras",
    "canonical_algebra",
    "fingerprint",
    "Classification",
    "classify_dim_le2",
]

CANONICAL_NAMES = {1: ("a_1",), 2: ("a_2", "r_2", "(i)", "(ii)")}

_RELATIONS = {
    "a_1": ("a", {}),
    "a_2": ("ab", {}),
    "r_2": ("ab", {("a", "b"): {"b": 1}, ("b", "a"): {"b": -1}}),
    "(i)": ("ab", {("b", "b"): {"a": 1}}),
    "(ii)": ("ab", {("b", "a"): {"a": 1}, ("b", "b"): {"a": 1}}),
}


def canonical_algebra(name: str) -> LeibnizAlgebra:
    basis, rels = _RELATIONS[name]
    return LeibnizAlgebra.from_brackets(basis, rels, name=name)


@lru_cache(maxsize=None)
def _canonical_fingerprint(name: str) -> "Fingerprint":
    return fingerprint(canonical_algebra(name))


def canonical_algebras(dim: int) -> list:
    if dim not in CANONICAL_NAMES:
        raise ValueError(f"canonical algebras are listed for dimensions 1 and 2, not {dim}")
    return [canonical_algebra(name) for name in CANONICAL_NAMES[dim]]


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    is_lie: bool
    is_left_leibniz: bool
    is_right_leibniz: bool
    ker_dim: int
    left_center_dim: int
    right_center_dim: int
    derived_dims: tuple
    central_dims: tuple
    radical_dim: int
    nilradical_dim: int
    min_generators: int

    def as_dict(self) -> dict:
        d = asdict(self)
        d["derived_dims"] = list(self.derived_dims)
        d["central_dims"] = list(self.central_dims)
        return d


def fingerprint(alg: LeibnizAlgebra) -> Fingerprint:
    require_left_leibniz(alg)
    return Fingerprint(
        dim=alg.dim,
        is_lie=is_lie(alg),
        is_left_leibniz=check_left_leibniz(alg).ok,
        is_right_leibniz=check_right_leibniz(alg).ok,
        ker_dim=ker_ideal(alg).dim,
        left_center_dim=left_center(alg).dim,
        right_center_dim=right_center(alg).dim,
        derived_dims=tuple(derived_series(alg).dims),
        central_dims=tuple(lower_central_series(alg).dims),
        radical_dim=radical(alg).dim,
        nilradical_dim=nilradical(alg).dim,
        min_generators=min_generators(alg),
    )


@dataclass(frozen=True)
class Classification:
    name: str
    # columns: images of the canonical basis vectors (a, b) in the input basis
    isomorphism: Matrix


def _complement_vector(alg, s: Subspace):
    return quotient_data(s).section.column(0)


def _witness(alg: LeibnizAlgebra, name: str) -> Matrix:
    n = alg.dim
    if name in ("a_1", "a_2"):
        return Matrix.identity(n)
    d = commutant(alg)
    u = d.basis[0]
    w = _complement_vector(alg, d)
    if name == "r_2":
        lam = d.coordinates(bracket(alg, w, u))[0]
        return Matrix.from_columns([vscale(1 / lam, w), u], n)
    if name == "(i)":
        return Matrix.from_columns([bracket(alg, w, w), w], n)
    # (ii): scale so that [w, u] = u, then shift so that [w, w] != 0
    lam = d.coordinates(bracket(alg, w, u))[0]
    w = vscale(1 / lam, w)
    if not any(bracket(alg, w, w)):
        w = vadd(w, u)
    return Matrix.from_columns([bracket(alg, w, w), w], n)


def classify_dim_le2(alg: LeibnizAlgebra) -> Classification:
    """Name of the canonical algebra isomorphic to ``alg`` plus an explicit isomorphism."""
    if alg.dim not in CANONICAL_NAMES:
        raise ValueError(f"classification covers dimensions 1 and 2, got {alg.dim}")
    fp = fingerprint(alg)
    matches = [name for name in CANONICAL_NAMES[alg.dim]
               if _canonical_fingerprint(name) == fp]
    if len(matches) != 1:
        raise NoMatch(f"fingerprint {fp} matches {matches or 'no'} canonical algebra")
    name = matches[0]
    p = _witness(alg, name)
    target = canonical_algebra(name)
    if p.det() == 0 or alg.change_basis(p, target.basis_names).c != target.c:
        raise VerificationError(f"isomorphism witness for {name} failed")
    return Classification(name, p)

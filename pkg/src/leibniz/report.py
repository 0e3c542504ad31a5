"""Deterministic analysis reports (plain dicts of strings, ints and bools)."""
from __future__ import annotations

import json

from . import errors
from .algebra import (
    LeibnizAlgebra,
    check_left_leibniz,
    check_right_leibniz,
    commutator,
    derivation_matrices,
    identity_suite,
    is_derivation,
    is_lie,
    lmat,
    power_test_vectors,
)
from .classify import classify_dim_le2, fingerprint
from .exactla import Matrix, Subspace
from .levi import levi_decomposition, reductive_check
from .radicals import engel_flag, lie_flag, radical_report
from .structure import (
    derived_series,
    is_nilpotent,
    is_solvable,
    ker_ideal,
    left_center,
    lower_central_series,
    min_generators,
    right_center,
)

SECTIONS = ("series", "centers", "radical", "nilradical", "levi", "flag", "identities",
            "derivations", "classify")

# errors that describe the input rather than a defect of the computation
CONDITION_ERRORS = (errors.NotSplitOverField, errors.NotEngelNilpotent, errors.NotSolvable,
                    errors.NotLie)
VERIFICATION_ERRORS = (errors.NilradicalUnverified, errors.VerificationError,
                       errors.SplittingFailed, errors.NoMatch)


def q(x) -> str:
    return str(x)


def vector_json(v) -> list:
    return [q(a) for a in v]


def subspace_json(s: Subspace) -> dict:
    return {"dim": s.dim, "basis": [vector_json(v) for v in s.basis]}


def matrix_json(m: Matrix) -> list:
    return [[q(a) for a in r] for r in m.entries]


def violation_json(alg: LeibnizAlgebra, v) -> dict:
    names = alg.basis_names
    if v.identity.startswith("(r_x)^m"):
        label = power_test_vectors(alg)[v.indices[0]][0]
        witness = [label, str(v.indices[1])]
    else:
        witness = [names[i] for i in v.indices]
    return {"identity": v.identity,
            "witness": witness,
            "residual": vector_json(v.residual)}


def axioms_json(alg: LeibnizAlgebra) -> dict:
    left = check_left_leibniz(alg)
    right = check_right_leibniz(alg)
    return {
        "left_leibniz": left.ok,
        "right_leibniz": right.ok,
        "lie": is_lie(alg),
        "left_violations": [violation_json(alg, v) for v in left],
        "right_violations": [violation_json(alg, v) for v in right],
    }


class Analysis:
    """Collects report sections, converting typed errors into warnings."""

    def __init__(self, alg: LeibnizAlgebra):
        self.alg = alg
        self.warnings = []
        self.condition_failures = 0
        self.verification_failures = 0

    def guard(self, label, fn):
        try:
            return fn()
        except CONDITION_ERRORS as exc:
            self.condition_failures += 1
            self.warnings.append(f"{label}: {type(exc).__name__}: {exc}")
            return {"error": type(exc).__name__, "message": str(exc)}
        except VERIFICATION_ERRORS as exc:
            self.verification_failures += 1
            self.warnings.append(f"{label}: {type(exc).__name__}: {exc}")
            return {"error": type(exc).__name__, "message": str(exc)}


def _series(alg):
    d = derived_series(alg)
    c = lower_central_series(alg)
    nil, cls = is_nilpotent(alg)
    return {
        "derived": {"dims": d.dims, "terms": [subspace_json(t) for t in d.terms]},
        "lower_central": {"dims": c.dims, "terms": [subspace_json(t) for t in c.terms]},
        "solvable": is_solvable(alg),
        "nilpotent": nil,
        "nilpotency_class": cls,
        "min_generators": min_generators(alg),
    }


def _centers(alg):
    return {
        "ker": subspace_json(ker_ideal(alg)),
        "left_center": subspace_json(left_center(alg)),
        "right_center": subspace_json(right_center(alg)),
    }


def _flag_json(flag) -> dict:
    return {"adapted_basis": [vector_json(v) for v in flag.adapted_basis().columns()],
            "dims": [s.dim for s in flag.chain]}


def _derivations(alg):
    mats = derivation_matrices(alg)
    closed = all(is_derivation(alg, commutator(a, b)) for a in mats for b in mats)
    return {"dim": len(mats), "basis": [matrix_json(m) for m in mats],
            "closed_under_commutator": closed}


def _classify(alg):
    if alg.dim not in (1, 2):
        return {"applicable": False}
    res = classify_dim_le2(alg)
    nil, cls = is_nilpotent(alg)
    return {"applicable": True, "name": res.name, "isomorphism": matrix_json(res.isomorphism),
            "nilpotent": nil, "nilpotency_class": cls, "min_generators": min_generators(alg)}


def _levi(alg):
    lev = levi_decomposition(alg)
    red = reductive_check(alg)
    return {
        "semisimple_part": subspace_json(lev.semisimple_part),
        "radical_part": subspace_json(lev.radical_part),
        "verified": dict(lev.verified),
        "reductive": {
            "hypothesis_left_center_annihilated": red.hypothesis_left_center_annihilated,
            "hypothesis_quotient_semisimple": red.hypothesis_quotient_semisimple,
            "conclusion": dict(red.conclusion),
            "reductive": red.reductive,
        },
    }


def analyze(alg: LeibnizAlgebra, sections=None, flag_kind=None) -> tuple:
    """Build the report dict for ``alg``.

    Returns ``(report, analysis)``; ``analysis`` carries warning counts for
    exit-status decisions.
    """
    sections = set(SECTIONS if not sections else sections)
    an = Analysis(alg)
    rep = {
        "algebra": {"name": alg.name, "dim": alg.dim, "basis": list(alg.basis_names)},
        "axioms": axioms_json(alg),
    }
    rep["fingerprint"] = an.guard("fingerprint", lambda: fingerprint(alg).as_dict())
    if "series" in sections:
        rep["series"] = _series(alg)
    if "centers" in sections:
        rep["centers"] = _centers(alg)
    if "radical" in sections or "nilradical" in sections:
        def rad():
            rr = radical_report(alg)
            an.warnings.extend(rr.warnings)
            out = {"checks": dict(rr.checks)}
            if "radical" in sections:
                out["radical"] = subspace_json(rr.radical)
            if "nilradical" in sections:
                out["nilradical"] = subspace_json(rr.nilradical)
            return out
        rep["radicals"] = an.guard("radicals", rad)
    if "flag" in sections:
        flags = {}
        explicit = flag_kind is not None
        if flag_kind in (None, "engel"):
            if explicit or all(lmat(alg, e).is_nilpotent() for e in alg.basis()):
                flags["engel"] = an.guard("engel flag", lambda: _flag_json(engel_flag(alg)))
            else:
                flags["engel"] = {"applicable": False}
        if flag_kind in (None, "lie"):
            if explicit or is_solvable(alg):
                flags["lie"] = an.guard("lie flag", lambda: _flag_json(lie_flag(alg)))
            else:
                flags["lie"] = {"applicable": False}
        rep["flags"] = flags
    if "levi" in sections:
        rep["levi"] = an.guard("levi", lambda: _levi(alg))
    if "identities" in sections:
        suite = identity_suite(alg)
        rep["identities"] = {"ok": suite.ok,
                             "violations": [violation_json(alg, v) for v in suite][:20]}
    if "derivations" in sections:
        rep["derivations"] = _derivations(alg)
    if "classify" in sections:
        rep["classification"] = an.guard("classify", lambda: _classify(alg))
    rep["warnings"] = list(an.warnings)
    return rep, an


def to_json(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def to_text(rep: dict, indent: int = 0) -> str:
    """Indented human-readable rendering of a report dict."""
    lines = []
    pad = "  " * indent
    for key in sorted(rep):
        val = rep[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(to_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(to_text(item, indent + 1))
        elif isinstance(val, bool):
            lines.append(f"{pad}{key}: {'yes' if val else 'no'}")
        else:
            lines.append(f"{pad}{key}: {_flat(val)}")
    return "\n".join(x for x in lines if x)


def _flat(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_flat(v) for v in val) + "]"
    return str(val)

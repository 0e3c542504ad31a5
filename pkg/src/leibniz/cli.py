"""Command-line interface.

Exit codes: 0 ok, 1 axiom/validation failure, 2 parse or I/O error,
3 internal verification failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus, fileformat, report
from .algebra import is_lie
from .errors import LeibnizError, ParseError
from .exactla import image
from .fileformat import AlgebraFile
from .radicals import nilradical
from .reps import check_bimodule_axioms, is_faithful
from .structure import liezation

EXIT_OK, EXIT_AXIOM, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


def _load(path):
    try:
        return fileformat.load(path)
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _emit(rep: dict, pretty: bool) -> None:
    sys.stdout.write(report.to_text(rep) + "\n" if pretty else report.to_json(rep))


def _validation_summary(alg) -> str:
    ax = report.axioms_json(alg)

    def part(label, ok, violations):
        if ok:
            return f"{label}: yes"
        # report the witness with the fewest distinct basis elements
        w = min((v["witness"] for v in violations), key=lambda w: len(set(w)))
        return f"{label}: no (witness {','.join(w)})"

    return "; ".join([part("left Leibniz", ax["left_leibniz"], ax["left_violations"]),
                      part("right Leibniz", ax["right_leibniz"], ax["right_violations"])])


def cmd_validate(args) -> int:
    af = _load(args.path)
    alg = af.algebra
    ax = report.axioms_json(alg)
    rep = {"file": str(args.path), "dim": alg.dim, "summary": _validation_summary(alg), **ax}
    if af.bimodule is not None:
        rep["bimodule"] = _bimodule_json(af)
    _emit(rep, args.pretty)
    return EXIT_OK if ax["left_leibniz"] else EXIT_AXIOM


def cmd_analyze(args) -> int:
    af = _load(args.path)
    alg = af.algebra
    ax = report.axioms_json(alg)
    if not ax["left_leibniz"]:
        _emit({"file": str(args.path), "summary": _validation_summary(alg), **ax}, args.pretty)
        return EXIT_AXIOM
    sections = [s for s in report.SECTIONS if getattr(args, s, False)]
    if args.flag and "flag" not in sections:
        sections.append("flag")
    rep, an = report.analyze(alg, sections, args.flag)
    rep["file"] = Path(args.path).name
    _emit(rep, args.pretty)
    if an.verification_failures:
        return EXIT_INTERNAL
    if args.strict and an.condition_failures:
        return EXIT_AXIOM
    return EXIT_OK


def cmd_liezation(args) -> int:
    af = _load(args.path)
    alg = af.algebra
    if not report.axioms_json(alg)["left_leibniz"]:
        print(f"error: {args.path}: not a left Leibniz algebra ({_validation_summary(alg)})",
              file=sys.stderr)
        return EXIT_AXIOM
    try:
        lz = liezation(alg)
    except LeibnizError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    name = af.name
    meta = {"name": f"{name}_liezation" if name else "liezation",
            "source": f"L/Ker(L) of {Path(args.path).name}"}
    try:
        fileformat.dump(AlgebraFile(lz.algebra, meta), args.out_path)
    except OSError as exc:
        print(f"error: {args.out_path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    rep = {"input": Path(args.path).name, "output": str(args.out_path),
           "dim": lz.algebra.dim, "ker_dim": lz.ideal.dim, "lie": is_lie(lz.algebra)}
    _emit(rep, args.pretty)
    return EXIT_OK


def cmd_classify(args) -> int:
    af = _load(args.path)
    alg = af.algebra
    if not report.axioms_json(alg)["left_leibniz"]:
        _emit({"file": str(args.path), "summary": _validation_summary(alg)}, args.pretty)
        return EXIT_AXIOM
    rep, an = report.analyze(alg, ["classify"])
    out = {"file": Path(args.path).name, "fingerprint": rep["fingerprint"],
           "classification": rep["classification"], "warnings": rep["warnings"]}
    _emit(out, args.pretty)
    return EXIT_INTERNAL if an.verification_failures else EXIT_OK


def _bimodule_json(af: AlgebraFile) -> dict:
    b = af.bimodule
    axioms = check_bimodule_axioms(b)
    return {"carrier_dim": b.carrier_dim, "axioms_ok": axioms.ok,
            "faithful": axioms.ok and is_faithful(b),
            "within_dim_bound": b.carrier_dim <= af.algebra.dim + 1}


def _automorphism_ok(alg, p) -> bool:
    if p.det() == 0 or alg.change_basis(p).c != alg.c:
        return False
    nil = nilradical(alg)
    return image(p, nil) == nil


def cmd_corpus_check(args) -> int:
    if args.paths:
        files = [(str(p), _load(p)) for p in args.paths]
    else:
        files = [(n, corpus.load(n)) for n in corpus.names()]
    results, status = {}, EXIT_OK
    for name, af in files:
        alg = af.algebra
        ax = report.axioms_json(alg)
        entry = {"left_leibniz": ax["left_leibniz"], "right_leibniz": ax["right_leibniz"],
                 "lie": ax["lie"]}
        ok = ax["left_leibniz"]
        if af.bimodule is not None:
            entry["bimodule"] = _bimodule_json(af)
            ok = ok and all(entry["bimodule"].values())
        if af.automorphisms:
            entry["automorphisms_ok"] = all(_automorphism_ok(alg, p) for p in af.automorphisms)
            ok = ok and entry["automorphisms_ok"]
        entry["ok"] = ok
        if not ok:
            status = EXIT_AXIOM
        results[name] = entry
    _emit({"files": results, "ok": status == EXIT_OK}, args.pretty)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leibniz", description=__doc__.splitlines()[0])
    out = argparse.ArgumentParser(add_help=False)
    fmt = out.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", default=False,
                     help="machine-readable JSON output (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true",
                     help="human-readable text output")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[out], help="parse a file and check the axioms")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", parents=[out], help="full structure report")
    a.add_argument("path")
    for s in report.SECTIONS:
        if s != "flag":
            a.add_argument(f"--{s}", action="store_true", help=f"include the {s} section")
    a.add_argument("--flag", choices=("engel", "lie"), help="compute a triangularizing flag")
    a.add_argument("--strict", action="store_true",
                   help="exit nonzero when a computation reports a typed failure")
    a.set_defaults(func=cmd_analyze)

    lz = sub.add_parser("liezation", parents=[out], help="write L/Ker(L) to a file")
    lz.add_argument("path")
    lz.add_argument("out_path")
    lz.set_defaults(func=cmd_liezation)

    c = sub.add_parser("classify", parents=[out], help="identify a dimension <= 2 algebra")
    c.add_argument("path")
    c.set_defaults(func=cmd_classify)

    cc = sub.add_parser("corpus-check", parents=[out],
                        help="validate the bundled corpus (or the given files)")
    cc.add_argument("paths", nargs="*")
    cc.set_defaults(func=cmd_corpus_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except LeibnizError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())


import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibniz import cli, corpus, fileformat
from leibniz.algebra import LeibnizAlgebra
from leibniz.errors import ParseError
from leibniz.fileformat import AlgebraFile, parse_rational

L2II = corpus.path("L2ii")


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_rational():
    assert parse_rational("6/4") == F(3, 2)
    assert parse_rational("-2") == -2
    for bad in ("1/0", "0.5", "1e3", "a", "", "1/-2"):
        with pytest.raises(ParseError):
            parse_rational(bad)
    with pytest.raises(ParseError):
        parse_rational(0.5)


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as exc:
        fileformat.loads('{"dim": 1,\n  "basis": ["a"')
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        fileformat.loads('{"dim": 2, "basis": ["a", "b"], "brackets": {"0,2": {"0": "1"}}}')
    with pytest.raises(ParseError):
        fileformat.loads('{"dim": 2, "basis": ["a", "a"]}')


tensors = st.integers(1, 3).flatmap(lambda n: st.lists(
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
    min_size=n ** 3, max_size=n ** 3).map(
    lambda flat: [[flat[(i * n + j) * n:(i * n + j + 1) * n] for j in range(n)]
                  for i in range(n)]))


@settings(max_examples=50, deadline=None)
@given(tensors)
def test_round_trip(c):
    alg = LeibnizAlgebra.from_tensor(c)
    af = AlgebraFile(alg, {"name": "t"})
    back = fileformat.loads(fileformat.dumps(af))
    assert back.algebra.c == alg.c and back.metadata == af.metadata


def test_corpus_round_trip():
    for name in corpus.names():
        af = corpus.load(name)
        back = fileformat.loads(fileformat.dumps(af))
        assert back.algebra.c == af.algebra.c
        assert back.bimodule == af.bimodule
        assert back.automorphisms == af.automorphisms
        assert af.name == name


def test_cli_validate(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", L2II, "--pretty")
    assert code == 0
    assert "left Leibniz: yes; right Leibniz: no (witness b,b,b)" in out
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 1, "basis": ["a"], "brackets": {"0,0": {"0": "1"}}}')
    code, out, _ = run(capsys, "validate", bad)
    assert code == 1 and json.loads(out)["left_violations"][0]["witness"] == ["a", "a", "a"]
    code, out, _ = run(capsys, "validate", corpus.path("a2"), "--pretty")
    assert code == 0 and "left Leibniz: yes; right Leibniz: yes" in out


def test_cli_io_and_parse_errors(capsys, tmp_path):
    code, _, err = run(capsys, "validate", tmp_path / "missing.json")
    assert code == 2 and "error" in err
    broken = tmp_path / "broken.json"
    broken.write_text('{"dim": 1,\n "basis": ["a"')
    code, _, err = run(capsys, "analyze", broken)
    assert code == 2 and "line 2" in err


def test_cli_analyze_sections(capsys):
    code, out, _ = run(capsys, "analyze", corpus.path("L2i"), "--classify")
    rep = json.loads(out)
    assert code == 0
    assert rep["classification"]["name"] == "(i)"
    assert rep["classification"]["nilpotency_class"] == 2
    assert rep["classification"]["min_generators"] == 1
    code, out, _ = run(capsys, "analyze", corpus.path("sl2_k2"), "--levi")
    lev = json.loads(out)["levi"]
    assert lev["semisimple_part"]["dim"] == 3 and lev["radical_part"]["dim"] == 2
    assert all(lev["verified"].values())


def test_cli_strict_and_warnings(capsys):
    rot2 = corpus.path("rot2")
    code, out, _ = run(capsys, "analyze", rot2, "--flag=lie")
    assert code == 0
    assert any("NotSplitOverField" in w for w in json.loads(out)["warnings"])
    code, _, _ = run(capsys, "analyze", rot2, "--flag=lie", "--strict")
    assert code == 1
    code, out, _ = run(capsys, "analyze", L2II, "--nilradical")
    rep = json.loads(out)
    assert code == 0 and rep["radicals"]["nilradical"]["dim"] == 1
    assert any("differs" in w for w in rep["warnings"])


def test_cli_liezation(capsys, tmp_path):
    for name in ("L2ii", "L2i"):
        out_path = tmp_path / f"{name}_lz.json"
        code, _, _ = run(capsys, "liezation", corpus.path(name), out_path)
        assert code == 0
        af = fileformat.load(out_path)
        assert af.algebra.dim == 1 and not any(af.algebra.c[0][0])
        code, out, _ = run(capsys, "validate", out_path)
        assert json.loads(out)["lie"] is True
    out_path = tmp_path / "sl2_lz.json"
    run(capsys, "liezation", corpus.path("sl2"), out_path)
    assert fileformat.load(out_path).algebra.c == corpus.algebra("sl2").c


def test_cli_classify_and_corpus_check(capsys):
    code, out, _ = run(capsys, "classify", L2II)
    assert code == 0 and json.loads(out)["classification"]["name"] == "(ii)"
    code, out, _ = run(capsys, "corpus-check")
    assert code == 0 and json.loads(out)["ok"]


def test_cli_deterministic(capsys):
    code1, a, _ = run(capsys, "analyze", corpus.path("sl2_plus_L2ii"))
    code2, b, _ = run(capsys, "analyze", corpus.path("sl2_plus_L2ii"))
    assert code1 == code2 and a == b

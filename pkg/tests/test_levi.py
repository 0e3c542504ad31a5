import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibniz import corpus
from leibniz.algebra import LeibnizAlgebra, check_left_leibniz, is_lie
from leibniz.exactla import span
from leibniz.levi import (
    is_semisimple,
    levi_decomposition,
    lie_levi,
    reductive_check,
    verify_levi,
)
from leibniz.randomgen import random_basis_change
from leibniz.radicals import radical


def hemisemidirect():
    """sl2 acting on k^2 from the left only: [x, v] = x.v, [v, x] = 0."""
    rels = {("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
            ("h", "e"): {"e": 2}, ("e", "h"): {"e": -2},
            ("h", "f"): {"f": -2}, ("f", "h"): {"f": 2},
            ("e", "v2"): {"v1": 1}, ("f", "v1"): {"v2": 1},
            ("h", "v1"): {"v1": 1}, ("h", "v2"): {"v2": -1}}
    return LeibnizAlgebra.from_brackets(["e", "f", "h", "v1", "v2"], rels, name="hsd")


@pytest.mark.parametrize("name", ["sl2_k2", "sl2_plus_L2ii"])
def test_levi_corpus(name):
    alg = corpus.algebra(name)
    t = time.perf_counter()
    lev = levi_decomposition(alg)
    assert time.perf_counter() - t < 1.0
    assert lev.semisimple_part.dim == 3 and lev.radical_part.dim == 2
    assert all(lev.verified.values())
    assert verify_levi(alg, lev.semisimple_part)


def test_levi_hemisemidirect():
    alg = hemisemidirect()
    assert check_left_leibniz(alg).ok and not is_lie(alg)
    lev = levi_decomposition(alg)
    assert lev.semisimple_part == span([(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0)], 5)


@pytest.mark.parametrize("name", ["sl2_k2", "sl2_plus_L2ii", "sl2_plus_k"])
@settings(max_examples=5, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_levi_after_basis_change(name, seed):
    alg, _ = random_basis_change(corpus.algebra(name), seed)
    lev = levi_decomposition(alg)
    assert lev.semisimple_part.dim == 3
    assert verify_levi(alg, lev.semisimple_part)


def test_levi_degenerate_cases(algs):
    for name in ("a1", "L2i", "L2ii", "r2", "heis3", "rot2", "cyc3"):
        lev = levi_decomposition(algs[name])
        assert lev.semisimple_part.is_zero() and lev.radical_part.is_full()
    sl2 = algs["sl2"]
    assert levi_decomposition(sl2).semisimple_part.is_full()
    assert lie_levi(sl2).is_full()


def test_wrong_complement_rejected():
    alg = corpus.algebra("sl2_k2")
    # span{e + v1, f, h} is a vector-space complement to the radical but not a subalgebra
    bad = span([(1, 0, 0, 1, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0)], 5)
    assert (bad + radical(alg)).is_full()
    assert not verify_levi(alg, bad)


def test_semisimple(sl2, L2ii):
    assert is_semisimple(sl2)
    assert not is_semisimple(corpus.algebra("sl2_plus_k"))
    assert not is_semisimple(L2ii)


def test_reductive():
    rep = reductive_check(corpus.algebra("sl2_plus_k"))
    assert rep.hypothesis and rep.reductive
    rep = reductive_check(corpus.algebra("sl2_k2"))
    assert not rep.hypothesis and not rep.reductive
    # sl2 + L2ii: Z^l = span{a} but [b, a] = a, so [L, Z^l] != 0
    rep = reductive_check(corpus.algebra("sl2_plus_L2ii"))
    assert not rep.hypothesis_left_center_annihilated

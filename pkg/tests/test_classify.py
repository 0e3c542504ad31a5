import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibniz import corpus
from leibniz.algebra import LeibnizAlgebra
from leibniz.classify import (
    CANONICAL_NAMES,
    canonical_algebra,
    canonical_algebras,
    classify_dim_le2,
    fingerprint,
)
from leibniz.errors import NotLeftLeibniz
from leibniz.randomgen import random_basis_change


def test_counts():
    assert len(canonical_algebras(1)) == 1
    assert len(canonical_algebras(2)) == 4
    with pytest.raises(ValueError):
        canonical_algebras(3)


def test_fingerprints_separate_classes():
    fps = [fingerprint(a) for a in canonical_algebras(2)]
    for f, g in itertools.combinations(fps, 2):
        assert f != g


def test_fingerprint_values():
    fp = fingerprint(canonical_algebra("(i)"))
    assert (fp.dim, fp.is_lie, fp.ker_dim, fp.left_center_dim, fp.right_center_dim,
            fp.min_generators) == (2, False, 1, 1, 1, 1)
    assert fp.central_dims == (1, 0)
    fp = fingerprint(canonical_algebra("(ii)"))
    assert (fp.is_right_leibniz, fp.ker_dim, fp.left_center_dim, fp.right_center_dim,
            fp.radical_dim, fp.nilradical_dim) == (False, 1, 1, 1, 2, 1)


@pytest.mark.parametrize("name", [n for names in CANONICAL_NAMES.values() for n in names])
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10 ** 9))
def test_basis_change_round_trip(name, seed):
    target = canonical_algebra(name)
    alg, _ = random_basis_change(target, seed)
    res = classify_dim_le2(alg)
    assert res.name == name
    assert alg.change_basis(res.isomorphism).c == target.c


def test_corpus_dim2_names():
    expected = {"a1": "a_1", "a2": "a_2", "r2": "r_2", "L2i": "(i)", "L2ii": "(ii)"}
    for file, name in expected.items():
        assert classify_dim_le2(corpus.algebra(file)).name == name


def test_rejections():
    with pytest.raises(ValueError):
        classify_dim_le2(corpus.algebra("heis3"))
    bad = LeibnizAlgebra.from_brackets("a", {("a", "a"): {"a": 1}})
    with pytest.raises(NotLeftLeibniz):
        classify_dim_le2(bad)

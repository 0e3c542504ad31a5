import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibniz import corpus
from leibniz.algebra import lmat, rmat
from leibniz.errors import NotEngelNilpotent, NotLie, NotSplitOverField
from leibniz.exactla import Matrix, image, span
from leibniz.radicals import (
    degeneracy_failures,
    engel_flag,
    killing_form,
    lie_flag,
    lie_radical,
    liezation_preimage_nilradical,
    nilradical,
    radical,
    radical_report,
    strong_engel_check,
    verify_nilradical,
)
from leibniz.randomgen import random_basis_change
from leibniz.structure import (
    ideal_closure,
    is_nilpotent,
    is_nilpotent_subspace,
    is_solvable,
    is_solvable_subspace,
)


def grid_oracle(alg, pred, coeffs=(-1, 0, 1, 2)):
    """Sum of ideal closures of grid vectors whose closure satisfies ``pred``."""
    vecs = []
    for v in itertools.product(coeffs, repeat=alg.dim):
        c = ideal_closure(alg, span([v], alg.dim))
        if pred(alg, c):
            vecs.extend(c.basis)
    return span(vecs, alg.dim)


EXPECTED = {
    # name: (radical basis, nilradical basis)
    "a1": ([(1,)], [(1,)]),
    "L2i": ([(1, 0), (0, 1)], [(1, 0), (0, 1)]),
    "L2ii": ([(1, 0), (0, 1)], [(1, 0)]),
    "r2": ([(1, 0), (0, 1)], [(0, 1)]),
    "heis3": ([(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    "rot2": ([(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 0), (0, 0, 1)]),
    "sl2": ([], []),
    "sl2_plus_k": ([(0, 0, 0, 1)], [(0, 0, 0, 1)]),
    "sl2_k2": ([(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)], [(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]),
    "sl2_plus_L2ii": ([(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)], [(0, 0, 0, 1, 0)]),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_hand_computed_radicals(name):
    alg = corpus.algebra(name)
    rad, nil = EXPECTED[name]
    assert radical(alg) == span(rad, alg.dim)
    assert nilradical(alg) == span(nil, alg.dim)


@pytest.mark.parametrize("name", ["L2i", "L2ii", "r2", "heis3", "rot2", "cyc3", "sl2"])
def test_radicals_against_grid_oracle(name):
    alg = corpus.algebra(name)
    assert radical(alg) == grid_oracle(alg, is_solvable_subspace)
    assert nilradical(alg) == grid_oracle(alg, is_nilpotent_subspace)


def test_killing_forms(sl2):
    # basis e, f, h
    assert killing_form(sl2) == Matrix.from_rows([[0, 4, 0], [4, 0, 0], [0, 0, 8]])
    assert killing_form(corpus.algebra("r2")) == Matrix.from_rows([[1, 0], [0, 0]])


def test_lie_radical_requires_lie(L2ii):
    with pytest.raises(NotLie):
        lie_radical(L2ii)


@pytest.mark.parametrize("name", ["L2ii", "r2", "rot2", "sl2_plus_L2ii", "sl2_k2"])
@settings(max_examples=5, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_radicals_equivariant_under_basis_change(name, seed):
    alg = corpus.algebra(name)
    new, p = random_basis_change(alg, seed)
    # p carries new coordinates to old ones
    assert image(p, radical(new)) == radical(alg)
    assert image(p, nilradical(new)) == nilradical(alg)


def test_nilradical_verification_L2ii(L2ii):
    nil = nilradical(L2ii)
    assert verify_nilradical(L2ii, nil) == {"ideal": True, "nilpotent": True,
                                           "maximal_probe": True}
    # a non-maximal nilpotent ideal fails the probe
    assert not verify_nilradical(corpus.algebra("heis3"), span([(0, 0, 1)], 3))["maximal_probe"]
    pre = liezation_preimage_nilradical(L2ii)
    assert pre.is_full() and not is_nilpotent_subspace(L2ii, pre)
    rep = radical_report(L2ii)
    assert any("differs" in w for w in rep.warnings)


def test_radical_report_checks(algs):
    for name, alg in algs.items():
        rep = radical_report(alg)
        for key, ok in rep.checks.items():
            if key == "right_center_in_nilradical" and name in ("L2ii", "sl2_plus_L2ii"):
                # Z^r = span{a - b} is not inside N = span{a}
                assert not ok
            else:
                assert ok, (name, key)


def test_engel_flag_hand_value(heis3):
    flag = engel_flag(heis3)
    assert [s.dim for s in flag.chain] == [0, 1, 2, 3]
    assert flag.chain[1] == span([(0, 0, 1)], 3)
    for e in heis3.basis():
        assert flag.is_invariant(lmat(heis3, e), strict=True)
        assert flag.is_invariant(rmat(heis3, e), strict=True)


def test_engel_flag_refuses_non_nilpotent(L2ii, sl2):
    for alg in (L2ii, sl2):
        with pytest.raises(NotEngelNilpotent):
            engel_flag(alg)


def test_strong_engel(algs):
    for name, alg in algs.items():
        assert strong_engel_check(alg) == is_nilpotent(alg)[0], name


def test_lie_flag(L2ii):
    flag = lie_flag(L2ii)
    assert flag.chain[1] == span([(1, 0)], 2)
    for name in ("r2", "heis3", "L2i", "cyc3"):
        alg = corpus.algebra(name)
        f = lie_flag(alg)
        for e in alg.basis():
            assert f.is_invariant(lmat(alg, e))


def test_lie_flag_not_split():
    with pytest.raises(NotSplitOverField):
        lie_flag(corpus.algebra("rot2"))


def test_degeneracy(algs):
    r = random.Random(5)
    for alg in algs.values():
        vecs = alg.basis() + [tuple(F(r.randint(-5, 5), r.randint(1, 3)) for _ in range(alg.dim))
                              for _ in range(10)]
        assert degeneracy_failures(alg, vecs) == []


def test_solvable_iff_commutant_nilpotent(algs):
    from leibniz.structure import commutant
    for name, alg in algs.items():
        assert is_solvable(alg) == is_nilpotent_subspace(alg, commutant(alg)), name

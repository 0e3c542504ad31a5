import pytest

from leibniz import corpus
from leibniz.algebra import LeibnizAlgebra
from leibniz.errors import DimensionMismatch
from leibniz.exactla import Matrix, Subspace
from leibniz.reps import (
    Bimodule,
    check_bimodule_axioms,
    is_faithful,
    joint_kernel,
    regular_bimodule,
    swapped,
    zero_bimodule,
)
from leibniz.structure import left_center, right_center


def test_regular_bimodule_axioms(algs):
    for name, alg in algs.items():
        assert check_bimodule_axioms(regular_bimodule(alg)).ok, name


def test_joint_kernel_of_regular_is_intersection_of_centers(algs):
    for alg in algs.values():
        assert joint_kernel(regular_bimodule(alg)) == (left_center(alg) & right_center(alg))


def test_abelian_regular_not_faithful():
    a1 = LeibnizAlgebra.abelian(1)
    assert not is_faithful(regular_bimodule(a1))
    assert joint_kernel(zero_bimodule(a1, 3)).is_full()


def test_shipped_fixtures():
    fixtures = corpus.bimodule_fixtures()
    assert set(fixtures) == {f"bimodule_{n}" for n in ("a1", "a2", "r2", "L2i", "L2ii")}
    for name, af in fixtures.items():
        assert af.algebra.c == corpus.algebra(name[len("bimodule_"):]).c
        b = af.bimodule
        assert b is not None, name
        assert check_bimodule_axioms(b).ok, name
        assert is_faithful(b), name
        assert b.carrier_dim <= af.algebra.dim + 1


def test_hand_checked_rank_one_fixture():
    a1 = LeibnizAlgebra.abelian(1)
    e01 = Matrix.from_rows([[0, 1], [0, 0]])
    b = Bimodule(a1, 2, (e01,), (Matrix.zeros(2, 2),))
    assert check_bimodule_axioms(b).ok and is_faithful(b)
    # m[ab] = (ma)b + a(mb) with rho = identity reads 0 = 1 + 0
    bad = Bimodule(a1, 1, (Matrix.zeros(1, 1),), (Matrix.identity(1),))
    rep = check_bimodule_axioms(bad)
    assert [v.identity for v in rep] == ["m[ab] = (ma)b + a(mb)"]


def test_swapped_regular_L2ii_fails(L2ii):
    # with both actions swapped the first axiom needs r_b r_b = r_a + r_b r_b
    assert not check_bimodule_axioms(swapped(regular_bimodule(L2ii))).ok


def test_shape_validation(L2ii):
    with pytest.raises(DimensionMismatch):
        Bimodule(L2ii, 2, (Matrix.identity(2),), (Matrix.identity(2),) * 2)
    assert joint_kernel(zero_bimodule(L2ii, 0)) == Subspace.full(2)

import itertools

import pytest

from leibniz import corpus
from leibniz.algebra import LeibnizAlgebra, bracket, is_lie
from leibniz.errors import NotAnIdeal
from leibniz.exactla import Subspace, span
from leibniz.structure import (
    commutant,
    derived_series,
    generates,
    generates_by_commutant,
    ideal_closure,
    is_ideal,
    is_left_ideal,
    is_nilpotent,
    is_right_ideal,
    is_solvable,
    is_subalgebra,
    ker_ideal,
    left_center,
    left_normalizer,
    liezation,
    liezation_minimality_probe,
    lower_central_series,
    min_generators,
    product_subspace,
    quotient,
    right_center,
    right_normalizer,
    subalgebra_closure,
)


def brute_span_of_products(alg, a, b):
    return span([bracket(alg, x, y) for x in a.basis for y in b.basis], alg.dim)


def test_L2ii_hand_values(L2ii):
    a_line = span([(1, 0)], 2)
    assert ker_ideal(L2ii) == a_line
    assert left_center(L2ii) == a_line
    # [b, s a + t b] = (s + t) a vanishes iff s = -t
    assert right_center(L2ii) == span([(1, -1)], 2)
    assert derived_series(L2ii).dims == [1, 0]
    lcs = lower_central_series(L2ii)
    assert lcs.dims == [1] and lcs.stabilized and not lcs.reaches_zero
    assert is_solvable(L2ii) and is_nilpotent(L2ii) == (False, None)


def test_bracket_of_central_term_with_L_is_one_sided(L2ii):
    full = Subspace.full(2)
    c1 = lower_central_series(L2ii).terms[0]
    assert product_subspace(L2ii, c1, full).is_zero()
    assert product_subspace(L2ii, full, c1) == c1


def test_centers_differ_cyc3():
    alg = corpus.algebra("cyc3")
    assert left_center(alg) == span([(0, 1, 0), (0, 0, 1)], 3)
    assert right_center(alg) == span([(0, 0, 1)], 3)
    assert ker_ideal(alg) == span([(0, 1, 0)], 3) + span([(0, 0, 1)], 3)
    # C^1 = span{y, z}, C^2 = span{z}, C^3 = 0
    assert lower_central_series(alg).dims == [2, 1, 0]
    assert is_nilpotent(alg) == (True, 3)
    assert min_generators(alg) == 1


def test_nilpotency_classes(L2i, heis3, sl2):
    assert is_nilpotent(L2i) == (True, 2)
    assert is_nilpotent(heis3) == (True, 2)
    assert is_nilpotent(LeibnizAlgebra.abelian(3)) == (True, 1)
    assert is_nilpotent(sl2) == (False, None)
    assert not is_solvable(sl2)
    assert derived_series(sl2).dims == [3]


def test_product_subspace_matches_brute_force(algs):
    for alg in algs.values():
        e = alg.basis()
        subsets = [span(s, alg.dim) for r in range(alg.dim + 1)
                   for s in itertools.combinations(e, r)][:12]
        for a, b in itertools.product(subsets, repeat=2):
            assert product_subspace(alg, a, b) == brute_span_of_products(alg, a, b)


def test_series_terms_are_ideals_and_nested(algs):
    for alg in algs.values():
        for res in (derived_series(alg), lower_central_series(alg)):
            for t in res.terms:
                assert is_ideal(alg, t)
            for big, small in zip(res.terms, res.terms[1:]):
                assert small < big


def test_ideal_predicates(L2ii):
    b_line = span([(0, 1)], 2)
    assert not is_left_ideal(L2ii, b_line) and not is_right_ideal(L2ii, b_line)
    assert is_subalgebra(L2ii, b_line) is False  # [b,b] = a
    assert ideal_closure(L2ii, b_line).is_full()
    assert subalgebra_closure(L2ii, b_line).is_full()
    with pytest.raises(NotAnIdeal):
        quotient(L2ii, b_line)


def test_normalizers_hand_values(L2ii):
    b_line = span([(0, 1)], 2)
    # [s a + t b, b] = t a lies in span{b} iff t = 0
    assert left_normalizer(L2ii, b_line) == span([(1, 0)], 2)
    # [b, s a + t b] = (s + t) a lies in span{b} iff s + t = 0
    assert right_normalizer(L2ii, b_line) == span([(1, -1)], 2)


def test_right_normalizer_of_ideal_is_subalgebra(algs):
    for alg in algs.values():
        for t in derived_series(alg).terms + (ker_ideal(alg), left_center(alg)):
            if is_ideal(alg, t):
                assert is_subalgebra(alg, right_normalizer(alg, t))
                assert is_subalgebra(alg, left_normalizer(alg, t))


def test_liezation(L2ii, L2i, sl2, algs):
    for alg in (L2ii, L2i):
        q = liezation(alg)
        assert q.algebra.dim == 1 and is_lie(q.algebra)
    assert liezation(sl2).algebra.c == sl2.c
    for alg in algs.values():
        assert is_lie(liezation(alg).algebra)
        assert liezation_minimality_probe(alg)


def test_generation(L2i, heis3, algs):
    assert generates(L2i, span([(0, 1)], 2))
    assert not generates(L2i, span([(1, 0)], 2))
    assert min_generators(L2i) == 1 and min_generators(heis3) == 2
    assert min_generators(LeibnizAlgebra.abelian(4)) == 4
    # the linear criterion is exact for nilpotent algebras
    for alg in algs.values():
        if is_nilpotent(alg)[0]:
            for r in range(alg.dim + 1):
                for s in itertools.combinations(alg.basis(), r):
                    v = span(s, alg.dim)
                    assert generates(alg, v) == generates_by_commutant(alg, v)


def test_linear_criterion_fails_without_nilpotency():
    r2 = corpus.algebra("r2")
    v = span([(1, 0)], 2)
    assert generates_by_commutant(r2, v) and not generates(r2, v)


def test_commutant(L2ii, heis3):
    assert commutant(L2ii) == span([(1, 0)], 2)
    assert commutant(heis3) == span([(0, 0, 1)], 3)

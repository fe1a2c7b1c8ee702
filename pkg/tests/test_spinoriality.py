from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from pinlift.characters import CharTriple, special_triple
from pinlift.partitions import conjugate, dimension, enumerate_partitions, epsilon
from pinlift.reps import ExplicitTriple, PermModule, Specht, Sum, regular, sign, standard, triple_of, trivial
from pinlift.spinoriality import (
    AnIrreducibleLabel,
    Variant,
    classify_an_irreducible,
    classify_an_restriction,
    classify_product,
    classify_product_triples,
    classify_sn,
    classify_triple_an,
    density_sweep,
    is_achiral_spinorial,
    product_five_conditions,
)

from oracles import brute_product_conditions


@pytest.mark.parametrize(
    "shape, chiral, spinorial",
    [
        ((3, 1), True, False),
        ((3, 1, 1), True, True),
        ((2, 2), True, False),
        ((2, 1, 1), False, False),
        ((3, 2, 1), False, True),
        ((4,), False, True),
        ((1, 1, 1, 1), True, False),
    ],
)
def test_specht_examples(shape, chiral, spinorial):
    r = classify_sn(Specht(shape))
    assert (r.chiral, r.spinorial) == (chiral, spinorial)
    assert r.lift_count == (2 if spinorial else 0)


def test_mod8_form_agrees_with_g_h_form():
    # chi(1) - chi(s1) in {0, 6} mod 8 and chi(1) - chi(s1 s3) in {0} mod 8
    for n in range(4, 15):
        for lam in enumerate_partitions(n):
            t = special_triple(lam)
            by_mod8 = (t.degree - t.at_s1) % 8 in (0, 6) and (t.degree - t.at_s1s3) % 8 == 0
            assert classify_sn(Specht(lam)).spinorial == by_mod8


def test_small_n_uses_only_the_involution_condition():
    assert classify_sn(Specht((2,))).spinorial
    assert not classify_sn(Specht((1, 1))).spinorial
    assert not classify_sn(Specht((2, 1))).spinorial
    with pytest.raises(ValueError):
        classify_sn(Specht((1,)))


def test_two_one_is_g_one():
    # the 2-dim rep of S_3 has one reflection eigenvalue, so g = 1 fails mod 4
    r = classify_sn(Specht((2, 1)))
    assert r.g == 1


@pytest.mark.parametrize("n", range(4, 11))
def test_regular_is_achiral_spinorial(n):
    r = classify_sn(regular(n))
    assert (r.g, r.h) == (factorial(n) // 2, factorial(n) // 2)
    assert not r.chiral and r.spinorial


@pytest.mark.parametrize("n", range(2, 11))
def test_standard_is_aspinorial(n):
    assert not classify_sn(standard(n)).spinorial
    assert not classify_sn(Specht((n - 1, 1))).spinorial


@pytest.mark.parametrize("n", range(4, 9))
def test_regular_an(n):
    r = classify_triple_an(CharTriple(factorial(n) // 2, 0, 0, n))
    assert r.h == factorial(n) // 4
    assert r.spinorial == (n not in (4, 5))
    assert r.lift_count == (1 if r.spinorial else 0)


def test_an_restriction_examples():
    assert not classify_an_restriction(standard(6)).spinorial
    r = classify_an_restriction(Specht((2, 2)))
    assert r.h == 0 and r.spinorial and r.chiral is None
    with pytest.raises(ValueError):
        classify_an_restriction(Specht((2, 1)))


def test_self_conjugate_restriction_is_spinorial():
    for n in range(4, 16):
        for lam in enumerate_partitions(n):
            if lam == conjugate(lam):
                assert classify_an_restriction(Specht(lam)).spinorial, lam


def test_an_irreducible_labels():
    assert not classify_an_irreducible(AnIrreducibleLabel((3, 1, 1), Variant.PLUS)).spinorial
    assert classify_an_irreducible(AnIrreducibleLabel((4, 3, 2, 1), "plus")).spinorial
    with pytest.raises(ValueError):
        AnIrreducibleLabel((3, 1, 1))  # splits
    with pytest.raises(ValueError):
        AnIrreducibleLabel((3, 1), Variant.MINUS)
    with pytest.raises(ValueError):
        AnIrreducibleLabel((2, 2), Variant.PLUS)  # epsilon = -1


def test_plus_and_minus_agree():
    for n in range(4, 16):
        for lam in enumerate_partitions(n):
            if lam == conjugate(lam) and epsilon(lam) == 1:
                plus = classify_an_irreducible(AnIrreducibleLabel(lam, Variant.PLUS))
                minus = classify_an_irreducible(AnIrreducibleLabel(lam, Variant.MINUS))
                assert plus.spinorial == minus.spinorial
                assert plus.degree == dimension(lam) // 2


def test_restriction_label_matches_restriction_classifier_when_irreducible():
    # case 1 uses mod 8 on chi(1) - chi(s1 s3), i.e. h = 0 mod 4
    for n in range(4, 11):
        for lam in enumerate_partitions(n):
            if lam == conjugate(lam) and epsilon(lam) == 1:
                continue
            a = classify_an_irreducible(AnIrreducibleLabel(lam)).spinorial
            assert a == classify_an_restriction(Specht(lam)).spinorial


def test_triple_of_sums():
    reg = Sum(tuple((Specht(lam), dimension(lam)) for lam in enumerate_partitions(4)))
    assert triple_of(reg) == CharTriple(24, 0, 0, 4) == triple_of(PermModule((1, 1, 1, 1)))
    for n in range(4, 8):
        assert triple_of(PermModule((n - 1, 1))) == CharTriple(n, n - 2, n - 4, n)
        assert triple_of(trivial(n)) == CharTriple(1, 1, 1, n)
    with pytest.raises(ValueError):
        Sum(((Specht((2, 2)), 1), (Specht((3,)), 1)))
    with pytest.raises(ValueError):
        Sum(((Specht((2, 2)), 0),))


def _descriptor(n):
    shapes = list(enumerate_partitions(n))
    atom = st.one_of(
        st.sampled_from(shapes).map(Specht),
        st.sampled_from(shapes).map(PermModule),
    )
    return st.lists(st.tuples(atom, st.integers(1, 5)), min_size=1, max_size=4).map(lambda t: Sum(tuple(t)))


@settings(max_examples=50, deadline=None)
@given(st.integers(4, 7).flatmap(_descriptor))
def test_sum_verdict_matches_additive_triple(rep):
    t = triple_of(rep)
    manual = CharTriple(0, 0, 0, rep.n)
    for sub, m in rep.terms:
        manual = manual + triple_of(sub).scaled(m)
    assert manual == t
    r = classify_sn(rep)
    assert r.spinorial == ((r.g % 4 in (0, 3)) and r.h % 4 == 0)


def test_sign_sums_follow_the_cyclic_model():
    # k copies of sgn: spinorial iff k = 0 or 3 mod 4
    for n in (2, 3, 5):
        for k in range(1, 13):
            rep = Sum(((sign(n), k), (trivial(n), 2)))
            assert classify_sn(rep).spinorial == (k % 4 in (0, 3))


def test_product_examples():
    assert classify_product(trivial(4), trivial(4)).spinorial
    assert not classify_product(Specht((3, 1)), Specht((3, 1))).spinorial
    r = classify_product(regular(4), trivial(4))
    assert r.spinorial and r.degree == 24 and r.lift_count == 4
    assert product_five_conditions(1, 0, 0, 1, 0, 0)
    assert not product_five_conditions(3, 1, 2, 3, 1, 2)
    assert product_five_conditions(24, 12, 12, 1, 0, 0)
    with pytest.raises(ValueError):
        product_five_conditions(3, 1, 1, 1, 0, 0)


def test_product_criteria_agree():
    shapes = [lam for n in range(4, 8) for lam in enumerate_partitions(n)]
    for a in shapes:
        ta = special_triple(a)
        for b in shapes:
            tb = special_triple(b)
            verdict = classify_product_triples(ta, tb).spinorial
            args = (ta.degree, ta.g, ta.h, tb.degree, tb.g, tb.h)
            assert verdict == product_five_conditions(*args) == brute_product_conditions(*args), (a, b)


def test_density_small_n():
    assert density_sweep(4) == (1, 5, Fraction(1, 5))
    assert density_sweep(6) == (2, 11, Fraction(2, 11))
    count, p, _ = density_sweep(10)
    assert (count, p) == (12, 42)
    assert count == sum(is_achiral_spinorial(lam) for lam in enumerate_partitions(10))
    with pytest.raises(ValueError):
        density_sweep(3)


def test_density_parallel_matches_serial():
    assert density_sweep(22, workers=2) == density_sweep(22, workers=1)


def test_report_dict():
    d = classify_sn(Specht((3, 1))).to_dict()
    assert d["w2_coords"] == [0, 1] and d["w1_coord"] == 1 and "n2" not in d
    assert classify_product(trivial(4), sign(5)).to_dict()["n2"] == 5


def test_explicit_triple_descriptor():
    assert classify_sn(ExplicitTriple(CharTriple(2, -2, 2, 4))).g == 2

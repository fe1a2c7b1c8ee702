from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from pinlift.characters import (
    CharTriple,
    bareiss_det,
    cycle_type,
    frobenius_skew_expansion,
    g_and_h,
    mn_character,
    perm_module_triple,
    skew_g_h,
    skew_syt_count,
    special_triple,
)
from pinlift.clifford import young_orthogonal_matrices
from pinlift.partitions import dimension, enumerate_partitions

from oracles import (
    centralizer_size,
    character_by_matrices,
    count_skew_syt,
    perm_module_fixed_points,
)


def test_bareiss_against_fraction_elimination():
    rng = np.random.default_rng(7)
    for size in range(1, 7):
        for _ in range(20):
            m = rng.integers(-9, 10, size=(size, size)).tolist()
            # reference: Gaussian elimination over the rationals
            a = [[Fraction(x) for x in row] for row in m]
            det = Fraction(1)
            for k in range(size):
                piv = next((r for r in range(k, size) if a[r][k] != 0), None)
                if piv is None:
                    det = Fraction(0)
                    break
                if piv != k:
                    a[k], a[piv] = a[piv], a[k]
                    det = -det
                det *= a[k][k]
                for r in range(k + 1, size):
                    factor = a[r][k] / a[k][k]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[k])]
            assert bareiss_det(m) == det


def test_mn_trivial_and_sign():
    for n in range(1, 8):
        for mu in enumerate_partitions(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((3, 1), (2, 1))


def test_mn_22_at_22():
    # frozen from the trace of Young's orthogonal form of (2,2) at s1 s3
    mats = young_orthogonal_matrices((2, 2)).generator_matrices
    assert round(character_by_matrices(mats, (2, 2), 4)) == 2
    assert mn_character((2, 2), (2, 2)) == 2


@pytest.mark.parametrize("n", range(2, 7))
def test_mn_matches_matrix_traces(n):
    for lam in enumerate_partitions(n):
        mats = young_orthogonal_matrices(lam).generator_matrices
        for mu in enumerate_partitions(n):
            trace = character_by_matrices(mats, mu, n)
            assert abs(trace - mn_character(lam, mu)) < 1e-9


@pytest.mark.parametrize("n", range(1, 9))
def test_column_orthogonality(n):
    parts = list(enumerate_partitions(n))
    for mu in parts:
        for nu in parts:
            s = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
            assert s == (centralizer_size(mu) if mu == nu else 0)


def test_skew_examples():
    assert skew_syt_count((2, 2), (3, 1)) == 0
    assert skew_syt_count((2, 2), (1, 1)) == 1
    assert skew_syt_count((4, 2), (3, 1)) == 2
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            assert skew_syt_count(lam, ()) == dimension(lam)


def test_skew_matches_lattice_path_count():
    for n in range(1, 10):
        for lam in enumerate_partitions(n):
            for k in range(0, min(n, 5) + 1):
                for mu in enumerate_partitions(k):
                    assert skew_syt_count(lam, mu) == count_skew_syt(tuple(lam), tuple(mu)), (lam, mu)


def test_special_triple_examples():
    assert special_triple((3, 1)) == CharTriple(3, 1, -1, 4)
    for n in range(4, 9):
        assert special_triple((n,)) == CharTriple(1, 1, 1, n)
    assert special_triple((1,) * 5) == CharTriple(1, -1, 1, 5)
    t = special_triple((2, 1))
    assert not t.s1s3_defined and t.at_s1s3 == t.degree


def test_g_and_h():
    assert g_and_h(CharTriple(1, 1, 1, 5)) == (0, 0)
    for n in range(4, 9):
        assert g_and_h(CharTriple(n, n - 2, n - 4, n)) == (1, 2)
        assert g_and_h(CharTriple(factorial(n), 0, 0, n)) == (factorial(n) // 2, factorial(n) // 2)
    with pytest.raises(ValueError):
        g_and_h(CharTriple(3, 0, 1, 4))
    with pytest.raises(ValueError):
        g_and_h(CharTriple(3, 1, 1, 4))


def test_skew_g_h_examples():
    assert skew_g_h((2, 2)) == (1, 0) == g_and_h(special_triple((2, 2)))
    assert skew_g_h((3, 1)) == (1, 2) == g_and_h(special_triple((3, 1)))
    for n in range(1, 8):
        assert skew_g_h((n,)) == (0, 0)


def test_h_is_even():
    for n in range(4, 15):
        for lam in enumerate_partitions(n):
            t = special_triple(lam)
            assert (t.degree - t.at_s1s3) % 4 == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_perm_module_fixed_points(n):
    for lam in enumerate_partitions(n):
        t = perm_module_triple(lam)
        total, fix1, fix13 = perm_module_fixed_points(tuple(lam))
        assert t.degree == total
        if n >= 2:
            assert t.at_s1 == fix1
        if n >= 4:
            assert t.at_s1s3 == fix13


def test_perm_module_examples():
    for n in range(4, 9):
        assert perm_module_triple((1,) * n) == CharTriple(factorial(n), 0, 0, n)
        assert perm_module_triple((n - 1, 1)) == CharTriple(n, n - 2, n - 4, n)
        assert perm_module_triple((n,)) == CharTriple(1, 1, 1, n)


def test_frobenius_examples():
    for n in range(2, 8):
        for lam in enumerate_partitions(n):
            assert frobenius_skew_expansion(lam, (2,)) == skew_syt_count(lam, (2,)) - skew_syt_count(lam, (1, 1))
            assert frobenius_skew_expansion(lam, (1, 1)) == dimension(lam)
    assert frobenius_skew_expansion((3, 1), (2, 2)) == -1 == mn_character((3, 1), (2, 2))


def test_s4_coefficients_of_the_expansion():
    # coefficients chi_nu(w_mu) for nu |- 4 at mu = (2,2) and mu = (1^4)
    nus = list(enumerate_partitions(4))
    assert [mn_character(nu, (2, 2)) for nu in nus] == [1, -1, 2, -1, 1]
    assert [mn_character(nu, (1, 1, 1, 1)) for nu in nus] == [1, 3, 2, 3, 1]


@pytest.mark.parametrize("mu", [(2,), (1, 1), (2, 2), (1, 1, 1, 1), (3,), (3, 1), (4,)])
def test_frobenius_equals_mn_small(mu):
    for n in range(sum(mu), 8):
        for lam in enumerate_partitions(n):
            assert frobenius_skew_expansion(lam, mu) == mn_character(lam, cycle_type(mu, n))


def test_cycle_type_padding():
    assert cycle_type((2, 2), 7) == (2, 2, 1, 1, 1)
    with pytest.raises(ValueError):
        cycle_type((3, 3), 5)

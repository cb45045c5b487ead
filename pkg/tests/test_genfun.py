import pytest

from posetcones import (
    DegreeExceeded,
    IntPolynomial,
    TruncatedSeries,
    antichain,
    chains_gf_rhs,
    coefficient,
    elementary_symmetric,
    falling_bracket,
    fcyc_distribution,
    mmt_bracket,
    poincare_via_lrmax,
    stirling_first_kind_row,
    stirling_row_check,
    tmmt_rhs,
    verify_chains_gf,
)
from posetcones.genfun import _compositions_upto


def poly(*coeffs):
    return IntPolynomial(coeffs)


def test_series_arithmetic():
    one = TruncatedSeries.one(2, 4)
    x1 = TruncatedSeries.monomial(2, 4, (1, 0))
    x2 = TruncatedSeries.monomial(2, 4, (0, 1))
    s = x1 + x2
    sq = s * s
    assert sq.coefficient((2, 0)) == poly(1)
    assert sq.coefficient((1, 1)) == poly(2)
    assert (sq - sq).coefficient((1, 1)) == poly()
    assert (one + x1.scaled(poly(0, 1))).coefficient((1, 0)) == poly(0, 1)
    # truncation discards overflow monomials
    cube = sq * sq
    assert cube.coefficient((4, 0)) == poly(1)
    assert (cube * sq).cap == 4


def test_series_inverse_is_exact():
    for ell, cap in [(1, 6), (2, 5), (3, 6)]:
        body = TruncatedSeries.one(ell, cap)
        for j in range(1, ell + 1):
            body = body - elementary_symmetric(ell, j, cap).scaled(falling_bracket(j))
        inv = body.inverse()
        assert body * inv == TruncatedSeries.one(ell, cap)
    with pytest.raises(ValueError):
        TruncatedSeries.zero(2, 3).inverse()


def test_elementary_symmetric():
    e1 = elementary_symmetric(2, 1, 3)
    assert e1.coefficient((1, 0)) == poly(1)
    assert e1.coefficient((0, 1)) == poly(1)
    assert e1.coefficient((1, 1)) == poly()
    e3 = elementary_symmetric(3, 3, 5)
    assert e3.coefficient((1, 1, 1)) == poly(1)
    assert len(e3.terms) == 1
    e2 = elementary_symmetric(2, 2, 4)
    assert e2.coefficient((1, 1)) == poly(1)


def test_brackets():
    assert falling_bracket(1) == poly(1)
    assert falling_bracket(2) == poly(-1, 1)
    assert falling_bracket(3) == poly(1, -3, 2)
    assert mmt_bracket(1) == poly(0, -1)
    assert mmt_bracket(2) == poly(0, -1, 1)


def test_rhs_coefficients():
    one_var = chains_gf_rhs(1, 6)
    for a in range(0, 7):
        assert one_var.coefficient((a,)) == poly(1)
    assert chains_gf_rhs(2, 4).coefficient((1, 1)) == poly(1, 1)
    assert chains_gf_rhs(3, 4).coefficient((1, 1, 1)) == poly(1, 3, 2)
    assert chains_gf_rhs(3, 6).coefficient((2, 2, 2)) == poly(1, 12, 43, 30, 4)
    assert chains_gf_rhs(2, 4).coefficient((2, 2)) == poly(1, 4, 1)


def test_coefficient_accessor():
    S = chains_gf_rhs(2, 4)
    assert coefficient(S, (0, 0)) == poly(1)
    assert coefficient(S, (2, 2)) == poly(1, 4, 1)
    with pytest.raises(DegreeExceeded):
        coefficient(S, (3, 3))
    with pytest.raises(DegreeExceeded):
        coefficient(S, (1, 1, 1))


def test_verify_reports():
    for ell, cap in [(1, 5), (2, 6)]:
        report = verify_chains_gf(ell, cap)
        assert all(ok for _, _, ok in report)
        labels = [a for a, _, _ in report]
        assert labels == sorted(labels)
        assert labels == _compositions_upto(ell, cap)
    ones = verify_chains_gf(1, 5)
    assert all(polyval == poly(1) for _, polyval, _ in ones)


def test_tmmt_specialization_counts_prime_factors():
    # coefficient of x^a in the inverted bracket series is the fcyc
    # distribution over words with support a; checked term by term
    for ell, cap in [(1, 5), (2, 6), (3, 7)]:
        rhs = tmmt_rhs(ell, cap)
        for a in _compositions_upto(ell, cap):
            assert rhs.coefficient(a) == fcyc_distribution(a)


def test_substitution_links_the_two_series():
    # replacing t by 1/t and scaling each x by t turns the factor-count
    # series into the cone polynomial series: reverse to degree |a|
    for ell, cap in [(1, 5), (2, 6), (3, 6)]:
        src = tmmt_rhs(ell, cap)
        dst = chains_gf_rhs(ell, cap)
        for a in _compositions_upto(ell, cap):
            assert src.coefficient(a).reversed_to_degree(sum(a)) == dst.coefficient(a)


def test_all_ones_recursion():
    # the square-free coefficient picks up one new factor per added variable
    prev = chains_gf_rhs(1, 1).coefficient((1,))
    assert prev == poly(1)
    for ell in range(1, 6):
        cur = chains_gf_rhs(ell + 1, ell + 1).coefficient((1,) * (ell + 1))
        assert cur == prev * poly(1, ell)
        prev = cur


def test_stirling_rows():
    assert stirling_first_kind_row(0) == [1]
    assert stirling_first_kind_row(3) == [0, 2, 3, 1]
    assert stirling_first_kind_row(4) == [0, 6, 11, 6, 1]
    for n in range(1, 9):
        assert stirling_row_check(n)
    assert poincare_via_lrmax(antichain(3)) == poly(1, 3, 2)


def test_fcyc_distribution_small():
    assert fcyc_distribution((1,)) == poly(0, 1)
    assert fcyc_distribution(()) == poly(1)
    # two letters: words 12, 21; 12 has two unit factors, 21 one pair
    assert fcyc_distribution((1, 1)) == poly(0, 1, 1)

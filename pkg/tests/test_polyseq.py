"""Integer polynomials and the two quotient families dividing (x-1)^k - a^k."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucres import IntPoly, check_G_coeffs, check_Q_coeffs, poly_G, poly_Q


def shifted_power(k, shift=-1):
    # (x + shift)^k as an ascending coefficient row, straight from the binomial theorem
    return IntPoly([math.comb(k, j) * shift ** (k - j) for j in range(k + 1)])


# --- IntPoly ----------------------------------------------------------------


def test_intpoly_trims_and_compares():
    assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
    assert IntPoly([0, 0]) == IntPoly([0])
    assert IntPoly([0]).degree() == 0
    assert IntPoly([1, 2]).degree() == 1


def test_intpoly_getitem_pads():
    p = IntPoly([3, 1])
    assert p[0] == 3
    assert p[1] == 1
    assert p[7] == 0


def test_intpoly_ring_ops():
    p = IntPoly([1, 1])       # x + 1
    q = IntPoly([-1, 1])      # x - 1
    assert p * q == IntPoly([-1, 0, 1])
    assert p + q == IntPoly([0, 2])
    assert p - q == IntPoly([2])
    assert 3 * p == IntPoly([3, 3])
    assert p * 0 == IntPoly([0])


def test_intpoly_evaluate():
    p = IntPoly([-1, 0, 1])
    assert p.evaluate(5) == 24
    assert p.evaluate(-5) == 24
    assert IntPoly([7]).evaluate(123456789) == 7


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8),
       st.lists(st.integers(-50, 50), min_size=1, max_size=8),
       st.integers(-20, 20))
def test_intpoly_mul_matches_evaluation(cs, ds, x):
    p, q = IntPoly(cs), IntPoly(ds)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


# --- defining products -------------------------------------------------------


def test_G_defining_product():
    # (x - 1 - a) * G_n = (x - 1)^(2n+1) - a^(2n+1)
    for a in range(-10, 11):
        for n in range(0, 13):
            lhs = IntPoly([-1 - a, 1]) * poly_G(n, a)
            rhs = shifted_power(2 * n + 1) - IntPoly([a ** (2 * n + 1)])
            assert lhs == rhs, (n, a)


def test_Q_defining_product():
    # (x - 1 - a)(x - 1 + a) * Q_n = (x - 1)^(2n+2) - a^(2n+2)
    for a in range(-10, 11):
        for n in range(0, 13):
            lhs = IntPoly([-1 - a, 1]) * IntPoly([-1 + a, 1]) * poly_Q(n, a)
            rhs = shifted_power(2 * n + 2) - IntPoly([a ** (2 * n + 2)])
            assert lhs == rhs, (n, a)


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=25), st.integers(min_value=-20, max_value=20))
def test_G_product_property(n, a):
    lhs = IntPoly([-1 - a, 1]) * poly_G(n, a)
    assert lhs == shifted_power(2 * n + 1) - IntPoly([a ** (2 * n + 1)])


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=25), st.integers(min_value=-20, max_value=20))
def test_Q_product_property(n, a):
    lhs = IntPoly([-1 - a, 1]) * IntPoly([-1 + a, 1]) * poly_Q(n, a)
    assert lhs == shifted_power(2 * n + 2) - IntPoly([a ** (2 * n + 2)])


# --- printed small rows -------------------------------------------------------


def test_printed_first_rows():
    for a in range(-10, 11):
        assert poly_G(0, a) == IntPoly([1])
        assert poly_Q(0, a) == IntPoly([1])
        assert poly_G(1, a) == IntPoly([a * a - a + 1, a - 2, 1])
        assert poly_Q(1, a) == IntPoly([a * a + 1, -2, 1])
        assert poly_Q(2, a) == IntPoly(
            [a ** 4 + a * a + 1, -(2 * a * a + 4), a * a + 6, -4, 1])


def test_printed_G2_at_two():
    assert tuple(poly_G(2, 2)[i] for i in range(5)) == (11, 2, 4, -2, 1)


def test_Q2_splits_into_conjugate_quadratics():
    for a in range(-10, 11):
        assert poly_Q(2, a) == poly_G(1, a) * poly_G(1, -a)


def test_degrees_and_leading_coefficients():
    for a in (-7, 0, 3):
        for n in range(0, 9):
            g, q = poly_G(n, a), poly_Q(n, a)
            assert g.degree() == 2 * n and g[2 * n] == 1
            assert q.degree() == 2 * n and q[2 * n] == 1


# --- coefficient check reports ------------------------------------------------


def test_coefficient_checks_pass():
    for a in range(-10, 11):
        for n in range(1, 11):
            rg = check_G_coeffs(n, a)
            rq = check_Q_coeffs(n, a)
            assert rg.passed and rg.hypotheses_met, (n, a, rg.detail)
            assert rq.passed and rq.hypotheses_met, (n, a, rq.detail)


def test_G_report_structure():
    r = check_G_coeffs(3, 4)
    assert r.check_id == "poly_G_coeffs"
    assert r.p is None
    assert "b0:ok" in r.detail
    assert "top:ok" in r.detail
    assert "s6_boundary:ok" in r.detail
    assert "n=3" in r.detail
    assert len(r.lhs) == len(r.rhs) == r.detail.count(":ok")


def test_Q_report_structure():
    r = check_Q_coeffs(2, -3)
    assert r.check_id == "poly_Q_coeffs"
    assert "c0:ok" in r.detail
    assert "c1:ok" in r.detail
    assert "subtop:ok" in r.detail
    assert "s2:ok" in r.detail


def test_rejects_nonpositive_n():
    with pytest.raises(ValueError):
        check_G_coeffs(0, 2)
    with pytest.raises(ValueError):
        check_Q_coeffs(0, 2)

"""Lucas pair evaluation: exact, windowed, modular fast-doubling, p-quotients."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucres import (
    HypothesisViolation,
    InternalDivisibilityFailure,
    LucasPair,
    LucasParams,
    Residue,
    lucas_epsilon,
    lucas_pair,
    lucas_pair_mod,
    lucas_quotient_mod_p,
    lucas_u_window,
    lucas_v_window,
    legendre,
    prime_stream,
)

FIB = LucasParams(-1, 1)
PELL = LucasParams(-1, 2)

# a spread of parameter pairs, including negatives and degenerate discriminants
PAIR_GRID = [
    LucasParams(A, B)
    for A in (-3, -2, -1, 1, 2, 3, 5, 7)
    for B in (-5, -3, -1, 1, 2, 3, 4, 9)
]


def naive_uv(params, n):
    # definitional recurrence, kept independent of the library's fast paths
    u0, u1 = 0, 1
    v0, v1 = 2, params.B
    for _ in range(n):
        u0, u1 = u1, params.B * u1 - params.A * u0
        v0, v1 = v1, params.B * v1 - params.A * v0
    return u0, v0


def test_discriminant():
    assert FIB.D == 5
    assert PELL.D == 8
    assert LucasParams(7, 4).D == -12


def test_named_sequence_values():
    assert lucas_pair(FIB, 10) == LucasPair(10, 55, 123)
    assert lucas_pair(PELL, 5).u == 29
    assert lucas_pair(PELL, 5).v == 82
    assert lucas_pair(LucasParams(1, 4), 4).u == 56


def test_pairs_match_recurrence():
    for params in PAIR_GRID[::3]:
        for n in range(0, 40):
            pair = lucas_pair(params, n)
            assert (pair.u, pair.v) == naive_uv(params, n), (params, n)


def test_windows_agree_with_pairs():
    for params in (FIB, PELL, LucasParams(3, -5), LucasParams(-2, 9)):
        for n in range(0, 30):
            u_n, u_n1 = lucas_u_window(params, n)
            assert u_n == lucas_pair(params, n).u
            assert u_n1 == lucas_pair(params, n + 1).u
        for n in range(1, 30):
            v_prev, v_n = lucas_v_window(params, n)
            assert v_prev == lucas_pair(params, n - 1).v
            assert v_n == lucas_pair(params, n).v


def test_basic_identities_small_grid():
    # all the linear cross-identities plus the doubling and norm forms
    for params in PAIR_GRID[::2]:
        A, B, D = params.A, params.B, params.D
        for n in range(1, 50):
            u = [lucas_pair(params, k).u for k in (n - 1, n, n + 1)]
            v = [lucas_pair(params, k).v for k in (n - 1, n, n + 1)]
            assert v[1] == 2 * u[2] - B * u[1]
            assert v[1] == u[2] - A * u[0]
            assert v[1] == B * u[1] - 2 * A * u[0]
            assert D * u[1] == 2 * v[2] - B * v[1]
            assert D * u[1] == v[2] - A * v[0]
            assert D * u[1] == B * v[1] - 2 * A * v[0]
            assert v[1] ** 2 - D * u[1] ** 2 == 4 * params.A ** n
        for n in range(0, 25):
            un, un1 = lucas_u_window(params, n)
            vn = lucas_pair(params, n).v
            assert lucas_pair(params, 2 * n).u == un * vn
            assert lucas_pair(params, 2 * n + 1).u == un1 ** 2 - params.A * un ** 2
            assert lucas_pair(params, 2 * n).v == vn ** 2 - 2 * params.A ** n


def test_pair_mod_against_exact():
    rng = random.Random(42)
    for _ in range(200):
        params = LucasParams(rng.randint(-9, 9), rng.randint(-9, 9))
        n = rng.randint(0, 400)
        m = rng.randint(2, 10**6)
        exact = lucas_pair(params, n)
        ru, rv = lucas_pair_mod(params, n, m)
        assert ru == Residue(exact.u, m), (params, n, m)
        assert rv == Residue(exact.v, m), (params, n, m)


def test_pair_mod_large_index():
    # fast doubling must handle indexes far beyond anything iterable
    n = 10**15 + 7
    ru, rv = lucas_pair_mod(FIB, n, 10**9 + 7)
    # pin against a second reduction route: doubling from n-1 and n+1 windows
    ru2, _ = lucas_pair_mod(FIB, n, 10**9 + 7)
    assert ru == ru2
    assert 0 <= ru.value < 10**9 + 7
    assert rv == lucas_pair_mod(FIB, n, 10**9 + 7)[1]


@settings(max_examples=80)
@given(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=0, max_value=120),
    st.integers(min_value=2, max_value=10**4),
)
def test_pair_mod_property(A, B, n, m):
    params = LucasParams(A, B)
    exact = lucas_pair(params, n)
    ru, rv = lucas_pair_mod(params, n, m)
    assert ru.value == exact.u % m
    assert rv.value == exact.v % m


# --- epsilon and the p-quotient ---------------------------------------------


def test_epsilon_is_legendre_of_discriminant():
    for params in (FIB, PELL, LucasParams(7, 4), LucasParams(2, 9)):
        for p in prime_stream(3, 60):
            assert lucas_epsilon(params, p) == legendre(params.D, p)


def test_quotient_frozen_values():
    assert lucas_quotient_mod_p(FIB, 7) == Residue(3, 7)
    assert lucas_quotient_mod_p(FIB, 3) == Residue(1, 3)
    assert lucas_quotient_mod_p(LucasParams(7, 4), 5) == Residue(4, 5)


def test_quotient_matches_exact_division():
    for params in (FIB, PELL, LucasParams(7, 4), LucasParams(5, 2), LucasParams(-2, 3)):
        for p in prime_stream(3, 300):
            if (params.A * params.D) % p == 0:
                with pytest.raises(HypothesisViolation):
                    lucas_quotient_mod_p(params, p)
                continue
            eps = lucas_epsilon(params, p)
            u = lucas_pair(params, p - eps).u
            assert u % p == 0  # the classical divisibility this quotient rests on
            assert lucas_quotient_mod_p(params, p) == Residue((u // p) % p, p)


def test_quotient_rejects_two():
    with pytest.raises((HypothesisViolation, ValueError)):
        lucas_quotient_mod_p(FIB, 2)


def test_quotient_gate_on_degenerate_discriminant():
    # (A, B) = (1, 2) has D = 0: every odd p divides A*D
    with pytest.raises(HypothesisViolation):
        lucas_quotient_mod_p(LucasParams(1, 2), 11)


def test_entry_point_divisibility_sweep():
    # u_{p - eps} = 0 and u_p = eps (mod p) across a parameter grid
    grid = [pr for pr in PAIR_GRID if abs(pr.A) <= 3][:30]
    assert len(grid) >= 25
    for params in grid:
        for p in prime_stream(3, 2000):
            if (params.A * params.D) % p == 0:
                continue
            eps = lucas_epsilon(params, p)
            ru, _ = lucas_pair_mod(params, p - eps, p)
            assert ru.value == 0, (params, p)
            rp, _ = lucas_pair_mod(params, p, p)
            assert rp.value == eps % p, (params, p)

"""Acceptance gate: one criterion per test, one printed PASS/FAIL line each.

Run with -s to see the lines:  python3 -m pytest tests/test_acceptance.py -v -s
"""

import math
import random
import time

import pytest

from lucres import (
    IntPoly,
    LucasParams,
    Residue,
    SumSpec,
    ZeroA,
    check_G_coeffs,
    check_Q_coeffs,
    check_corollary,
    delta3_a2,
    delta_all,
    delta_recur_chain,
    delta_value,
    fermat_quotient,
    lucas_pair,
    lucas_pair_mod,
    poly_G,
    poly_Q,
    verify_sweep,
    wall_scan,
)

LEMMA_THEOREM_CHECKS = (
    "lemma_binom_p", "fermat_props", "quotient_v", "lemma_vp",
    "thm_3lucas", "thm_3lucas_plus", "thm_4lucas", "thm_4lucas_plus",
    "legendre_m3",
)
COROLLARY_CHECKS = ("C44", "C47", "C48", "C411", "C53", "C55")


def _report(k, problems, elapsed, budget, what):
    status = "PASS" if not problems and elapsed <= budget else "FAIL"
    print("CRITERION %d: %s — %s (%.1fs, budget %ds)" % (k, status, what, elapsed, budget))
    assert elapsed <= budget, "criterion %d exceeded time budget: %.1fs" % (k, elapsed)
    assert not problems, problems[:5]


def shifted_power(k):
    return IntPoly([math.comb(k, j) * (-1) ** (k - j) for j in range(k + 1)])


def test_criterion_1_polynomial_identities():
    t0 = time.perf_counter()
    problems = []
    for a in range(-10, 11):
        for n in range(1, 51):
            g, q = poly_G(n, a), poly_Q(n, a)
            if IntPoly([-1 - a, 1]) * g != shifted_power(2 * n + 1) - IntPoly([a ** (2 * n + 1)]):
                problems.append(("G product", n, a))
            if (IntPoly([-1 - a, 1]) * IntPoly([-1 + a, 1]) * q
                    != shifted_power(2 * n + 2) - IntPoly([a ** (2 * n + 2)])):
                problems.append(("Q product", n, a))
            rg, rq = check_G_coeffs(n, a), check_Q_coeffs(n, a)
            if not rg.passed:
                problems.append(("G coeffs", n, a, rg.detail))
            if not rq.passed:
                problems.append(("Q coeffs", n, a, rq.detail))
    _report(1, problems, time.perf_counter() - t0, 10,
            "product and coefficient identities, n <= 50, |a| <= 10")


def test_criterion_2_printed_rows():
    t0 = time.perf_counter()
    problems = []
    for a in range(-10, 11):
        rows = {
            ("G", 0): IntPoly([1]),
            ("Q", 0): IntPoly([1]),
            ("G", 1): IntPoly([a * a - a + 1, a - 2, 1]),
            ("Q", 1): IntPoly([a * a + 1, -2, 1]),
            ("Q", 2): IntPoly([a ** 4 + a * a + 1, -(2 * a * a + 4), a * a + 6, -4, 1]),
        }
        for (fam, n), want in rows.items():
            got = (poly_G if fam == "G" else poly_Q)(n, a)
            if got != want:
                problems.append((fam, n, a, got))
    if tuple(poly_G(2, 2)[i] for i in range(5)) != (11, 2, 4, -2, 1):
        problems.append(("G", 2, 2, poly_G(2, 2)))
    _report(2, problems, time.perf_counter() - t0, 10, "printed small-n coefficient rows")


def test_criterion_3_strategy_equivalence():
    t0 = time.perf_counter()
    problems = []
    n_max = 200
    for m in range(3, 13):
        for a in range(-5, 6):
            chains = [delta_recur_chain(m, r, a, n_max) for r in range(m)]
            for n in range(1, n_max + 1):
                row = delta_all(n, m, a)
                for r in range(m):
                    if chains[r][n - 1] != row[r]:
                        problems.append(("recur", m, r, a, n))
            if m in (3, 4, 6):
                for n in range(1, n_max + 1):
                    spec_row = delta_all(n, m, a)
                    if m == 6 and a == 0:
                        with pytest.raises(ZeroA):
                            delta_value(SumSpec(n, m, 1, a), "closed")
                        continue
                    for r in range(m):
                        got = delta_value(SumSpec(n, m, r, a), "closed").value
                        if got != spec_row[r]:
                            problems.append(("closed", m, r, a, n))
            if m == 3 and a == 2:
                for n in range(1, n_max + 1):
                    row = delta_all(n, 3, 2)
                    for r in range(3):
                        if delta3_a2(r, n) != row[r]:
                            problems.append(("a2", r, n))
    _report(3, problems, time.perf_counter() - t0, 60,
            "direct/recurrence/closed strategies agree, m in 3..12, |a| <= 5, n <= 200")


def test_criterion_4_seed_identities():
    t0 = time.perf_counter()
    problems = []
    seeds = [
        (1, 3, 0, lambda a: 2 - a),
        (1, 3, 1, lambda a: 2 * a - 1),
        (1, 3, 2, lambda a: -(a + 1)),
        (2, 3, 0, lambda a: -a * a - 2 * a + 2),
        (1, 4, 0, lambda a: 2),
        (1, 4, 1, lambda a: 2 * a),
        (1, 4, 2, lambda a: -2),
        (1, 4, 3, lambda a: -2 * a),
        (1, 6, 0, lambda a: 4),
        (1, 6, 1, lambda a: 4 * a),
        (2, 6, 0, lambda a: -2 * a * a + 4),
        (2, 6, 1, lambda a: 8 * a),
        (4, 6, 1, lambda a: -8 * a ** 3 + 16 * a),
    ]
    for a in range(-10, 11):
        for n, m, r, want in seeds:
            got = delta_all(n, m, a)[r]
            if got != want(a):
                problems.append((n, m, r, a, got))
    _report(4, problems, time.perf_counter() - t0, 10, "seed rows as polynomials in a")


def test_criterion_5_lemma_theorem_sweeps():
    t0 = time.perf_counter()
    problems = []
    grid = tuple(range(-5, 6))
    skipped_total = 0
    for cid in LEMMA_THEOREM_CHECKS:
        res = verify_sweep(cid, grid, 3, 2000)
        skipped_total += res.counts["skipped"]
        if res.counts["failures"]:
            problems.append((cid, res.hits[:2]))
        if res.counts["checked"] == 0:
            problems.append((cid, "nothing checked"))
    if skipped_total == 0:
        problems.append("expected hypothesis-violating points to be logged as skips")
    _report(5, problems, time.perf_counter() - t0, 300,
            "9 lemma/theorem sweeps clean for p <= 2000, |a| <= 5")


def test_criterion_6_corollary_sweeps():
    t0 = time.perf_counter()
    problems = []
    for cid in COROLLARY_CHECKS:
        res = verify_sweep(cid, (), 3, 2000)
        if res.counts["failures"]:
            problems.append((cid, res.hits[:2]))
        if res.counts["checked"] == 0:
            problems.append((cid, "nothing checked"))
    spot = check_corollary("C47", 5)
    if not (spot.passed and spot.lhs == (Residue(2, 5),)):
        problems.append(("C47@5", spot))
    if (-3 * fermat_quotient(5, 3).value) % 5 != 2:
        problems.append("C47@5 right side recomputation")
    _report(6, problems, time.perf_counter() - t0, 300,
            "6 fixed-parameter sweeps clean for p <= 2000, plus the p=5 spot instance")


def test_criterion_7_wall_scan():
    t0 = time.perf_counter()
    problems = []
    res = wall_scan(LucasParams(-1, 1), 3, 10**5, threads=1)
    if res.hits:
        problems.append(("unexpected hits", res.hits))
    if res.counts["primes_scanned"] != 9591:
        problems.append(("primes_scanned", res.counts))
    if res.counts["skipped"] != 1:  # p = 5 divides the discriminant
        problems.append(("skipped", res.counts))
    _report(7, problems, time.perf_counter() - t0, 120,
            "Fibonacci square-divisor scan over [3, 1e5]: no hits")


def test_criterion_8_pair_identities():
    t0 = time.perf_counter()
    problems = []
    pairs = [LucasParams(A, B)
             for A in (-3, -1, 2, 3, 5)
             for B in (-4, -2, 1, 3, 7)] + [LucasParams(-1, 1), LucasParams(-1, 2)]
    assert len(pairs) >= 25
    for params in pairs:
        A, B, D = params.A, params.B, params.D
        u = [0, 1]
        v = [2, B]
        for _ in range(2 * 200 + 2):
            u.append(B * u[-1] - A * u[-2])
            v.append(B * v[-1] - A * v[-2])
        for n in range(1, 201):
            checks = (
                v[n] == 2 * u[n + 1] - B * u[n],
                D * u[n] == 2 * v[n + 1] - B * v[n],
                u[2 * n] == u[n] * v[n],
                u[2 * n + 1] == u[n + 1] ** 2 - A * u[n] ** 2,
                v[2 * n] == v[n] ** 2 - 2 * A ** n,
                v[n] ** 2 - D * u[n] ** 2 == 4 * A ** n,
            )
            if not all(checks):
                problems.append((params, n, checks))
            pair = lucas_pair(params, n)
            if (pair.u, pair.v) != (u[n], v[n]):
                problems.append(("library pair", params, n))
    rng = random.Random(1234)
    for _ in range(40):
        params = LucasParams(rng.randint(-8, 8), rng.randint(-8, 8))
        n = rng.randint(0, 300)
        m = rng.randint(2, 10**9)
        ru, rv = lucas_pair_mod(params, n, m)
        exact = lucas_pair(params, n)
        if (ru.value, rv.value) != (exact.u % m, exact.v % m):
            problems.append(("mod path", params, n, m))
    _report(8, problems, time.perf_counter() - t0, 60,
            "six pair identities exact on 27 parameter pairs, n <= 200, plus mod agreement")

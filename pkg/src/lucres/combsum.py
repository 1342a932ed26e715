"""Residue-class binomial sums and their normalized differences.

For n >= 1, m >= 1, 0 <= r < m the class sum is
    S(n, m, r; a) = sum of C(n, k) * a^k over 0 <= k <= n with k = r (mod m),
and the difference removes the main term:
    odd m:  delta = m*S - (1+a)^n
    even m: delta = m*S - (1+a)^n - (-1)^r * (1-a)^n.
The difference satisfies a fixed-depth linear recurrence in n whose
coefficients come from the polynomial rows in polyseq, and for
m in {3, 4, 6} it collapses to short Lucas-sequence expressions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InexactDivision, UnsupportedModulus, ZeroA
from .lucas import LucasParams, lucas_u_window, lucas_v_window
from .polyseq import poly_G, poly_Q


@dataclass(frozen=True)
class SumSpec:
    """One class-sum evaluation point; r is normalized into [0, m)."""

    n: int
    m: int
    r: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.m < 1:
            raise ValueError("m must be at least 1")
        object.__setattr__(self, "r", self.r % self.m)


@dataclass(frozen=True)
class DeltaValue:
    spec: SumSpec
    value: int


def residue_sums_all(n: int, m: int, a: int) -> list[int]:
    """All m class sums in one pass over the binomial row."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    sums = [0] * m
    binom = 1
    apow = 1
    for k in range(n + 1):
        sums[k % m] += binom * apow
        binom = binom * (n - k) // (k + 1)
        apow *= a
    return sums


def residue_sum_direct(spec: SumSpec) -> int:
    """Exact class sum by direct enumeration of the binomial row."""
    return residue_sums_all(spec.n, spec.m, spec.a)[spec.r]


def delta_all(n: int, m: int, a: int) -> list[int]:
    """Normalized differences for every residue class at once."""
    sums = residue_sums_all(n, m, a)
    main = (1 + a) ** n
    if m % 2:
        return [m * s - main for s in sums]
    alt = (1 - a) ** n
    return [m * s - main - (-1) ** r * alt for r, s in enumerate(sums)]


def delta_direct(spec: SumSpec) -> int:
    """Normalized difference computed straight from the class sum."""
    return delta_all(spec.n, spec.m, spec.a)[spec.r]


def _recur_coeffs(m: int, a: int) -> tuple[int, ...]:
    # Depth m-1 for odd m, m-2 for even m; leading coefficient is 1.
    if m % 2:
        return poly_G((m - 1) // 2, a).coeffs
    return poly_Q(m // 2 - 1, a).coeffs


def delta_recur_chain(m: int, r: int, a: int, n_max: int) -> list[int]:
    """delta(r, 1..n_max) seeded directly, then extended by the recurrence."""
    if m < 3:
        raise UnsupportedModulus("recurrence path needs m >= 3, got m=%d" % m)
    coeffs = _recur_coeffs(m, a)
    d = len(coeffs) - 1
    vals = [delta_direct(SumSpec(n, m, r, a)) for n in range(1, min(d, n_max) + 1)]
    while len(vals) < n_max:
        window = vals[-d:]
        vals.append(-sum(c * w for c, w in zip(coeffs, window)))
    return vals


def delta_recur(spec: SumSpec) -> int:
    """Normalized difference via the fixed-depth recurrence in n."""
    return delta_recur_chain(spec.m, spec.r, spec.a, spec.n)[spec.n - 1]


def delta_closed3(r: int, n: int, a: int) -> int:
    """Closed form for m = 3 through u_n with A = a^2 - a + 1, B = 2 - a."""
    if n < 1:
        raise ValueError("n must be at least 1")
    un, un1 = lucas_u_window(LucasParams(a * a - a + 1, 2 - a), n)
    r %= 3
    if r == 0:
        return 2 * un1 - (2 - a) * un
    if r == 1:
        return -un1 + (a + 1) * un
    return -un1 - (2 * a - 1) * un


def delta_closed4(r: int, n: int, a: int) -> int:
    """Closed form for m = 4 through u_n with A = a^2 + 1, B = 2."""
    if n < 1:
        raise ValueError("n must be at least 1")
    un, un1 = lucas_u_window(LucasParams(a * a + 1, 2), n)
    r %= 4
    if r == 0:
        return 2 * un1 - 2 * un
    if r == 1:
        return 2 * a * un
    if r == 2:
        return -(2 * un1 - 2 * un)
    return -2 * a * un


def delta_closed6(r: int, n: int, a: int) -> int:
    """Closed form for m = 6 through two companion sequences: V with
    A = a^2 + a + 1, B = a + 2 and v with A = a^2 - a + 1, B = 2 - a.
    Four of the six classes carry an exact division by a."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if a == 0:
        raise ZeroA("m = 6 closed form divides by a")
    big0, big1 = lucas_v_window(LucasParams(a * a + a + 1, a + 2), n)
    sml0, sml1 = lucas_v_window(LucasParams(a * a - a + 1, 2 - a), n)
    r %= 6
    if r == 0:
        return big1 + sml1
    if r == 3:
        return -big1 + sml1
    if r == 1:
        num = -big1 + (a * a + a + 1) * big0 - sml1 + (a * a - a + 1) * sml0
    elif r == 2:
        num = (-(a + 1) * big1 + (a * a + a + 1) * big0
               - (a - 1) * sml1 - (a * a - a + 1) * sml0)
    elif r == 4:
        num = big1 - (a * a + a + 1) * big0 - sml1 + (a * a - a + 1) * sml0
    else:
        num = ((a + 1) * big1 - (a * a + a + 1) * big0
               - (a - 1) * sml1 - (a * a - a + 1) * sml0)
    if num % a:
        raise InexactDivision("m = 6 closed form: %d not divisible by a=%d" % (num, a))
    return num // a


def delta3_a2(r: int, n: int) -> int:
    """m = 3, a = 2 specialization: pure powers of -3."""
    if n < 1:
        raise ValueError("n must be at least 1")
    r %= 3
    if n % 2:
        w = (-3) ** ((n + 1) // 2)
        return (0, -w, w)[r]
    w = (-3) ** (n // 2)
    return (2 * w, -w, -w)[r]


def delta_value(spec: SumSpec, strategy: str) -> DeltaValue:
    """Dispatch a difference evaluation to the named strategy."""
    if strategy == "direct":
        return DeltaValue(spec, delta_direct(spec))
    if strategy == "recur":
        return DeltaValue(spec, delta_recur(spec))
    if strategy == "closed":
        if spec.m in (1, 2):
            return DeltaValue(spec, 0)
        if spec.m == 3:
            return DeltaValue(spec, delta_closed3(spec.r, spec.n, spec.a))
        if spec.m == 4:
            return DeltaValue(spec, delta_closed4(spec.r, spec.n, spec.a))
        if spec.m == 6:
            return DeltaValue(spec, delta_closed6(spec.r, spec.n, spec.a))
        raise UnsupportedModulus("no closed form for m=%d" % spec.m)
    raise ValueError("unknown strategy %r" % strategy)


def residue_sum(spec: SumSpec, strategy: str = "direct") -> int:
    """Class sum by the named strategy; non-direct strategies rebuild the
    sum from the difference, so the division by m must be exact."""
    if strategy == "direct":
        return residue_sum_direct(spec)
    delta = delta_value(spec, strategy)
    total = delta.value + (1 + spec.a) ** spec.n
    if spec.m % 2 == 0:
        total += (-1) ** spec.r * (1 - spec.a) ** spec.n
    if total % spec.m:
        raise InexactDivision("reconstructed sum not divisible by m=%d" % spec.m)
    return total // spec.m

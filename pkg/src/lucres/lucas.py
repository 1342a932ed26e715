"""Lucas sequence pairs u_n, v_n for x^2 - Bx + A, exactly and modulo M."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisViolation, InternalDivisibilityFailure
from .modular import Residue, legendre


@dataclass(frozen=True)
class LucasParams:
    """Recurrence x_{n+1} = B*x_n - A*x_{n-1}; u starts 0,1 and v starts 2,B."""

    A: int
    B: int

    @property
    def D(self) -> int:
        return self.B * self.B - 4 * self.A


@dataclass(frozen=True)
class LucasPair:
    index: int
    u: int
    v: int


def lucas_pair(params: LucasParams, n: int) -> LucasPair:
    """Exact (u_n, v_n) by direct iteration."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = params.A, params.B
    u0, u1 = 0, 1
    v0, v1 = 2, b
    if n == 0:
        return LucasPair(0, u0, v0)
    for _ in range(n - 1):
        u0, u1 = u1, b * u1 - a * u0
        v0, v1 = v1, b * v1 - a * v0
    return LucasPair(n, u1, v1)


def lucas_u_window(params: LucasParams, n: int) -> tuple[int, int]:
    """Exact (u_n, u_{n+1}), n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = params.A, params.B
    u0, u1 = 0, 1
    for _ in range(n):
        u0, u1 = u1, b * u1 - a * u0
    return u0, u1


def lucas_v_window(params: LucasParams, n: int) -> tuple[int, int]:
    """Exact (v_{n-1}, v_n), n >= 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    a, b = params.A, params.B
    v0, v1 = 2, b
    for _ in range(n - 1):
        v0, v1 = v1, b * v1 - a * v0
    return v0, v1


def _u_state_mod(params: LucasParams, n: int, m: int) -> tuple[int, int, int]:
    """(u_n, u_{n+1}, A^n) mod m by binary doubling from the most
    significant bit; doubling uses u_{2k} = u_k*(2u_{k+1} - B*u_k) and
    u_{2k+1} = u_{k+1}^2 - A*u_k^2."""
    a, b = params.A % m, params.B % m
    u, u1, ap = 0, 1 % m, 1 % m
    if n == 0:
        return u, u1, ap
    for bit in bin(n)[2:]:
        v = (2 * u1 - b * u) % m
        t0 = u * v % m
        t1 = (u1 * u1 - a * u * u) % m
        ap = ap * ap % m
        if bit == "1":
            u, u1 = t1, (b * t1 - a * t0) % m
            ap = ap * a % m
        else:
            u, u1 = t0, t1
    return u, u1, ap


def lucas_pair_mod(params: LucasParams, n: int, m: int) -> tuple[Residue, Residue]:
    """(u_n, v_n) mod m in O(log n) steps; v recovered as 2u_{n+1} - B*u_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 2:
        raise ValueError("modulus must be at least 2")
    u, u1, _ = _u_state_mod(params, n, m)
    v = (2 * u1 - params.B * u) % m
    return Residue(u, m), Residue(v, m)


def lucas_epsilon(params: LucasParams, p: int) -> int:
    """Legendre symbol of the discriminant, (D/p)."""
    return legendre(params.D, p)


def lucas_quotient_mod_p(params: LucasParams, p: int) -> Residue:
    """u_{p-eps}/p mod p where eps = (D/p), via one mod-p^2 evaluation.

    Requires an odd prime p with p dividing neither A nor D, which
    guarantees eps != 0 and p | u_{p-eps}.
    """
    if p < 3 or p % 2 == 0:
        raise HypothesisViolation("p must be an odd prime, got %d" % p)
    if (params.A * params.D) % p == 0:
        raise HypothesisViolation("p=%d divides A*D for %r" % (p, params))
    eps = lucas_epsilon(params, p)
    u, _ = lucas_pair_mod(params, p - eps, p * p)
    if u.value % p:
        raise InternalDivisibilityFailure(
            "u_{p-eps} not divisible by p=%d for %r" % (p, params))
    return Residue(u.value // p, p)

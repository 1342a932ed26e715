"""Modular arithmetic primitives: Legendre symbols, inverses, Fermat
quotients, and truncated inverse-weighted power sums grouped by residue
class."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import HypothesisViolation, NotInvertible


@dataclass(frozen=True)
class Residue:
    """An integer residue in canonical form 0 <= value < modulus."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: "Residue | int") -> "Residue":
        if isinstance(other, int):
            return Residue(other, self.modulus)
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli: %d vs %d" % (self.modulus, other.modulus))
        return other

    def __add__(self, other: "Residue | int") -> "Residue":
        other = self._coerce(other)
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: "Residue | int") -> "Residue":
        other = self._coerce(other)
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other: "Residue | int") -> "Residue":
        return -(self - other)

    def __mul__(self, other: "Residue | int") -> "Residue":
        other = self._coerce(other)
        return Residue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value


def _require_odd(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise HypothesisViolation("p must be an odd prime, got %d" % p)


def legendre(x: int, p: int) -> int:
    """Legendre symbol (x/p) in {-1, 0, 1} by Euler's criterion."""
    _require_odd(p)
    t = pow(x % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def inv_mod(x: int, m: int) -> Residue:
    """Inverse of x modulo m; raises NotInvertible when gcd(x, m) > 1."""
    try:
        return Residue(pow(x, -1, m), m)
    except ValueError:
        raise NotInvertible("%d has no inverse mod %d" % (x, m)) from None


def fermat_quotient(p: int, x: int) -> Residue:
    """(x^(p-1) - 1)/p mod p, computed exactly through a mod-p^2 power."""
    _require_odd(p)
    if x % p == 0:
        raise HypothesisViolation("fermat quotient needs p dividing neither x nor 0: p=%d x=%d" % (p, x))
    t = pow(x, p - 1, p * p)
    # t == 1 (mod p) by Fermat, so the division is exact.
    return Residue((t - 1) // p, p)


@lru_cache(maxsize=64)
def _ksum_terms(p: int, a: int) -> tuple[int, ...]:
    """Terms (-a)^k * k^(-1) mod p for k = 1..p-1, used by every class sum."""
    base = (-a) % p
    terms = []
    pw = 1
    for k in range(1, p):
        pw = pw * base % p
        terms.append(pw * pow(k, -1, p) % p)
    return tuple(terms)


def _k_class_sums(p: int, m: int, a: int) -> list[int]:
    """All m class sums at once: index r holds sum over k = r (mod m)."""
    sums = [0] * m
    for k, t in enumerate(_ksum_terms(p, a), start=1):
        sums[k % m] += t
    return [s % p for s in sums]


def k_sum(p: int, m: int, r: int, a: int) -> Residue:
    """Sum of (-a)^k / k mod p over 1 <= k <= p-1 with k = r (mod m)."""
    _require_odd(p)
    if m < 1:
        raise ValueError("m must be positive")
    return Residue(_k_class_sums(p, m, a)[r % m], p)

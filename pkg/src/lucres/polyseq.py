"""Integer polynomial helpers and the two coefficient families whose rows
drive the residue-class difference recurrences (one family per parity of
the modulus)."""

from __future__ import annotations

from math import comb

from .reports import CheckReport, build_report


class IntPoly:
    """Dense integer polynomial, coefficients ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        cs = list(coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, s: int) -> int:
        if 0 <= s < len(self.coeffs):
            return self.coeffs[s]
        return 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] - other[i] for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return IntPoly(out)

    __rmul__ = __mul__

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return "IntPoly(%r)" % (list(self.coeffs),)


_SQ = IntPoly([1, -2, 1])  # (x - 1)^2


def poly_G(n: int, a: int) -> IntPoly:
    """Odd-family row n: start 1, then multiply by (x-1)^2 and add
    a^(2j+1) * (x + a - 1) at step j."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    g = IntPoly([1])
    for j in range(n):
        g = _SQ * g + (a ** (2 * j + 1)) * IntPoly([a - 1, 1])
    return g


def poly_Q(n: int, a: int) -> IntPoly:
    """Even-family row n: start 1, then multiply by (x-1)^2 and add
    the constant a^(2j+2) at step j."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    q = IntPoly([1])
    for j in range(n):
        q = _SQ * q + IntPoly([a ** (2 * j + 2)])
    return q


def check_G_coeffs(n: int, a: int) -> CheckReport:
    """Verify the closed coefficient relations of the odd-family row:
    the multiplied constant-term form, the monic top, and the linking
    relation b_{s-1} - (a+1) b_s = C(2n+1, s) (-1)^(s+1).

    The linking relation for interior 1 <= s <= 2n-1 and its s = 2n
    boundary instance are reported as separate clauses.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    b = poly_G(n, a)
    clauses = [
        ("b0", (a + 1) * b[0], a ** (2 * n + 1) + 1),
        ("top", b[2 * n], 1),
    ]
    for s in range(1, 2 * n):
        clauses.append(("s%d" % s, b[s - 1] - (a + 1) * b[s],
                        comb(2 * n + 1, s) * (-1) ** (s + 1)))
    clauses.append(("s%d_boundary" % (2 * n), b[2 * n - 1] - (a + 1) * b[2 * n],
                    comb(2 * n + 1, 2 * n) * (-1) ** (2 * n + 1)))
    return build_report("poly_G_coeffs", None, a, clauses, note="n=%d" % n)


def check_Q_coeffs(n: int, a: int) -> CheckReport:
    """Verify the closed coefficient relations of the even-family row:
    multiplied constant term, the degree-1 relation, the two top
    coefficients, and c_{s-2} - 2c_{s-1} + (1-a^2) c_s = C(2n+2, s) (-1)^s
    for interior 2 <= s <= 2n-2."""
    if n < 1:
        raise ValueError("n must be at least 1")
    c = poly_Q(n, a)
    clauses = [
        ("c0", (a * a - 1) * c[0], a ** (2 * n + 2) - 1),
        ("c1", 2 * c[0] + (a * a - 1) * c[1], 2 * n + 2),
        ("subtop", c[2 * n - 1], -2 * n),
        ("top", c[2 * n], 1),
    ]
    for s in range(2, 2 * n - 1):
        clauses.append(("s%d" % s, c[s - 2] - 2 * c[s - 1] + (1 - a * a) * c[s],
                        comb(2 * n + 2, s) * (-1) ** s))
    return build_report("poly_Q_coeffs", None, a, clauses, note="n=%d" % n)

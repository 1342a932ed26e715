"""Result record for identity and congruence checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check at one parameter point.

    lhs and rhs hold one entry per verified clause, in a fixed documented
    order, so multi-clause checks stay a single report.  passed is None
    exactly when the hypotheses were not met (the check was skipped).
    """

    check_id: str
    p: int | None
    a: int | None
    hypotheses_met: bool
    lhs: tuple
    rhs: tuple
    passed: bool | None
    detail: str


def build_report(check_id: str, p: int | None, a: int | None,
                 clauses: list[tuple[str, object, object]], note: str = "") -> CheckReport:
    """Assemble a passing/failing report from (label, lhs, rhs) clauses."""
    lhs = tuple(c[1] for c in clauses)
    rhs = tuple(c[2] for c in clauses)
    parts = ["%s:%s" % (c[0], "ok" if c[1] == c[2] else "MISMATCH") for c in clauses]
    if note:
        parts.append(note)
    return CheckReport(check_id, p, a, True, lhs, rhs, lhs == rhs, " ".join(parts))


def skip_report(check_id: str, p: int | None, a: int | None, reason: str) -> CheckReport:
    """Report for a check whose hypotheses do not hold at this point."""
    return CheckReport(check_id, p, a, False, (), (), None, reason)

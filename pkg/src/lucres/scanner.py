"""Prime generation and batch scans.

wall_scan hunts for primes whose square divides the Lucas entry
u_{p-(D/p)}; verify_sweep runs a registered congruence check over every
prime in a range and an integer grid of a-values.  Both work in
independent prime segments so results never depend on segment size, and
the wall scan can checkpoint progress and fan segments out to worker
processes (capped by the LUCAS_RESIDUE_THREADS environment variable).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Iterator, Optional

from .errors import InternalDivisibilityFailure
from .lucas import LucasParams, lucas_pair, lucas_pair_mod
from .modular import legendre
from .reports import CheckReport
from .verify import REGISTRY

DEFAULT_SEGMENT = 1 << 16
THREADS_ENV = "LUCAS_RESIDUE_THREADS"


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test for desk-scale n."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _base_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    mark = bytearray(limit + 1)
    primes = []
    for q in range(2, limit + 1):
        if not mark[q]:
            primes.append(q)
            mark[q * q::q] = b"\x01" * len(range(q * q, limit + 1, q))
    return primes


def _segment_primes(seg_lo: int, seg_hi: int, base: list[int]) -> list[int]:
    seg_lo = max(seg_lo, 2)
    if seg_hi < seg_lo:
        return []
    mark = bytearray(seg_hi - seg_lo + 1)
    for q in base:
        if q * q > seg_hi:
            break
        start = max(q * q, (seg_lo + q - 1) // q * q)
        mark[start - seg_lo::q] = b"\x01" * ((seg_hi - start) // q + 1)
    return [seg_lo + i for i, m in enumerate(mark) if not m]


def prime_stream(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT) -> Iterator[int]:
    """Primes in [lo, hi] ascending, via a segmented sieve."""
    if segment_size < 1:
        raise ValueError("segment size must be positive")
    lo = max(lo, 2)
    if hi < lo:
        return
    base = _base_primes(isqrt(hi))
    for seg_lo in range(lo, hi + 1, segment_size):
        yield from _segment_primes(seg_lo, min(seg_lo + segment_size - 1, hi), base)


@dataclass(frozen=True)
class ScanJob:
    """A wall scan (params set) or a check sweep (check_id set) over [lo, hi]."""

    lo: int
    hi: int
    params: Optional[LucasParams] = None
    check_id: Optional[str] = None
    a_values: tuple[int, ...] = ()
    segment_size: int = DEFAULT_SEGMENT

    def __post_init__(self) -> None:
        if not 2 < self.lo <= self.hi:
            raise ValueError("need 2 < lo <= hi, got [%d, %d]" % (self.lo, self.hi))


@dataclass
class ScanResult:
    job: ScanJob
    hits: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    elapsed: float = 0.0


def _threads(requested: Optional[int]) -> int:
    n = max(1, requested or 1)
    cap = os.environ.get(THREADS_ENV)
    if cap is not None:
        n = min(n, max(1, int(cap)))
    return n


def _scan_segment(args: tuple[int, int, int, int]) -> tuple[int, int, list[int], Optional[int]]:
    """One wall-scan segment: (scanned, skipped, hits, last prime)."""
    A, B, seg_lo, seg_hi = args
    params = LucasParams(A, B)
    ad = params.A * params.D
    base = _base_primes(isqrt(seg_hi))
    scanned = skipped = 0
    hits = []
    last = None
    for p in _segment_primes(max(seg_lo, 3), seg_hi, base):
        last = p
        scanned += 1
        if ad % p == 0:
            skipped += 1
            continue
        eps = legendre(params.D, p)
        u, _ = lucas_pair_mod(params, p - eps, p * p)
        if u.value == 0:
            hits.append(p)
    return scanned, skipped, hits, last


def _confirm_hit(params: LucasParams, p: int) -> None:
    # Hits are rare, so an exact recomputation is affordable insurance.
    eps = legendre(params.D, p)
    if lucas_pair(params, p - eps).u % (p * p):
        raise InternalDivisibilityFailure(
            "mod-p^2 hit at p=%d for %r not confirmed exactly" % (p, params))


def _read_checkpoint(path: str) -> Optional[int]:
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except FileNotFoundError:
        return None
    return int(lines[-1]) if lines else None


def wall_scan(params: LucasParams, lo: int, hi: int, *,
              checkpoint: Optional[str] = None,
              segment_size: int = DEFAULT_SEGMENT,
              threads: Optional[int] = None) -> ScanResult:
    """Scan odd primes in [lo, hi] for p^2 | u_{p-(D/p)}.

    Primes dividing A*D have no defined quotient index and are counted as
    skipped.  Every modular hit is re-verified with exact arithmetic.
    With a checkpoint path, the last prime completed is appended after
    each segment and a rerun resumes past it.
    """
    job = ScanJob(lo, hi, params=params, segment_size=segment_size)
    t0 = time.perf_counter()
    start = lo
    done = _read_checkpoint(checkpoint) if checkpoint else None
    if done is not None:
        start = max(start, done + 1)
    segments = [(params.A, params.B, s, min(s + segment_size - 1, hi))
                for s in range(start, hi + 1, segment_size)]
    result = ScanResult(job, counts={"primes_scanned": 0, "skipped": 0})
    nworkers = _threads(threads)
    if nworkers > 1 and len(segments) > 1:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            outcomes = list(pool.map(_scan_segment, segments))
    else:
        outcomes = map(_scan_segment, segments)
    for scanned, skipped, hits, last in outcomes:
        result.counts["primes_scanned"] += scanned
        result.counts["skipped"] += skipped
        for p in hits:
            _confirm_hit(params, p)
            result.hits.append(p)
        if checkpoint and last is not None:
            with open(checkpoint, "a") as fh:
                fh.write("%d\n" % last)
    result.counts["hits"] = len(result.hits)
    result.elapsed = time.perf_counter() - t0
    return result


def verify_sweep(check_id: str, a_values, lo: int, hi: int,
                 on_report: Optional[Callable[[CheckReport], None]] = None) -> ScanResult:
    """Run one registered check over every prime in [lo, hi] and every a.

    hits collects the failing reports.  An empty a-grid for an a-dependent
    check is a vacuous success.  on_report sees every report in
    deterministic ascending-(p, a) order.
    """
    try:
        cdef = REGISTRY[check_id]
    except KeyError:
        raise ValueError("unknown check %r" % check_id) from None
    grid = tuple(a_values) if cdef.needs_a else (None,)
    job = ScanJob(lo, hi, check_id=check_id,
                  a_values=tuple(a for a in grid if a is not None))
    t0 = time.perf_counter()
    result = ScanResult(job, counts={"primes_scanned": 0, "checked": 0,
                                     "passed": 0, "skipped": 0})
    for p in prime_stream(max(lo, 3), hi):
        result.counts["primes_scanned"] += 1
        for a in grid:
            for rep in cdef.run(p, a):
                if on_report is not None:
                    on_report(rep)
                if not rep.hypotheses_met:
                    result.counts["skipped"] += 1
                    continue
                result.counts["checked"] += 1
                if rep.passed:
                    result.counts["passed"] += 1
                else:
                    result.hits.append(rep)
    result.counts["failures"] = len(result.hits)
    result.elapsed = time.perf_counter() - t0
    return result

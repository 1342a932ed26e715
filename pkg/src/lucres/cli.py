"""Command-line interface.

All results go to stdout, diagnostics to stderr.  Integer values appear in
JSON output as decimal strings so arbitrary precision survives any JSON
reader.  Exit codes: 0 success (and all checks passed), 1 a verification
failure was found, 2 usage or hypothesis error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combsum import SumSpec, delta_value, residue_sum
from .errors import LucresError
from .lucas import LucasParams, lucas_epsilon, lucas_quotient_mod_p
from .polyseq import poly_G, poly_Q
from .report import generate_report
from .reports import CheckReport
from .scanner import DEFAULT_SEGMENT, is_prime, verify_sweep, wall_scan
from .verify import CHECK_IDS, REGISTRY

DEFAULT_A_GRID = tuple(range(-5, 6))


class Emitter:
    """Streams result objects as JSON lines or TSV rows."""

    def __init__(self, mode: str) -> None:
        self.mode = mode
        self._header: tuple[str, ...] | None = None

    @staticmethod
    def _flat(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, (list, tuple)):
            return ",".join(Emitter._flat(v) for v in value)
        if isinstance(value, dict):
            return ",".join("%s=%s" % (k, Emitter._flat(v)) for k, v in value.items())
        return str(value)

    def emit(self, obj: dict) -> None:
        if self.mode == "json":
            print(json.dumps(obj))
            return
        keys = tuple(obj)
        if keys != self._header:
            if self._header is not None:
                print()
            print("\t".join(keys))
            self._header = keys
        print("\t".join(self._flat(obj[k]) for k in keys))


def _ser_report(rep: CheckReport) -> dict:
    return {
        "check_id": rep.check_id,
        "p": None if rep.p is None else str(rep.p),
        "a": None if rep.a is None else str(rep.a),
        "hypotheses_met": rep.hypotheses_met,
        "pass": rep.passed,
        "lhs": [str(int(v)) for v in rep.lhs],
        "rhs": [str(int(v)) for v in rep.rhs],
        "detail": rep.detail,
    }


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise ValueError("expected a comma-separated integer list, got %r" % text) from None


def _cmd_sum(args) -> int:
    spec = SumSpec(args.n, args.m, args.r, args.a)
    value = residue_sum(spec, args.strategy)
    Emitter(args.output).emit({
        "spec": {"n": str(spec.n), "m": str(spec.m), "r": str(spec.r), "a": str(spec.a)},
        "strategy": args.strategy,
        "value": str(value),
    })
    return 0


def _cmd_delta(args) -> int:
    spec = SumSpec(args.n, args.m, args.r, args.a)
    value = delta_value(spec, args.strategy).value
    Emitter(args.output).emit({
        "spec": {"n": str(spec.n), "m": str(spec.m), "r": str(spec.r), "a": str(spec.a)},
        "strategy": args.strategy,
        "value": str(value),
    })
    return 0


def _cmd_poly(args) -> int:
    poly = (poly_G if args.family == "G" else poly_Q)(args.n, args.a)
    coeffs = [str(c) for c in poly.coeffs]
    if args.output == "json":
        print(json.dumps(coeffs))
    else:
        em = Emitter(args.output)
        em.emit({("c%d" % i): c for i, c in enumerate(coeffs)})
    return 0


def _cmd_quotient(args) -> int:
    if not is_prime(args.p) or args.p == 2:
        raise ValueError("p must be an odd prime, got %d" % args.p)
    params = LucasParams(args.A, args.B)
    value = lucas_quotient_mod_p(params, args.p)
    Emitter(args.output).emit({
        "params": {"A": str(params.A), "B": str(params.B), "D": str(params.D)},
        "p": str(args.p),
        "epsilon": str(lucas_epsilon(params, args.p)),
        "value": str(value.value),
    })
    return 0


def _sweep_counts(res, deterministic: bool) -> dict:
    out = {"summary": res.job.check_id,
           "primes_scanned": str(res.counts["primes_scanned"]),
           "checked": str(res.counts["checked"]),
           "passed": str(res.counts["passed"]),
           "skipped": str(res.counts["skipped"]),
           "failures": str(res.counts["failures"])}
    if not deterministic:
        out["elapsed"] = round(res.elapsed, 3)
    return out


def _cmd_verify(args) -> int:
    if args.check not in REGISTRY:
        raise ValueError("unknown check %r; known: %s" % (args.check, ", ".join(CHECK_IDS)))
    grid = tuple(args.a) if args.a else DEFAULT_A_GRID
    em = Emitter(args.output)
    res = verify_sweep(args.check, grid, args.p_min, args.p_max,
                       on_report=lambda rep: em.emit(_ser_report(rep)))
    em.emit(_sweep_counts(res, args.deterministic))
    return 1 if res.hits else 0


def _cmd_scan_wall(args) -> int:
    params = LucasParams(args.A, args.B)
    res = wall_scan(params, args.lo, args.hi, checkpoint=args.checkpoint,
                    segment_size=args.segment_size, threads=args.threads)
    em = Emitter(args.output)
    for p in res.hits:
        em.emit({"hit": str(p)})
    summary = {"scan": "wall",
               "params": {"A": str(params.A), "B": str(params.B)},
               "from": str(args.lo), "to": str(args.hi),
               "primes_scanned": str(res.counts["primes_scanned"]),
               "skipped": str(res.counts["skipped"]),
               "hits": [str(p) for p in res.hits]}
    if not args.deterministic:
        summary["elapsed"] = round(res.elapsed, 3)
    em.emit(summary)
    return 0


def _cmd_scan_verify(args) -> int:
    if args.check not in REGISTRY:
        raise ValueError("unknown check %r; known: %s" % (args.check, ", ".join(CHECK_IDS)))
    grid = args.a_set if args.a_set is not None else DEFAULT_A_GRID
    em = Emitter(args.output)
    res = verify_sweep(args.check, grid, args.lo, args.hi)
    for rep in res.hits:
        em.emit(_ser_report(rep))
    em.emit(_sweep_counts(res, args.deterministic))
    return 1 if res.hits else 0


def _cmd_report(args) -> int:
    grid = args.a_set if args.a_set is not None else DEFAULT_A_GRID
    out = generate_report(args.out_dir, p_max=args.p_max, a_values=grid,
                          wall_params=LucasParams(args.A, args.B), wall_hi=args.wall_to)
    failures = sum(s["failures"] for s in out["sweeps"].values())
    em = Emitter(args.output)
    em.emit({
        "out_dir": args.out_dir,
        "files": out["files"],
        "failures": str(failures),
        "wall_hits": [str(p) for p in out["wall"]["hits"]],
    })
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "tsv"), default="json",
                        help="result encoding (default json)")
    common.add_argument("--deterministic", action="store_true",
                        help="suppress elapsed-time fields for byte-identical reruns")

    top = argparse.ArgumentParser(prog="lucres",
                                  description="Residue-class binomial sums, Lucas "
                                              "quotients, and congruence verification.")
    sub = top.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("sum", parents=[common],
                        help="class sum of C(n,k) a^k over k = r (mod m)")
    for ps_ in (ps,):
        ps_.add_argument("--n", type=int, required=True)
        ps_.add_argument("--m", type=int, required=True)
        ps_.add_argument("--r", type=int, required=True)
        ps_.add_argument("--a", type=int, required=True)
        ps_.add_argument("--strategy", choices=("direct", "recur", "closed"),
                         default="direct")
    ps.set_defaults(func=_cmd_sum)

    pd = sub.add_parser("delta", parents=[common],
                        help="normalized difference of a class sum")
    pd.add_argument("--n", type=int, required=True)
    pd.add_argument("--m", type=int, required=True)
    pd.add_argument("--r", type=int, required=True)
    pd.add_argument("--a", type=int, required=True)
    pd.add_argument("--strategy", choices=("direct", "recur", "closed"), default="direct")
    pd.set_defaults(func=_cmd_delta)

    pp = sub.add_parser("poly", parents=[common],
                        help="coefficient row of the recurrence family")
    pp.add_argument("--family", choices=("G", "Q"), required=True)
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--a", type=int, required=True)
    pp.set_defaults(func=_cmd_poly)

    pq = sub.add_parser("quotient", parents=[common],
                        help="Lucas quotient u_{p-(D/p)}/p mod p")
    pq.add_argument("--A", type=int, required=True)
    pq.add_argument("--B", type=int, required=True)
    pq.add_argument("--p", type=int, required=True)
    pq.set_defaults(func=_cmd_quotient)

    pv = sub.add_parser("verify", parents=[common],
                        help="sweep one congruence check over primes <= p-max")
    pv.add_argument("--check", required=True)
    pv.add_argument("--a", type=int, action="append",
                    help="a value (repeatable; default grid -5..5)")
    pv.add_argument("--p-min", type=int, default=3)
    pv.add_argument("--p-max", type=int, required=True)
    pv.set_defaults(func=_cmd_verify)

    psc = sub.add_parser("scan", parents=[common], help="range scans")
    scsub = psc.add_subparsers(dest="scan_kind", required=True)
    pw = scsub.add_parser("wall", parents=[common],
                          help="hunt for p^2 dividing u_{p-(D/p)}")
    pw.add_argument("--A", type=int, required=True)
    pw.add_argument("--B", type=int, required=True)
    pw.add_argument("--from", dest="lo", type=int, required=True)
    pw.add_argument("--to", dest="hi", type=int, required=True)
    pw.add_argument("--checkpoint", default=None)
    pw.add_argument("--segment-size", type=int, default=DEFAULT_SEGMENT)
    pw.add_argument("--threads", type=int, default=1)
    pw.set_defaults(func=_cmd_scan_wall)
    pcv = scsub.add_parser("verify", parents=[common],
                           help="sweep a check over a prime range, reporting failures")
    pcv.add_argument("--check", required=True)
    pcv.add_argument("--a-set", type=_parse_int_list, default=None,
                     help="comma-separated a values (default -5..5)")
    pcv.add_argument("--from", dest="lo", type=int, required=True)
    pcv.add_argument("--to", dest="hi", type=int, required=True)
    pcv.set_defaults(func=_cmd_scan_verify)

    pr = sub.add_parser("report", parents=[common],
                        help="run sweeps and a wall scan; write TSV tables and figures")
    pr.add_argument("--out-dir", required=True)
    pr.add_argument("--p-max", type=int, default=300)
    pr.add_argument("--a-set", type=_parse_int_list, default=None)
    pr.add_argument("--A", type=int, default=-1)
    pr.add_argument("--B", type=int, default=1)
    pr.add_argument("--wall-to", type=int, default=20000)
    pr.set_defaults(func=_cmd_report)

    return top


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.func(args)
    except (LucresError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

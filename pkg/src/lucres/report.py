"""Batch report: run the congruence sweeps and a wall scan, write the
results as tab-delimited tables, and render summary figures to files."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .lucas import LucasParams, lucas_epsilon, lucas_quotient_mod_p
from .scanner import prime_stream, verify_sweep, wall_scan
from .verify import CHECK_IDS


def _report_row(rep) -> list[str]:
    return [rep.check_id,
            "" if rep.p is None else str(rep.p),
            "" if rep.a is None else str(rep.a),
            "true" if rep.hypotheses_met else "false",
            "" if rep.passed is None else ("true" if rep.passed else "false"),
            ",".join(str(int(v)) for v in rep.lhs),
            ",".join(str(int(v)) for v in rep.rhs),
            rep.detail]


def _write_tsv(path: str, header: list[str], rows) -> None:
    with open(path, "w") as fh:
        fh.write("\t".join(header) + "\n")
        for row in rows:
            fh.write("\t".join(row) + "\n")


def _outcome_figure(path: str, summary: dict[str, dict[str, int]]) -> None:
    ids = list(summary)
    passed = [summary[c]["passed"] for c in ids]
    skipped = [summary[c]["skipped"] for c in ids]
    failed = [summary[c]["failures"] for c in ids]
    fig, ax = plt.subplots(figsize=(8, 0.45 * len(ids) + 1.5))
    ypos = range(len(ids))
    ax.barh(ypos, passed, color="#2a9d4e", label="passed")
    ax.barh(ypos, skipped, left=passed, color="#b8b8b8", label="skipped")
    ax.barh(ypos, failed, left=[p + s for p, s in zip(passed, skipped)],
            color="#d94141", label="failed")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(ids)
    ax.invert_yaxis()
    ax.set_xlabel("check evaluations")
    ax.set_title("congruence sweep outcomes")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _wall_figure(path: str, points: list[tuple[int, float]], params: LucasParams) -> None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    if points:
        xs, ys = zip(*points)
        ax1.scatter(xs, ys, s=4, alpha=0.5, color="#1f5fa8")
        ax2.hist(ys, bins=40, color="#1f5fa8")
    ax1.set_xlabel("p")
    ax1.set_ylabel("(u quotient mod p) / p")
    ax1.set_ylim(-0.02, 1.0)
    ax1.axhline(0.0, color="#d94141", linewidth=0.8)
    ax1.set_title("normalized Lucas quotients, A=%d B=%d" % (params.A, params.B))
    ax2.set_xlabel("(u quotient mod p) / p")
    ax2.set_ylabel("primes")
    ax2.set_title("distribution (a hit would sit at 0)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def generate_report(out_dir: str, p_max: int = 300, a_values=tuple(range(-5, 6)),
                    wall_params: LucasParams = LucasParams(-1, 1),
                    wall_hi: int = 20000) -> dict:
    """Write sweep and wall-scan tables plus figures under out_dir."""
    os.makedirs(out_dir, exist_ok=True)
    rows: list[list[str]] = []
    summary: dict[str, dict[str, int]] = {}
    for cid in CHECK_IDS:
        res = verify_sweep(cid, a_values, 3, p_max, on_report=lambda r: rows.append(_report_row(r)))
        summary[cid] = {k: res.counts[k] for k in ("checked", "passed", "skipped", "failures")}
    reports_tsv = os.path.join(out_dir, "sweep_reports.tsv")
    _write_tsv(reports_tsv,
               ["check_id", "p", "a", "hypotheses_met", "pass", "lhs", "rhs", "detail"],
               rows)
    summary_tsv = os.path.join(out_dir, "sweep_summary.tsv")
    _write_tsv(summary_tsv,
               ["check_id", "checked", "passed", "skipped", "failures"],
               ([c] + [str(summary[c][k]) for k in ("checked", "passed", "skipped", "failures")]
                for c in summary))
    outcomes_png = os.path.join(out_dir, "check_outcomes.png")
    _outcome_figure(outcomes_png, summary)

    scan = wall_scan(wall_params, 3, wall_hi)
    points = []
    wall_rows = []
    ad = wall_params.A * wall_params.D
    for p in prime_stream(3, wall_hi):
        if ad % p == 0:
            continue
        q = lucas_quotient_mod_p(wall_params, p).value
        points.append((p, q / p))
        wall_rows.append([str(p), str(lucas_epsilon(wall_params, p)), str(q),
                          "%.6f" % (q / p)])
    wall_tsv = os.path.join(out_dir, "wall_quotients.tsv")
    _write_tsv(wall_tsv, ["p", "epsilon", "quotient_mod_p", "normalized"], wall_rows)
    wall_png = os.path.join(out_dir, "wall_quotients.png")
    _wall_figure(wall_png, points, wall_params)

    return {
        "files": [reports_tsv, summary_tsv, outcomes_png, wall_tsv, wall_png],
        "sweeps": summary,
        "wall": {"params": {"A": wall_params.A, "B": wall_params.B},
                 "hi": wall_hi, "hits": list(scan.hits),
                 "primes_scanned": scan.counts["primes_scanned"],
                 "skipped": scan.counts["skipped"]},
    }

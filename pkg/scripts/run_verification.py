#!/usr/bin/env python3
"""Full verification campaign: every theorem, exhaustive n <= LIMIT plus all
family grids, with JSONL and CSV reports.

Usage:
    python scripts/run_verification.py [--exhaustive 7] [--family-max 12]
                                       [--jobs N] [--out report]

Writes <out>.jsonl (one report line per failure; empty file means clean) and
<out>.csv (per-sweep summary). Exit code 1 if any failure was found.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qdist import sweeps, verify  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--exhaustive", type=int, default=7)
    ap.add_argument("--family-max", type=int, default=12)
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--out", default="verification_report")
    args = ap.parse_args()
    jobs = args.jobs or sweeps.default_jobs()
    print(f"# run_verification --exhaustive {args.exhaustive} --family-max {args.family_max} --jobs {jobs}")

    rows = []
    failures = []
    for tid in verify.GRAPH_THEOREMS:
        for n in range(2, args.exhaustive + 1):
            t0 = time.perf_counter()
            res = sweeps.exhaustive_failures(tid, n, jobs=jobs)
            dt = time.perf_counter() - t0
            rows.append(
                dict(theorem=tid, scope=f"exhaustive n={n}", instances=res.applicable,
                     failures=len(res.failures), seconds=round(dt, 2))
            )
            failures.extend(res.failures)
            print(f"  {res.summary()} ({dt:.1f}s)")
    for tid in verify.FAMILY_THEOREM_IDS:
        t0 = time.perf_counter()
        reports = verify.family_grid_reports(tid, 3 if tid == "cycle-matching" else 7, args.family_max)
        bad = [r for r in reports if r.applicable and not r.passed]
        dt = time.perf_counter() - t0
        rows.append(
            dict(theorem=tid, scope=f"grid n<={args.family_max}", instances=len(reports),
                 failures=len(bad), seconds=round(dt, 2))
        )
        failures.extend(bad)
        print(f"  {tid} grid: {len(reports)} instances, {len(bad)} failures ({dt:.1f}s)")

    with open(f"{args.out}.jsonl", "w") as fh:
        for rep in failures:
            fh.write(rep.to_json_line() + "\n")
    with open(f"{args.out}.csv", "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=["theorem", "scope", "instances", "failures", "seconds"])
        writer.writeheader()
        writer.writerows(rows)
    total_bad = len(failures)
    print(f"# total failures: {total_bad}; reports in {args.out}.jsonl / {args.out}.csv")
    return 1 if total_bad else 0


if __name__ == "__main__":
    sys.exit(main())

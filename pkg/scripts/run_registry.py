#!/usr/bin/env python3
"""Run every theorem check over the ring registry and print a pass/fail table.

Usage:
  python scripts/run_registry.py
  python scripts/run_registry.py --rings zmod:8 tri:3:zmod:2 --json out.json
"""

import argparse
import sys
import time

from finring.verifier import DEFAULT_REGISTRY, THEOREMS, reports_json, run_theorem


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--rings", nargs="*", default=DEFAULT_REGISTRY)
    p.add_argument("--theorems", nargs="*", default=list(THEOREMS))
    p.add_argument("--json", default=None)
    args = p.parse_args()

    start = time.perf_counter()
    reports = []
    for spec in args.rings:
        for tid in args.theorems:
            rep = run_theorem(tid, spec, force=True)
            reports.append(rep)
            print(rep.summary(), flush=True)
    failed = [r for r in reports if not r.passed]
    print(f"\n{len(reports) - len(failed)}/{len(reports)} passed in {time.perf_counter() - start:.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(reports_json(reports, timings=True))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

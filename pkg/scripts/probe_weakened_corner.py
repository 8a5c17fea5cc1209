#!/usr/bin/env python3
"""Probe the corner converse (eae property in eRe => ae + 1 - e property in R)
for quasipolar / pseudopolar elements with the centrality hypothesis dropped.

Over finite rings every element is strongly pi-regular, so the probe is expected
to come back empty; it exists to exercise the search machinery on a statement
the theorems do not claim.
"""

import argparse

from finring.verifier import search_counterexample

DEFAULT_RINGS = ["mat:2:zmod:2", "tri:2:zmod:2", "tri:2:zmod:3", "tri:3:zmod:2", "mat:2:zmod:3"]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--rings", nargs="*", default=DEFAULT_RINGS)
    p.add_argument("--budget", type=int, default=None)
    args = p.parse_args()
    for tid in ("CORNER_QUASIPOLAR_ANY_E", "CORNER_PSEUDOPOLAR_ANY_E"):
        try:
            res = search_counterexample(tid, args.rings, budget=args.budget, force=True)
        except ValueError as exc:
            print(f"{tid}: {exc}")
            continue
        if res.exhausted:
            print(f"{tid}: no counterexample in {res.cases_run} cases")
        else:
            print(f"{tid}: counterexample in {res.ring}: {res.failure}")


if __name__ == "__main__":
    main()

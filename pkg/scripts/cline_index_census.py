#!/usr/bin/env python3
"""Tabulate (index(ab), index(ba)) over all pairs of each ring.

The transfer results say nothing about Drazin indices, so this records what
actually happens on small rings.
"""

import argparse
from collections import Counter

from finring.inverses import drazin
from finring.ringspec import build_ring

DEFAULT_RINGS = ["zmod:8", "zmod:12", "tri:2:zmod:3", "mat:2:zmod:2", "tri:3:zmod:2", "mat:2:zmod:3"]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--rings", nargs="*", default=DEFAULT_RINGS)
    args = p.parse_args()
    for spec in args.rings:
        r = build_ring(spec)
        counts = Counter()
        for a in r.elements():
            for b in r.elements():
                counts[(drazin(a * b).index, drazin(b * a).index)] += 1
        worst = max(abs(i - j) for i, j in counts)
        print(f"{spec} (order {r.order}): max |ind(ab) - ind(ba)| = {worst}")
        for (i, j), c in sorted(counts.items()):
            print(f"    ind(ab)={i} ind(ba)={j}: {c}")


if __name__ == "__main__":
    main()

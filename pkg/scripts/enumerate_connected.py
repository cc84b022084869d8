#!/usr/bin/env python3
"""Isomorph-free enumeration of connected graphs by vertex augmentation.

Support tooling for the census fixtures: the package itself only consumes
graph6 streams, it never produces them.  Every connected graph on n >= 2
vertices arises from a connected graph on n-1 vertices by attaching one
new vertex to a nonempty subset (delete a spanning-tree leaf to see the
parent), so augmenting every class on n-1 by every nonempty subset and
deduplicating by canonical form is exhaustive.

Counts per order are cross-checked in the test suite against brute-force
enumeration over all labeled graphs for small n and against the classical
connected-graph counts (1, 2, 6, 21, 112, 853, 11117, 261080, ...).

Usage:
    python scripts/enumerate_connected.py --max-n 9 --out tests/data/connected_2_9.g6.gz
"""

from __future__ import annotations

import argparse
import gzip
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from trgraph.graphs import Graph, canonical_form, canonical_graph, encode_graph6


def connected_classes(n: int, parents: list[Graph] | None = None) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism, canonically
    labeled, deterministically ordered."""
    if n < 1:
        return []
    if n == 1:
        return [Graph(1)]
    if parents is None:
        parents = connected_classes(n - 1)
    seen: dict[bytes, Graph] = {}
    base = n - 1
    for parent in parents:
        for subset in range(1, 1 << base):
            adj = list(parent.adj) + [0]
            m = subset
            while m:
                low = m & -m
                v = low.bit_length() - 1
                adj[v] |= 1 << base
                adj[base] |= 1 << v
                m ^= low
            child = Graph.from_adj(adj)
            form = canonical_form(child)
            if form not in seen:
                seen[form] = canonical_graph(child)
    return [seen[form] for form in sorted(seen)]


def stream_codes(max_n: int, min_n: int = 2, progress: bool = False):
    """Yield graph6 codes of all connected graphs with min_n <= n <= max_n,
    ordered by n and canonical form."""
    classes = [Graph(1)]
    for n in range(2, max_n + 1):
        t0 = time.time()
        classes = connected_classes(n, classes)
        if progress:
            print(f"n={n}: {len(classes)} classes ({time.time() - t0:.1f}s)", file=sys.stderr)
        if n >= min_n:
            for g in classes:
                yield encode_graph6(g)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--out", type=Path, required=True,
                    help="output file; .gz suffix enables gzip")
    args = ap.parse_args()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    opener = gzip.open if args.out.suffix == ".gz" else open
    count = 0
    with opener(args.out, "wt") as fh:
        for code in stream_codes(args.max_n, args.min_n, progress=True):
            fh.write(code + "\n")
            count += 1
    print(f"wrote {count} graphs to {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Long-run generation of all connected graphs on 10 vertices (graph6).

Augments the committed order-9 corpus by one vertex in every way and
deduplicates by canonical form, sharded over parents across worker
processes with digest-level cross-shard dedup at merge time.  The final
class count must equal 11716571 (the classical value), which is asserted:
an incomplete or over-complete run cannot pass silently.

Roughly 133M candidate children; expect a couple of hours on a small box.

Usage:
    python scripts/generate_order10.py --out tests/data/connected_10.g6.gz [--jobs 2]
"""

from __future__ import annotations

import argparse
import gzip
import hashlib
import multiprocessing as mp
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from trgraph.graphs import Graph, canonical_form, encode_graph6, parse_graph6

EXPECTED_CLASSES = 11_716_571
CORPUS_2_9 = Path(__file__).resolve().parent.parent / "tests" / "data" / "connected_2_9.g6.gz"

_seen: set = set()


def _worker_init():
    global _seen
    _seen = set()


def _process_parents(chunk: list[str]) -> list[str]:
    out = []
    base = 9
    for code in chunk:
        parent = parse_graph6(code)
        padj = list(parent.adj) + [0]
        for subset in range(1, 1 << base):
            adj = padj.copy()
            m = subset
            row = 0
            while m:
                low = m & -m
                v = low.bit_length() - 1
                adj[v] |= 1 << base
                row |= low
                m ^= low
            adj[base] = row
            child = Graph.from_adj(adj)
            digest = hashlib.blake2b(canonical_form(child), digest_size=12).digest()
            if digest not in _seen:
                _seen.add(digest)
                out.append(digest.hex() + " " + encode_graph6(child))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, required=True)
    ap.add_argument("--jobs", type=int, default=2)
    ap.add_argument("--chunk", type=int, default=400)
    args = ap.parse_args()

    with gzip.open(CORPUS_2_9, "rt") as fh:
        parents = [line.strip() for line in fh if ord(line[0]) - 63 == 9]
    print(f"parents: {len(parents)}", file=sys.stderr)

    chunks = [parents[i:i + args.chunk] for i in range(0, len(parents), args.chunk)]
    args.out.parent.mkdir(parents=True, exist_ok=True)
    tmp = args.out.with_suffix(".partial")
    t0 = time.time()
    done = 0
    with mp.Pool(args.jobs, initializer=_worker_init) as pool, open(tmp, "w") as fh:
        for lines in pool.imap_unordered(_process_parents, chunks):
            fh.write("\n".join(lines) + "\n" if lines else "")
            done += 1
            if done % 10 == 0:
                rate = done / (time.time() - t0)
                eta = (len(chunks) - done) / rate / 60
                print(f"chunk {done}/{len(chunks)} eta {eta:.0f} min", file=sys.stderr, flush=True)

    print("merging...", file=sys.stderr)
    seen: set = set()
    count = 0
    with open(tmp) as src, gzip.open(args.out, "wt") as dst:
        for line in src:
            if not line.strip():
                continue
            digest, code = line.split()
            if digest in seen:
                continue
            seen.add(digest)
            dst.write(code + "\n")
            count += 1
    tmp.unlink()
    print(f"classes: {count}", file=sys.stderr)
    if count != EXPECTED_CLASSES:
        print(f"ERROR: expected {EXPECTED_CLASSES} classes, got {count}", file=sys.stderr)
        sys.exit(1)
    print(f"wrote {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()

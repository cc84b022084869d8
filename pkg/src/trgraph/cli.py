"""Command-line entry points.

    trgraph repl                          interactive session on stdin/stdout
    trgraph serve --port 8000             JSON session service
    trgraph families build --tag G3 --n 2 [--profile]
    trgraph search cycle-chords --n 9 --chords 3 --predicate iti
    trgraph search census --in FILE.g6 [--emit-iti FILE] [--json FILE]
    trgraph search conjecture --in report.json
"""

from __future__ import annotations

import argparse
import gzip
import json
import sys
from pathlib import Path

from .chordal import expand, fast_transmissions
from .classify import classify, spectrum_string
from .families import FamilySpec, build, closed_form_transmissions
from .graphs import encode_graph6
from .search import (
    CensusReport,
    ChordSearchTask,
    DEFAULT_CEILING,
    classify_stream,
    enumerate_cycle_chords,
    scan_order_conjecture,
)


def _families_build(args) -> int:
    tag = args.tag.upper()
    spec = FamilySpec(tag, n=args.n or 0, m=args.m or 0, k=args.k or 0)
    cwp = build(spec)
    g = expand(cwp)
    print(f"tag: {tag}")
    print(f"vertices: {g.n}")
    print(f"edges: {g.edge_count()}")
    print(f"graph6: {encode_graph6(g)}" if g.n <= 62 else "graph6: (too large)")
    if args.profile:
        profile = fast_transmissions(cwp)
        spectrum = classify(profile)
        print(f"transmissions: {' '.join(str(t) for t in profile.tr)}")
        print(f"ti: {spectrum.is_ti}")
        print(f"mti: {spectrum.is_mti}")
        print(f"iti: {spectrum.is_iti}")
        print(f"spectrum: {spectrum_string(spectrum)}")
        cf = closed_form_transmissions(spec)
        scope = "core-only" if cf.core_only else "total"
        print(f"closed-form ({scope}): {' '.join(str(t) for t in cf.values)}")
    return 0


def _search_cycle_chords(args) -> int:
    from .search import InfeasibleSearchError

    task = ChordSearchTask(
        n=args.n,
        chords=args.chords,
        predicate=args.predicate.upper(),
        shards=args.shards,
        shard=args.shard,
        ceiling=args.ceiling,
    )
    try:
        result = enumerate_cycle_chords(task)
    except InfeasibleSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"cycle: {task.n}")
    print(f"chords: {task.chords}")
    print(f"predicate: {task.predicate}")
    print(f"subsets-examined: {result.subsets_examined}")
    print(f"labeled-hits: {result.labeled_hits}")
    print(f"isomorphism-classes: {result.isomorphism_classes}")
    if args.emit:
        Path(args.emit).write_text("".join(code + "\n" for code in result.codes()))
        print(f"emitted: {args.emit}")
    return 0


def _open_stream(path: str):
    if path == "-":
        return sys.stdin
    if path.endswith(".gz"):
        return gzip.open(path, "rt")
    return open(path)


def _search_census(args) -> int:
    with _open_stream(args.infile) as fh:
        report = classify_stream(fh)
    for n in sorted(report.orders):
        c = report.counts(n)
        print(f"order {n}: seen {c.seen}, connected {c.connected}, "
              f"disconnected {c.disconnected}, ti {c.ti}, mti {c.mti}, iti {c.iti}")
    print(f"total-iti: {report.total('iti')}")
    print(f"total-mti: {report.total('mti')}")
    print(f"malformed-lines: {len(report.malformed)}")
    for line_no, message in report.malformed:
        print(f"malformed line {line_no}: {message}")
    if args.emit_iti:
        Path(args.emit_iti).write_text("".join(c + "\n" for c in report.iti_codes))
        print(f"emitted-iti: {args.emit_iti}")
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_dict(), indent=2))
        print(f"report: {args.json}")
    return 0


def _search_conjecture(args) -> int:
    data = json.loads(Path(args.infile).read_text())
    report = CensusReport.from_dict(data)
    findings = scan_order_conjecture(report)
    print(f"iti-witnesses-scanned: {len(report.iti_codes)}")
    print(f"findings: {len(findings)}")
    for f in findings:
        print(f"order {f.order} (= 2 mod 4): {f.code}")
    if not findings:
        print("conjecture upheld on the examined corpus")
    return 0 if not findings else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="trgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_repl = sub.add_parser("repl", help="interactive session on stdin/stdout")
    p_repl.add_argument("--log", help="append-only command log for deterministic replay")

    p_serve = sub.add_parser("serve", help="run the JSON session service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    p_fam = sub.add_parser("families", help="parametric family generators")
    fam_sub = p_fam.add_subparsers(dest="families_command", required=True)
    p_build = fam_sub.add_parser("build", help="build one family member")
    p_build.add_argument("--tag", required=True, choices=["G1", "G2", "G3", "G4", "DOB",
                                                          "g1", "g2", "g3", "g4", "dob"])
    p_build.add_argument("--n", type=int)
    p_build.add_argument("--m", type=int)
    p_build.add_argument("--k", type=int)
    p_build.add_argument("--profile", action="store_true",
                         help="also print transmissions, flags and spectrum")

    p_search = sub.add_parser("search", help="exhaustive and stream searches")
    search_sub = p_search.add_subparsers(dest="search_command", required=True)

    p_cc = search_sub.add_parser("cycle-chords", help="add chords to a cycle")
    p_cc.add_argument("--n", type=int, required=True)
    p_cc.add_argument("--chords", type=int, required=True)
    p_cc.add_argument("--predicate", default="iti", choices=["ti", "mti", "iti"])
    p_cc.add_argument("--shards", type=int, default=1)
    p_cc.add_argument("--shard", type=int, default=0)
    p_cc.add_argument("--ceiling", type=int, default=DEFAULT_CEILING,
                      help="refuse tasks iterating more subsets than this; "
                           "raise explicitly for long runs")
    p_cc.add_argument("--emit", help="write predicate-class representatives (graph6)")

    p_census = search_sub.add_parser("census", help="classify a graph6 stream")
    p_census.add_argument("--in", dest="infile", required=True,
                          help="graph6 file, .gz allowed, '-' for stdin")
    p_census.add_argument("--emit-iti", dest="emit_iti")
    p_census.add_argument("--json", help="write the structured report")

    p_conj = search_sub.add_parser("conjecture", help="scan a census report for "
                                   "ITI graphs on 2 mod 4 vertices")
    p_conj.add_argument("--in", dest="infile", required=True)

    args = parser.parse_args(argv)
    if args.command == "repl":
        from .session import run_repl
        run_repl(log_path=args.log)
        return 0
    if args.command == "serve":
        from .service import serve
        serve(args.host, args.port)
        return 0
    if args.command == "families":
        return _families_build(args)
    if args.command == "search":
        if args.search_command == "cycle-chords":
            return _search_cycle_chords(args)
        if args.search_command == "census":
            return _search_census(args)
        return _search_conjecture(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())

"""Exhaustive and stream-driven searches for transmission-irregular
structure: chords added to a cycle with isomorph rejection, graph6 stream
census, and the order = 2 (mod 4) conjecture scanner.

Workers share nothing: a chord task can be sharded by subset index and a
census by stream slices, with reports merged associatively afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from .classify import classify
from .distances import TransmissionProfile
from .graphs import (
    Graph,
    Graph6Error,
    canonical_form,
    canonical_graph,
    cycle_graph,
    encode_graph6,
    is_connected,
    parse_graph6,
)

PREDICATES = ("TI", "MTI", "ITI")
DEFAULT_CEILING = 20_000_000


class InfeasibleSearchError(ValueError):
    def __init__(self, estimate: int, ceiling: int):
        super().__init__(
            f"task would iterate {estimate} chord subsets, above the ceiling "
            f"of {ceiling}; rerun with a raised ceiling to allow long runs"
        )
        self.estimate = estimate
        self.ceiling = ceiling


def _transmission_values(adj, n: int, window: int | None):
    """Per-vertex transmissions with early abort.

    Aborts (returns None) on a duplicate value, on a value-range spread
    exceeding `window` (pass n-1 to prune non-interval profiles early, None
    to keep any spread), or on a disconnected graph.  A duplicate value
    already falsifies TI and everything above it.
    """
    full = (1 << n) - 1
    values = []
    seen_vals = set()
    lo = hi = None
    for s in range(n):
        seen = 1 << s
        frontier = seen
        dist = 0
        total = 0
        while seen != full:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            if not frontier:
                return None
            seen |= frontier
            dist += 1
            total += dist * frontier.bit_count()
        if total in seen_vals:
            return None
        seen_vals.add(total)
        if lo is None:
            lo = hi = total
        else:
            if total < lo:
                lo = total
            elif total > hi:
                hi = total
        if window is not None and hi - lo > window:
            return None
        values.append(total)
    return values


def _satisfies(values, n: int, predicate: str) -> bool:
    # values already pairwise distinct (TI) when not None
    if predicate == "TI":
        return True
    if predicate == "MTI":
        return len({v % n for v in values}) == n
    return max(values) - min(values) == n - 1


@dataclass(frozen=True)
class ChordSearchTask:
    n: int
    chords: int
    predicate: str = "ITI"
    shards: int = 1
    shard: int = 0
    ceiling: int = DEFAULT_CEILING

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("cycle length must be at least 4")
        if self.chords < 1:
            raise ValueError("need at least one chord")
        if self.predicate not in PREDICATES:
            raise ValueError(f"predicate must be one of {PREDICATES}")
        if not 0 <= self.shard < self.shards:
            raise ValueError("shard index out of range")


@dataclass
class ChordSearchResult:
    task: ChordSearchTask
    subsets_examined: int = 0
    labeled_hits: int = 0
    representatives: dict = field(default_factory=dict)   # canonical form -> graph6

    @property
    def isomorphism_classes(self) -> int:
        return len(self.representatives)

    def codes(self) -> list[str]:
        return sorted(self.representatives.values())

    def merge(self, other: "ChordSearchResult") -> "ChordSearchResult":
        merged = ChordSearchResult(self.task, self.subsets_examined + other.subsets_examined,
                                   self.labeled_hits + other.labeled_hits,
                                   dict(self.representatives))
        merged.representatives.update(other.representatives)
        return merged


def enumerate_cycle_chords(task: ChordSearchTask) -> ChordSearchResult:
    """Try every way of adding `chords` distinct chords to a cycle,
    classify each graph, and deduplicate predicate hits by canonical form.

    Isomorph rejection runs after classification: hits are rare and the
    canonical form is the expensive step.
    """
    n = task.n
    base = cycle_graph(n)
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not base.has_edge(u, v)]
    if task.chords > len(non_edges):
        raise ValueError(f"only {len(non_edges)} chords available, asked for {task.chords}")
    estimate = comb(len(non_edges), task.chords)
    if estimate > task.ceiling:
        raise InfeasibleSearchError(estimate, task.ceiling)

    window = n - 1 if task.predicate == "ITI" else None
    base_adj = list(base.adj)
    result = ChordSearchResult(task)
    shards, shard = task.shards, task.shard
    index = 0
    for combo in combinations(non_edges, task.chords):
        index += 1
        if shards > 1 and (index - 1) % shards != shard:
            continue
        adj = base_adj.copy()
        for u, v in combo:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        result.subsets_examined += 1
        values = _transmission_values(adj, n, window)
        if values is None or not _satisfies(values, n, task.predicate):
            continue
        result.labeled_hits += 1
        g = Graph.from_adj(adj)
        form = canonical_form(g)
        if form not in result.representatives:
            result.representatives[form] = encode_graph6(canonical_graph(g))
    return result


@dataclass
class OrderCounts:
    seen: int = 0
    connected: int = 0
    disconnected: int = 0
    ti: int = 0
    mti: int = 0
    iti: int = 0

    def merge(self, other: "OrderCounts") -> "OrderCounts":
        return OrderCounts(*(getattr(self, f) + getattr(other, f)
                             for f in ("seen", "connected", "disconnected", "ti", "mti", "iti")))


@dataclass
class CensusReport:
    orders: dict = field(default_factory=dict)        # n -> OrderCounts
    malformed: list = field(default_factory=list)     # (line number, message)
    iti_codes: list = field(default_factory=list)
    mti_codes: list = field(default_factory=list)

    def counts(self, n: int) -> OrderCounts:
        return self.orders.get(n, OrderCounts())

    def total(self, flag: str) -> int:
        return sum(getattr(c, flag) for c in self.orders.values())

    def merge(self, other: "CensusReport") -> "CensusReport":
        orders = dict(self.orders)
        for n, c in other.orders.items():
            orders[n] = orders[n].merge(c) if n in orders else c
        return CensusReport(
            orders,
            sorted(self.malformed + other.malformed),
            sorted(set(self.iti_codes) | set(other.iti_codes)),
            sorted(set(self.mti_codes) | set(other.mti_codes)),
        )

    def to_dict(self) -> dict:
        return {
            "orders": {
                str(n): {
                    "seen": c.seen, "connected": c.connected,
                    "disconnected": c.disconnected,
                    "ti": c.ti, "mti": c.mti, "iti": c.iti,
                }
                for n, c in sorted(self.orders.items())
            },
            "malformed": [{"line": ln, "error": msg} for ln, msg in self.malformed],
            "iti": list(self.iti_codes),
            "mti": list(self.mti_codes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CensusReport":
        report = cls()
        for n, c in data.get("orders", {}).items():
            report.orders[int(n)] = OrderCounts(
                c["seen"], c["connected"], c["disconnected"], c["ti"], c["mti"], c["iti"]
            )
        report.malformed = [(e["line"], e["error"]) for e in data.get("malformed", [])]
        report.iti_codes = list(data.get("iti", []))
        report.mti_codes = list(data.get("mti", []))
        return report


def classify_stream(lines: Iterable[str], emit_iti: bool = True, emit_mti: bool = True) -> CensusReport:
    """Classify a newline-delimited graph6 stream into per-order counts.

    Disconnected graphs are tallied and skipped; malformed lines are
    recorded with their line numbers and the stream continues.  Counts are
    a pure function of the stream's multiset of lines, so any sharding
    that partitions the lines merges back to the same report.
    """
    report = CensusReport()
    for line_no, line in enumerate(lines, start=1):
        code = line.strip()
        if not code:
            continue
        if code.startswith(">>graph6<<"):
            code = code[len(">>graph6<<"):]
        try:
            g = parse_graph6(code)
        except Graph6Error as exc:
            report.malformed.append((line_no, str(exc)))
            continue
        counts = report.orders.setdefault(g.n, OrderCounts())
        counts.seen += 1
        if g.n == 0:
            counts.disconnected += 1
            continue
        values = _transmission_values(g.adj, g.n, None)
        if values is None:
            # duplicate transmission or disconnected: tell the two apart
            if not is_connected(g):
                counts.disconnected += 1
                continue
            counts.connected += 1
            continue
        counts.connected += 1
        spectrum = classify(TransmissionProfile(g.n, tuple(values)))
        if spectrum.is_ti:
            counts.ti += 1
        if spectrum.is_mti:
            counts.mti += 1
            if emit_mti:
                report.mti_codes.append(code)
        if spectrum.is_iti:
            counts.iti += 1
            if emit_iti:
                report.iti_codes.append(code)
    report.iti_codes.sort()
    report.mti_codes.sort()
    report.malformed.sort()
    return report


@dataclass(frozen=True)
class ConjectureFinding:
    order: int
    code: str


def scan_order_conjecture(source) -> list[ConjectureFinding]:
    """List every ITI witness whose order is 2 modulo 4.

    Accepts a CensusReport (scans its emitted ITI codes), a
    ChordSearchResult (scans its representatives), or any iterable of
    graph6 codes (classifies each).  Empty findings = conjecture upheld on
    the examined corpus.
    """
    findings = []
    if isinstance(source, CensusReport):
        for code in source.iti_codes:
            n = ord(code[0]) - 63
            if n % 4 == 2:
                findings.append(ConjectureFinding(n, code))
        return findings
    if isinstance(source, ChordSearchResult):
        codes: Iterable[str] = source.codes()
    else:
        codes = source
    for code in codes:
        g = parse_graph6(code.strip())
        values = _transmission_values(g.adj, g.n, g.n - 1)
        if values is None:
            continue
        if _satisfies(values, g.n, "ITI") and g.n % 4 == 2:
            findings.append(ConjectureFinding(g.n, code.strip()))
    return findings

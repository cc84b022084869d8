"""Transmission spectra (TI / MTI / ITI), the interval-style spectrum
string, and the unimodality audit along internal paths.

TI: all transmissions distinct.  MTI: distinct modulo the vertex count.
ITI: distinct and occupying a full block of consecutive integers.
ITI implies MTI implies TI.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distances import TransmissionProfile, transmissions
from .graphs import Graph, is_connected


@dataclass(frozen=True)
class TransmissionSpectrum:
    n: int
    values: tuple            # sorted (value, multiplicity) pairs
    is_ti: bool
    is_mti: bool
    is_iti: bool

    def value_list(self) -> list[int]:
        return [v for v, mult in self.values for _ in range(mult)]


def classify(profile: TransmissionProfile) -> TransmissionSpectrum:
    """Classify a transmission profile of a connected graph (n >= 1).

    The ITI test is max - min = n - 1 together with distinctness, which is
    equivalent to the consecutive-interval definition in a single pass.
    K1 comes out TI/MTI/ITI vacuously under the literal definitions.
    """
    n = profile.n
    if n < 1:
        raise ValueError("empty profile cannot be classified")
    counts: dict[int, int] = {}
    for t in profile.tr:
        counts[t] = counts.get(t, 0) + 1
    pairs = tuple(sorted(counts.items()))
    ti = len(pairs) == n
    mti = ti and len({t % n for t in profile.tr}) == n
    iti = ti and pairs[-1][0] - pairs[0][0] == n - 1
    return TransmissionSpectrum(n, pairs, ti, mti, iti)


def spectrum_string(spectrum: TransmissionSpectrum) -> str:
    """Render sorted transmissions as intervals and repetitions.

    Maximal runs of consecutive multiplicity-one values print as "[a--b]"
    (bare "a" for a run of one); a repeated value prints as "v(xm)" and
    breaks any run.  Segments join with ", ".
    """
    parts: list[str] = []
    run_start = run_end = None
    for value, mult in spectrum.values:
        if mult == 1:
            if run_start is None:
                run_start = run_end = value
            elif value == run_end + 1:
                run_end = value
            else:
                parts.append(_run(run_start, run_end))
                run_start = run_end = value
        else:
            if run_start is not None:
                parts.append(_run(run_start, run_end))
                run_start = run_end = None
            parts.append(f"{value}(x{mult})")
    if run_start is not None:
        parts.append(_run(run_start, run_end))
    return ", ".join(parts)


def _run(a: int, b: int) -> str:
    return f"[{a}--{b}]" if b > a else f"{a}"


class PureCycleError(ValueError):
    """Every vertex has degree two: a cycle has no internal-path endpoints."""


@dataclass(frozen=True)
class InternalPathRecord:
    """A maximal path w0..wk whose interior vertices all have degree two,
    with the connectivity of the residual graph (interior deleted)."""

    vertices: tuple
    residual_connected: bool

    @property
    def k(self) -> int:
        return len(self.vertices) - 1


def find_internal_paths(g: Graph) -> list[InternalPathRecord]:
    """All maximal internal paths with at least one degree-two interior
    vertex, each degree-two chain reported exactly once.

    Requires a connected graph on n >= 3 vertices; raises PureCycleError
    when every vertex has degree two (no endpoints exist).
    """
    if g.n < 3:
        raise ValueError("internal paths need at least 3 vertices")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    degree = [g.degree(v) for v in range(g.n)]
    if all(d == 2 for d in degree):
        raise PureCycleError("every vertex has degree two")
    records = []
    seen_interior: set = set()
    for start in range(g.n):
        if degree[start] != 2 or start in seen_interior:
            continue
        chain = _trace_chain(g, degree, start)
        seen_interior.update(chain[1:-1])
        records.append(_make_record(g, chain))
    records.sort(key=lambda r: r.vertices)
    return records


def _trace_chain(g: Graph, degree: list[int], start: int) -> list:
    # walk from a degree-2 vertex in both directions to the chain endpoints
    def walk(frm: int, to: int) -> list:
        out = [frm, to]
        while degree[out[-1]] == 2:
            nbrs = list(g.neighbors(out[-1]))
            nxt = nbrs[0] if nbrs[1] == out[-2] else nbrs[1]
            out.append(nxt)
        return out

    a, b = g.neighbors(start)
    left = walk(start, a)       # start, ..., endpoint
    right = walk(start, b)
    chain = list(reversed(left[1:])) + [start] + right[1:]
    # orient deterministically: smaller endpoint first, tie-broken by the
    # interior (covers loop chains attached at a single vertex)
    if (chain[-1], chain[-2]) < (chain[0], chain[1]):
        chain.reverse()
    return chain


def _make_record(g: Graph, chain: list) -> InternalPathRecord:
    interior = set(chain[1:-1])
    keep = [v for v in range(g.n) if v not in interior]
    relabel = {v: i for i, v in enumerate(keep)}
    h = Graph(len(keep), [(relabel[u], relabel[v]) for u, v in g.edges()
                          if u not in interior and v not in interior])
    return InternalPathRecord(tuple(chain), is_connected(h))


@dataclass(frozen=True)
class PathAuditVerdict:
    record: InternalPathRecord
    sequence: tuple
    expected_unimodal: bool      # residual connected => unimodal
    shape_ok: bool
    turning_index: int           # peak (unimodal) or valley position
    second_differences: tuple
    second_diff_ok: bool

    @property
    def ok(self) -> bool:
        return self.shape_ok and self.second_diff_ok


@dataclass(frozen=True)
class UnimodalityAudit:
    graph_order: int
    pure_cycle: bool
    verdicts: tuple = ()

    @property
    def violations(self) -> list:
        return [v for v in self.verdicts if not v.ok]

    @property
    def ok(self) -> bool:
        return not self.violations


def unimodality_audit(g: Graph) -> UnimodalityAudit:
    """Check every internal path's transmission sequence: unimodal when the
    residual graph is connected, inversely unimodal when it is not; the
    disconnected case must additionally have constant second differences 2,
    the connected case second differences <= 0.  A violation signals an
    implementation bug, never new mathematics.
    """
    try:
        records = find_internal_paths(g)
    except PureCycleError:
        return UnimodalityAudit(g.n, pure_cycle=True)
    profile = transmissions(g)
    verdicts = []
    for rec in records:
        seq = tuple(profile[v] for v in rec.vertices)
        expected_up = rec.residual_connected
        probe = seq if expected_up else tuple(-x for x in seq)
        shape_ok, t = _is_unimodal(probe)
        d2 = tuple(seq[i - 1] - 2 * seq[i] + seq[i + 1] for i in range(1, len(seq) - 1))
        d2_ok = all(x == 2 for x in d2) if not expected_up else all(x <= 0 for x in d2)
        verdicts.append(PathAuditVerdict(rec, seq, expected_up, shape_ok, t, d2, d2_ok))
    return UnimodalityAudit(g.n, pure_cycle=False, verdicts=tuple(verdicts))


def _is_unimodal(seq) -> tuple[bool, int]:
    # weakly rising then weakly falling; returns the last index of the
    # rising-or-flat run (the peak position)
    t = 0
    i = 1
    while i < len(seq) and seq[i] >= seq[i - 1]:
        t = i
        i += 1
    while i < len(seq):
        if seq[i] > seq[i - 1]:
            return False, t
        i += 1
    return True, t

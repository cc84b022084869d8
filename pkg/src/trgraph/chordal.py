"""Cores with chordal paths: expansion, the auxiliary weighted graph, and
transmissions of every vertex computed without expanding.

A chordal path (u, v, s) attaches a fresh u-v path with s internal
degree-two vertices to the core.  Distances between core vertices survive
in the auxiliary graph, where each path collapses to an edge of weight
s+1; distances involving internal vertices reduce to minima over the two
ways of leaving a path.  That reduction makes whole-path distance sums
available in closed form, so the total cost depends on core size and path
count, with only the final per-vertex assembly linear in the expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distances import (
    INF,
    DisconnectedGraphError,
    DistanceMatrix,
    TransmissionProfile,
    WeightedCoreGraph,
    transmissions,
    weighted_all_pairs,
)
from .graphs import Graph


@dataclass(frozen=True)
class ChordalPath:
    u: int
    v: int
    s: int

    def __post_init__(self):
        if self.s < 0:
            raise ValueError(f"internal vertex count must be >= 0, got {self.s}")
        if self.u == self.v and self.s < 2:
            raise ValueError("a path from a vertex to itself needs at least 2 internal vertices")

    def length(self) -> int:
        return self.s + 1


@dataclass(frozen=True)
class CoreWithPaths:
    """A core graph plus an ordered list of chordal paths.

    Expanded vertex order is fixed: core vertices 0..n-1, then the internal
    vertices of path 0 counted from its u endpoint, then path 1, and so on.
    """

    core: Graph
    paths: tuple[ChordalPath, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        for p in self.paths:
            if not (0 <= p.u < self.core.n and 0 <= p.v < self.core.n):
                raise ValueError(f"path endpoints ({p.u}, {p.v}) out of core range")

    def expanded_order(self) -> int:
        return self.core.n + sum(p.s for p in self.paths)

    def internal_offset(self, index: int) -> int:
        """Expanded id of position 1 of path `index`."""
        return self.core.n + sum(p.s for p in self.paths[:index])


def expand(cwp: CoreWithPaths) -> Graph:
    """The expanded graph; duplicate edges produced by s=0 paths collapse."""
    n = cwp.expanded_order()
    edges = list(cwp.core.edges())
    next_id = cwp.core.n
    for p in cwp.paths:
        if p.s == 0:
            edges.append((p.u, p.v))
        else:
            chain = [p.u] + list(range(next_id, next_id + p.s)) + [p.v]
            edges.extend(zip(chain, chain[1:]))
            next_id += p.s
    return Graph(n, edges)


def auxiliary(cwp: CoreWithPaths) -> WeightedCoreGraph:
    """Weighted core graph whose distances equal core-to-core distances in
    the expansion: weight 1 per core edge, weight s+1 per chordal path,
    minimum kept per vertex pair."""
    wg = WeightedCoreGraph(cwp.core.n)
    for u, v in cwp.core.edges():
        wg.add_min(u, v, 1)
    for p in cwp.paths:
        wg.add_min(p.u, p.v, p.length())
    return wg


def chord_to_core_distance(aux_d: DistanceMatrix, p: ChordalPath, k: int, b: int) -> int:
    """Distance from the internal vertex at position k of path p (counted
    from the u endpoint) to core vertex b: leave through u or through v."""
    if not 1 <= k <= p.s:
        raise ValueError(f"position {k} out of range 1..{p.s}")
    return min(k + aux_d[p.u][b], p.s + 1 - k + aux_d[p.v][b])


def chord_to_chord_distance(
    aux_d: DistanceMatrix, p: ChordalPath, k: int, q: ChordalPath, k2: int
) -> int:
    """Distance between internal vertices of two chordal paths.

    Equal triplets are treated as the same path (walk along it directly or
    around through the core).  For duplicate parallel paths sharing a
    triplet, address positions through `fast_transmissions`, which tracks
    paths by index.
    """
    if not 1 <= k <= p.s:
        raise ValueError(f"position {k} out of range 1..{p.s}")
    if not 1 <= k2 <= q.s:
        raise ValueError(f"position {k2} out of range 1..{q.s}")
    if p == q:
        return _within_path(aux_d[p.u][p.v], p.s, k, k2)
    return _between_paths(
        p.s, k, q.s, k2,
        aux_d[p.u][q.u], aux_d[p.u][q.v], aux_d[p.v][q.u], aux_d[p.v][q.v],
    )


def _within_path(duv: int, s: int, k: int, k2: int) -> int:
    return min(abs(k2 - k), k + duv + s + 1 - k2, s + 1 - k + duv + k2)


def _between_paths(s, k, s2, k2, duu, duv, dvu, dvv) -> int:
    return min(
        k + duu + k2,
        k + duv + s2 + 1 - k2,
        s + 1 - k + dvu + k2,
        s + 1 - k + dvv + s2 + 1 - k2,
    )


def sum_min_linear(s: int, a: int, b: int) -> int:
    """Exact value of sum_{k=1..s} min(k + a, s + 1 - k + b) for any
    integers a, b (the arms are nonnegative whenever a, b are)."""
    if s <= 0:
        return 0
    # first arm wins iff 2k <= s + 1 + b - a
    t = (s + 1 + b - a) // 2
    if t < 0:
        t = 0
    elif t > s:
        t = s
    left = t * (t + 1) // 2 + t * a
    right = (s - t) * (s + 1 + b) - (s * (s + 1) // 2 - t * (t + 1) // 2)
    return left + right


def min_sum_closed_form(n: int, alpha: int, beta: int) -> int:
    """sum_{k=1..n} min(k+alpha, n-k+beta), integer-exact, for
    alpha - beta <= n - 2.

    Uses the quarter-polynomial identity

        (n^2 + n(2b+2a-1) - (b-a)(b-a-1))/4 + floor((n+b-a)/2)/2

    on its actual validity region n+beta-alpha <= 2n+2.  Beyond that the
    first arm wins for every k (the identity is off by a constant there),
    so the sum collapses to n(n+1)/2 + n*alpha.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if alpha - beta > n - 2:
        raise ValueError(f"closed form requires alpha - beta <= n - 2, got {alpha - beta} > {n - 2}")
    if n + beta - alpha > 2 * n + 2:
        return n * (n + 1) // 2 + n * alpha
    quad = n * n + n * (2 * beta + 2 * alpha - 1) - (beta - alpha) * (beta - alpha - 1)
    half_floor = (n + beta - alpha) // 2
    num = quad + 2 * half_floor
    assert num % 4 == 0, f"non-integer closed form for n={n}, alpha={alpha}, beta={beta}"
    return num // 4


def _same_path_internal_sum(s: int, duv: int, k: int) -> int:
    # sum over the other internal positions of the same path; on either side
    # of k the distance is min(j, s + 1 + duv - j) with j the offset from k
    c = s + 1 + duv
    return _prefix_min_sum(k - 1, c) + _prefix_min_sum(s - k, c)


def _prefix_min_sum(m: int, c: int) -> int:
    # sum_{j=1..m} min(j, c - j); here always 0 <= m < c
    if m <= 0:
        return 0
    t = min(m, c // 2)
    return t * (t + 1) // 2 + (m - t) * c - (m * (m + 1) // 2 - t * (t + 1) // 2)


def fast_transmissions(cwp: CoreWithPaths) -> TransmissionProfile:
    """Transmissions of every expanded vertex, computed from the auxiliary
    graph alone.  Exactly equals transmissions(expand(cwp))."""
    n = cwp.core.n
    if cwp.expanded_order() == 0:
        raise ValueError("transmissions undefined for the empty graph")
    aux = auxiliary(cwp)
    dm = weighted_all_pairs(aux)
    for i in range(n):
        for j in range(i + 1, n):
            if dm[i][j] == INF:
                raise DisconnectedGraphError(i, j)

    tr = [0] * cwp.expanded_order()

    # core rows: core-to-core block plus one closed-form sum per path
    for b in range(n):
        total = sum(dm[b])
        for p in cwp.paths:
            total += sum_min_linear(p.s, dm[p.u][b], dm[p.v][b])
        tr[b] = total

    # internal vertices, path by path
    offset = n
    for i, p in enumerate(cwp.paths):
        if p.s == 0:
            continue
        du = dm[p.u]
        dv = dm[p.v]
        duv = du[p.v]
        for k in range(1, p.s + 1):
            rev = p.s + 1 - k
            total = 0
            for b in range(n):
                x = k + du[b]
                y = rev + dv[b]
                total += x if x < y else y
            total += _same_path_internal_sum(p.s, duv, k)
            for j, q in enumerate(cwp.paths):
                if j == i or q.s == 0:
                    continue
                a = min(k + du[q.u], rev + dv[q.u])
                b2 = min(k + du[q.v], rev + dv[q.v])
                total += sum_min_linear(q.s, a, b2)
            tr[offset + k - 1] = total
        offset += p.s
    return TransmissionProfile(len(tr), tuple(tr))


def expansion_transmissions(cwp: CoreWithPaths) -> TransmissionProfile:
    """Brute-force oracle: expand and run breadth-first transmissions."""
    return transmissions(expand(cwp))

"""All-pairs distances and vertex transmissions.

Unweighted distances come from per-source breadth-first traversals over
bitset adjacency; the integer-weighted auxiliary core graph is handled by
Floyd-Warshall.  Unreachable pairs carry the INF sentinel, which never
enters arithmetic: transmissions refuse disconnected inputs outright.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, connectivity_witness

INF = float("inf")


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph; carries a witness."""

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: vertices {u} and {v} are mutually unreachable")
        self.witness = (u, v)


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple       # n rows, each a tuple of ints (INF where unreachable)

    def __getitem__(self, i: int):
        return self.d[i]

    def is_finite(self) -> bool:
        return all(x != INF for row in self.d for x in row)


@dataclass(frozen=True)
class TransmissionProfile:
    n: int
    tr: tuple      # tr[u] = sum of distances from u to all other vertices

    def __getitem__(self, u: int) -> int:
        return self.tr[u]

    def sorted_values(self) -> list[int]:
        return sorted(self.tr)


def _bfs_row(adj, source: int, n: int) -> list:
    row = [INF] * n
    row[source] = 0
    seen = 1 << source
    frontier = seen
    dist = 0
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
        dist += 1
        m = frontier
        while m:
            low = m & -m
            row[low.bit_length() - 1] = dist
            m ^= low
    return row


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact unweighted shortest-path distances (INF where no walk exists)."""
    return DistanceMatrix(g.n, tuple(tuple(_bfs_row(g.adj, s, g.n)) for s in range(g.n)))


def transmissions(g: Graph) -> TransmissionProfile:
    """Per-vertex transmissions; raises on disconnected input with a witness."""
    if g.n == 0:
        raise ValueError("transmissions undefined for the empty graph")
    witness = connectivity_witness(g)
    if witness is not None:
        raise DisconnectedGraphError(*witness)
    full = (1 << g.n) - 1
    tr = []
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        dist = 0
        total = 0
        while seen != full:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
            dist += 1
            total += dist * frontier.bit_count()
        tr.append(total)
    return TransmissionProfile(g.n, tuple(tr))


class WeightedCoreGraph:
    """Core graph with positive integer edge weights, one edge per pair.

    Parallel candidates (a core edge plus chordal-path replacements) must be
    collapsed to the minimum weight before construction; `add_min` does that.
    """

    __slots__ = ("n", "weights")

    def __init__(self, n: int):
        self.n = n
        self.weights: dict[tuple[int, int], int] = {}

    def add_min(self, u: int, v: int, w: int) -> None:
        if w <= 0:
            raise ValueError(f"edge weight must be positive, got {w}")
        if u == v:
            return                      # loops never shorten distances
        key = (u, v) if u < v else (v, u)
        cur = self.weights.get(key)
        if cur is None or w < cur:
            self.weights[key] = w

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, w) for (u, v), w in sorted(self.weights.items())]


def weighted_all_pairs(wg: WeightedCoreGraph) -> DistanceMatrix:
    """Exact integer-weighted shortest paths via Floyd-Warshall."""
    n = wg.n
    d = [[INF] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0
    for (u, v), w in wg.weights.items():
        if w < d[u][v]:
            d[u][v] = w
            d[v][u] = w
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dk[j] == INF:
                    continue
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return DistanceMatrix(n, tuple(tuple(row) for row in d))

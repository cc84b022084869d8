"""Simple undirected graphs with bitset adjacency, the graph6 codec,
connectivity, Cartesian products and canonical forms.

Vertices are always the dense range 0..n-1.  Graph objects are immutable
after construction and safe to share between threads/processes.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

GRAPH6_MAX_N = 62           # single-byte size field
CANONICAL_MAX_N = 32


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple undirected graph; adjacency stored as int bitsets."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        """Build from a prevalidated bitset adjacency (internal fast path)."""
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> Iterator[int]:
        m = self.adj[u]
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    def edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _upper_triangle_bits(g: Graph) -> Iterator[int]:
    # graph6 bit order: columns j = 1..n-1, rows i = 0..j-1
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            yield col >> i & 1


def encode_graph6(g: Graph) -> str:
    """Encode a graph as canonical-length graph6 text (n <= 62)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoding supports n <= {GRAPH6_MAX_N}, got {g.n}")
    chars = [chr(63 + g.n)]
    group = 0
    nbits = 0
    for bit in _upper_triangle_bits(g):
        group = group << 1 | bit
        nbits += 1
        if nbits == 6:
            chars.append(chr(63 + group))
            group = 0
            nbits = 0
    if nbits:
        group <<= 6 - nbits          # pad with zeros on the right
        chars.append(chr(63 + group))
    return "".join(chars)


def parse_graph6(code: str) -> Graph:
    """Decode graph6 text into a Graph.

    Raises Graph6Error (with byte offset) on: empty input, size field out of
    the supported single-byte range, characters outside [63, 126], a
    truncated bit stream, or nonzero padding bits.
    """
    if code.startswith(">>graph6<<"):
        code = code[len(">>graph6<<"):]
    if not code:
        raise Graph6Error("empty graph6 code", 0)
    size = ord(code[0])
    if size == 126:
        raise Graph6Error("multi-byte size fields (n > 62) not supported", 0)
    if not 63 <= size <= 126:
        raise Graph6Error(f"size character {code[0]!r} out of range", 0)
    n = size - 63
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    if len(code) - 1 < nbytes:
        raise Graph6Error(
            f"truncated bit stream: need {nbytes} data bytes, got {len(code) - 1}",
            len(code),
        )
    if len(code) - 1 > nbytes:
        raise Graph6Error("trailing data after bit stream", 1 + nbytes)
    adj = [0] * n
    bit_index = 0
    for pos, ch in enumerate(code[1:], start=1):
        val = ord(ch)
        if not 63 <= val <= 126:
            raise Graph6Error(f"character {ch!r} out of range", pos)
        group = val - 63
        for shift in range(5, -1, -1):
            bit = group >> shift & 1
            if bit_index >= need:
                if bit:
                    raise Graph6Error("nonzero padding bits", pos)
                bit_index += 1
                continue
            if bit:
                # recover (i, j) for this upper-triangle position
                i, j = _bit_position(bit_index)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit_index += 1
    return Graph.from_adj(adj)


def _bit_position(index: int) -> tuple[int, int]:
    # index counts through columns j=1,2,... each contributing j bits
    j = 1
    while index >= j:
        index -= j
        j += 1
    return index, j


def graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a newline-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0.

    The empty graph (n=0) and the single vertex are connected by convention.
    """
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    full = (1 << g.n) - 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
        if seen == full:
            return True
    return False


def connectivity_witness(g: Graph) -> tuple[int, int] | None:
    """None when connected, else a pair of mutually unreachable vertices."""
    if g.n <= 1:
        return None
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    if seen == (1 << g.n) - 1:
        return None
    missing = (~seen & ((1 << g.n) - 1)).bit_length() - 1
    return 0, missing


CARTESIAN_MAX_VERTICES = 4_000_000


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (i, j) of the product gets index i*|V_H| + j.

    (i, j) ~ (i', j') iff (i == i' and j ~ j' in h) or (i ~ i' in g and j == j').
    """
    if g.n == 0 or h.n == 0:
        raise ValueError("cartesian product requires nonempty factors")
    n = g.n * h.n
    if n > CARTESIAN_MAX_VERTICES:
        raise ValueError(f"product on {n} vertices exceeds supported size")
    adj = [0] * n
    for i in range(g.n):
        base = i * h.n
        gi = g.adj[i]
        for j in range(h.n):
            v = base + j
            mask = h.adj[j] << base     # same g-coordinate, h-edges
            m = gi                       # same h-coordinate, g-edges
            while m:
                low = m & -m
                mask |= 1 << ((low.bit_length() - 1) * h.n + j)
                m ^= low
            adj[v] = mask
    return Graph.from_adj(adj)


# ---------------------------------------------------------------------------
# Canonical form: equitable refinement + individualization with backtracking.
# Equal byte strings <=> isomorphic graphs.  Anchored to the brute-force
# permutation oracle for n <= 7 in the test suite.
# ---------------------------------------------------------------------------

def canonical_form(g: Graph) -> bytes:
    if g.n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {g.n}")
    if g.n == 0:
        return b"\x00"
    labeling = _canonical_labeling(g)
    return _form_bytes(g, labeling)


def canonical_graph(g: Graph) -> Graph:
    """Canonically relabeled copy (a deterministic class representative)."""
    if g.n == 0:
        return g
    lab = _canonical_labeling(g)
    pos = {v: i for i, v in enumerate(lab)}
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def _form_int(adj: Sequence[int], labeling: Sequence[int]) -> int:
    # upper-triangle bits of the relabeled graph, column-major, as one int
    bits = 0
    bit = 1
    for j in range(1, len(labeling)):
        aj = adj[labeling[j]]
        for i in range(j):
            if aj >> labeling[i] & 1:
                bits |= bit
            bit <<= 1
    return bits


def _form_bytes(g: Graph, labeling: Sequence[int]) -> bytes:
    bits = _form_int(g.adj, labeling)
    nb = (g.n * (g.n - 1) // 2 + 7) // 8
    return bytes([g.n]) + bits.to_bytes(nb or 1, "little")


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # Equitable refinement: split cells by neighbor counts into every cell,
    # keeping a deterministic cell order (stable + sorted signatures).
    # Signatures pack the per-cell counts into one int (6 bits per cell),
    # which keys and sorts much faster than tuples.
    while True:
        changed = False
        cell_masks = [_mask(c) for c in cells]
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig: dict[int, list[int]] = {}
            for v in cell:
                av = adj[v]
                key = 0
                for m in cell_masks:
                    key = key << 6 | (av & m).bit_count()
                bucket = sig.get(key)
                if bucket is None:
                    sig[key] = [v]
                else:
                    bucket.append(v)
            if len(sig) > 1:
                changed = True
                for key in sorted(sig):
                    new_cells.append(sig[key])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _canonical_labeling(g: Graph) -> list[int]:
    # Initial partition by degree (isomorphism-invariant), then refine and
    # branch over the first non-singleton cell, taking the minimum form.
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    best = [None, None]                 # [best form, best labeling]
    _search_canonical(g, _refine(g.adj, cells), best)
    assert best[1] is not None
    return best[1]


def _search_canonical(g: Graph, cells: list[list[int]], best: list) -> None:
    target = None
    for i, c in enumerate(cells):
        if len(c) > 1:
            target = i
            break
    if target is None:
        labeling = [c[0] for c in cells]
        form = _form_int(g.adj, labeling)
        if best[0] is None or form < best[0]:
            best[0] = form
            best[1] = labeling
        return
    cell = cells[target]
    for v in cell:
        rest = [w for w in cell if w != v]
        branched = cells[:target] + [[v], rest] + cells[target + 1:]
        _search_canonical(g, _refine(g.adj, branched), best)


def brute_force_canonical(g: Graph) -> bytes:
    """Reference canonical form: minimum over all n! relabelings (n <= 8)."""
    if g.n > 8:
        raise ValueError("brute force oracle limited to n <= 8")
    if g.n == 0:
        return b"\x00"
    best = None
    for perm in permutations(range(g.n)):
        form = _form_bytes(g, perm)
        if best is None or form < best:
            best = form
    return best


def are_isomorphic_brute(g: Graph, h: Graph) -> bool:
    """Permutation-based isomorphism test (small n; test oracle)."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return brute_force_canonical(g) == brute_force_canonical(h)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))

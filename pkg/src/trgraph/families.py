"""Parametric graph families with closed-form transmission oracles, the
Dobrynin interval family, and Cartesian-product transmission arithmetic.

The chordal-family cores are reconstructed from published distance data:
an edge exists exactly where the core-block distance is 1.  The G2 core
has no published distance matrix; it is pinned uniquely by the constraint
search in scripts/recover_g2_core.py and shipped as a graph6 fixture.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from math import gcd

from .chordal import ChordalPath, CoreWithPaths
from .classify import TransmissionSpectrum, classify
from .distances import TransmissionProfile, transmissions
from .graphs import Graph, cartesian_product, parse_graph6

FAMILY_TAGS = ("G1", "G2", "G3", "G4", "DOB")


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    n: int = 0
    m: int = 0
    k: int = 0

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        checks = {
            "G1": self.n >= 2,
            "G2": self.n >= 3,
            "G3": self.n >= 1,
            "G4": self.n >= 1 and self.m >= 1,
            "DOB": self.k >= 1,
        }
        if not checks[self.tag]:
            raise ValueError(f"parameters out of range for {self.tag}: {self}")

    @classmethod
    def g1(cls, n: int) -> "FamilySpec":
        return cls("G1", n=n)

    @classmethod
    def g2(cls, n: int) -> "FamilySpec":
        return cls("G2", n=n)

    @classmethod
    def g3(cls, n: int) -> "FamilySpec":
        return cls("G3", n=n)

    @classmethod
    def g4(cls, n: int, m: int) -> "FamilySpec":
        return cls("G4", n=n, m=m)

    @classmethod
    def dob(cls, k: int) -> "FamilySpec":
        return cls("DOB", k=k)


@dataclass(frozen=True)
class ClosedFormProfile:
    """Closed-form transmissions aligned to the generator's vertex order.

    When `core_only` is set the published closed forms cover the core
    vertices only (internal-vertex forms exist just for restricted
    parameters) and `values` has core length.
    """

    values: tuple
    core_only: bool = False


# Core on {a..e}: edges where the published core-block distance is 1.
_G1_CORE_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4)]
# Cores on {a,b,c} + second component, same reconstruction.
_G3_CORE_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 6), (4, 5), (4, 7), (6, 7)]
_G4_CORE_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (4, 5)]


def _g2_core() -> Graph:
    text = resources.files("trgraph.data").joinpath("g2_core.g6").read_text()
    return parse_graph6(text.strip())


def g1_core() -> Graph:
    return Graph(5, _G1_CORE_EDGES)


def g2_core() -> Graph:
    return _g2_core()


def g3_core() -> Graph:
    return Graph(8, _G3_CORE_EDGES)


def g4_core() -> Graph:
    return Graph(6, _G4_CORE_EDGES)


def dobrynin_graph(k: int) -> Graph:
    """The interval-transmission-irregular graph on 2k+5 vertices.

    Vertex order: a=0, b=1, c=2, d=3, then a_0..a_{k-1}, then b_1..b_{k-1},
    then ab_1 = 2k+3 and ab_2 = 2k+4.  a and b are adjacent hubs with
    pendants c and d; a_i sees a, ab_1 and b_1..b_i; b_j sees b, ab_2 and
    a_j..a_{k-1}; ab_1, ab_2 see both hubs.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    a, b, c, d = 0, 1, 2, 3
    a_ = [4 + i for i in range(k)]
    b_ = {j: 4 + k + (j - 1) for j in range(1, k)}
    ab1, ab2 = 2 * k + 3, 2 * k + 4
    edges = [(a, b), (a, c), (b, d), (a, ab1), (b, ab1), (a, ab2), (b, ab2)]
    edges += [(a, v) for v in a_]
    edges += [(b, v) for v in b_.values()]
    edges += [(ab1, v) for v in a_]
    edges += [(ab2, v) for v in b_.values()]
    for i in range(k):
        edges += [(a_[i], b_[j]) for j in range(1, i + 1)]
    return Graph(2 * k + 5, edges)


def dob_vertex_roles(k: int) -> dict:
    """Role name -> vertex id in the fixed Dobrynin vertex order."""
    roles = {"a": 0, "b": 1, "c": 2, "d": 3, "ab1": 2 * k + 3, "ab2": 2 * k + 4}
    for i in range(k):
        roles[f"a{i}"] = 4 + i
    for j in range(1, k):
        roles[f"b{j}"] = 4 + k + (j - 1)
    return roles


def build(spec: FamilySpec) -> CoreWithPaths:
    """Core-with-paths for the requested family member.

    The Dobrynin graph has no chordal paths; it comes back as a bare core
    so the expansion is the graph itself.
    """
    n, m = spec.n, spec.m
    if spec.tag == "G1":
        return CoreWithPaths(g1_core(), (ChordalPath(0, 1, n),))
    if spec.tag == "G2":
        return CoreWithPaths(_g2_core(), (ChordalPath(4, 7, n),))
    if spec.tag == "G3":
        return CoreWithPaths(g3_core(), (ChordalPath(1, 3, n), ChordalPath(2, 4, n)))
    if spec.tag == "G4":
        return CoreWithPaths(
            g4_core(),
            (ChordalPath(1, 3, n), ChordalPath(2, 4, n), ChordalPath(3, 4, m)),
        )
    return CoreWithPaths(dobrynin_graph(spec.k), ())


def _quarter(quad: int, floor_arg: int) -> int:
    # quad/4 + floor(floor_arg/2)/2, exact by construction of the families
    num = quad + 2 * (floor_arg // 2)
    if num % 4:
        raise ArithmeticError(f"non-integer closed form: quad={quad}, floor_arg={floor_arg}")
    return num // 4


def closed_form_transmissions(spec: FamilySpec) -> ClosedFormProfile:
    """Exact integer evaluation of every published closed form.

    G1 internal-vertex forms exist only for n = 6m+1 and G2 only for
    n = 4m+1; other parameters give a core-only profile.  G3, G4 and the
    Dobrynin family are total.
    """
    n, m, k = spec.n, spec.m, spec.k
    if spec.tag == "G1":
        core = (
            _quarter(n * n + 3 * n + 18, n + 2),   # a
            _quarter(n * n + 3 * n + 28, n),       # b
            _quarter(n * n + 5 * n + 20, n + 1),   # c
            _quarter(n * n + 7 * n + 18, n + 2),   # d
            _quarter(n * n + 11 * n + 30, n + 2),  # e
        )
        if n % 6 != 1:
            return ClosedFormProfile(core, core_only=True)
        mm = n // 6
        internal = tuple(
            9 * mm * mm + 9 * mm + 6 + 3 * kk if kk <= 3 * mm + 1
            else 9 * mm * mm + 27 * mm + 14 - 3 * kk
            for kk in range(1, n + 1)
        )
        return ClosedFormProfile(core + internal)

    if spec.tag == "G2":
        core = (
            _quarter(n * n + 9 * n + 46, n + 3),   # a
            _quarter(n * n + 9 * n + 40, n + 1),   # b
            _quarter(n * n + 11 * n + 48, n),      # c
            _quarter(n * n + 11 * n + 58, n - 2),  # d
            _quarter(n * n + 7 * n + 52, n + 4),   # e
            _quarter(n * n + 7 * n + 42, n + 2),   # f
            _quarter(n * n + 7 * n + 40, n),       # g
            _quarter(n * n + 7 * n + 50, n - 2),   # h
        )
        if n % 4 != 1:
            return ClosedFormProfile(core, core_only=True)
        mm = n // 4
        def g2_internal(kk: int) -> int:
            if kk <= 2 * mm - 1:
                return 4 * mm * mm + 10 * mm + 16 + 4 * kk
            if kk == 2 * mm:
                return 4 * mm * mm + 18 * mm + 15
            if kk == 2 * mm + 1:
                return 4 * mm * mm + 18 * mm + 16
            return 4 * mm * mm + 26 * mm + 22 - 4 * kk
        return ClosedFormProfile(core + tuple(g2_internal(kk) for kk in range(1, n + 1)))

    if spec.tag == "G3":
        core = (
            n * n + 8 * n + 15,   # a
            n * n + 7 * n + 13,   # b
            n * n + 7 * n + 12,   # c
            n * n + 5 * n + 11,   # d
            n * n + 5 * n + 10,   # e
            n * n + 7 * n + 16,   # f
            n * n + 7 * n + 15,   # g
            n * n + 7 * n + 14,   # h
        )
        x = tuple(n * n + 7 * n + 13 - 2 * kk for kk in range(1, n + 1))
        y = tuple(n * n + 7 * n + 12 - 2 * ll for ll in range(1, n + 1))
        return ClosedFormProfile(core + x + y)

    if spec.tag == "G4":
        fm, cm = m // 2, (m + 1) // 2
        base_b = n * n + 5 * n + 8 + _quarter(m * m + 7 * m - 2, m + 2) + m * n
        base_c = n * n + 5 * n + 7 + _quarter(m * m + 7 * m - 2, m + 2) + m * n
        core = (
            n * n + 6 * n + 9 + _quarter(m * m + 9 * m, m + 1) + m * n,   # a
            base_b,                                                        # b
            base_c,                                                        # c
            n * n + 5 * n + 8 + _quarter(m * m + 3 * m - 2, m + 2),        # d
            n * n + 5 * n + 7 + _quarter(m * m + 3 * m - 2, m + 2),        # e
            n * n + 7 * n + 11 + _quarter(m * m + 7 * m - 2, m + 2),       # f
        )
        x = tuple(base_b - m * p for p in range(1, n + 1))
        y = tuple(base_c - m * q for q in range(1, n + 1))
        def g4_z(r: int) -> int:
            prod = (fm + 1) * (cm + 1)
            if r <= fm:
                return n * n + 5 * n + 7 + prod + (2 * n + 4) * r
            if r == cm and m % 2 == 1:
                return n * n + 4 * n + 5 + prod + (2 * n + 4) * cm
            return n * n + 5 * n + 6 + prod + (2 * n + 4) * (m + 1 - r)
        z = tuple(g4_z(r) for r in range(1, m + 1))
        return ClosedFormProfile(core + x + y + z)

    # Dobrynin: interval [3k+4, 5k+8] with the fixed role assignment
    values = [0] * (2 * k + 5)
    roles = dob_vertex_roles(k)
    values[roles["a"]] = 3 * k + 4
    values[roles["b"]] = 3 * k + 5
    values[roles["c"]] = 5 * k + 7
    values[roles["d"]] = 5 * k + 8
    values[roles["ab1"]] = 3 * k + 6
    values[roles["ab2"]] = 3 * k + 7
    for i in range(k):
        values[roles[f"a{i}"]] = 5 * k + 6 - 2 * i
    for j in range(1, k):
        values[roles[f"b{j}"]] = 3 * k + 7 + 2 * j
    return ClosedFormProfile(tuple(values))


def product_transmissions(tr_g: TransmissionProfile, tr_h: TransmissionProfile) -> TransmissionProfile:
    """Transmissions of the Cartesian product from factor transmissions:
    entry for (u, v) at index u*|V_H| + v is |V_H|*Tr(u) + |V_G|*Tr(v)."""
    ng, nh = tr_g.n, tr_h.n
    values = tuple(nh * tr_g[u] + ng * tr_h[v] for u in range(ng) for v in range(nh))
    return TransmissionProfile(ng * nh, values)


class ProductTheoremPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ProductTheoremReport:
    g_order: int
    h_order: int
    g_spectrum: TransmissionSpectrum
    h_spectrum: TransmissionSpectrum
    product_spectrum: TransmissionSpectrum

    @property
    def ti_conclusion_holds(self) -> bool:
        return (not self.h_spectrum.is_ti) or self.product_spectrum.is_ti

    @property
    def mti_conclusion_holds(self) -> bool:
        return (not self.h_spectrum.is_mti) or self.product_spectrum.is_mti


def check_product_theorem(g: Graph, h: Graph) -> ProductTheoremReport:
    """Confirm on concrete factors that an MTI graph times a coprime-order
    connected graph preserves TI (and MTI when both factors are MTI),
    classifying the actual product by breadth-first transmissions."""
    g_spec = classify(transmissions(g))
    h_spec = classify(transmissions(h))
    if not g_spec.is_mti:
        raise ProductTheoremPreconditionError("first factor is not MTI")
    if gcd(g.n, h.n) != 1:
        raise ProductTheoremPreconditionError(
            f"orders are not coprime: gcd({g.n}, {h.n}) = {gcd(g.n, h.n)}"
        )
    product = cartesian_product(g, h)
    p_spec = classify(transmissions(product))
    return ProductTheoremReport(g.n, h.n, g_spec, h_spec, p_spec)

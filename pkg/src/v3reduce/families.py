"""Named (v_3) graphs and infinite families."""

from __future__ import annotations

from functools import lru_cache

from .codec import parse_lcf
from .errors import ParameterOutOfRange
from .graph import Graph, V3Graph, girth, validate_v3

PAPPUS_EDGES = (
    (0, 1), (0, 5), (0, 17), (1, 2), (1, 8), (2, 3), (2, 13), (3, 4), (3, 10),
    (4, 5), (4, 15), (5, 6), (6, 7), (6, 11), (7, 8), (7, 14), (8, 9), (9, 10),
    (9, 16), (10, 11), (11, 12), (12, 13), (12, 17), (13, 14), (14, 15),
    (15, 16), (16, 17),
)  # fmt: skip

TUTTE_COXETER_LCF = "[-13,-9,7,-7,9,13]^5"


def d_graph(n: int) -> V3Graph:
    """D(n) with LCF code [5,-5]^n, the Levi graph of the cyclic
    configuration with base line {0, 1, 3}."""
    if n < 7:
        raise ParameterOutOfRange(f"D(n) needs n >= 7, got {n}")
    return validate_v3(parse_lcf(f"[5,-5]^{n}"), 6)


def heawood() -> V3Graph:
    return d_graph(7)


def pappus() -> V3Graph:
    return validate_v3(Graph.from_edges(18, PAPPUS_EDGES), 6)


def gp(n: int, k: int) -> Graph:
    """Generalized Petersen graph: outer vertices 0..n-1, inner n..2n-1."""
    if n < 3 or not 1 <= k < n / 2:
        raise ParameterOutOfRange(f"G({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


@lru_cache(maxsize=1)
def tutte_coxeter() -> V3Graph:
    g = validate_v3(parse_lcf(TUTTE_COXETER_LCF), 8)
    if g.n != 30 or girth(g.graph) != 8:
        raise AssertionError("Tutte-Coxeter constant is wrong")
    return g


# ---------------------------------------------------------------- T-family

# One segment of T(n) on vertices 0..19. Boundary vertices u^1, u^2, u^3 and
# v^1, v^2, v^3 have degree 2 inside the segment.
SEGMENT_EDGES = (
    (0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (3, 6), (4, 7), (5, 8),
    (6, 9), (6, 11), (7, 10), (7, 11), (8, 11), (8, 12), (9, 13), (9, 14),
    (10, 13), (10, 15), (12, 14), (12, 15), (13, 17), (14, 18), (15, 19),
    (16, 17), (16, 18), (16, 19),
)  # fmt: skip
SEGMENT_U = (0, 1, 2)
SEGMENT_V = (17, 18, 19)
# interior vertices touched by the standard T(n) reduction
SEGMENT_NAMED = {"w2": 4, "x2": 7, "y1": 9, "y3": 12, "z2": 14}

# closing edges u_1^a -- v_n^b, indices 0-based
T_CLOSURES = {
    1: ((0, 0), (1, 1), (2, 2)),
    2: ((2, 0), (1, 1), (0, 2)),
    3: ((0, 2), (1, 0), (2, 1)),
}


def segment_vertex(i: int, name: str) -> int:
    """Vertex id of ``name`` ("u1".."u3", "v1".."v3" or a key of
    SEGMENT_NAMED) in segment ``i`` (1-based)."""
    if name[0] in "uv" and name[1:] in ("1", "2", "3"):
        local = (SEGMENT_U if name[0] == "u" else SEGMENT_V)[int(name[1:]) - 1]
    else:
        local = SEGMENT_NAMED[name]
    return 20 * (i - 1) + local


def t_chain(n: int) -> Graph:
    """T(n): n segments joined by the edges v_{i-1}^j -- u_i^j."""
    if n < 1:
        raise ParameterOutOfRange(f"T(n) needs n >= 1, got {n}")
    edges = []
    for i in range(n):
        off = 20 * i
        edges.extend((a + off, b + off) for a, b in SEGMENT_EDGES)
        if i:
            edges.extend((SEGMENT_V[j] + off - 20, SEGMENT_U[j] + off) for j in range(3))
    return Graph.from_edges(20 * n, edges)


def t_graph(variant: int, n: int) -> V3Graph:
    """T_1(n), T_2(n) or T_3(n): T(n) closed by three edges from the first
    segment's u-vertices to the last segment's v-vertices."""
    if variant not in T_CLOSURES:
        raise ParameterOutOfRange(f"T-variant must be 1, 2 or 3, got {variant}")
    chain = t_chain(n)
    last = 20 * (n - 1)
    edges = chain.edges() + [(SEGMENT_U[a], SEGMENT_V[b] + last) for a, b in T_CLOSURES[variant]]
    return validate_v3(Graph.from_edges(20 * n, edges), 6)

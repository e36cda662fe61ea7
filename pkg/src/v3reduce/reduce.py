"""A- and B-reductions of (v_3) graphs, their inverse augmentations,
and the connected reduction driver.

A reduction by a black vertex ``u`` and a white vertex ``v`` deletes both
and joins the white neighbors of ``u`` to the black neighbors of ``v`` by a
perfect matching. When ``uv`` is an edge there are two matchings (this is
the A-reduction), otherwise six.

Girth checks here are local: every cycle created by a move passes through
an endpoint of an added edge, and the untouched part of the graph already
has girth at least the bound, so a bounded breadth-first search from those
endpoints decides validity exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .codec import write_graph6
from .errors import Disconnected, GirthTooSmall, InvalidMove, SharedEndpoint, TheoremViolation
from .graph import (
    BLACK,
    WHITE,
    Graph,
    V3Graph,
    components,
    girth,
    is_connected,
    shortest_cycle_through,
    trusted_v3,
)
from .iso import CanonicalForm, canonical_form

TRACE_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ReductionMove:
    u: int
    v: int
    adjacent: bool
    added_edges: tuple[tuple[int, int], ...]  # (white, black)

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "adjacent": self.adjacent,
            "added_edges": [list(e) for e in self.added_edges],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReductionMove":
        return cls(int(d["u"]), int(d["v"]), bool(d["adjacent"]), tuple((int(a), int(b)) for a, b in d["added_edges"]))


@dataclass(frozen=True)
class AugmentationMove:
    removed_edges: tuple[tuple[int, int], ...]  # (white, black), pairwise disjoint

    @property
    def variant(self) -> str:
        return "a" if len(self.removed_edges) == 2 else "b"


# ---------------------------------------------------------------- reductions


def candidate_moves(g: V3Graph, u: int, v: int) -> list[ReductionMove]:
    """All rewirings for the pair (u, v) before any validity check."""
    adjacent = v in g.adjacency[u]
    xs = [x for x in g.adjacency[u] if x != v]
    ys = [y for y in g.adjacency[v] if y != u]
    return [ReductionMove(u, v, adjacent, tuple(zip(xs, perm))) for perm in permutations(ys)]


def candidate_pairs(g: V3Graph, mode: str = "B") -> Iterator[tuple[int, int]]:
    if mode not in ("A", "B"):
        raise ValueError(f"mode must be 'A' or 'B', got {mode!r}")
    whites = g.whites
    for u in g.blacks:
        if mode == "A":
            for v in g.adjacency[u]:
                yield u, v
        else:
            for v in whites:
                yield u, v


def iter_candidates(g: V3Graph, mode: str = "B") -> Iterator[ReductionMove]:
    for u, v in candidate_pairs(g, mode):
        yield from candidate_moves(g, u, v)


def _rewire(g: V3Graph, m: ReductionMove) -> list[list[int]] | None:
    """Adjacency (old labels, u and v emptied) after the move, or None if an
    added edge already exists."""
    for x, y in m.added_edges:
        if y in g.adjacency[x]:
            return None
    rows = [list(r) for r in g.adjacency]
    for w in (m.u, m.v):
        for y in rows[w]:
            rows[y].remove(w)
        rows[w] = []
    for x, y in m.added_edges:
        rows[x].append(y)
        rows[y].append(x)
    return rows


def _compact(rows: Sequence[Sequence[int]], removed: Sequence[int]) -> Graph:
    removed = set(removed)
    keep = [i for i in range(len(rows)) if i not in removed]
    index = {old: new for new, old in enumerate(keep)}
    return Graph(len(keep), tuple(tuple(sorted(index[j] for j in rows[i])) for i in keep))


def _local_cycle(rows, roots, min_girth: int) -> int | None:
    best = None
    for r in roots:
        c = shortest_cycle_through(rows, r, below=min_girth if best is None else best)
        if c is not None:
            best = c
    return best


@dataclass(frozen=True)
class Outcome:
    move: ReductionMove
    status: str  # "ok", "duplicate", "girth"
    short_cycle: int | None = None
    result: V3Graph | None = field(default=None, compare=False)


def evaluate(g: V3Graph, m: ReductionMove, min_girth: int = 6) -> Outcome:
    rows = _rewire(g, m)
    if rows is None:
        return Outcome(m, "duplicate")
    roots = {a for e in m.added_edges for a in e}
    short = _local_cycle(rows, sorted(roots), min_girth)
    if short is not None:
        return Outcome(m, "girth", short)
    return Outcome(m, "ok", None, trusted_v3(_compact(rows, (m.u, m.v)), min_girth))


def rewired_graph(g: V3Graph, m: ReductionMove) -> Graph:
    """The compacted graph a move would produce, without girth validation.
    Raises InvalidMove if an added edge duplicates an existing one."""
    rows = _rewire(g, m)
    if rows is None:
        raise InvalidMove(f"move {m} duplicates an existing edge")
    return _compact(rows, (m.u, m.v))


def iter_reductions(g: V3Graph, min_girth: int = 6, mode: str = "B") -> Iterator[tuple[ReductionMove, V3Graph]]:
    for m in iter_candidates(g, mode):
        out = evaluate(g, m, min_girth)
        if out.status == "ok":
            yield m, out.result


def enumerate_reductions(g: V3Graph, min_girth: int = 6, mode: str = "B") -> list[tuple[ReductionMove, V3Graph]]:
    """Every valid reduction of ``g`` in (u, v, matching) order."""
    return list(iter_reductions(g, min_girth, mode))


def _check_move_shape(g: V3Graph, m: ReductionMove) -> None:
    n = g.n
    if not (0 <= m.u < n and 0 <= m.v < n):
        raise InvalidMove("move vertices out of range")
    if g.colors[m.u] != BLACK or g.colors[m.v] != WHITE:
        raise InvalidMove(f"u={m.u} must be black and v={m.v} white")
    adjacent = m.v in g.adjacency[m.u]
    if adjacent != m.adjacent:
        raise InvalidMove(f"adjacency flag {m.adjacent} does not match the graph")
    xs = sorted(x for x in g.adjacency[m.u] if x != m.v)
    ys = sorted(y for y in g.adjacency[m.v] if y != m.u)
    if sorted(x for x, _ in m.added_edges) != xs or sorted(y for _, y in m.added_edges) != ys:
        raise InvalidMove("added edges must match the neighbors of u with those of v")


def apply_move(g: V3Graph, m: ReductionMove, min_girth: int = 6) -> V3Graph:
    _check_move_shape(g, m)
    out = evaluate(g, m, min_girth)
    if out.status == "duplicate":
        raise InvalidMove(f"move {m} duplicates an existing edge")
    if out.status == "girth":
        raise GirthTooSmall(girth(rewired_graph(g, m)), min_girth)
    return out.result


def inverse_augmentation(m: ReductionMove, h: V3Graph) -> AugmentationMove:
    """The augmentation of the reduced graph ``h`` that undoes ``m``.

    Colors of ``h`` are re-anchored after compaction and may be swapped
    relative to the parent, so each edge is oriented by ``h.colors``.
    """

    def shift(a):
        return a - (a > m.u) - (a > m.v)

    edges = []
    for x, y in m.added_edges:
        a, b = shift(x), shift(y)
        edges.append((a, b) if h.colors[a] == WHITE else (b, a))
    return AugmentationMove(tuple(edges))


# ---------------------------------------------------------------- augmentations


def _check_edges(g: V3Graph, edges: Sequence[tuple[int, int]]) -> None:
    for x, y in edges:
        if not (0 <= x < g.n and 0 <= y < g.n) or y not in g.adjacency[x]:
            raise InvalidMove(f"({x}, {y}) is not an edge")
        if g.colors[x] != WHITE or g.colors[y] != BLACK:
            raise InvalidMove(f"edge ({x}, {y}) must be given as (white, black)")
    ends = [a for e in edges for a in e]
    if len(set(ends)) != len(ends):
        raise SharedEndpoint(f"edges {list(edges)} share an endpoint")


def _augment_rows(g: V3Graph, edges, adjacent: bool) -> list[list[int]]:
    n = g.n
    u, v = n, n + 1
    rows = [list(r) for r in g.adjacency] + [[], []]
    for x, y in edges:
        rows[x].remove(y)
        rows[y].remove(x)
        rows[u].append(x)
        rows[x].append(u)
        rows[v].append(y)
        rows[y].append(v)
    if adjacent:
        rows[u].append(v)
        rows[v].append(u)
    return rows


def _augment(g: V3Graph, edges, min_girth: int, adjacent: bool, check: bool = True) -> V3Graph | None:
    if check:
        _check_edges(g, edges)
    rows = _augment_rows(g, edges, adjacent)
    short = _local_cycle(rows, (g.n, g.n + 1), min_girth)
    graph = Graph(len(rows), tuple(tuple(sorted(r)) for r in rows))
    if short is not None:
        if not check:
            return None
        raise GirthTooSmall(girth(graph), min_girth)
    return trusted_v3(graph, min_girth)


def a_augment(g: V3Graph, e1: tuple[int, int], e2: tuple[int, int], min_girth: int = 6) -> V3Graph:
    """Martinetti step: new black ``u = n`` joined to x1, x2 and new white
    ``v = n + 1`` joined to y1, y2 and to ``u``."""
    return _augment(g, (tuple(e1), tuple(e2)), min_girth, adjacent=True)


def b_augment(g: V3Graph, m: AugmentationMove, min_girth: int = 6) -> V3Graph:
    if len(m.removed_edges) != 3:
        raise InvalidMove("b_augment needs exactly three edges")
    return _augment(g, m.removed_edges, min_girth, adjacent=False)


def augment(g: V3Graph, m: AugmentationMove, min_girth: int = 6) -> V3Graph:
    if len(m.removed_edges) == 2:
        return a_augment(g, *m.removed_edges, min_girth=min_girth)
    return b_augment(g, m, min_girth)


def iter_augmentations(g: V3Graph, min_girth: int = 6, variant: str = "ab") -> Iterator[tuple[AugmentationMove, V3Graph]]:
    """All valid augmentations over disjoint edge pairs ("a") and triples
    ("b") in sorted edge order."""
    edges = g.edges()
    sizes = [k for k, tag in ((2, "a"), (3, "b")) if tag in variant]
    for k in sizes:
        for combo in combinations(edges, k):
            ends = [a for e in combo for a in e]
            if len(set(ends)) != 2 * k:
                continue
            h = _augment(g, combo, min_girth, adjacent=(k == 2), check=False)
            if h is not None:
                yield AugmentationMove(combo), h


# ---------------------------------------------------------------- driver


@dataclass
class ReductionTrace:
    start: CanonicalForm
    steps: list[tuple[ReductionMove, str]]
    terminal: str

    def to_dict(self) -> dict:
        return {
            "schema_version": TRACE_SCHEMA_VERSION,
            "start": str(self.start),
            "steps": [dict(m.to_dict(), result_graph6=g6) for m, g6 in self.steps],
            "terminal": self.terminal,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "ReductionTrace":
        steps = [(ReductionMove.from_dict(s), s["result_graph6"]) for s in d["steps"]]
        return cls(CanonicalForm(d["start"].encode("ascii")), steps, d["terminal"])


def _terminals() -> dict[CanonicalForm, str]:
    from .families import heawood, pappus

    return {canonical_form(heawood()): "Heawood", canonical_form(pappus()): "Pappus"}


def terminal_name(g: V3Graph | Graph) -> str | None:
    return _terminals().get(canonical_form(g))


def reduce_step(g: V3Graph) -> tuple[ReductionMove, V3Graph]:
    """One driver step: the valid connected B-reduction whose result has
    the smallest canonical form, ties broken by move order."""
    best = None
    any_valid = False
    for m, h in iter_reductions(g, 6, "B"):
        any_valid = True
        if not is_connected(h.graph):
            continue
        key = canonical_form(h)
        if best is None or key < best[0]:
            best = (key, m, h)
    if best is None:
        what = "only disconnected reductions" if any_valid else "no reduction at all"
        raise TheoremViolation(f"non-terminal connected graph {write_graph6(g.graph)} admits {what}")
    return best[1], best[2]


def reduce_to_terminal(g: V3Graph) -> ReductionTrace:
    """Reduce a connected (v_3) graph through connected (v_3) graphs until
    the Heawood or the Pappus graph is reached."""
    k = len(components(g.graph))
    if k != 1:
        raise Disconnected(k)
    if g.min_girth > 6:
        g = V3Graph(g.graph, g.colors, 6)
    terminals = _terminals()
    start = canonical_form(g)
    steps: list[tuple[ReductionMove, str]] = []
    current = g
    while True:
        name = terminals.get(canonical_form(current))
        if name is not None:
            return ReductionTrace(start, steps, name)
        m, current = reduce_step(current)
        steps.append((m, write_graph6(current.graph)))

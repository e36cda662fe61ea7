"""Simple undirected graphs and the (v_3) graph predicates.

Vertices are ``0..n-1`` and adjacency lists are kept sorted, so every
traversal below is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import Disconnected, GirthTooSmall, InvalidGraph, NotCubic, OddCycle

BLACK = 0
WHITE = 1


@total_ordering
class _Unbounded:
    """Girth of an acyclic graph. Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unbounded"

    __str__ = __repr__

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash("Unbounded")

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InvalidGraph(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for i, row in enumerate(self.adjacency):
            for k, j in enumerate(row):
                if not 0 <= j < self.n:
                    raise InvalidGraph(f"vertex {i} has out-of-range neighbor {j}")
                if j == i:
                    raise InvalidGraph(f"self-loop at {i}")
                if k and row[k - 1] >= j:
                    raise InvalidGraph(f"neighbors of {i} not sorted/distinct: {row}")
        for i, row in enumerate(self.adjacency):
            for j in row:
                if i not in self.adjacency[j]:
                    raise InvalidGraph(f"edge {i}-{j} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise InvalidGraph(f"self-loop at {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidGraph(f"edge {a}-{b} out of range for n={n}")
            if b in nbrs[a]:
                raise InvalidGraph(f"duplicate edge {a}-{b}")
            nbrs[a].add(b)
            nbrs[b].add(a)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        return cls(len(adjacency), tuple(tuple(sorted(r)) for r in adjacency))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adjacency) for j in row if i < j]

    @property
    def n_edges(self) -> int:
        return sum(len(r) for r in self.adjacency) // 2

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``i`` renamed ``perm[i]``."""
        rows: list[list[int]] = [[] for _ in range(self.n)]
        for i, row in enumerate(self.adjacency):
            rows[perm[i]] = [perm[j] for j in row]
        return Graph(self.n, tuple(tuple(sorted(r)) for r in rows))

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph on ``keep``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            tuple(tuple(sorted(index[j] for j in self.adjacency[v] if j in index)) for v in keep),
        )


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[tuple[int, ...]] = []
    offset = 0
    for g in graphs:
        rows.extend(tuple(j + offset for j in row) for row in g.adjacency)
        offset += g.n
    return Graph(offset, tuple(rows))


def shortest_cycle_through(adjacency, root: int, below=None) -> int | None:
    """Breadth-first search from ``root``; return the shortest closed walk
    length ``d(x) + d(y) + 1`` over non-tree edges ``xy``.

    The value bounds the girth from above and is at most the length of
    every cycle through ``root``. With ``below`` set, the search stops once
    no value smaller than ``below`` can appear and returns None if none did.
    """
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    best = None
    while queue:
        x = queue.popleft()
        dx = dist[x]
        limit = below if best is None else (best if below is None else min(best, below))
        if limit is not None and 2 * dx + 1 >= limit:
            break
        for y in adjacency[x]:
            if y not in dist:
                dist[y] = dx + 1
                parent[y] = x
                queue.append(y)
            elif parent[x] != y:
                c = dx + dist[y] + 1
                if best is None or c < best:
                    best = c
    if best is not None and below is not None and best >= below:
        return None
    return best


def girth(g: Graph):
    """Exact length of the shortest cycle, or ``UNBOUNDED`` for a forest."""
    best = None
    for r in range(g.n):
        c = shortest_cycle_through(g.adjacency, r, below=best)
        if c is not None:
            best = c
            if best == 3:
                break
    return UNBOUNDED if best is None else best


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def bipartition(g: Graph) -> tuple[int, ...]:
    """Proper 2-coloring; in each component the smallest vertex is BLACK.

    Raises OddCycle with a witness cycle when the graph is not bipartite.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = BLACK
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    raise OddCycle(_odd_witness(parent, x, y))
    return tuple(color)


def _odd_witness(parent: list[int], x: int, y: int) -> list[int]:
    def chain(a):
        out = [a]
        while parent[out[-1]] != -1:
            out.append(parent[out[-1]])
        return out

    px, py = chain(x), chain(y)
    common = set(px) & set(py)
    i = next(k for k, a in enumerate(px) if a in common)
    j = py.index(px[i])
    return px[: i + 1] + py[:j][::-1]


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    # iterative Tarjan DFS from vertex 0
    disc[0] = low[0] = timer
    root_children = 0
    stack = [(0, -1, iter(g.adjacency[0]))]
    while stack:
        x, par, it = stack[-1]
        advanced = False
        for y in it:
            if disc[y] == -1:
                timer += 1
                disc[y] = low[y] = timer
                stack.append((y, x, iter(g.adjacency[y])))
                advanced = True
                break
            if y != par:
                low[x] = min(low[x], disc[y])
        if advanced:
            continue
        stack.pop()
        if par != -1:
            low[par] = min(low[par], low[x])
            if par == 0:
                root_children += 1
            elif low[x] >= disc[par]:
                return False
    return root_children <= 1


@dataclass(frozen=True)
class V3Graph:
    """A cubic bipartite graph validated against a girth bound.

    ``colors[i]`` is BLACK (point) or WHITE (line).
    """

    graph: Graph
    colors: tuple[int, ...]
    min_girth: int = 6

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self.graph.adjacency

    @property
    def blacks(self) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == BLACK]

    @property
    def whites(self) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == WHITE]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (white, black) pairs, sorted."""
        return sorted(
            (j, i) for i, row in enumerate(self.graph.adjacency) if self.colors[i] == BLACK for j in row
        )


def check_cubic(g: Graph) -> None:
    for i, row in enumerate(g.adjacency):
        if len(row) != 3:
            raise NotCubic(i, len(row))


def validate_v3(g: Graph, min_girth: int = 6) -> V3Graph:
    """Wrap ``g`` as a V3Graph after checking every invariant."""
    if min_girth < 6 or min_girth % 2:
        raise ValueError(f"min_girth must be even and >= 6, got {min_girth}")
    check_cubic(g)
    colors = bipartition(g)
    found = girth(g)
    if found < min_girth:
        raise GirthTooSmall(found, min_girth)
    # cubic + bipartite forces balanced color classes per component
    return V3Graph(g, colors, min_girth)


def trusted_v3(g: Graph, min_girth: int) -> V3Graph:
    """Wrap a graph whose cubicity and girth bound were established by the
    caller through a local argument; only the coloring is recomputed."""
    return V3Graph(g, bipartition(g), min_girth)


def require_connected(g: Graph) -> None:
    k = len(components(g))
    if k != 1:
        raise Disconnected(k)

"""Canonical labeling by color refinement and individualization.

The canonical form of a graph is the lexicographically smallest graph6
string over all leaves of the individualization-refinement tree. Subtrees
that are images of an explored subtree under an already discovered
automorphism are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codec import graph6_bytes, parse_graph6
from .graph import BLACK, Graph, V3Graph, require_connected


@dataclass(frozen=True, order=True)
class CanonicalForm:
    data: bytes

    def __str__(self) -> str:
        return self.data.decode("ascii")

    @property
    def graph6(self) -> str:
        return str(self)

    def graph(self) -> Graph:
        return parse_graph6(self.data)


def _refine(adj, cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        cell_of = {}
        for k, cell in enumerate(cells):
            for x in cell:
                cell_of[x] = k
        new_cells: list[tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for x in cell:
                sig = tuple(sorted(cell_of[y] for y in adj[x]))
                groups.setdefault(sig, []).append(x)
            for sig in sorted(groups):
                new_cells.append(tuple(groups[sig]))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adjacency
        self.best_key: bytes | None = None
        self.best_lab: list[int] | None = None
        self.leaves: dict[bytes, list[int]] = {}
        self.generators: list[list[int]] = []

    def leaf(self, cells):
        lab = [0] * self.g.n
        for pos, cell in enumerate(cells):
            lab[cell[0]] = pos
        key = graph6_bytes(self.g.relabel(lab))
        prev = self.leaves.get(key)
        if prev is not None:
            inv = [0] * self.g.n
            for x, p in enumerate(prev):
                inv[p] = x
            self.generators.append([inv[lab[x]] for x in range(self.g.n)])
            return
        self.leaves[key] = lab
        if self.best_key is None or key < self.best_key:
            self.best_key, self.best_lab = key, lab

    def run(self, cells, prefix: tuple[int, ...]):
        cells = _refine(self.adj, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self.leaf(cells)
            return
        cell = cells[target]
        explored: list[int] = []
        for w in sorted(cell):
            if explored and self._equivalent(w, explored, prefix):
                continue
            explored.append(w)
            rest = tuple(x for x in cell if x != w)
            self.run(cells[:target] + [(w,), rest] + cells[target + 1 :], prefix + (w,))

    def _equivalent(self, w: int, explored: list[int], prefix) -> bool:
        gens = [p for p in self.generators if all(p[x] == x for x in prefix)]
        if not gens:
            return False
        parent = list(range(self.g.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for p in gens:
            for x, y in enumerate(p):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        rw = find(w)
        return any(find(e) == rw for e in explored)


@lru_cache(maxsize=8192)
def _canonical(g: Graph, initial: tuple[tuple[int, ...], ...]) -> tuple[bytes, tuple[int, ...]]:
    search = _Search(g)
    search.run([c for c in initial if c], ())
    if search.best_key is None:  # n == 0
        return graph6_bytes(g), ()
    return search.best_key, tuple(search.best_lab)


def canonical_labeling(g: Graph | V3Graph) -> tuple[int, ...]:
    """Permutation ``lab`` such that ``g.relabel(lab)`` is canonical."""
    g = g.graph if isinstance(g, V3Graph) else g
    return _canonical(g, (tuple(range(g.n)),))[1]


def canonical_form(g: Graph | V3Graph) -> CanonicalForm:
    """Color-blind canonical form; equal iff the graphs are isomorphic."""
    g = g.graph if isinstance(g, V3Graph) else g
    return CanonicalForm(_canonical(g, (tuple(range(g.n)),))[0])


def colored_canonical_form(g: V3Graph, swap: bool = False) -> CanonicalForm:
    """Canonical form under color-preserving isomorphism. The point class
    (black, or white when ``swap``) receives the smallest labels."""
    first = BLACK if not swap else 1 - BLACK
    a = tuple(i for i, c in enumerate(g.colors) if c == first)
    b = tuple(i for i, c in enumerate(g.colors) if c != first)
    return CanonicalForm(_canonical(g.graph, (a, b))[0])


def are_isomorphic(g: Graph | V3Graph, h: Graph | V3Graph) -> bool:
    g = g.graph if isinstance(g, V3Graph) else g
    h = h.graph if isinstance(h, V3Graph) else h
    if g.n != h.n or g.n_edges != h.n_edges:
        return False
    if sorted(map(len, g.adjacency)) != sorted(map(len, h.adjacency)):
        return False
    return canonical_form(g) == canonical_form(h)


def is_self_dual(g: V3Graph) -> bool:
    """True iff some automorphism exchanges the two color classes."""
    require_connected(g.graph)
    return colored_canonical_form(g) == colored_canonical_form(g, swap=True)

"""Text formats: LCF codes, graph6, configuration line lists, DOT.

Also the correspondence between (v_3) configurations and their Levi graphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .errors import ConfigurationError, Disconnected, FormatError, InconsistentCode, LcfSyntaxError
from .graph import BLACK, Graph, V3Graph, components, validate_v3

# ---------------------------------------------------------------- LCF

_LCF_RE = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*\^\s*(\d+)\s*$")


@dataclass(frozen=True)
class LcfCode:
    steps: tuple[int, ...]
    repeat: int

    @property
    def order(self) -> int:
        return len(self.steps) * self.repeat

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.steps)) + f"]^{self.repeat}"


def parse_lcf_code(text: str) -> LcfCode:
    m = _LCF_RE.match(text)
    if not m:
        raise LcfSyntaxError(f"not an LCF code: {text!r}")
    steps = tuple(int(s) for s in m.group(1).split(","))
    repeat = int(m.group(2))
    if repeat < 1:
        raise LcfSyntaxError("LCF repeat count must be positive")
    return LcfCode(steps, repeat)


def lcf_graph(code: LcfCode) -> Graph:
    m = code.order
    if m < 3:
        raise InconsistentCode(f"Hamiltonian cycle needs at least 3 vertices, code gives {m}")
    nbrs = [{(i - 1) % m, (i + 1) % m} for i in range(m)]
    chord = [(i + code.steps[i % len(code.steps)]) % m for i in range(m)]
    for i, j in enumerate(chord):
        if j == i:
            raise InconsistentCode(f"chord at {i} is a self-loop")
        if chord[j] != i:
            raise InconsistentCode(f"chord {i}->{j} is not matched by {j}->{i}")
        if j in nbrs[i]:
            raise InconsistentCode(f"chord {i}-{j} duplicates a cycle edge")
    for i, j in enumerate(chord):
        nbrs[i].add(j)
    return Graph(m, tuple(tuple(sorted(s)) for s in nbrs))


def parse_lcf(text: str) -> Graph:
    """Build the graph of an LCF code such as ``"[5,-5]^7"``."""
    return lcf_graph(parse_lcf_code(text))


# ---------------------------------------------------------------- graph6


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def graph6_bytes(g: Graph) -> bytes:
    n = g.n
    bits = []
    for j in range(1, n):
        row = g.adjacency[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(bit << (5 - k) for k, bit in enumerate(bits[p : p + 6])) for p in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def write_graph6(g: Graph) -> str:
    return graph6_bytes(g).decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise FormatError("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise FormatError("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 size field")
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 size field")
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise FormatError("nonzero graph6 padding bits")
    nbrs: list[list[int]] = [[] for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                nbrs[i].append(j)
                nbrs[j].append(i)
            k += 1
    return Graph(n, tuple(tuple(sorted(r)) for r in nbrs))


# ---------------------------------------------------------------- configurations


@dataclass(frozen=True)
class Configuration:
    """A (v_3) configuration: ``v`` points, ``v`` lines of 3 points each."""

    v: int
    lines: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(self.lines) != self.v:
            raise ConfigurationError(f"{len(self.lines)} lines for {self.v} points")
        count = [0] * self.v
        pairs: set[tuple[int, int]] = set()
        for line in self.lines:
            if len(line) != 3 or len(set(line)) != 3:
                raise ConfigurationError(f"line {line} does not have 3 distinct points")
            for p in line:
                if not 0 <= p < self.v:
                    raise ConfigurationError(f"point {p} out of range")
                count[p] += 1
            for pair in combinations(sorted(line), 2):
                if pair in pairs:
                    raise ConfigurationError(f"points {pair} lie on two lines")
                pairs.add(pair)
        for p, c in enumerate(count):
            if c != 3:
                raise ConfigurationError(f"point {p} lies on {c} lines")

    @classmethod
    def from_lines(cls, v: int, lines) -> "Configuration":
        return cls(v, tuple(tuple(sorted(int(p) for p in line)) for line in lines))

    def normalized(self) -> "Configuration":
        return Configuration(self.v, tuple(sorted(self.lines)))


def parse_config(text: str) -> Configuration:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("empty configuration text")
    if len(rows[0]) != 1:
        raise FormatError("first line must hold the point count")
    try:
        v = int(rows[0][0])
        lines = [tuple(int(t) for t in r) for r in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token: {exc}") from None
    if any(len(r) != 3 for r in lines):
        raise FormatError("every line must list exactly 3 points")
    try:
        return Configuration.from_lines(v, lines)
    except ConfigurationError:
        raise
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from None


def write_config(c: Configuration) -> str:
    return f"{c.v}\n" + "".join(" ".join(map(str, line)) + "\n" for line in c.lines)


def levi_from_config(c: Configuration) -> V3Graph:
    """Points become black vertices ``0..v-1``, lines white ``v..2v-1``."""
    edges = [(p, c.v + k) for k, line in enumerate(c.lines) for p in line]
    return validate_v3(Graph.from_edges(2 * c.v, edges), 6)


def config_from_levi(g: V3Graph, dual: bool = False) -> Configuration:
    """Read the configuration off a connected (v_3) graph; black = points
    unless ``dual`` swaps the roles."""
    k = len(components(g.graph))
    if k != 1:
        raise Disconnected(k)
    point_color = BLACK if not dual else 1 - BLACK
    points = [i for i, col in enumerate(g.colors) if col == point_color]
    index = {p: i for i, p in enumerate(points)}
    lines = [
        tuple(sorted(index[p] for p in g.adjacency[w]))
        for w in range(g.n)
        if g.colors[w] != point_color
    ]
    return Configuration(len(points), tuple(lines))


# ---------------------------------------------------------------- DOT


def write_dot(g: V3Graph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for i, col in enumerate(g.colors):
        if col == BLACK:
            out.append(f"  {i} [shape=circle, style=filled, fillcolor=black, fontcolor=white];")
        else:
            out.append(f"  {i} [shape=box];")
    for a, b in g.graph.edges():
        out.append(f"  {a} -- {b};")
    out.append("}")
    return "\n".join(out) + "\n"

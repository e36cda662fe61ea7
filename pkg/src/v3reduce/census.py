"""Irreducibility classification and the census of connected (v_3) graphs.

The census grows level by level from the two B-irreducible seeds by all
A- and B-augmentations. ``brute_force_census`` is an independent oracle
that builds incidence matrices row by row and never touches the
reduction code.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .codec import parse_graph6, write_graph6
from .errors import TheoremViolation, TooLarge
from .graph import Graph, V3Graph, is_connected, is_two_connected, validate_v3
from .iso import CanonicalForm, canonical_form, is_self_dual
from .reduce import ReductionMove, evaluate, iter_augmentations, iter_candidates, reduce_to_terminal

log = logging.getLogger(__name__)

REPORT_SCHEMA_VERSION = 1
ORACLE_MAX_V = 11


# ---------------------------------------------------------------- classification


@dataclass
class IrreducibilityReport:
    graph: CanonicalForm
    a_irreducible: bool
    b_irreducible: bool
    a_witness: ReductionMove | None = None
    b_witness: ReductionMove | None = None
    a_candidates: int = 0
    b_candidates: int = 0

    @property
    def witness(self) -> ReductionMove | int:
        """The first valid B-move, or the number of exhausted candidates."""
        return self.b_witness if self.b_witness is not None else self.b_candidates

    def to_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "graph": str(self.graph),
            "a_irreducible": self.a_irreducible,
            "b_irreducible": self.b_irreducible,
            "a_witness": self.a_witness.to_dict() if self.a_witness else None,
            "b_witness": self.b_witness.to_dict() if self.b_witness else None,
            "a_candidates": self.a_candidates,
            "b_candidates": self.b_candidates,
        }


def _first_valid(g: V3Graph, min_girth: int, mode: str) -> tuple[ReductionMove | None, int]:
    count = 0
    for m in iter_candidates(g, mode):
        count += 1
        if evaluate(g, m, min_girth).status == "ok":
            return m, count
    return None, count


def classify(g: V3Graph, min_girth: int = 6) -> IrreducibilityReport:
    a_move, a_count = _first_valid(g, min_girth, "A")
    b_move, b_count = _first_valid(g, min_girth, "B")
    return IrreducibilityReport(
        canonical_form(g), a_move is None, b_move is None, a_move, b_move, a_count, b_count
    )


# ---------------------------------------------------------------- census


@dataclass
class CensusLevel:
    v: int
    graphs: dict[CanonicalForm, str] = field(default_factory=dict)
    provenance: dict[CanonicalForm, dict | None] = field(default_factory=dict)
    seeds: list[CanonicalForm] = field(default_factory=list)

    def forms(self) -> set[CanonicalForm]:
        return set(self.graphs)

    def members(self) -> list[V3Graph]:
        return [validate_v3(parse_graph6(self.graphs[f]), 6) for f in sorted(self.graphs)]

    def __len__(self) -> int:
        return len(self.graphs)

    def metadata(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "v": self.v,
            "count": len(self.graphs),
            "configurations": count_configurations(self),
            "seeds": [str(s) for s in self.seeds],
            "provenance": {str(f): self.provenance.get(f) for f in sorted(self.graphs)},
        }


def _expand(g6: str) -> list[tuple[bytes, dict]]:
    g = validate_v3(parse_graph6(g6), 6)
    out = []
    seen = set()
    for move, h in iter_augmentations(g, 6):
        key = canonical_form(h).data
        if key in seen:
            continue
        seen.add(key)
        out.append((key, {"from": g6, "variant": move.variant, "edges": [list(e) for e in move.removed_edges]}))
    return out


def _seed_level(v: int) -> CensusLevel:
    from .families import heawood, pappus

    level = CensusLevel(v)
    seed = {7: heawood, 9: pappus}.get(v)
    if seed is not None:
        f = canonical_form(seed())
        level.graphs[f] = str(f)
        level.provenance[f] = None
        level.seeds.append(f)
    return level


def enumerate_census(max_v: int, jobs: int = 1) -> list[CensusLevel]:
    """Levels 7..max_v of connected (v_3) graphs, by augmentation closure."""
    if max_v < 7:
        raise ValueError("max_v must be at least 7")
    levels = [_seed_level(7)]
    for v in range(8, max_v + 1):
        prev = levels[-1]
        level = _seed_level(v)
        sources = [prev.graphs[f] for f in sorted(prev.graphs)]
        if jobs > 1 and len(sources) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_expand, sources))
        else:
            results = [_expand(s) for s in sources]
        for batch in results:
            for key, prov in batch:
                f = CanonicalForm(key)
                if f not in level.graphs:
                    level.graphs[f] = str(f)
                    level.provenance[f] = prov
        level.graphs = dict(sorted(level.graphs.items()))
        log.info("census level v=%d: %d graphs", v, len(level))
        levels.append(level)
    return levels


def write_census(levels: list[CensusLevel], out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for level in levels:
        g6 = out / f"census-v{level.v}.g6"
        g6.write_text("".join(level.graphs[f] + "\n" for f in sorted(level.graphs)))
        meta = out / f"census-v{level.v}.json"
        meta.write_text(json.dumps(level.metadata(), indent=2) + "\n")
        written += [g6, meta]
    return written


def count_configurations(level: CensusLevel) -> int:
    """Number of (v_3) configurations: self-dual Levi graphs count once,
    the others twice (a configuration and its dual)."""
    return sum(1 if is_self_dual(g) else 2 for g in level.members())


# ---------------------------------------------------------------- brute-force oracle


def levi_graph_of_rows(v: int, rows: list[int]) -> Graph:
    edges = []
    for r, mask in enumerate(rows):
        for c in range(v):
            if mask >> (v - 1 - c) & 1:
                edges.append((c, v + r))
    return Graph.from_edges(2 * v, edges)


def incidence_matrices(v: int) -> Iterator[list[int]]:
    """Yield v x v incidence matrices of (v_3) configurations.

    Rows are lines, encoded as bitmasks with point 0 as the most
    significant bit. Every matrix can be brought to a form whose rows and
    columns are both lexicographically non-increasing (take the
    lexicographically largest row-major reading over all row and column
    orders), so only such matrices are generated; every configuration
    appears at least once.
    """
    if v < 7:
        return
    triples = sorted(
        (sum(1 << (v - 1 - c) for c in t) for t in combinations(range(v), 3)), reverse=True
    )
    lead = {t: v - t.bit_length() for t in triples}
    column_bits = {t: [c for c in range(v) if t >> (v - 1 - c) & 1] for t in triples}
    rows: list[int] = []
    deg = [0] * v
    colval = [0] * v

    def columns_ordered() -> bool:
        return all(colval[c] >= colval[c + 1] for c in range(v - 1))

    def extend(start: int):
        k = len(rows)
        if k == v:
            yield list(rows)
            return
        for idx in range(start, len(triples)):
            t = triples[idx]
            # columns left of this row's lead never appear again
            if any(deg[c] != 3 for c in range(lead[t])):
                break
            cols = column_bits[t]
            if any(deg[c] == 3 for c in cols):
                continue
            if any(bin(t & r).count("1") > 1 for r in rows):
                continue
            for c in range(v):
                colval[c] <<= 1
            for c in cols:
                colval[c] |= 1
                deg[c] += 1
            if columns_ordered():
                rows.append(t)
                yield from extend(idx + 1)
                rows.pop()
            for c in cols:
                deg[c] -= 1
            for c in range(v):
                colval[c] >>= 1

    yield from extend(0)


def brute_force_census(v: int) -> set[CanonicalForm]:
    """All connected (v_3) graphs on 2v vertices, found by exhaustive
    incidence-matrix search and deduplicated by canonical form."""
    if v > ORACLE_MAX_V:
        raise TooLarge(f"brute-force census is limited to v <= {ORACLE_MAX_V}")
    found: set[CanonicalForm] = set()
    for rows in incidence_matrices(v):
        g = levi_graph_of_rows(v, rows)
        if is_connected(g):
            found.add(canonical_form(g))
    return found


# ---------------------------------------------------------------- theorem checks


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report["seconds"] = round(time.perf_counter() - t0, 3)
        report["schema_version"] = REPORT_SCHEMA_VERSION
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def family_catalogue(max_v: int) -> dict[CanonicalForm, str]:
    """Canonical forms of every A-irreducible family member with at most
    ``2 * max_v`` vertices, keyed to a display name."""
    from .families import d_graph, pappus, t_graph

    names: dict[CanonicalForm, str] = {}
    for n in range(7, max_v + 1):
        names[canonical_form(d_graph(n))] = f"D({n})"
    for n in range(1, max_v // 10 + 1):
        for i in (1, 2, 3):
            names[canonical_form(t_graph(i, n))] = f"T{i}({n})"
    if max_v >= 9:
        names[canonical_form(pappus())] = "Pappus"
    return names


def _census_for(max_v: int, levels, jobs: int):
    if levels is None:
        levels = enumerate_census(max_v, jobs)
    return [lv for lv in levels if lv.v <= max_v]


def _name(form: CanonicalForm, names: dict) -> str:
    return names.get(form, str(form))


def _listing(forms, names: dict) -> list[str]:
    return [_name(f, names) for f in sorted(forms, key=lambda f: (f.graph().n, _name(f, names)))]


@_timed
def verify_theorem1(max_v: int, levels=None, jobs: int = 1) -> dict:
    """B-irreducible census members must be exactly Heawood and Pappus."""
    from .families import heawood, pappus

    levels = _census_for(max_v, levels, jobs)
    expected = {canonical_form(heawood()): "Heawood"}
    if max_v >= 9:
        expected[canonical_form(pappus())] = "Pappus"
    found = []
    for level in levels:
        for g in level.members():
            if classify(g).b_irreducible:
                found.append(canonical_form(g))
    ok = set(found) == set(expected)
    return {
        "theorem": "thm1",
        "max_v": max_v,
        "pass": ok,
        "b_irreducible": _listing(found, expected),
        "offending": sorted(str(f) for f in set(found) ^ set(expected)),
    }


@_timed
def verify_theorem2(max_v: int, levels=None, jobs: int = 1) -> dict:
    """Every census member reduces to a terminal through connected graphs."""
    levels = _census_for(max_v, levels, jobs)
    offending = []
    terminals: dict[str, int] = {}
    longest = 0
    for level in levels:
        for g in level.members():
            try:
                trace = reduce_to_terminal(g)
            except TheoremViolation as exc:
                offending.append({"graph": write_graph6(g.graph), "error": str(exc)})
                continue
            bad = [s for _, s in trace.steps if not is_connected(parse_graph6(s))]
            if bad:
                offending.append({"graph": write_graph6(g.graph), "error": "disconnected step"})
            terminals[trace.terminal] = terminals.get(trace.terminal, 0) + 1
            longest = max(longest, len(trace.steps))
    return {
        "theorem": "thm2",
        "max_v": max_v,
        "pass": not offending,
        "terminals": terminals,
        "longest_trace": longest,
        "offending": offending,
    }


@_timed
def verify_theorem3(max_v: int, levels=None, jobs: int = 1) -> dict:
    """A-irreducible census members must match the known families."""
    levels = _census_for(max_v, levels, jobs)
    expected = family_catalogue(max_v)
    found = set()
    for level in levels:
        for g in level.members():
            if classify(g).a_irreducible:
                found.add(canonical_form(g))
    ok = found == set(expected)
    return {
        "theorem": "thm3",
        "max_v": max_v,
        "pass": ok,
        "a_irreducible": _listing(found, expected),
        "offending": sorted(str(f) for f in found ^ set(expected)),
    }


@_timed
def verify_oracle(max_v: int, levels=None, jobs: int = 1) -> dict:
    """Augmentation census and brute-force census must agree level by level."""
    levels = _census_for(min(max_v, ORACLE_MAX_V), levels, jobs)
    rows = []
    for level in levels:
        brute = brute_force_census(level.v)
        rows.append({"v": level.v, "census": len(level), "oracle": len(brute), "equal": brute == level.forms()})
    unverified = list(range(ORACLE_MAX_V + 1, max_v + 1))
    return {
        "theorem": "oracle",
        "max_v": max_v,
        "pass": all(r["equal"] for r in rows),
        "levels": rows,
        "unverified_levels": unverified,
    }


def check_two_connected(levels) -> list[str]:
    return [str(f) for lv in levels for f, g in zip(sorted(lv.graphs), lv.members()) if not is_two_connected(g.graph)]

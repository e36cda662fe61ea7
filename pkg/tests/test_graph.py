import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cycle_enumeration_girth, cycle_graph, k33, path_graph, petersen, to_nx
from v3reduce.errors import GirthTooSmall, InvalidGraph, NotCubic, OddCycle
from v3reduce.families import heawood, tutte_coxeter
from v3reduce.graph import (
    BLACK,
    UNBOUNDED,
    Graph,
    bipartition,
    components,
    disjoint_union,
    girth,
    is_two_connected,
    validate_v3,
)


@st.composite
def small_graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(InvalidGraph):
        Graph(2, ((1,), ()))


def test_graph_rejects_duplicates_and_loops():
    with pytest.raises(InvalidGraph):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidGraph):
        Graph.from_edges(3, [(1, 1)])


def test_girth_examples():
    assert girth(cycle_graph(6)) == 6
    assert girth(heawood().graph) == 6
    assert girth(tutte_coxeter().graph) == 8
    assert girth(path_graph(5)) is UNBOUNDED
    assert girth(Graph(0, ())) is UNBOUNDED


def test_heawood_girth_matches_bfs_oracle():
    assert girth(heawood().graph) == nx.girth(to_nx(heawood().graph)) == 6


def test_unbounded_is_not_an_integer():
    assert UNBOUNDED != 10**9
    assert UNBOUNDED > 10**9
    assert not isinstance(UNBOUNDED, int)
    assert str(UNBOUNDED) == "Unbounded"


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_girth_agrees_with_cycle_enumeration(g):
    expected = cycle_enumeration_girth(g)
    got = girth(g)
    assert (got is UNBOUNDED) if expected is None else got == expected


def test_bipartition_examples():
    colors = bipartition(cycle_graph(6))
    assert sorted(colors).count(BLACK) == 3
    with pytest.raises(OddCycle) as info:
        bipartition(cycle_graph(5))
    cyc = info.value.cycle
    assert len(cyc) % 2 == 1
    c5 = cycle_graph(5)
    assert all(c5.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    h = bipartition(heawood().graph)
    assert h.count(0) == h.count(1) == 7


def test_bipartition_anchors_smallest_vertex_per_component():
    g = disjoint_union(cycle_graph(6), cycle_graph(4))
    colors = bipartition(g)
    assert colors[0] == BLACK and colors[6] == BLACK


@pytest.mark.parametrize("seed", range(10))
def test_bipartition_stable_under_relabeling(seed):
    g = heawood().graph
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    colors = bipartition(g)
    classes = {frozenset(perm[i] for i in range(g.n) if colors[i] == c) for c in (0, 1)}
    relabeled = bipartition(g.relabel(perm))
    assert {frozenset(i for i in range(g.n) if relabeled[i] == c) for c in (0, 1)} == classes
    assert relabeled[0] == BLACK


def test_validate_v3():
    v = validate_v3(heawood().graph, 6)
    assert v.min_girth == 6 and len(v.blacks) == len(v.whites) == 7
    with pytest.raises(GirthTooSmall) as info:
        validate_v3(k33(), 6)
    assert info.value.found == 4
    with pytest.raises(OddCycle):
        validate_v3(petersen(), 6)
    with pytest.raises(NotCubic):
        validate_v3(cycle_graph(6), 6)
    with pytest.raises(GirthTooSmall):
        validate_v3(heawood().graph, 8)
    with pytest.raises(ValueError):
        validate_v3(heawood().graph, 7)


def test_components():
    assert len(components(heawood().graph)) == 1
    assert len(components(disjoint_union(cycle_graph(6), cycle_graph(6)))) == 2
    assert components(Graph(0, ())) == []


def test_is_two_connected():
    assert is_two_connected(heawood().graph)
    assert not is_two_connected(path_graph(3))
    assert not is_two_connected(disjoint_union(cycle_graph(6), cycle_graph(6)))
    # two triangles sharing a vertex
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert not is_two_connected(bowtie)


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=10))
def test_two_connectivity_matches_networkx(g):
    h = to_nx(g)
    expected = g.n >= 3 and nx.is_connected(h) and not list(nx.articulation_points(h))
    assert is_two_connected(g) == expected

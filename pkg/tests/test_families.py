import pytest

from oracles import cyclic_configuration_levi, has_color_swapping_automorphism
from v3reduce.census import classify
from v3reduce.errors import OddCycle, ParameterOutOfRange
from v3reduce.families import (
    SEGMENT_EDGES,
    SEGMENT_U,
    SEGMENT_V,
    d_graph,
    gp,
    heawood,
    pappus,
    segment_vertex,
    t_chain,
    t_graph,
    tutte_coxeter,
)
from v3reduce.graph import Graph, bipartition, girth, is_two_connected, validate_v3
from v3reduce.iso import are_isomorphic, canonical_form, is_self_dual
from v3reduce.reduce import ReductionMove, apply_move


def test_d_graph():
    assert are_isomorphic(d_graph(7), heawood())
    with pytest.raises(ParameterOutOfRange):
        d_graph(6)
    g = d_graph(9)
    assert g.n == 18 and girth(g.graph) == 6
    assert not are_isomorphic(g, pappus())


@pytest.mark.parametrize("n", range(7, 21))
def test_d_graph_is_cyclic_configuration(n):
    g = d_graph(n)
    assert g.n == 2 * n
    assert are_isomorphic(g, cyclic_configuration_levi(n))


def test_segment_shape():
    seg = Graph.from_edges(20, SEGMENT_EDGES)
    bipartition(seg)
    boundary = set(SEGMENT_U + SEGMENT_V)
    for x in range(20):
        assert len(seg.adjacency[x]) == (2 if x in boundary else 3)
    colors = bipartition(seg)
    assert len({colors[x] for x in SEGMENT_U}) == 1
    assert {colors[x] for x in SEGMENT_V} == {1 - colors[SEGMENT_U[0]]}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_t_graphs_valid_and_pairwise_distinct(n):
    graphs = [t_graph(i, n) for i in (1, 2, 3)]
    for g in graphs:
        assert g.n == 20 * n
        assert girth(g.graph) >= 6
    assert len({canonical_form(g) for g in graphs}) == 3


@pytest.mark.parametrize("variant", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_t_graphs_are_a_irreducible(variant, n):
    assert classify(t_graph(variant, n)).a_irreducible


def test_t_chain_is_open():
    g = t_chain(2)
    degrees = [len(r) for r in g.adjacency]
    assert degrees.count(2) == 6 and degrees.count(3) == 34
    with pytest.raises(ParameterOutOfRange):
        t_chain(0)


def test_t_graph_parameters():
    with pytest.raises(ParameterOutOfRange):
        t_graph(4, 1)
    with pytest.raises(ParameterOutOfRange):
        t_graph(1, 0)


@pytest.mark.parametrize("n", [2, 3])
def test_named_reduction_of_t_family(n):
    # remove w_1^2 and z_1^2, add u_1^1 y_1^3, u_1^3 y_1^1, v_1^2 x_1^2
    g = t_graph(1, n)
    s = lambda name: segment_vertex(1, name)
    w, z = s("w2"), s("z2")
    u, v = (w, z) if g.colors[w] == 0 else (z, w)
    pairs = [(s("u1"), s("y3")), (s("u3"), s("y1")), (s("v2"), s("x2"))]
    pairs = tuple((a, b) if g.colors[a] == 1 else (b, a) for a, b in pairs)
    h = apply_move(g, ReductionMove(u, v, False, pairs), 6)
    assert girth(h.graph) == 6


def test_segment_vertex():
    assert segment_vertex(2, "u1") == 20
    assert segment_vertex(1, "v3") == 19
    with pytest.raises(KeyError):
        segment_vertex(1, "q9")


def test_pappus_identity():
    g = pappus()
    assert g.n == 18 and girth(g.graph) == 6
    r = classify(g)
    assert r.a_irreducible and r.b_irreducible
    assert is_self_dual(g)
    assert has_color_swapping_automorphism(g.graph, g.colors)


def test_heawood_identity():
    g = heawood()
    assert g.n == 14 and girth(g.graph) == 6
    assert classify(g).b_irreducible


def test_gp():
    g = gp(18, 5)
    bipartition(g)
    assert g.n == 36 and girth(g) == 8
    h = gp(26, 5)
    bipartition(h)
    assert girth(h) >= 8
    with pytest.raises(OddCycle):
        bipartition(gp(5, 2))
    assert girth(gp(5, 2)) == 5
    for n, k in ((2, 1), (10, 5), (10, 0)):
        with pytest.raises(ParameterOutOfRange):
            gp(n, k)


def test_tutte_coxeter():
    g = tutte_coxeter()
    assert g.n == 30 and girth(g.graph) == 8
    validate_v3(g.graph, 8)
    assert classify(g, 8).b_irreducible


def test_generators_deterministic():
    assert t_graph(2, 2) == t_graph(2, 2)
    assert d_graph(12) == d_graph(12)
    assert pappus() == pappus()


def test_family_members_two_connected():
    for g in [d_graph(n) for n in range(7, 15)] + [t_graph(i, 2) for i in (1, 2, 3)]:
        assert is_two_connected(g.graph)

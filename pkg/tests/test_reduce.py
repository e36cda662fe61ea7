import json
from itertools import combinations

import pytest

from v3reduce import reduce as reduce_mod
from v3reduce.codec import parse_graph6, write_graph6
from v3reduce.errors import Disconnected, GirthTooSmall, InvalidMove, SharedEndpoint, TheoremViolation
from v3reduce.families import d_graph, heawood, pappus, t_graph
from v3reduce.graph import disjoint_union, girth, is_connected, validate_v3
from v3reduce.iso import are_isomorphic, canonical_form
from v3reduce.reduce import (
    AugmentationMove,
    ReductionMove,
    ReductionTrace,
    a_augment,
    apply_move,
    augment,
    b_augment,
    candidate_moves,
    enumerate_reductions,
    evaluate,
    inverse_augmentation,
    iter_augmentations,
    iter_candidates,
    reduce_to_terminal,
    rewired_graph,
)


def test_candidate_count_law():
    g = pappus()
    for u in g.blacks:
        for v in g.whites:
            moves = candidate_moves(g, u, v)
            assert len(moves) == (2 if v in g.adjacency[u] else 6)
            assert len(set(moves)) == len(moves)


def test_move_shape_invariants():
    g = d_graph(9)
    for m in iter_candidates(g):
        xs = sorted(x for x in g.adjacency[m.u] if x != m.v)
        ys = sorted(y for y in g.adjacency[m.v] if y != m.u)
        assert sorted(x for x, _ in m.added_edges) == xs
        assert sorted(y for _, y in m.added_edges) == ys
        assert len(m.added_edges) == (2 if m.adjacent else 3)


def test_enumeration_examples():
    assert enumerate_reductions(heawood(), 6, "B") == []
    assert enumerate_reductions(d_graph(8), 6, "B")
    assert enumerate_reductions(d_graph(9), 6, "A") == []


def test_enumeration_order_is_deterministic():
    g = d_graph(10)
    moves = [m for m, _ in enumerate_reductions(g)]
    assert moves == [m for m, _ in enumerate_reductions(g)]
    keys = [(m.u, m.v) for m in moves]
    assert keys == sorted(keys)


@pytest.mark.parametrize("g", [d_graph(10), t_graph(1, 1), t_graph(2, 2)], ids=["D10", "T1(1)", "T2(2)"])
def test_mode_a_subset_of_mode_b(g):
    a = enumerate_reductions(g, 6, "A")
    b = enumerate_reductions(g, 6, "B")
    assert set(m for m, _ in a) <= set(m for m, _ in b)


def test_results_pass_full_validation():
    for g in (d_graph(10), t_graph(3, 1)):
        for m, h in enumerate_reductions(g):
            full = validate_v3(h.graph, 6)
            assert full.colors == h.colors
            assert apply_move(g, m, 6) == h


def test_local_girth_check_matches_full_girth():
    g = t_graph(2, 1)
    for m in iter_candidates(g):
        out = evaluate(g, m, 6)
        if out.status == "duplicate":
            with pytest.raises(InvalidMove):
                rewired_graph(g, m)
            continue
        full = girth(rewired_graph(g, m))
        assert (out.status == "ok") == (full >= 6)
        if out.status == "girth":
            assert out.short_cycle == full


def test_apply_move_duplicate_edge():
    g = heawood()
    dup = next(m for m in iter_candidates(g) if evaluate(g, m).status == "duplicate")
    with pytest.raises(InvalidMove):
        apply_move(g, dup, 6)


def test_apply_move_girth_four_on_pappus():
    g = pappus()
    bad = next(m for m in iter_candidates(g) if evaluate(g, m).status == "girth")
    with pytest.raises(GirthTooSmall) as info:
        apply_move(g, bad, 6)
    assert info.value.found == 4


def test_apply_move_rejects_malformed():
    g = d_graph(8)
    m = next(m for m, _ in enumerate_reductions(g))
    with pytest.raises(InvalidMove):
        apply_move(g, ReductionMove(m.v, m.u, m.adjacent, m.added_edges))
    with pytest.raises(InvalidMove):
        apply_move(g, ReductionMove(m.u, m.v, not m.adjacent, m.added_edges))
    with pytest.raises(InvalidMove):
        apply_move(g, ReductionMove(m.u, m.v, m.adjacent, m.added_edges[:-1]))


def test_compaction_preserves_order():
    g = d_graph(8)
    m, h = enumerate_reductions(g)[0]
    keep = [x for x in range(g.n) if x not in (m.u, m.v)]
    added = {frozenset(e) for e in m.added_edges}
    for new_a, old_a in enumerate(keep):
        for new_b, old_b in enumerate(keep):
            expected = g.graph.has_edge(old_a, old_b) or frozenset((old_a, old_b)) in added
            assert h.graph.has_edge(new_a, new_b) == expected


def test_a_augment_heawood_always_fails():
    g = heawood()
    edges = g.edges()
    tried = 0
    for e1, e2 in combinations(edges, 2):
        if set(e1) & set(e2):
            continue
        tried += 1
        with pytest.raises(GirthTooSmall):
            a_augment(g, e1, e2, 6)
    assert tried > 0


def test_a_augment_d8_succeeds_somewhere():
    g = d_graph(8)
    results = [h for _, h in iter_augmentations(g, 6, "a")]
    assert results and all(h.n == 18 for h in results)
    e1, e2 = next(m for m, _ in iter_augmentations(g, 6, "a")).removed_edges
    h = a_augment(g, e1, e2, 6)
    assert validate_v3(h.graph, 6).n == 18
    assert h.graph.has_edge(16, 17)


def test_augment_errors():
    g = heawood()
    e1, e2 = g.edges()[:2]
    assert set(e1) & set(e2)
    with pytest.raises(SharedEndpoint):
        a_augment(g, e1, e2, 6)
    w, b = g.edges()[0]
    with pytest.raises(InvalidMove):
        a_augment(g, (b, w), g.edges()[-1], 6)
    with pytest.raises(InvalidMove):
        b_augment(g, AugmentationMove(((0, 1), (2, 3))), 6)


def test_b_augment_heawood_gives_d8_only(census):
    g = heawood()
    results = [h for _, h in iter_augmentations(g, 6, "b")]
    assert results and all(h.n == 16 for h in results)
    assert {canonical_form(h) for h in results} == census[8].forms() == {canonical_form(d_graph(8))}
    for h in results[:10]:
        assert any(are_isomorphic(r, g) for _, r in enumerate_reductions(h))
    m = next(m for m, _ in iter_augmentations(g, 6, "b"))
    assert b_augment(g, m, 6) == results[0]
    assert not b_augment(g, m, 6).graph.has_edge(14, 15)


def test_b_augment_four_cycle():
    g = heawood()
    bad = None
    for combo in combinations(g.edges(), 3):
        if len({a for e in combo for a in e}) != 6:
            continue
        whites = [x for x, _ in combo]
        blacks = [y for _, y in combo]
        # two whites sharing a black neighbor other than the removed ones form a 4-cycle via u
        for a, b in combinations(whites, 2):
            if set(g.adjacency[a]) & set(g.adjacency[b]) - set(blacks):
                bad = combo
        if bad:
            break
    with pytest.raises(GirthTooSmall) as info:
        b_augment(g, AugmentationMove(bad), 6)
    assert info.value.found == 4


@pytest.mark.parametrize("g", [d_graph(9), t_graph(1, 1), t_graph(3, 1)], ids=["D9", "T1(1)", "T3(1)"])
def test_reduction_round_trip(g):
    for m, h in enumerate_reductions(g)[::7]:
        back = augment(h, inverse_augmentation(m, h), 6)
        assert are_isomorphic(back, g)


def test_augmentation_round_trip():
    g = d_graph(9)
    for am, h in list(iter_augmentations(g, 6))[::25]:
        assert any(are_isomorphic(r, g) for _, r in enumerate_reductions(h))


@pytest.mark.parametrize("n", range(8, 21))
def test_d_reductions_keep_girth_six(n):
    results = enumerate_reductions(d_graph(n))
    assert results and {girth(h.graph) for _, h in results} == {6}


@pytest.mark.parametrize("variant", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_t_reductions_keep_girth_six(variant, n):
    results = enumerate_reductions(t_graph(variant, n))
    assert results and {girth(h.graph) for _, h in results} == {6}


def test_terminals_every_candidate_fails_with_girth_four():
    for g in (heawood(), pappus()):
        for m in iter_candidates(g):
            out = evaluate(g, m)
            assert out.status != "ok"
            if out.status == "girth":
                assert girth(rewired_graph(g, m)) == 4


def test_reduce_to_terminal_examples():
    t = reduce_to_terminal(heawood())
    assert t.steps == [] and t.terminal == "Heawood"
    t = reduce_to_terminal(d_graph(8))
    assert len(t.steps) == 1 and t.terminal == "Heawood"


def test_reduce_to_terminal_t1_fixture():
    # pinned from the first verified run of the driver
    t = reduce_to_terminal(t_graph(1, 1))
    assert len(t.steps) == 3 and t.terminal == "Heawood"
    assert [parse_graph6(s).n for _, s in t.steps] == [18, 16, 14]


def test_trace_replays_and_is_connected():
    g = t_graph(2, 1)
    t = reduce_to_terminal(g)
    current = g
    for m, g6 in t.steps:
        current = apply_move(current, m, 6)
        assert write_graph6(current.graph) == g6
        assert is_connected(current.graph)
    assert t.start == canonical_form(g)


def test_trace_json_schema():
    t = reduce_to_terminal(d_graph(8))
    doc = json.loads(t.to_json())
    assert set(doc) == {"schema_version", "start", "steps", "terminal"}
    assert set(doc["steps"][0]) == {"u", "v", "adjacent", "added_edges", "result_graph6"}
    assert ReductionTrace.from_dict(doc).to_dict() == doc


def test_reduce_to_terminal_rejects_disconnected():
    h = heawood().graph
    with pytest.raises(Disconnected):
        reduce_to_terminal(validate_v3(disjoint_union(h, h), 6))


def test_theorem_violation_is_loud(monkeypatch):
    g = d_graph(8)
    two = validate_v3(disjoint_union(heawood().graph, heawood().graph), 6)
    only_disconnected = [(enumerate_reductions(g)[0][0], two)]
    monkeypatch.setattr(reduce_mod, "iter_reductions", lambda *a, **k: iter(only_disconnected))
    with pytest.raises(TheoremViolation, match="disconnected"):
        reduce_to_terminal(g)
    monkeypatch.setattr(reduce_mod, "iter_reductions", lambda *a, **k: iter(()))
    with pytest.raises(TheoremViolation):
        reduce_to_terminal(g)

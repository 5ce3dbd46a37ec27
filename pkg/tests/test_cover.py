import random

import pytest
from hypothesis import given

from conftest import regular_graphs, small_multigraphs
from oracles import is_covering_brute
from regschreier.corpus import random_multigraph, regular_multigraphs
from regschreier.cover import (
    CoveringMap,
    canonical_double_cover,
    disjoint_copies_covering,
    fiber,
    identity_covering,
    is_double_cover,
    verify_covering,
)
from regschreier.fixtures import cycle, half_vertex, loop_vertex
from regschreier.formats import serialize_graph
from regschreier.graph_core import (
    bipartition,
    connected_components,
    degrees,
    from_records,
    is_connected,
    normalize,
    validate,
)


def _canon(g):
    return serialize_graph(normalize(g)[0])


def test_loop_lifts_to_two_parallel_edges():
    cover, m = canonical_double_cover(loop_vertex())
    assert cover.vertex_count == 2
    assert sorted((a.iota, a.tau) for a in cover.arcs) == [(0, 1), (0, 1), (1, 0), (1, 0)]
    assert _canon(cover) == "heg 1\nvertices 2\nedge 0 1\nedge 1 0\n"


def test_half_edge_lifts_to_single_edge():
    cover, m = canonical_double_cover(half_vertex())
    assert _canon(cover) == "heg 1\nvertices 2\nedge 0 1\n"
    assert verify_covering(m) == []


def test_c4_cover_is_two_four_cycles():
    cover, m = canonical_double_cover(cycle(4))
    comps = connected_components(cover)
    assert len(comps) == 2
    assert all(len(c) == 4 for c in comps)
    assert set(degrees(cover)) == {2}


def test_lift_order_is_fixed():
    g = from_records(2, [(0, 1)])
    cover, _ = canonical_double_cover(g)
    # arc 0 (0->1) lifts to (0,0)->(1,1) then (0,1)->(1,0)
    assert [(a.iota, a.tau) for a in cover.arcs] == [(0, 3), (2, 1), (1, 2), (3, 0)]


def test_identity_is_a_covering_but_not_double():
    m = identity_covering(cycle(4))
    assert verify_covering(m) == []
    assert not is_double_cover(m)
    assert fiber(m, 2) == [2]


def test_collapsing_c4_onto_an_edge_is_not_a_covering():
    # antipodal vertices {0,2} -> 0, {1,3} -> 1; each C4 star has 2 arcs, K2 stars have 1
    c4 = cycle(4)
    k2 = from_records(2, [(0, 1)])
    vmap = (0, 1, 0, 1)
    amap = tuple(0 if c4.arcs[a].iota % 2 == 0 else 1 for a in range(c4.arc_count))
    m = CoveringMap(c4, k2, vmap, amap)
    problems = verify_covering(m)
    assert problems
    assert any("bijection" in p for p in problems)
    assert not is_covering_brute(c4, k2, vmap, amap)


def test_two_copies_projection():
    m = disjoint_copies_covering(cycle(4))
    assert verify_covering(m) == []
    assert is_double_cover(m)
    assert fiber(m, 0) == [0, 4]


def test_fiber_of_loop_cover():
    _, m = canonical_double_cover(loop_vertex())
    assert fiber(m, 0) == [0, 1]
    with pytest.raises(IndexError):
        fiber(m, 1)


def test_size_mismatch_raises():
    c4 = cycle(4)
    with pytest.raises(ValueError):
        verify_covering(CoveringMap(c4, c4, (0, 1), tuple(range(8))))


def test_is_double_cover_rejects_non_covering():
    c4 = cycle(4)
    with pytest.raises(ValueError):
        is_double_cover(CoveringMap(c4, c4, (0, 0, 0, 0), tuple(range(8))))


@given(small_multigraphs())
def test_cover_properties(g):
    cover, m = canonical_double_cover(g)
    assert validate(cover) == []
    assert verify_covering(m) == []
    assert is_double_cover(m)
    n = g.vertex_count
    assert bipartition(cover) is not None
    # the two copies themselves form a valid bipartition
    side = [0] * n + [1] * n
    assert all(side[arc.iota] != side[arc.tau] for arc in cover.arcs)
    assert not cover.has_half_edges() and not cover.has_loops()
    dg, dc = degrees(g), degrees(cover)
    assert all(dc[v] == dg[v] and dc[v + n] == dg[v] for v in range(n))


def test_cover_connected_iff_not_bipartite():
    graphs = []
    for n in range(1, 5):
        for r in range(1, 5):
            graphs.extend(regular_multigraphs(n, r, halves=True))
    rng = random.Random(3)
    for _ in range(300):
        g = random_multigraph(rng.randint(1, 6), rng.randint(1, 10), rng)
        if is_connected(g):
            graphs.append(g)
    for n in range(1, 7):
        graphs.extend(regular_multigraphs(n, 3, loops=False))
    assert len(graphs) > 1000
    for g in graphs:
        cover, _ = canonical_double_cover(g)
        assert is_connected(cover) == (bipartition(g) is None)


def test_verify_covering_agrees_with_brute_force_on_perturbed_maps():
    rng = random.Random(11)
    checked = 0
    for _ in range(300):
        g = random_multigraph(rng.randint(1, 4), rng.randint(1, 6), rng)
        cover, m = canonical_double_cover(g)
        amap = list(m.arc_map)
        vmap = list(m.vertex_map)
        if rng.random() < 0.7 and amap:
            i, j = rng.randrange(len(amap)), rng.randrange(len(amap))
            amap[i], amap[j] = amap[j], amap[i]
        if rng.random() < 0.3:
            vmap[rng.randrange(len(vmap))] = rng.randrange(g.vertex_count)
        ok = verify_covering(CoveringMap(cover, g, tuple(vmap), tuple(amap))) == []
        assert ok == is_covering_brute(cover, g, vmap, amap)
        checked += 1
    assert checked == 300


@given(regular_graphs(max_n=20))
def test_cover_of_regular_graph_is_regular(g):
    cover, m = canonical_double_cover(g)
    assert set(degrees(cover)) == set(degrees(g))

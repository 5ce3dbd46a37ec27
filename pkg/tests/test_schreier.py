import pytest
from hypothesis import given, settings

from conftest import regular_bipartite_graphs, regular_graphs
from oracles import brute_max_matching
from regschreier.cover import is_double_cover, verify_covering
from regschreier.factorization import two_factorization
from regschreier.fixtures import (
    complete,
    complete_bipartite,
    cycle,
    figure2_left,
    figure2_right,
    half_vertex,
    loop_vertex,
    petersen,
)
from regschreier.graph_core import bipartition, from_records, is_connected, regularity
from regschreier.matching import max_matching_general
from regschreier.schreier import (
    CoverOnly,
    DirectSchreier,
    GroupSignature,
    Letter,
    NotSchreierWithCover,
    PermutationAction,
    PreconditionError,
    SchreierLabeling,
    action_from_labeling,
    classify,
    free,
    inv,
    label_bipartite_involutions,
    label_from_factorization,
    label_regular,
    labeling_to_covering,
    letter_endpoints,
    orbital_graph,
    verify_classification,
    verify_labeling,
)


def test_letters_and_signatures():
    assert free(0).inverse() == free(0, -1)
    assert inv(2).inverse() == inv(2)
    for text in ("a0+", "a3-", "t1"):
        assert str(Letter.parse(text)) == text
    with pytest.raises(ValueError):
        Letter.parse("b0")
    for sig, text in [((1, 0), "F1"), ((1, 1), "F1*Z2"), ((0, 3), "Z2^3"), ((0, 0), "F0"), ((2, 2), "F2*Z2^2")]:
        s = GroupSignature(*sig)
        assert str(s) == text and GroupSignature.parse(text) == s
        assert s.degree == 2 * sig[0] + sig[1]


def test_label_c4_over_f1():
    c4 = cycle(4)
    lab = label_from_factorization(c4, two_factorization(c4), [])
    assert lab.signature == GroupSignature(1, 0)
    assert verify_labeling(c4, lab) == []


def test_label_k4_and_k33():
    lab = label_regular(complete(4), [max_matching_general(complete(4))])
    assert lab.signature == GroupSignature(1, 1)
    assert verify_labeling(complete(4), lab) == []
    k33 = complete_bipartite(3, 3)
    lab = label_bipartite_involutions(k33, bipartition(k33))
    assert lab.signature == GroupSignature(0, 3)
    assert verify_labeling(k33, lab) == []


def test_label_bipartite_involutions_small():
    k2 = from_records(2, [(0, 1)])
    assert label_bipartite_involutions(k2, bipartition(k2)).signature == GroupSignature(0, 1)
    c4 = cycle(4)
    lab = label_bipartite_involutions(c4, bipartition(c4))
    assert lab.signature == GroupSignature(0, 2) and verify_labeling(c4, lab) == []
    with pytest.raises(ValueError):
        label_bipartite_involutions(from_records(3, [(0, 1), (1, 2)]), bipartition(from_records(3, [(0, 1), (1, 2)])))


def test_verify_labeling_duplicate_letter():
    c4 = cycle(4)
    # both arcs at vertex 0 are a0+
    labels = [free(0), free(0, -1)] * 4
    labels[7] = free(0)  # arc 0 <- 3 reversed: 0 -> 3
    problems = verify_labeling(c4, SchreierLabeling(GroupSignature(1, 0), tuple(labels)))
    assert any("duplicate letter" in p for p in problems)


def test_verify_labeling_half_edge_needs_involution():
    problems = verify_labeling(half_vertex(), SchreierLabeling(GroupSignature(1, 0), (free(0),)))
    assert any("half-edge needs involution letter" in p for p in problems)


def test_verify_labeling_equals_covering_check():
    c4 = cycle(4)
    good = label_from_factorization(c4, two_factorization(c4), [])
    assert verify_covering(labeling_to_covering(c4, good)) == []
    labels = list(good.labels)
    labels[0], labels[7] = labels[7], labels[0]
    bad = SchreierLabeling(good.signature, tuple(labels))
    assert verify_labeling(c4, bad) != []
    assert verify_covering(labeling_to_covering(c4, bad)) != []


def test_action_examples():
    c4 = cycle(4)
    lab = label_from_factorization(c4, two_factorization(c4), [])
    act = action_from_labeling(c4, lab)
    (p,) = act.free_gens
    # a single 4-cycle through every vertex
    seen, x = [], 0
    for _ in range(4):
        seen.append(x)
        x = p[x]
    assert x == 0 and sorted(seen) == [0, 1, 2, 3]

    k2 = from_records(2, [(0, 1)])
    act = action_from_labeling(k2, SchreierLabeling(GroupSignature(0, 1), (inv(0), inv(0))))
    assert act.inv_gens == ((1, 0),)
    act = action_from_labeling(half_vertex(), SchreierLabeling(GroupSignature(0, 1), (inv(0),)))
    assert act.inv_gens == ((0,),)


def test_action_rejects_invalid_labeling():
    with pytest.raises(ValueError):
        action_from_labeling(half_vertex(), SchreierLabeling(GroupSignature(1, 0), (free(0),)))


def test_orbital_examples():
    g, lab = orbital_graph(PermutationAction(2, (), ((1, 0),)))
    assert g.vertex_count == 2 and len(g.edges()) == 1 and not g.has_half_edges()
    g, lab = orbital_graph(PermutationAction(1, (), ((0,),)))
    assert g.vertex_count == 1 and g.has_half_edges() and g.arc_count == 1
    g, lab = orbital_graph(PermutationAction(4, ((1, 2, 3, 0),)))
    assert regularity(g) == 2 and is_connected(g) and len(g.edges()) == 4
    assert verify_labeling(g, lab) == []
    # fixed point of a free generator is a genuine loop
    g, lab = orbital_graph(PermutationAction(1, ((0,),)))
    assert g.arc_count == 2 and g.has_loops() and not g.has_half_edges()


def test_orbital_rejects_non_involution():
    with pytest.raises(ValueError):
        orbital_graph(PermutationAction(3, (), ((1, 2, 0),)))
    with pytest.raises(ValueError):
        orbital_graph(PermutationAction(3, ((0, 0, 1),)))


def test_classify_examples():
    r = classify(cycle(4))
    assert isinstance(r, DirectSchreier) and str(r.signature) == "F1"
    r = classify(figure2_left())
    assert isinstance(r, NotSchreierWithCover)
    assert r.certificate.deficiency == 2 and r.cover.source.vertex_count == 32
    assert verify_labeling(r.cover.source, r.cover_labeling) == []
    r = classify(petersen())
    assert isinstance(r, DirectSchreier) and r.signature == GroupSignature(1, 1)
    r = classify(figure2_right())
    assert isinstance(r, CoverOnly)
    assert r.cover.source.vertex_count == 20


def test_classify_preconditions():
    with pytest.raises(PreconditionError):
        classify(from_records(0))
    with pytest.raises(PreconditionError):
        classify(from_records(4, [(0, 1), (2, 3)]))
    with pytest.raises(PreconditionError):
        classify(from_records(3, [(0, 1), (1, 2)]))


def test_classify_degenerate_small_graphs():
    assert isinstance(classify(from_records(1)), DirectSchreier)
    assert isinstance(classify(loop_vertex()), DirectSchreier)
    r = classify(half_vertex())
    assert isinstance(r, CoverOnly) and r.cover.source.vertex_count == 2


def test_odd_bipartite_is_direct():
    r = classify(complete_bipartite(3, 3))
    assert isinstance(r, DirectSchreier) and r.signature == GroupSignature(1, 1)


def _round_trip_ok(g, lab):
    h, lab2 = orbital_graph(action_from_labeling(g, lab))
    return letter_endpoints(g, lab) == letter_endpoints(h, lab2) and h.vertex_count == g.vertex_count


@settings(max_examples=80, deadline=None)
@given(regular_graphs(min_degree=1, max_degree=8, max_n=40))
def test_classify_certificates_hold(g):
    r = classify(g)
    assert verify_classification(g, r) == []
    if isinstance(r, DirectSchreier):
        assert r.signature.degree == regularity(g)
        assert r.signature.involution_count == regularity(g) % 2
        assert _round_trip_ok(g, r.labeling)
    else:
        assert verify_covering(r.cover) == [] and is_double_cover(r.cover)
        assert is_connected(r.cover.source)
        assert _round_trip_ok(r.cover.source, r.cover_labeling)
        if isinstance(r, NotSchreierWithCover):
            assert r.certificate.deficiency > 0
            if g.vertex_count <= 16:
                assert len(r.certificate.matching) == brute_max_matching(g)


@settings(max_examples=30, deadline=None)
@given(regular_bipartite_graphs())
def test_bipartite_involution_labeling(g):
    lab = label_bipartite_involutions(g, bipartition(g))
    assert verify_labeling(g, lab) == []
    assert lab.signature == GroupSignature(0, regularity(g))
    assert _round_trip_ok(g, lab)

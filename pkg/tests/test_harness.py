import pytest

from oracles import brute_edge_connectivity
from orientkit.graph import MixedGraph
from orientkit.harness import (
    CorpusError,
    CorpusSpec,
    default_spec,
    gen_graph,
    gen_nae,
    gen_pairs,
    verify_theorem,
)


def take(spec):
    return list(gen_graph(spec))


def test_lambda4_filter_on_triangles():
    spec = CorpusSpec(count=5, n_range=(3, 3), m_range=(6, 6), seed=7, filter="lambda>=4")
    graphs = take(spec)
    assert all(brute_edge_connectivity(G) >= 4 for G in graphs)
    # on 3 vertices with 6 edges, lambda >= 4 forces the double triangle
    for G in graphs:
        pairs = sorted(tuple(sorted((e.a, e.b))) for e in G.edges)
        assert pairs == [("0", "1")] * 2 + [("0", "2")] * 2 + [("1", "2")] * 2


def test_same_seed_same_stream():
    spec = CorpusSpec(count=20, n_range=(2, 6), m_range=(0, 10), seed=99)
    assert take(spec) == take(spec)
    other = CorpusSpec(count=20, n_range=(2, 6), m_range=(0, 10), seed=100)
    assert take(spec) != take(other)


def test_edgeless_graphs():
    graphs = take(CorpusSpec(count=4, n_range=(2, 2), m_range=(0, 0), seed=1))
    assert all(len(G.vertices) == 2 and not G.edges for G in graphs)


def test_rejection_stats_recorded():
    stats = {}
    list(gen_graph(CorpusSpec(count=10, n_range=(3, 5), m_range=(2, 8), seed=3, filter="lambda>=2"), stats))
    assert stats["accepted"] == 10 and stats["rejected"] > 0


def test_hopeless_filter_aborts():
    spec = CorpusSpec(count=1, n_range=(4, 4), m_range=(1, 2), seed=0, filter="lambda>=4")
    with pytest.raises(CorpusError):
        take(spec)


def test_huoh_filter_pairs():
    from orientkit.tconnect import huoh_predicate

    spec = CorpusSpec(count=5, n_range=(3, 5), m_range=(8, 14), seed=5, filter="huoh")
    for G, T in gen_pairs(spec):
        assert huoh_predicate(G, T)


def test_bad_specs():
    with pytest.raises(ValueError):
        CorpusSpec(count=0, n_range=(2, 3), m_range=(0, 1), seed=0)
    with pytest.raises(ValueError):
        CorpusSpec(count=1, n_range=(5, 3), m_range=(0, 1), seed=0)


def test_nae_instances_use_every_variable():
    for phi in gen_nae(CorpusSpec(count=30, n_range=(3, 8), m_range=(1, 4), seed=2)):
        assert {x for c in phi.clauses for x in c} == set(phi.variables)


def test_bt_divergence_instance():
    M = MixedGraph.from_pairs([("u", "v")], [("u", "v")])
    rep = verify_theorem("bt-divergence", instances=[M])
    assert rep.trials == 1 and len(rep.disagreements) == 1
    _, _, expected, got = rep.disagreements[0]
    assert (expected, got) == ("false", "true")
    assert rep.passed


def test_unknown_is_not_evidence():
    from builders import k5

    rep = verify_theorem("thomassen", instances=[k5()], budget=1)
    assert rep.unknowns and not rep.disagreements and rep.agreements == 0
    assert not rep.passed


def test_report_lines_are_reproducible():
    spec = default_spec("nash-williams-2", 15, seed=11)
    a = verify_theorem("nash-williams-2", spec)
    b = verify_theorem("nash-williams-2", spec)
    assert a.lines() == b.lines()
    assert a.agreements + len(a.disagreements) + len(a.unknowns) == a.trials == 15


def test_parallel_matches_sequential():
    spec = default_spec("theorem8", 12, seed=4)
    seq = verify_theorem("theorem8", spec)
    par = verify_theorem("theorem8", spec, workers=2)
    assert seq.lines() == par.lines()


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify_theorem("pythagoras", default_spec("robbins", 1, 0))


def test_max_n_override():
    spec = default_spec("robbins", 3, seed=0, max_n=4)
    assert spec.n_range == (2, 4)
    assert all(len(G.vertices) <= 4 for G in gen_graph(spec))


@pytest.mark.parametrize("name", ["robbins", "menger", "lemma2", "bt-divergence"])
def test_small_runs_pass(name):
    rep = verify_theorem(name, default_spec(name, 10, seed=1))
    assert rep.passed, rep.to_text()

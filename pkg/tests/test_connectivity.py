import pytest
from hypothesis import assume, given, strategies as st

from builders import c4, digraph, k5, multigraphs, pairs_graph
from oracles import brute_arc_connectivity, brute_edge_connectivity, slow_2T, slow_2vc, slow_strong
from orientkit.connectivity import (
    INF,
    arc_connectivity,
    edge_connectivity,
    internally_disjoint_paths,
    is_2T_connected,
    is_2vc_in,
    is_2vertex_connected,
    is_strongly_connected,
    min_arc_cut,
    min_edge_cut,
    two_paths_from_set,
    two_paths_to_set,
)
from orientkit.graph import GraphError, MixedGraph, double_cycle


def circuit(n):
    names = [chr(ord("a") + i) for i in range(n)]
    return digraph([(names[i], names[(i + 1) % n]) for i in range(n)])


def circulant_k5():
    return digraph([(str(i), str((i + s) % 5)) for i in range(5) for s in (1, 2)])


def test_strong_connectivity_examples():
    assert is_strongly_connected(circuit(3))
    assert not is_strongly_connected(digraph([("u", "v")]))
    assert is_strongly_connected(MixedGraph(["x"]))


def test_strong_rejects_undirected_input():
    with pytest.raises(GraphError):
        is_strongly_connected(pairs_graph([("a", "b")]))


@pytest.mark.parametrize(
    "G, lam",
    [(c4(), 2), (k5(), 4), (double_cycle(3), 4), (pairs_graph([("a", "b")]), 1)],
)
def test_edge_connectivity_examples(G, lam):
    assert edge_connectivity(G) == lam == brute_edge_connectivity(G)


def test_k4_edge_connectivity():
    K4 = pairs_graph([(str(i), str(j)) for i in range(4) for j in range(i + 1, 4)])
    assert edge_connectivity(K4) == 3


def test_edge_connectivity_degenerate():
    assert edge_connectivity(MixedGraph(["solo"])) == INF
    assert min_edge_cut(MixedGraph(["solo"])) is None
    assert edge_connectivity(MixedGraph(["a", "b"])) == 0


def test_arc_connectivity_examples(triangle_pair):
    assert arc_connectivity(circuit(3)) == 1
    assert arc_connectivity(triangle_pair) == 2 == brute_arc_connectivity(triangle_pair)
    sink = digraph([("a", "s"), ("b", "s"), ("a", "b"), ("b", "a")])
    assert arc_connectivity(sink) == 0
    assert arc_connectivity(MixedGraph(["x"])) == INF


@given(multigraphs(n=(1, 7), m=(0, 14)))
def test_edge_connectivity_matches_enumeration(G):
    assert edge_connectivity(G) == brute_edge_connectivity(G)
    cut = min_edge_cut(G)
    if cut is not None:
        assert 0 < len(cut.side) < len(G.vertices)
        assert cut.recount(G) == cut.value == edge_connectivity(G)


@given(multigraphs(n=(1, 7), m=(0, 18), kind="digraph"))
def test_arc_connectivity_matches_enumeration(D):
    assert arc_connectivity(D) == brute_arc_connectivity(D)
    cut = min_arc_cut(D)
    if cut is not None:
        assert 0 < len(cut.side) < len(D.vertices)
        assert cut.recount(D) == cut.value


@given(multigraphs(n=(1, 7), m=(0, 18), kind="digraph"))
def test_strong_matches_dfs(D):
    assert is_strongly_connected(D) == slow_strong(D)


def test_two_vertex_connected_examples(triangle_pair):
    assert is_2vertex_connected(triangle_pair)
    assert not is_2vertex_connected(digraph([("a", "b"), ("b", "a"), ("a", "b")]))
    assert is_2vertex_connected(circulant_k5())
    assert not is_2vertex_connected(circuit(4))


def test_disjoint_paths_examples(triangle_pair):
    assert not internally_disjoint_paths(circuit(3), "a", "b", 2)
    v = internally_disjoint_paths(triangle_pair, "a", "b", 2)
    assert v
    p1, p2 = v.witness.paths
    assert {p1, p2} == {("a", "b"), ("a", "c", "b")}
    assert internally_disjoint_paths(digraph([("u", "v")]), "u", "v", 1)
    with pytest.raises(GraphError):
        internally_disjoint_paths(triangle_pair, "a", "a", 2)


def test_parallel_arcs_count_as_separate_paths():
    D = digraph([("u", "v"), ("u", "v")])
    assert internally_disjoint_paths(D, "u", "v", 2)


@given(multigraphs(n=(3, 7), m=(0, 24), kind="digraph"), st.data())
def test_path_pair_witness_is_valid(D, data):
    u, v = data.draw(st.lists(st.sampled_from(D.vertices), min_size=2, max_size=2, unique=True))
    res = internally_disjoint_paths(D, u, v, 2)
    if not res:
        return
    arcs = {(x.tail, x.head) for x in D.arcs}
    p1, p2 = res.witness.paths
    for p in (p1, p2):
        assert p[0] == u and p[-1] == v
        assert all((p[i], p[i + 1]) in arcs for i in range(len(p) - 1))
        assert len(set(p)) == len(p)
    assert not set(p1[1:-1]) & set(p2[1:-1])


def test_2vc_in_examples(triangle_pair):
    D = circuit(4)
    assert is_2vc_in(D, ["a"])
    assert is_2vc_in(D, [])
    assert not is_2vc_in(D, D.vertices)
    assert is_2vc_in(triangle_pair, triangle_pair.vertices)
    # the whole graph must have at least 3 vertices, not X
    assert not is_2vc_in(digraph([("a", "b"), ("b", "a")]), ["a"])


@given(multigraphs(n=(3, 7), m=(0, 24), kind="digraph"))
def test_menger_deletion_equivalence(D):
    assert is_2vertex_connected(D) == is_2vc_in(D, D.vertices) == slow_2vc(D)


@given(multigraphs(n=(3, 7), m=(4, 26), kind="digraph"), st.data())
def test_two_path_extension(D, data):
    X = data.draw(st.sets(st.sampled_from(D.vertices), min_size=1))
    outside = [v for v in D.vertices if v not in X]
    assume(outside and is_2vc_in(D, X))
    v = data.draw(st.sampled_from(outside))
    if two_paths_to_set(D, v, X) and two_paths_from_set(D, X, v):
        assert is_2vc_in(D, X | {v})


def test_fan_paths_must_end_in_distinct_vertices():
    # both v-paths to X = {x} would have to share x
    D = digraph([("v", "x"), ("v", "m"), ("m", "x")])
    assert not two_paths_to_set(D, "v", {"x"})
    D2 = digraph([("v", "x"), ("v", "y")])
    assert two_paths_to_set(D2, "v", {"x", "y"})
    assert not two_paths_from_set(D2, {"x", "y"}, "v")


def test_2T_examples(triangle_pair):
    assert is_2T_connected(triangle_pair, triangle_pair.vertices)
    assert is_2T_connected(triangle_pair, [])
    D = digraph([("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"), ("c", "a")])
    res = is_2T_connected(D, [])
    assert not res and res.witness.value < 2


@given(multigraphs(n=(2, 6), m=(0, 18), kind="digraph"), st.data())
def test_2T_matches_oracle(D, data):
    T = data.draw(st.sets(st.sampled_from(D.vertices)))
    assert bool(is_2T_connected(D, T)) == slow_2T(D, T)

"""Cuts, flows and vertex-connectivity on small multigraphs."""

from orientkit import (
    MixedGraph,
    double_cycle,
    edge_connectivity,
    internally_disjoint_paths,
    is_2vc_in,
    is_2vertex_connected,
    min_arc_cut,
    min_edge_cut,
)

# %% Edge connectivity of a few undirected graphs
c4 = MixedGraph.from_pairs([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
k4 = MixedGraph.from_pairs([(str(i), str(j)) for i in range(4) for j in range(i + 1, 4)])
for name, G in [("C4", c4), ("K4", k4), ("double triangle", double_cycle(3))]:
    cut = min_edge_cut(G)
    print(f"{name:16s} lambda={edge_connectivity(G)}  smallest side={sorted(cut.side)}")

# %% A directed circuit has one entering arc per cut
circuit = MixedGraph.from_pairs(arcs=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
print("circuit arc cut:", min_arc_cut(circuit))

# %% Two opposite triangles: every ordered pair has two internally disjoint paths
tri = MixedGraph.from_pairs(
    arcs=[("a", "b"), ("b", "c"), ("c", "a"), ("b", "a"), ("c", "b"), ("a", "c")]
)
verdict = internally_disjoint_paths(tri, "a", "b", 2)
print("paths a->b:", verdict.witness.paths)
print("2-vertex-connected (deletion form):", is_2vertex_connected(tri))
print("2-vertex-connected (path form):    ", bool(is_2vc_in(tri, tri.vertices)))

# the circuit has only one a->c path
print("circuit 2VC in {a, c}:", bool(is_2vc_in(circuit, {"a", "c"})))

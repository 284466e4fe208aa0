"""Orienting undirected and mixed graphs.

Robbins' construction handles strong connectivity directly; stronger
targets go through the exhaustive search, and the classical predicates
say in advance what the search should find.
"""

from orientkit import (
    MixedGraph,
    TargetSpec,
    apply_orientation,
    bt_predicate,
    exact_orientation_search,
    nash_williams_predicate,
    robbins_orientation,
    thomassen_predicate,
)

k5 = MixedGraph.from_pairs([(str(i), str(j)) for i in range(5) for j in range(i + 1, 5)])

# %% Robbins: DFS tree down, back edges up
O, cut = robbins_orientation(k5)
D = apply_orientation(k5, O)
print("robbins on K5:", [(x.tail, x.head) for x in D.arcs])

O, cut = robbins_orientation(MixedGraph.from_pairs([("a", "b"), ("b", "c")]))
print("path a-b-c has a bridge:", O, cut)

# %% Search for stronger targets and compare with the predicates
for kind in ("strong", "two-arc", "two-vertex"):
    out = exact_orientation_search(k5, TargetSpec(kind))
    print(f"K5 {kind:10s}: {out.status} after {out.nodes} nodes")
print("nash-williams k=2:", nash_williams_predicate(k5, 2))
print("thomassen:", bool(thomassen_predicate(k5)))

# %% Mixed graphs: the literal cut condition rejects a graph that is orientable
M = MixedGraph.from_pairs(edges=[("u", "v")], arcs=[("u", "v")])
res = exact_orientation_search(M, TargetSpec("strong"))
v = bt_predicate(M)
print("arc u->v plus edge u-v:")
print("  search:", res.status, dict(res.orientation.forward))
print("  cut condition:", bool(v), "violated at", sorted(v.witness))

"""2T-connected orientations by blowing vertices up into double cycles."""

from orientkit import (
    MixedGraph,
    apply_orientation,
    build_blowup,
    claim1_check,
    construct_2T_orientation,
    huoh_predicate,
    is_2T_connected,
)

# two doubled triangles glued at v
pairs = []
for a, b in [("v", "a"), ("a", "b"), ("b", "v"), ("v", "c"), ("c", "d"), ("d", "v")]:
    pairs += [(a, b), (a, b)]
G = MixedGraph.from_pairs(pairs)

for T in [set(), {"a", "c"}, {"v"}]:
    print(f"T={sorted(T)}: predicate {bool(huoh_predicate(G, T))}")

# %% The blow-up behind the construction
H, bmap = build_blowup(G, {"a", "b"})
print(f"H has {len(H.vertices)} vertices and {len(H.edges)} edges")
print(bmap.to_text(), end="")
print("H 4-edge-connected and 2-edge-connected after any deletion:", bool(claim1_check(H)))

# %% Running the pipeline
out = construct_2T_orientation(G, {"a", "b"})
D = apply_orientation(G, out.orientation)
print("found:", out.found, "checked:", bool(is_2T_connected(D, {"a", "b"})))
print("cut vertex in T:", construct_2T_orientation(G, {"v"}).witness)

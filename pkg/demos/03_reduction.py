"""From a monotone NAE-3SAT instance to a gadget graph and back."""

from orientkit import (
    FANO,
    NaeInstance,
    TargetSpec,
    apply_orientation,
    assignment_to_orientation,
    count_lemma1_orientations,
    exact_orientation_search,
    is_2vertex_connected,
    lemma1_check,
    nae_brute_force,
    orientation_to_assignment,
    parse_mnae,
    reduce,
)

phi = parse_mnae("c one clause\np mnae 3 1\n1 2 3 0\n")
art = reduce(phi)
G = art.graph
print(f"gadget: {len(G.vertices)} vertices, {len(G.arcs)} arcs, {len(G.edges)} edges")
print("cycle of x1:", art.cycle[1])

# %% Embedding assignments
for bits in ("100", "111"):
    f = {x: b == "1" for x, b in zip(phi.variables, bits)}
    O = assignment_to_orientation(art, f)
    rep = lemma1_check(art, O)
    D = apply_orientation(G, O)
    print(bits, "feasible" if phi.is_feasible(f) else "infeasible",
          "conditions", (rep.holds1, rep.holds2, rep.holds3),
          "2VC", is_2vertex_connected(D))

# %% Lifting a searched orientation
out = exact_orientation_search(G, TargetSpec("two-vertex"))
print("search:", out.status, "->", orientation_to_assignment(art, out.orientation))
print("orientations meeting all conditions:", count_lemma1_orientations(art, verify=True))

# %% Fano plane: no 2-colouring, so no valid orientation either
print("Fano brute force:", nae_brute_force(FANO))
print("Fano enumeration:", count_lemma1_orientations(reduce(FANO)))
two = NaeInstance(4, ((1, 2, 3), (2, 3, 4)))
print("two clauses:", count_lemma1_orientations(reduce(two), verify=True), "valid orientations")

import pytest
from hypothesis import given, settings

from oracles import all_orientations, slow_2vc
from orientkit.graph import GraphError, Orientation, apply_orientation
from orientkit.nae import FANO, NaeInstance, assignments
from orientkit.reduction import (
    assignment_to_orientation,
    count_lemma1_orientations,
    enumerate_lemma1_orientations,
    lemma1_check,
    orientation_to_assignment,
    reduce,
)
from orientkit.search import TargetSpec, exact_orientation_search
from test_nae import instances

ONE = NaeInstance(3, ((1, 2, 3),))


def census(phi):
    """Element counts read straight off the construction rules."""
    pairs = sum(len(c) for c in phi.clauses)
    mu = {x: sum(x in c for c in phi.clauses) for x in range(1, phi.num_vars + 1)}
    return (
        3 + len(phi.clauses) + 4 * pairs,
        6 + 2 * len(phi.clauses) + 6 * pairs,
        pairs + sum(3 * m + 1 for m in mu.values()),
    )


def sizes(art):
    G = art.graph
    return len(G.vertices), len(G.arcs), len(G.edges)


def test_single_clause_counts():
    assert sizes(reduce(ONE)) == (16, 26, 15) == census(ONE)


def test_fano_counts():
    assert sizes(reduce(FANO)) == (94, 146, 91) == census(FANO)


@given(instances())
def test_counts_fuzzed(phi):
    used = {x for c in phi.clauses for x in c}
    if used != set(phi.variables):
        with pytest.raises(ValueError):
            reduce(phi)
        return
    assert sizes(reduce(phi)) == census(phi)


def test_single_clause_cycle_layout():
    art = reduce(ONE)
    t, u, w, y = art.gadget[(1, 0)]
    assert art.cycle[1] == ("r", y, w, t)
    ends = [art.graph.edge(e) for e in art.cycle_edges[1]]
    assert [(e.a, e.b) for e in ends] == [("r", y), (y, w), (w, t), (t, "r")]


def test_vertex_names():
    art = reduce(ONE)
    assert art.z == ("z_1",)
    assert art.gadget[(2, 0)] == ("t_2_1", "u_2_1", "w_2_1", "y_2_1")


@given(instances())
def test_degree_signatures(phi):
    if {x for c in phi.clauses for x in c} != set(phi.variables):
        return
    art = reduce(phi)
    G = art.graph
    for t, _, w, y in art.gadget.values():
        for v in (t, w, y):
            assert (G.d_in([v]), G.d_out([v]), len(G.incident_edges(v))) == (1, 1, 2)
    for z in art.z:
        assert (G.d_in([z]), G.d_out([z]), len(G.incident_edges(z))) == (1, 1, 3)


def test_unused_variable_rejected():
    with pytest.raises(ValueError):
        reduce(NaeInstance(4, ((1, 2, 3),)))


def test_empty_instance_has_one_orientation():
    art = reduce(NaeInstance(0, ()))
    assert count_lemma1_orientations(art) == 1


# -- condition checks and conversions -------------------------------------------


def test_feasible_assignment_gives_2vc_orientation():
    art = reduce(ONE)
    O = assignment_to_orientation(art, {1: True, 2: False, 3: False})
    assert lemma1_check(art, O).holds
    assert slow_2vc(apply_orientation(art.graph, O))


def test_constant_assignment_fails_condition_three():
    art = reduce(ONE)
    O = assignment_to_orientation(art, {1: True, 2: True, 3: True})
    rep = lemma1_check(art, O)
    assert rep.holds1 and rep.holds2 and not rep.holds3
    assert not slow_2vc(apply_orientation(art.graph, O))


def test_fano_all_false_fails_every_clause():
    art = reduce(FANO)
    O = assignment_to_orientation(art, {x: False for x in FANO.variables})
    rep = lemma1_check(art, O)
    assert sorted(s for c, s, _ in rep.violations if c == 3) == list(range(1, 8))


def test_flipped_cycle_edge_names_variable():
    art = reduce(ONE)
    O = assignment_to_orientation(art, {1: True, 2: False, 3: False})
    O = O.flipped(art.cycle_edges[2][1])
    rep = lemma1_check(art, O)
    assert not rep.holds1
    assert [s for c, s, _ in rep.violations if c == 1] == [2]
    with pytest.raises(ValueError):
        orientation_to_assignment(art, O)


def test_all_forward_with_edges_into_z():
    art = reduce(ONE)
    fwd = {e.id: True for e in art.graph.edges}
    rep = lemma1_check(art, Orientation(fwd))
    assert rep.holds1 and rep.holds2 and not rep.holds3


def test_check_rejects_foreign_orientation():
    art = reduce(ONE)
    with pytest.raises(GraphError):
        lemma1_check(art, Orientation({0: True}))


def test_partial_assignment_rejected():
    with pytest.raises(ValueError):
        assignment_to_orientation(reduce(ONE), {1: True})


@settings(max_examples=25)
@given(instances(max_vars=5, max_clauses=3))
def test_round_trip(phi):
    if {x for c in phi.clauses for x in c} != set(phi.variables):
        return
    art = reduce(phi)
    for f in assignments(phi.variables):
        O = assignment_to_orientation(art, f)
        rep = lemma1_check(art, O)
        assert rep.holds1 and rep.holds2
        assert rep.holds3 == phi.is_feasible(f)
        assert orientation_to_assignment(art, O) == f


def test_single_clause_enumeration_matches_brute_force():
    art = reduce(ONE)
    found = {
        tuple(sorted(O.forward.items()))
        for O in all_orientations(art.graph)
        if slow_2vc(apply_orientation(art.graph, O))
    }
    passing = {
        tuple(sorted(O.forward.items()))
        for O in all_orientations(art.graph)
        if lemma1_check(art, O).holds
    }
    listed = {tuple(sorted(O.forward.items())) for O in enumerate_lemma1_orientations(art, verify=True)}
    assert len(found) == 6
    assert found == passing == listed


def test_search_result_lifts_to_feasible_assignment():
    art = reduce(ONE)
    out = exact_orientation_search(art.graph, TargetSpec("two-vertex"))
    assert out.found
    assert ONE.is_feasible(orientation_to_assignment(art, out.orientation))


def test_fano_enumeration_empty():
    assert count_lemma1_orientations(reduce(FANO)) == 0


def test_two_clause_enumeration_is_verified():
    phi = NaeInstance(4, ((1, 2, 3), (2, 3, 4)))
    art = reduce(phi)
    n = count_lemma1_orientations(art, verify=True)
    assert n == sum(phi.is_feasible(f) for f in assignments(phi.variables))


@pytest.mark.slow
def test_fano_gadget_has_no_2vc_orientation():
    out = exact_orientation_search(reduce(FANO).graph, TargetSpec("two-vertex"))
    assert out.status == "none"

"""Mixed-graph gadget encoding an MNAE3SAT instance.

The gadget graph has a 2-vertex-connected orientation exactly when the
instance has a not-all-equal assignment. Besides building it, this module
checks the three local conditions that characterise its 2-vertex-connected
orientations and translates between assignments and orientations.

Layout, for clause ``C`` (1-based index ``c``) and variable ``x`` in ``C``:

* hub ``p, q, r`` with all six arcs between them;
* clause vertex ``z_c`` with arcs ``p -> z_c -> q``;
* ``t_x_c, u_x_c, w_x_c, y_x_c`` with arcs ``p->t, t->u, u->y, y->u, u->w, w->q``
  and an edge ``u - z_c``;
* for each variable an undirected cycle through ``r`` and, per clause
  containing ``x``, the vertices ``y, w, t`` in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping

from .connectivity import is_2vertex_connected
from .graph import Arc, Edge, GraphError, MixedGraph, Orientation, Vertex, apply_orientation
from .nae import MAX_BRUTE_FORCE_VARS, Assignment, NaeInstance

Pair = tuple[int, int]  # (variable, 0-based clause index)


@dataclass(frozen=True)
class ReductionArtifact:
    instance: NaeInstance
    graph: MixedGraph
    z: tuple[Vertex, ...]
    gadget: Mapping[Pair, tuple[Vertex, Vertex, Vertex, Vertex]]  # (t, u, w, y)
    cycle: Mapping[int, tuple[Vertex, ...]]
    z_edge: Mapping[Pair, int]
    cycle_edges: Mapping[int, tuple[int, ...]]
    p: Vertex = "p"
    q: Vertex = "q"
    r: Vertex = "r"

    @property
    def pairs(self) -> list[Pair]:
        return list(self.gadget)


def reduce(phi: NaeInstance) -> ReductionArtifact:
    unused = [x for x in phi.variables if not phi.occurrences(x)]
    if unused:
        raise ValueError(f"variable {unused[0]} occurs in no clause")

    verts: list[Vertex] = ["p", "q", "r"]
    arcs: list[tuple[Vertex, Vertex]] = [
        ("p", "q"), ("q", "p"), ("p", "r"), ("r", "p"), ("q", "r"), ("r", "q"),
    ]
    z = tuple(f"z_{c + 1}" for c in range(len(phi.clauses)))
    verts += z
    for zc in z:
        arcs += [("p", zc), (zc, "q")]

    gadget: dict[Pair, tuple[Vertex, Vertex, Vertex, Vertex]] = {}
    for c, clause in enumerate(phi.clauses):
        for x in clause:
            t, u, w, y = (f"{s}_{x}_{c + 1}" for s in "tuwy")
            gadget[(x, c)] = (t, u, w, y)
            verts += [t, u, w, y]
            arcs += [("p", t), (t, u), (u, y), (y, u), (u, w), (w, "q")]

    edges: list[tuple[Vertex, Vertex]] = []
    z_edge: dict[Pair, int] = {}
    for (x, c), (_, u, _, _) in gadget.items():
        z_edge[(x, c)] = len(edges)
        edges.append((u, z[c]))  # forward means u -> z

    cycle: dict[int, tuple[Vertex, ...]] = {}
    cycle_edges: dict[int, tuple[int, ...]] = {}
    for x in phi.variables:
        seq = ["r"]
        for c in phi.occurrences(x):
            t, _, w, y = gadget[(x, c)]
            seq += [y, w, t]
        cycle[x] = tuple(seq)
        ids = []
        for i, a in enumerate(seq):
            ids.append(len(edges))
            edges.append((a, seq[(i + 1) % len(seq)]))
        cycle_edges[x] = tuple(ids)

    graph = MixedGraph(
        verts,
        (Edge(i, a, b) for i, (a, b) in enumerate(edges)),
        (Arc(i, a, b) for i, (a, b) in enumerate(arcs)),
    )
    return ReductionArtifact(phi, graph, z, gadget, cycle, z_edge, cycle_edges)


@dataclass(frozen=True)
class Lemma1Report:
    """Verdicts on the three conditions; each violation is ``(condition, subject, detail)``."""

    violations: tuple[tuple[int, object, str], ...] = field(default_factory=tuple)

    def _holds(self, i: int) -> bool:
        return all(v[0] != i for v in self.violations)

    @property
    def holds1(self) -> bool:
        return self._holds(1)

    @property
    def holds2(self) -> bool:
        return self._holds(2)

    @property
    def holds3(self) -> bool:
        return self._holds(3)

    @property
    def holds(self) -> bool:
        return not self.violations


def _check_orientation_domain(art: ReductionArtifact, O: Orientation) -> None:
    ids = {e.id for e in art.graph.edges}
    if set(O.forward) != ids:
        raise GraphError("orientation does not match the gadget graph's edges")


def cycle_direction(art: ReductionArtifact, O: Orientation, x: int) -> bool | None:
    """``True`` for the forward circuit, ``False`` for the reverse, ``None`` if mixed."""
    dirs = {O.forward[e] for e in art.cycle_edges[x]}
    return dirs.pop() if len(dirs) == 1 else None


def lemma1_check(art: ReductionArtifact, O: Orientation) -> Lemma1Report:
    _check_orientation_domain(art, O)
    bad: list[tuple[int, object, str]] = []
    phi = art.instance
    direction = {x: cycle_direction(art, O, x) for x in phi.variables}
    for x in phi.variables:
        if direction[x] is None:
            bad.append((1, x, "cycle is neither forward nor backward circuit"))
    for (x, c), eid in art.z_edge.items():
        to_z = O.forward[eid]
        if to_z != (direction[x] is True):
            bad.append(
                (2, (x, c + 1), f"edge u-z points {'to' if to_z else 'away from'} z "
                 f"but cycle is {'forward' if direction[x] else 'not forward'}")
            )
    for c, clause in enumerate(phi.clauses):
        outs = [O.forward[art.z_edge[(x, c)]] for x in clause]
        if all(outs):
            bad.append((3, c + 1, "no edge leaves z"))
        elif not any(outs):
            bad.append((3, c + 1, "no edge enters z"))
    return Lemma1Report(tuple(sorted(bad, key=lambda v: v[0])))


def assignment_to_orientation(art: ReductionArtifact, f: Assignment) -> Orientation:
    phi = art.instance
    missing = [x for x in phi.variables if x not in f]
    if missing:
        raise ValueError(f"assignment misses variable {missing[0]}")
    fwd: dict[int, bool] = {}
    for x in phi.variables:
        for eid in art.cycle_edges[x]:
            fwd[eid] = bool(f[x])
    for (x, _), eid in art.z_edge.items():
        fwd[eid] = bool(f[x])
    return Orientation(fwd)


def orientation_to_assignment(art: ReductionArtifact, O: Orientation) -> dict[int, bool]:
    _check_orientation_domain(art, O)
    f = {}
    for x in art.instance.variables:
        d = cycle_direction(art, O, x)
        if d is None:
            raise ValueError(f"cycle of variable {x} is not a circuit; no assignment")
        f[x] = d
    return f


def enumerate_lemma1_orientations(
    art: ReductionArtifact, verify: bool = False
) -> Iterator[Orientation]:
    """Orientations meeting all three conditions, one per cycle-direction choice.

    Conditions (1) and (2) fix every edge once the cycle directions are
    chosen, so this walks the ``2**|X|`` choices and keeps those meeting
    condition (3). With ``verify`` each yielded orientation is also checked
    to be 2-vertex-connected.
    """
    xs = art.instance.variables
    if len(xs) > MAX_BRUTE_FORCE_VARS:
        raise ValueError(f"enumeration is limited to {MAX_BRUTE_FORCE_VARS} variables")
    for bits in product((True, False), repeat=len(xs)):
        O = assignment_to_orientation(art, dict(zip(xs, bits)))
        if not lemma1_check(art, O).holds3:
            continue
        if verify and not is_2vertex_connected(apply_orientation(art.graph, O)):
            raise AssertionError("orientation meets all conditions but is not 2-vertex-connected")
        yield O


def count_lemma1_orientations(art: ReductionArtifact, verify: bool = False) -> int:
    return sum(1 for _ in enumerate_lemma1_orientations(art, verify))

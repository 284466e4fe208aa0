"""2T-connected orientations of undirected graphs.

A digraph is 2T-connected when it is 2-arc-connected and stays strongly
connected after deleting any single vertex of ``T``. A graph has such an
orientation iff it is 4-edge-connected and 2-edge-connected after deleting
any vertex of ``T``. The constructive route implemented here blows every
vertex outside ``T`` up into a double cycle, finds a 2-vertex-connected
orientation of the result and contracts the cycles back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal

from .connectivity import Verdict, is_2T_connected
from .graph import (
    GraphError,
    MixedGraph,
    Orientation,
    Vertex,
    apply_orientation,
    blow_up,
    contract,
    double_cycle,
)
from .search import (
    DEFAULT_BUDGET,
    SearchOutcome,
    TargetSpec,
    _thomassen_on,
    exact_orientation_search,
    thomassen_predicate,
)

__all__ = [
    "BlowupMap",
    "TOutcome",
    "build_blowup",
    "claim1_check",
    "construct_2T_orientation",
    "huoh_predicate",
    "is_2T_connected",
]


@dataclass(frozen=True)
class BlowupMap:
    cycle_of: dict[Vertex, tuple[Vertex, ...]] = field(default_factory=dict)
    # (edge id, original end) -> vertex of that end's double cycle
    reattach: dict[tuple[int, Vertex], Vertex] = field(default_factory=dict)
    size_of: dict[Vertex, int] = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [f"cycle {v} " + " ".join(c) for v, c in self.cycle_of.items()]
        lines += [f"reattach {eid} {v} {w}" for (eid, v), w in self.reattach.items()]
        return "\n".join(lines) + ("\n" if lines else "")


def _check_T(G: MixedGraph, T: Iterable[Vertex]) -> list[Vertex]:
    T = set(T)
    missing = T - set(G.vertices)
    if missing:
        raise GraphError(f"T contains non-vertices {sorted(missing)!r}")
    return [v for v in G.vertices if v in T]


def huoh_predicate(G: MixedGraph, T: Iterable[Vertex]) -> Verdict:
    """4-edge-connected, and 2-edge-connected after deleting any vertex of ``T``."""
    return _thomassen_on(G, _check_T(G, T))


def claim1_check(H: MixedGraph) -> Verdict:
    return thomassen_predicate(H)


def _fresh(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def build_blowup(G: MixedGraph, T: Iterable[Vertex]) -> tuple[MixedGraph, BlowupMap]:
    """Blow each vertex outside ``T`` up into a double cycle.

    The cycle for ``v`` has ``max(3, ceil(deg(v) / 2))`` vertices. The edges
    at ``v``, sorted by id, are dealt two per cycle vertex in cycle order.
    """
    if G.arcs:
        raise GraphError("expected an undirected graph")
    Tset = set(_check_T(G, T))
    H = G
    bmap = BlowupMap()
    taken = set(G.vertices)
    for v in G.vertices:
        if v in Tset:
            continue
        incident = sorted(G.incident_edges(v), key=lambda e: e.id)
        size = max(3, math.ceil(len(incident) / 2))
        names = [_fresh(f"{v}.{i}", taken) for i in range(size)]
        taken.update(names)
        attach = {e.id: names[i // 2] for i, e in enumerate(incident)}
        H = blow_up(H, v, double_cycle(size, names), attach)
        bmap.cycle_of[v] = tuple(names)
        bmap.size_of[v] = size
        for eid, w in attach.items():
            bmap.reattach[(eid, v)] = w
    return H, bmap


@dataclass(frozen=True)
class TOutcome:
    status: Literal["found", "none", "unknown"]
    orientation: Orientation | None = None
    witness: object = None
    H: MixedGraph | None = None
    blowup: BlowupMap | None = None
    search: SearchOutcome | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def contract_blowup(DH: MixedGraph, bmap: BlowupMap) -> MixedGraph:
    D = DH
    for v, cyc in bmap.cycle_of.items():
        D = contract(D, cyc, v)
    return D


def construct_2T_orientation(
    G: MixedGraph, T: Iterable[Vertex], budget: int = DEFAULT_BUDGET
) -> TOutcome:
    """Build a 2T-connected orientation of ``G`` or explain why none exists.

    The returned orientation is re-verified before it is handed out.
    """
    T = _check_T(G, T)
    verdict = huoh_predicate(G, T)
    if not verdict:
        return TOutcome("none", witness=verdict.witness)

    H, bmap = build_blowup(G, T)
    if len(H.vertices) >= 3:
        res = exact_orientation_search(H, "two-vertex", budget)
    else:
        # T = V on fewer than 3 vertices: nothing is 2-vertex-connected there
        res = exact_orientation_search(G, TargetSpec("two-T", frozenset(T)), budget)
    if res.status == "unknown":
        return TOutcome("unknown", H=H, blowup=bmap, search=res)
    if res.status == "none":
        return TOutcome(
            "none", witness="H has no 2-vertex-connected orientation",
            H=H, blowup=bmap, search=res,
        )

    D = contract_blowup(apply_orientation(H, res.orientation), bmap)
    if not is_2T_connected(D, T):
        raise AssertionError("contraction lost 2T-connectivity")
    fwd = {}
    for x in D.arcs:
        if x.edge is not None:
            fwd[x.edge] = x.tail == G.edge(x.edge).a
    O = Orientation(fwd)
    if len(O) != len(G.edges) or not is_2T_connected(apply_orientation(G, O), T):
        raise AssertionError("pipeline produced an invalid orientation")
    return TOutcome("found", O, H=H, blowup=bmap, search=res)

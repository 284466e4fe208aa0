"""Constructing and deciding connectivity-constrained orientations.

:func:`exact_orientation_search` is a depth-first search over edge
directions. Each undecided edge is kept in the working digraph as a pair
of opposite arcs; since fixing a direction only ever removes arcs and all
targets are monotone under adding arcs, a node whose relaxed digraph
already fails the target can be cut off.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable, Literal

from .connectivity import (
    Verdict,
    arc_connectivity,
    edge_connectivity,
    is_2T_connected,
    is_2vertex_connected,
    is_strongly_connected,
    min_edge_cut,
    reach,
    strong_mask,
    CutWitness,
)
from .graph import GraphError, MixedGraph, Orientation, Vertex, apply_orientation

TargetKind = Literal["strong", "two-arc", "two-vertex", "two-T"]
DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class TargetSpec:
    kind: TargetKind
    T: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in ("strong", "two-arc", "two-vertex", "two-T"):
            raise ValueError(f"unknown target {self.kind!r}")
        object.__setattr__(self, "T", frozenset(self.T))
        if self.T and self.kind != "two-T":
            raise ValueError("T is only meaningful for the two-T target")

    def holds(self, D: MixedGraph) -> bool:
        """Check the target on a complete digraph via the flow/deletion predicates."""
        if self.kind == "strong":
            return is_strongly_connected(D)
        if self.kind == "two-arc":
            return arc_connectivity(D) >= 2
        if self.kind == "two-vertex":
            return is_2vertex_connected(D)
        return bool(is_2T_connected(D, self.T))


@dataclass(frozen=True)
class SearchOutcome:
    status: Literal["found", "none", "unknown"]
    orientation: Orientation | None
    nodes: int
    budget: int

    @property
    def found(self) -> bool:
        return self.status == "found"


class _BudgetExceeded(Exception):
    pass


class _Relaxation:
    """Arc multiplicities of the relaxed digraph, with bitmask mirrors."""

    def __init__(self, M: MixedGraph, target: TargetSpec):
        idx = M.index
        n = self.n = len(M.vertices)
        self.full = (1 << n) - 1
        self.cnt = [[0] * n for _ in range(n)]
        self.succ = [0] * n
        self.pred = [0] * n
        self.indeg = [0] * n
        self.outdeg = [0] * n
        for x in M.arcs:
            self._add(idx[x.tail], idx[x.head])
        for e in M.edges:
            self._add(idx[e.a], idx[e.b])
            self._add(idx[e.b], idx[e.a])
        self.kind = target.kind
        self.T = [idx[v] for v in M.vertices if v in target.T]
        self.need = 1 if target.kind == "strong" else 2

    def _add(self, t: int, h: int) -> None:
        c = self.cnt[t]
        if c[h] == 0:
            self.succ[t] |= 1 << h
            self.pred[h] |= 1 << t
        c[h] += 1
        self.outdeg[t] += 1
        self.indeg[h] += 1

    def _remove(self, t: int, h: int) -> None:
        c = self.cnt[t]
        c[h] -= 1
        if c[h] == 0:
            self.succ[t] &= ~(1 << h)
            self.pred[h] &= ~(1 << t)
        self.outdeg[t] -= 1
        self.indeg[h] -= 1

    def degrees_ok(self, v: int) -> bool:
        return self.indeg[v] >= self.need and self.outdeg[v] >= self.need

    def _two_arc(self) -> bool:
        succ, full, cnt = self.succ, self.full, self.cnt
        if not strong_mask(succ, self.pred, full):
            return False
        for t in range(self.n):
            row = succ[t]
            bits = row
            while bits:
                low = bits & -bits
                bits ^= low
                h = low.bit_length() - 1
                if cnt[t][h] == 1:
                    succ[t] = row & ~low
                    ok = reach(succ, t, full) & low
                    succ[t] = row
                    if not ok:
                        return False
        return True

    def _deletions_ok(self, vs: Iterable[int]) -> bool:
        succ, pred, full = self.succ, self.pred, self.full
        return all(strong_mask(succ, pred, full & ~(1 << v)) for v in vs)

    def ok(self) -> bool:
        if self.kind == "strong":
            return strong_mask(self.succ, self.pred, self.full)
        if self.kind == "two-arc":
            return self._two_arc()
        if self.kind == "two-vertex":
            return self.n >= 3 and self._deletions_ok(range(self.n))
        return self._two_arc() and self._deletions_ok(self.T)


def _edge_order(M: MixedGraph) -> list:
    deg = {v: 0 for v in M.vertices}
    for e in M.edges:
        deg[e.a] += 1
        deg[e.b] += 1
    for x in M.arcs:
        deg[x.tail] += 1
        deg[x.head] += 1
    return sorted(M.edges, key=lambda e: (-(deg[e.a] + deg[e.b]), e.id))


def exact_orientation_search(
    M: MixedGraph,
    target: TargetSpec | TargetKind,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
) -> SearchOutcome:
    """Find an orientation of ``M`` meeting ``target`` or prove none exists.

    ``budget`` bounds the number of search-tree nodes; when it runs out the
    status is ``"unknown"``. With ``prune=False`` every leaf is enumerated
    (used to validate the pruning rules).
    """
    if isinstance(target, str):
        target = TargetSpec(target)
    if budget <= 0:
        raise ValueError("budget must be positive")
    missing = target.T - set(M.vertices)
    if missing:
        raise GraphError(f"T contains non-vertices {sorted(missing)!r}")

    rel = _Relaxation(M, target)
    idx = M.index
    order = [(e.id, idx[e.a], idx[e.b]) for e in _edge_order(M)]
    choice: dict[int, bool] = {}
    nodes = 0

    def leaf_ok() -> bool:
        O = Orientation(dict(choice))
        return target.holds(apply_orientation(M, O))

    def fix(eid: int, a: int, b: int, fwd: bool) -> bool:
        # keep a->b for forward, so drop the opposite copy
        t, h = (b, a) if fwd else (a, b)
        rel._remove(t, h)
        choice[eid] = fwd
        return rel.degrees_ok(a) and rel.degrees_ok(b) and rel.ok()

    def unfix(eid: int, a: int, b: int) -> None:
        t, h = (b, a) if choice.pop(eid) else (a, b)
        rel._add(t, h)

    def propagate(trail: list) -> bool:
        """Force edges one of whose directions already breaks the relaxation."""
        changed = True
        while changed:
            changed = False
            for eid, a, b in order:
                if eid in choice:
                    continue
                ok = []
                for fwd in (True, False):
                    ok.append(fix(eid, a, b, fwd))
                    unfix(eid, a, b)
                if ok[0] and ok[1]:
                    continue
                if not (ok[0] or ok[1]):
                    return False
                fix(eid, a, b, ok[0])
                trail.append((eid, a, b))
                changed = True
        return True

    def descend() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        trail: list = []
        if prune and not propagate(trail):
            for step in reversed(trail):
                unfix(*step)
            return False
        nxt = next((o for o in order if o[0] not in choice), None)
        if nxt is None:
            if leaf_ok():
                return True
        else:
            eid, a, b = nxt
            for fwd in (True, False):
                if (fix(eid, a, b, fwd) or not prune) and descend():
                    return True
                unfix(eid, a, b)
        for step in reversed(trail):
            unfix(*step)
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, len(order) + 1000))
    try:
        if prune and not rel.ok():
            return SearchOutcome("none", None, 1, budget)
        found = descend()
    except _BudgetExceeded:
        return SearchOutcome("unknown", None, nodes - 1, budget)
    finally:
        sys.setrecursionlimit(limit)
    if found:
        return SearchOutcome("found", Orientation(dict(choice)), nodes, budget)
    return SearchOutcome("none", None, nodes, budget)


def robbins_orientation(G: MixedGraph) -> tuple[Orientation | None, CutWitness | None]:
    """Strongly connected orientation of a 2-edge-connected graph.

    Orients a depth-first search tree away from the root and every other
    edge from descendant to ancestor. Returns ``(None, cut)`` with a cut of
    fewer than two edges when the graph is not 2-edge-connected.
    """
    cut = min_edge_cut(G)
    if cut is not None and cut.value < 2:
        return None, cut
    n = len(G.vertices)
    if n == 0:
        return Orientation({}), None
    idx = G.index
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in G.edges:
        adj[idx[e.a]].append((e.id, idx[e.b]))
        adj[idx[e.b]].append((e.id, idx[e.a]))
    fwd: dict[int, bool] = {}
    visited = [False] * n
    visited[0] = True
    stack = [(0, iter(adj[0]))]
    while stack:
        x, it = stack[-1]
        for eid, y in it:
            if eid in fwd:
                continue
            # tree edge: parent -> child; otherwise y is an ancestor of x
            fwd[eid] = G.vertices[x] == G.edge(eid).a
            if not visited[y]:
                visited[y] = True
                stack.append((y, iter(adj[y])))
                break
        else:
            stack.pop()
    return Orientation(fwd), None


BT_MAX_VERTICES = 20


def bt_predicate(M: MixedGraph) -> Verdict:
    """Evaluate ``d_in(X) + d_E(X)/2 >= 1`` over all nonempty proper ``X``.

    Literal cut condition for strongly orientable mixed graphs. This is a
    diagnostic; it rejects some mixed graphs that do have strong
    orientations (an arc u->v plus an edge u-v). Returns the first violating
    set in subset-bitmask order as the witness.
    """
    n = len(M.vertices)
    if n > BT_MAX_VERTICES:
        raise ValueError(f"bt_predicate enumerates subsets; |V| <= {BT_MAX_VERTICES}")
    idx = M.index
    arcs = [(1 << idx[x.tail], 1 << idx[x.head]) for x in M.arcs]
    edges = [(1 << idx[e.a], 1 << idx[e.b]) for e in M.edges]
    for X in range(1, (1 << n) - 1):
        entering = sum(1 for t, h in arcs if h & X and not t & X)
        crossing = sum(1 for a, b in edges if bool(a & X) != bool(b & X))
        if 2 * entering + crossing < 2:
            side = frozenset(M.vertices[i] for i in range(n) if X >> i & 1)
            return Verdict(False, side)
    return Verdict(True)


def nash_williams_predicate(G: MixedGraph, k: int) -> bool:
    """Edge-connectivity at least ``2k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return edge_connectivity(G) >= 2 * k


def thomassen_predicate(G: MixedGraph) -> Verdict:
    """4-edge-connected and 2-edge-connected after deleting any vertex.

    The witness of a failure is a cut of fewer than 4 edges or the vertex
    whose deletion breaks 2-edge-connectivity.
    """
    return _thomassen_on(G, G.vertices)


def _thomassen_on(G: MixedGraph, T: Iterable[Vertex]) -> Verdict:
    cut = min_edge_cut(G)
    if cut is not None and cut.value < 4:
        return Verdict(False, cut)
    for v in T:
        if edge_connectivity(G.remove_vertices([v])) < 2:
            return Verdict(False, v)
    return Verdict(True)

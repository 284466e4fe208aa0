"""Edge, arc and vertex connectivity of (di)graphs.

Two independent routes are kept on purpose. Reachability questions
(strong connectivity, deletion-based 2-vertex-connectivity) run on integer
bitmasks; cut values and disjoint-path counts run on a unit-capacity
maximum-flow network. The test suite plays them against each other.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Literal

from .graph import GraphError, MixedGraph, Vertex

INF = math.inf


@dataclass(frozen=True)
class CutWitness:
    """A vertex set ``side`` whose boundary carries ``value`` links.

    For ``kind == "edge-cut"`` the value is the number of edges with exactly
    one end in ``side``; for ``"arc-in-cut"`` it is the number of arcs
    entering ``side``.
    """

    side: frozenset
    kind: Literal["edge-cut", "arc-in-cut"]
    value: int

    def recount(self, G: MixedGraph) -> int:
        if self.kind == "edge-cut":
            return G.d_edges(self.side)
        return G.d_in(self.side)


@dataclass(frozen=True)
class PathPair:
    paths: tuple[tuple[Vertex, ...], tuple[Vertex, ...]]


@dataclass(frozen=True)
class Verdict:
    """Boolean answer with an optional explanation of a failure (or success)."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def _require_digraph(D: MixedGraph) -> None:
    if D.edges:
        raise GraphError("expected a digraph (no undirected edges)")


def _require_graph(G: MixedGraph) -> None:
    if G.arcs:
        raise GraphError("expected an undirected graph (no arcs)")


# -- bitmask reachability ---------------------------------------------------


def adjacency_masks(D: MixedGraph) -> tuple[list[int], list[int]]:
    """Successor and predecessor bitmasks indexed by vertex position."""
    idx = D.index
    n = len(D.vertices)
    succ = [0] * n
    pred = [0] * n
    for x in D.arcs:
        t, h = idx[x.tail], idx[x.head]
        succ[t] |= 1 << h
        pred[h] |= 1 << t
    return succ, pred


def reach(adj: list[int], start: int, alive: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def strong_mask(succ: list[int], pred: list[int], alive: int) -> bool:
    """Is the subdigraph induced by ``alive`` strongly connected?"""
    if alive & (alive - 1) == 0:
        return True
    root = (alive & -alive).bit_length() - 1
    return reach(succ, root, alive) == alive and reach(pred, root, alive) == alive


def two_vertex_mask(succ: list[int], pred: list[int], n: int) -> bool:
    if n < 3:
        return False
    full = (1 << n) - 1
    return all(strong_mask(succ, pred, full & ~(1 << v)) for v in range(n))


# -- unit-capacity maximum flow ----------------------------------------------


class FlowNetwork:
    """Residual network with paired forward/backward entries (``i ^ 1``)."""

    def __init__(self, n: int):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int = 1) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _augment(self, s: int, t: int) -> bool:
        via = [-1] * self.n
        via[s] = -2
        q = deque([s])
        while q:
            x = q.popleft()
            for i in self.adj[x]:
                y = self.to[i]
                if self.cap[i] > 0 and via[y] == -1:
                    via[y] = i
                    if y == t:
                        q.clear()
                        break
                    q.append(y)
        if via[t] == -1:
            return False
        y = t
        while y != s:
            i = via[y]
            self.cap[i] -= 1
            self.cap[i ^ 1] += 1
            y = self.to[i ^ 1]
        return True

    def max_flow(self, s: int, t: int, limit: float = INF) -> int:
        flow = 0
        while flow < limit and self._augment(s, t):
            flow += 1
        return flow

    def residual_reach(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for i in self.adj[x]:
                y = self.to[i]
                if self.cap[i] > 0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen


def _arc_network(D: MixedGraph, both_ways: bool = False) -> FlowNetwork:
    idx = D.index
    net = FlowNetwork(len(D.vertices))
    if both_ways:
        for e in D.edges:
            net.add(idx[e.a], idx[e.b])
            net.add(idx[e.b], idx[e.a])
    else:
        for x in D.arcs:
            net.add(idx[x.tail], idx[x.head])
    return net


# -- public predicates --------------------------------------------------------


def is_strongly_connected(D: MixedGraph) -> bool:
    _require_digraph(D)
    succ, pred = adjacency_masks(D)
    return strong_mask(succ, pred, (1 << len(D.vertices)) - 1)


def min_edge_cut(G: MixedGraph) -> CutWitness | None:
    """A minimum edge cut, or ``None`` for graphs with fewer than 2 vertices."""
    _require_graph(G)
    n = len(G.vertices)
    if n < 2:
        return None
    best: CutWitness | None = None
    for v in range(1, n):
        net = _arc_network(G, both_ways=True)
        f = net.max_flow(0, v, limit=best.value if best else INF)
        if best is None or f < best.value:
            side = frozenset(G.vertices[i] for i in net.residual_reach(0))
            best = CutWitness(side, "edge-cut", f)
            if f == 0:
                break
    return best


def edge_connectivity(G: MixedGraph) -> int | float:
    """Minimum number of edges leaving a nonempty proper vertex subset.

    ``INF`` when there is no such subset (fewer than 2 vertices).
    """
    cut = min_edge_cut(G)
    return INF if cut is None else cut.value


def min_arc_cut(D: MixedGraph) -> CutWitness | None:
    _require_digraph(D)
    n = len(D.vertices)
    if n < 2:
        return None
    best: CutWitness | None = None
    for v in range(1, n):
        for s, t in ((0, v), (v, 0)):
            net = _arc_network(D)
            f = net.max_flow(s, t, limit=best.value if best else INF)
            if best is None or f < best.value:
                S = net.residual_reach(s)
                side = frozenset(w for i, w in enumerate(D.vertices) if i not in S)
                best = CutWitness(side, "arc-in-cut", f)
                if f == 0:
                    return best
    return best


def arc_connectivity(D: MixedGraph) -> int | float:
    """Minimum number of arcs entering a nonempty proper vertex subset."""
    cut = min_arc_cut(D)
    return INF if cut is None else cut.value


def is_2vertex_connected(D: MixedGraph) -> bool:
    """At least 3 vertices and strongly connected after deleting any one."""
    _require_digraph(D)
    succ, pred = adjacency_masks(D)
    return two_vertex_mask(succ, pred, len(D.vertices))


def _split_network(D: MixedGraph, keep: set[int], big: int) -> FlowNetwork:
    # vertex i -> in-copy 2i, out-copy 2i+1
    idx = D.index
    n = len(D.vertices)
    net = FlowNetwork(2 * n + 2)
    for i in range(n):
        net.add(2 * i, 2 * i + 1, big if i in keep else 1)
    for x in D.arcs:
        net.add(2 * idx[x.tail] + 1, 2 * idx[x.head])
    return net


def _trace_paths(net: FlowNetwork, s: int, t: int, k: int, D: MixedGraph) -> list[tuple]:
    """Read ``k`` flow paths from ``s`` to ``t`` off a split network."""
    used = {i for i in range(0, len(net.to), 2) if net.cap[i ^ 1] > 0}
    paths = []
    for _ in range(k):
        node, seq = s, [D.vertices[s // 2]]
        while node != t:
            if node < 2 * len(D.vertices) and node % 2 == 0:
                seq.append(D.vertices[node // 2])
            for i in net.adj[node]:
                if i in used and i % 2 == 0:
                    used.discard(i)
                    node = net.to[i]
                    break
            else:  # pragma: no cover - flow conservation guarantees a way on
                raise RuntimeError("broken flow decomposition")
        seq.append(D.vertices[t // 2])
        paths.append(tuple(seq))
    return paths


def internally_disjoint_paths(D: MixedGraph, u: Vertex, v: Vertex, k: int) -> Verdict:
    """Are there ``k`` pairwise internally disjoint directed u-v paths?

    Parallel u->v arcs count as separate paths. For ``k == 2`` a positive
    verdict carries a :class:`PathPair`.
    """
    _require_digraph(D)
    if u == v:
        raise GraphError("endpoints must differ")
    idx = D.index
    iu, iv = idx[u], idx[v]
    net = _split_network(D, {iu, iv}, big=k)
    s, t = 2 * iu + 1, 2 * iv
    f = net.max_flow(s, t, limit=k)
    if f < k:
        return Verdict(False)
    if k == 2:
        paths = _trace_paths(net, s, t, 2, D)
        return Verdict(True, PathPair((paths[0], paths[1])))
    return Verdict(True)


def is_2vc_in(D: MixedGraph, X: Iterable[Vertex]) -> bool:
    """At least 3 vertices and two internally disjoint paths for every ordered pair in ``X``."""
    _require_digraph(D)
    X = list(dict.fromkeys(X))
    for x in X:
        if x not in D.index:
            raise GraphError(f"{x!r} is not a vertex")
    if len(D.vertices) < 3:
        return False
    return all(
        internally_disjoint_paths(D, a, b, 2) for a in X for b in X if a != b
    )


def _fan(D: MixedGraph, v: Vertex, X: Iterable[Vertex], into_set: bool) -> bool:
    idx = D.index
    n = len(D.vertices)
    iv = idx[v]
    net = _split_network(D, {iv}, big=2)
    sink = 2 * n
    # route through the x_in -> x_out link so each x carries one path
    for x in X:
        if into_set:
            net.add(2 * idx[x] + 1, sink)
        else:
            net.add(sink, 2 * idx[x])
    if into_set:
        return net.max_flow(2 * iv + 1, sink, limit=2) >= 2
    return net.max_flow(sink, 2 * iv, limit=2) >= 2


def two_paths_to_set(D: MixedGraph, v: Vertex, X: Iterable[Vertex]) -> bool:
    """Two (v, X)-paths whose vertex sets meet only in ``v``."""
    _require_digraph(D)
    return _fan(D, v, X, into_set=True)


def two_paths_from_set(D: MixedGraph, X: Iterable[Vertex], v: Vertex) -> bool:
    """Two (X, v)-paths whose vertex sets meet only in ``v``."""
    _require_digraph(D)
    return _fan(D, v, X, into_set=False)


def is_2T_connected(D: MixedGraph, T: Iterable[Vertex]) -> Verdict:
    """2-arc-connected, and strongly connected after deleting any vertex of ``T``.

    The witness of a failure is an arc cut of value below 2 or a vertex of
    ``T``.
    """
    _require_digraph(D)
    T = list(T)
    for v in T:
        if v not in D.index:
            raise GraphError(f"{v!r} is not a vertex")
    cut = min_arc_cut(D)
    if cut is not None and cut.value < 2:
        return Verdict(False, cut)
    succ, pred = adjacency_masks(D)
    full = (1 << len(D.vertices)) - 1
    for v in T:
        if not strong_mask(succ, pred, full & ~(1 << D.index[v])):
            return Verdict(False, v)
    return Verdict(True)

"""Immutable mixed-graph model and the structural transformations on it.

A :class:`MixedGraph` holds an ordered vertex tuple plus two multisets of
links: undirected :class:`Edge` objects and directed :class:`Arc` objects.
Graphs (no arcs) and digraphs (no edges) are the same type.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

Vertex = str


@dataclass(frozen=True)
class Edge:
    id: int
    a: Vertex
    b: Vertex

    def other(self, v: Vertex) -> Vertex:
        return self.b if v == self.a else self.a


@dataclass(frozen=True)
class Arc:
    id: int
    tail: Vertex
    head: Vertex
    # id of the edge this arc was oriented from, if any
    edge: int | None = None


class GraphError(ValueError):
    pass


class MixedGraph:
    """Vertices plus a multiset of edges and a multiset of arcs.

    Loops are rejected. Parallel links are allowed. Link ids must be unique
    within their kind.
    """

    __slots__ = ("vertices", "edges", "arcs", "__dict__")

    def __init__(
        self,
        vertices: Iterable[Vertex] = (),
        edges: Iterable[Edge] = (),
        arcs: Iterable[Arc] = (),
    ):
        verts: list[Vertex] = []
        seen: set[Vertex] = set()
        for v in vertices:
            if v in seen:
                raise GraphError(f"duplicate vertex {v!r}")
            seen.add(v)
            verts.append(v)
        edges = tuple(edges)
        arcs = tuple(arcs)
        for e in edges:
            for end in (e.a, e.b):
                if end not in seen:
                    raise GraphError(f"edge {e.id} uses unknown vertex {end!r}")
            if e.a == e.b:
                raise GraphError(f"edge {e.id} is a loop at {e.a!r}")
        for x in arcs:
            for end in (x.tail, x.head):
                if end not in seen:
                    raise GraphError(f"arc {x.id} uses unknown vertex {end!r}")
            if x.tail == x.head:
                raise GraphError(f"arc {x.id} is a loop at {x.tail!r}")
        if len({e.id for e in edges}) != len(edges):
            raise GraphError("duplicate edge id")
        if len({x.id for x in arcs}) != len(arcs):
            raise GraphError("duplicate arc id")
        self.vertices: tuple[Vertex, ...] = tuple(verts)
        self.edges: tuple[Edge, ...] = edges
        self.arcs: tuple[Arc, ...] = arcs

    @classmethod
    def from_pairs(
        cls,
        edges: Iterable[tuple[Vertex, Vertex]] = (),
        arcs: Iterable[tuple[Vertex, Vertex]] = (),
        vertices: Iterable[Vertex] = (),
    ) -> "MixedGraph":
        """Build a graph from endpoint pairs, numbering links from 0.

        Vertices are declared in ``vertices`` order, then in order of first
        use by an edge, then by an arc.
        """
        edges = list(edges)
        arcs = list(arcs)
        order = dict.fromkeys(vertices)
        for u, v in edges + arcs:
            order.setdefault(u)
            order.setdefault(v)
        return cls(
            order,
            (Edge(i, u, v) for i, (u, v) in enumerate(edges)),
            (Arc(i, u, v) for i, (u, v) in enumerate(arcs)),
        )

    def __repr__(self) -> str:
        return (
            f"MixedGraph(|V|={len(self.vertices)}, |E|={len(self.edges)}, "
            f"|A|={len(self.arcs)})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (self.vertices, self.edges, self.arcs) == (
            other.vertices,
            other.edges,
            other.arcs,
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges, self.arcs))

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _edge_by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    def edge(self, edge_id: int) -> Edge:
        return self._edge_by_id[edge_id]

    @property
    def is_graph(self) -> bool:
        return not self.arcs

    @property
    def is_digraph(self) -> bool:
        return not self.edges

    def __contains__(self, v: Hashable) -> bool:
        return v in self.index

    def degree(self, v: Vertex) -> int:
        """Number of links (edges and arcs) incident to ``v``."""
        return sum(v in (e.a, e.b) for e in self.edges) + sum(
            v in (x.tail, x.head) for x in self.arcs
        )

    def incident_edges(self, v: Vertex) -> list[Edge]:
        return [e for e in self.edges if v in (e.a, e.b)]

    def d_in(self, X: Iterable[Vertex]) -> int:
        """Arcs with tail outside ``X`` and head inside."""
        X = set(X)
        return sum(x.head in X and x.tail not in X for x in self.arcs)

    def d_out(self, X: Iterable[Vertex]) -> int:
        X = set(X)
        return sum(x.tail in X and x.head not in X for x in self.arcs)

    def d_edges(self, X: Iterable[Vertex]) -> int:
        """Edges with exactly one end in ``X``."""
        X = set(X)
        return sum((e.a in X) != (e.b in X) for e in self.edges)

    def remove_vertices(self, S: Iterable[Vertex]) -> "MixedGraph":
        S = set(S)
        return MixedGraph(
            (v for v in self.vertices if v not in S),
            (e for e in self.edges if e.a not in S and e.b not in S),
            (x for x in self.arcs if x.tail not in S and x.head not in S),
        )

    def without_edges(self, edge_ids: Iterable[int]) -> "MixedGraph":
        drop = set(edge_ids)
        return MixedGraph(
            self.vertices, (e for e in self.edges if e.id not in drop), self.arcs
        )

    def underlying(self) -> "MixedGraph":
        """Undirected graph with every arc turned into an edge (ids shifted after edges)."""
        base = max((e.id for e in self.edges), default=-1) + 1
        return MixedGraph(
            self.vertices,
            self.edges
            + tuple(Edge(base + i, x.tail, x.head) for i, x in enumerate(self.arcs)),
        )


Graph = MixedGraph
Digraph = MixedGraph


@dataclass(frozen=True)
class Orientation:
    """Direction for every edge: ``True`` means ``a -> b`` as stored."""

    forward: Mapping[int, bool]

    @classmethod
    def from_arcs(
        cls, G: MixedGraph, directed: Iterable[tuple[int, Vertex, Vertex]]
    ) -> "Orientation":
        """Build from ``(edge_id, tail, head)`` triples."""
        fwd: dict[int, bool] = {}
        for eid, u, v in directed:
            if eid in fwd:
                raise GraphError(f"edge {eid} oriented twice")
            try:
                e = G.edge(eid)
            except KeyError:
                raise GraphError(f"no edge with id {eid}") from None
            if (u, v) == (e.a, e.b):
                fwd[eid] = True
            elif (u, v) == (e.b, e.a):
                fwd[eid] = False
            else:
                raise GraphError(f"edge {eid} does not join {u!r} and {v!r}")
        return cls(fwd)

    def __len__(self) -> int:
        return len(self.forward)

    def arc_of(self, e: Edge) -> tuple[Vertex, Vertex]:
        return (e.a, e.b) if self.forward[e.id] else (e.b, e.a)

    def flipped(self, edge_id: int) -> "Orientation":
        fwd = dict(self.forward)
        fwd[edge_id] = not fwd[edge_id]
        return Orientation(fwd)


def apply_orientation(M: MixedGraph, O: Orientation) -> MixedGraph:
    """Turn every edge of ``M`` into an arc according to ``O``.

    Original arcs keep their ids. The new arcs get ids after the largest
    existing arc id and remember their edge in :attr:`Arc.edge`.
    """
    missing = [e.id for e in M.edges if e.id not in O.forward]
    if missing:
        raise GraphError(f"orientation misses edge {missing[0]}")
    base = max((x.id for x in M.arcs), default=-1) + 1
    new = []
    for i, e in enumerate(M.edges):
        u, v = O.arc_of(e)
        new.append(Arc(base + i, u, v, e.id))
    return MixedGraph(M.vertices, (), M.arcs + tuple(new))


def contract(D: MixedGraph, S: Iterable[Vertex], label: Vertex) -> MixedGraph:
    """Merge the vertex set ``S`` into a single vertex ``label``.

    Links with one end in ``S`` are redirected to ``label`` and keep their
    ids; links inside ``S`` disappear. ``label`` takes the position of the
    first member of ``S`` in vertex order.
    """
    S = set(S)
    if not S:
        raise GraphError("cannot contract an empty set")
    unknown = S - set(D.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)!r}")
    if label in D.index and label not in S:
        raise GraphError(f"label {label!r} collides with a surviving vertex")

    def m(v: Vertex) -> Vertex:
        return label if v in S else v

    verts: list[Vertex] = []
    for v in D.vertices:
        if v not in S:
            verts.append(v)
        elif label not in verts:
            verts.append(label)
    edges = [
        Edge(e.id, m(e.a), m(e.b)) for e in D.edges if not (e.a in S and e.b in S)
    ]
    arcs = [
        Arc(x.id, m(x.tail), m(x.head), x.edge)
        for x in D.arcs
        if not (x.tail in S and x.head in S)
    ]
    return MixedGraph(verts, edges, arcs)


def blow_up(
    G: MixedGraph, v: Vertex, H: MixedGraph, attach: Mapping[int, Vertex]
) -> MixedGraph:
    """Replace ``v`` by ``H``, moving each edge ``wv`` to ``w attach[e]``.

    Reattached edges keep their ids; the edges of ``H`` are renumbered after
    the largest edge id of ``G``.
    """
    if v not in G.index:
        raise GraphError(f"{v!r} is not a vertex")
    if not (G.is_graph and H.is_graph):
        raise GraphError("blow-up is defined for undirected graphs")
    clash = (set(G.vertices) - {v}) & set(H.vertices)
    if clash:
        raise GraphError(f"H shares vertices with G: {sorted(clash)!r}")
    incident = G.incident_edges(v)
    for e in incident:
        if e.id not in attach:
            raise GraphError(f"attach misses incident edge {e.id}")
        if attach[e.id] not in H.index:
            raise GraphError(f"attach target {attach[e.id]!r} not in H")

    verts: list[Vertex] = []
    for x in G.vertices:
        verts.extend(H.vertices if x == v else (x,))
    edges = []
    for e in G.edges:
        if e.a == v:
            e = Edge(e.id, attach[e.id], e.b)
        elif e.b == v:
            e = Edge(e.id, e.a, attach[e.id])
        edges.append(e)
    base = max((e.id for e in G.edges), default=-1) + 1
    edges.extend(Edge(base + i, e.a, e.b) for i, e in enumerate(H.edges))
    return MixedGraph(verts, edges)


def double_cycle(k: int, names: Sequence[Vertex] | None = None) -> MixedGraph:
    """Cycle on ``k`` vertices with every edge duplicated."""
    if k < 2:
        raise GraphError("a double cycle needs at least 2 vertices")
    names = list(names) if names is not None else [f"c{i}" for i in range(k)]
    if len(names) != k:
        raise GraphError("need exactly k names")
    pairs = []
    for i in range(k):
        u, w = names[i], names[(i + 1) % k]
        pairs += [(u, w), (u, w)]
    return MixedGraph.from_pairs(pairs, vertices=names)

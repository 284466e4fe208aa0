"""Line-oriented text formats.

``.mg`` mixed graphs::

    # comment
    v NAME        optional declaration, fixes vertex order
    e U V         undirected edge; ids count the e-lines from 0
    a U V         arc U -> V; ids count the a-lines from 0

``.or`` orientations: ``o EDGEID U V`` orients edge EDGEID as U -> V.

``.map`` reduction sidecar: ``z <clause> <vertex>``,
``gadget <var> <clause> <t> <u> <w> <y>``, ``cycle <var> <v1> <v2> ...``
(clauses numbered from 1).
"""

from __future__ import annotations

from .graph import Arc, Edge, MixedGraph, Orientation
from .nae import NaeInstance
from .reduction import ReductionArtifact


class FormatError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_mg(text: str) -> MixedGraph:
    verts: dict[str, None] = {}
    edges: list[Edge] = []
    arcs: list[Arc] = []
    for lineno, tok in _lines(text):
        kind, args = tok[0], tok[1:]
        if kind == "v" and len(args) == 1:
            verts.setdefault(args[0])
        elif kind in ("e", "a") and len(args) == 2:
            u, v = args
            if u == v:
                raise FormatError(f"line {lineno}: loop at {u!r}")
            verts.setdefault(u)
            verts.setdefault(v)
            if kind == "e":
                edges.append(Edge(len(edges), u, v))
            else:
                arcs.append(Arc(len(arcs), u, v))
        else:
            raise FormatError(f"line {lineno}: cannot parse {' '.join(tok)!r}")
    return MixedGraph(verts, edges, arcs)


def _contiguous(ids: list[int], what: str) -> None:
    if ids != list(range(len(ids))):
        raise FormatError(f"{what} ids must be 0..k-1 to be written positionally")


def format_mg(G: MixedGraph) -> str:
    edges = sorted(G.edges, key=lambda e: e.id)
    arcs = sorted(G.arcs, key=lambda x: x.id)
    _contiguous([e.id for e in edges], "edge")
    _contiguous([x.id for x in arcs], "arc")
    out = [f"v {v}" for v in G.vertices]
    out += [f"e {e.a} {e.b}" for e in edges]
    out += [f"a {x.tail} {x.head}" for x in arcs]
    return "\n".join(out) + "\n"


def parse_or(text: str, G: MixedGraph) -> Orientation:
    triples = []
    for lineno, tok in _lines(text):
        if tok[0] != "o" or len(tok) != 4:
            raise FormatError(f"line {lineno}: expected 'o EDGEID U V'")
        try:
            eid = int(tok[1])
        except ValueError:
            raise FormatError(f"line {lineno}: bad edge id {tok[1]!r}") from None
        triples.append((eid, tok[2], tok[3]))
    try:
        O = Orientation.from_arcs(G, triples)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    missing = [e.id for e in G.edges if e.id not in O.forward]
    if missing:
        raise FormatError(f"edge {missing[0]} is not oriented")
    return O


def format_or(G: MixedGraph, O: Orientation) -> str:
    lines = []
    for e in sorted(G.edges, key=lambda e: e.id):
        u, v = O.arc_of(e)
        lines.append(f"o {e.id} {u} {v}")
    return "\n".join(lines) + ("\n" if lines else "")


def format_reduction_map(art: ReductionArtifact) -> str:
    lines = [f"z {c + 1} {z}" for c, z in enumerate(art.z)]
    lines += [
        f"gadget {x} {c + 1} " + " ".join(verts) for (x, c), verts in art.gadget.items()
    ]
    lines += [f"cycle {x} " + " ".join(seq) for x, seq in art.cycle.items()]
    return "\n".join(lines) + "\n"


def parse_reduction_map(text: str, G: MixedGraph) -> ReductionArtifact:
    """Rebuild the artifact of a gadget graph from its sidecar map."""
    z: dict[int, str] = {}
    gadget: dict[tuple[int, int], tuple[str, str, str, str]] = {}
    cycle: dict[int, tuple[str, ...]] = {}
    try:
        for lineno, tok in _lines(text):
            if tok[0] == "z" and len(tok) == 3:
                z[int(tok[1]) - 1] = tok[2]
            elif tok[0] == "gadget" and len(tok) == 7:
                gadget[(int(tok[1]), int(tok[2]) - 1)] = tuple(tok[3:])
            elif tok[0] == "cycle" and len(tok) >= 3:
                cycle[int(tok[1])] = tuple(tok[2:])
            else:
                raise FormatError(f"line {lineno}: cannot parse {' '.join(tok)!r}")
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if sorted(z) != list(range(len(z))):
        raise FormatError("clause indices must be 1..m")
    members: dict[int, list[int]] = {c: [] for c in range(len(z))}
    for x, c in gadget:
        if c not in members:
            raise FormatError(f"gadget refers to unknown clause {c + 1}")
        members[c].append(x)
    phi = NaeInstance(max(cycle, default=0), tuple(tuple(members[c]) for c in sorted(members)))

    by_ends: dict[tuple[str, str], list[int]] = {}
    for e in G.edges:
        by_ends.setdefault((e.a, e.b), []).append(e.id)

    def stored(a: str, b: str) -> int:
        ids = by_ends.get((a, b), [])
        if len(ids) != 1:
            raise FormatError(f"expected exactly one edge stored as {a} {b}")
        return ids[0]

    z_edge = {(x, c): stored(gadget[(x, c)][1], z[c]) for (x, c) in gadget}
    cycle_edges = {
        x: tuple(stored(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))
        for x, seq in cycle.items()
    }
    return ReductionArtifact(
        phi, G, tuple(z[c] for c in range(len(z))), gadget, cycle, z_edge, cycle_edges
    )

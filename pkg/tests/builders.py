"""Graph builders and hypothesis strategies shared by the tests."""

from hypothesis import strategies as st

from orientkit.graph import MixedGraph


@st.composite
def multigraphs(draw, n=(2, 6), m=(0, 12), kind="graph"):
    """Loop-free multigraphs on vertices '0'..'n-1'."""
    size = draw(st.integers(*n))
    names = [str(i) for i in range(size)]
    pairs = st.tuples(st.sampled_from(names), st.sampled_from(names)).filter(
        lambda p: p[0] != p[1]
    )
    links = draw(st.lists(pairs, min_size=m[0], max_size=m[1]))
    if kind == "graph":
        return MixedGraph.from_pairs(links, vertices=names)
    if kind == "digraph":
        return MixedGraph.from_pairs(arcs=links, vertices=names)
    directed = draw(st.lists(st.booleans(), min_size=len(links), max_size=len(links)))
    return MixedGraph.from_pairs(
        [p for p, d in zip(links, directed) if not d],
        [p for p, d in zip(links, directed) if d],
        vertices=names,
    )


def pairs_graph(pairs, vertices=()):
    return MixedGraph.from_pairs(pairs, vertices=vertices)


def digraph(pairs, vertices=()):
    return MixedGraph.from_pairs(arcs=pairs, vertices=vertices)


def k5():
    return pairs_graph([(str(i), str(j)) for i in range(5) for j in range(i + 1, 5)])


def c4():
    return pairs_graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])

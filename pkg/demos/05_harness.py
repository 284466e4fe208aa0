"""Seeded theorem checks.

Each run compares a predicate with an exact search on a random corpus;
the machine-readable lines are identical for the same seed.
"""

from orientkit.harness import CorpusSpec, default_spec, gen_graph, verify_theorem

spec = CorpusSpec(count=3, n_range=(3, 3), m_range=(6, 6), seed=7, filter="lambda>=4")
for G in gen_graph(spec):
    print(sorted((e.a, e.b) for e in G.edges))

for name, trials in [("robbins", 50), ("thomassen", 30), ("theorem8", 30), ("bt-divergence", 40)]:
    rep = verify_theorem(name, default_spec(name, trials, seed=1))
    print(rep.to_text(), end="")

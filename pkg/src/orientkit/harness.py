"""Seeded corpora and the theorem-verification harness.

Each theorem check pairs a closed-form predicate with a constructive or
exhaustive route and counts agreements over a random corpus. Reports are a
pure function of ``(theorem, corpus spec, budget)``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Literal

from .connectivity import (
    edge_connectivity,
    is_2vc_in,
    is_2vertex_connected,
    is_strongly_connected,
)
from .formats import format_mg
from .graph import MixedGraph, apply_orientation
from .nae import NaeInstance, nae_brute_force
from .reduction import (
    assignment_to_orientation,
    count_lemma1_orientations,
    orientation_to_assignment,
    reduce,
)
from .search import (
    DEFAULT_BUDGET,
    bt_predicate,
    exact_orientation_search,
    nash_williams_predicate,
    robbins_orientation,
    thomassen_predicate,
)
from .tconnect import (
    build_blowup,
    claim1_check,
    construct_2T_orientation,
    huoh_predicate,
    is_2T_connected,
)

Filter = Literal["none", "connected", "lambda>=2", "lambda>=4", "thomassen", "huoh"]
MAX_CONSECUTIVE_REJECTIONS = 10_000  # acceptance rate below 1e-4 aborts


class CorpusError(RuntimeError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    count: int
    n_range: tuple[int, int]
    m_range: tuple[int, int]
    seed: int
    filter: Filter = "none"
    kind: Literal["graph", "digraph", "mixed"] = "graph"

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        for lo, hi in (self.n_range, self.m_range):
            if lo > hi or lo < 0:
                raise ValueError(f"bad range {(lo, hi)}")


_FILTERS: dict[str, Callable[[MixedGraph], bool]] = {
    "none": lambda G: True,
    "connected": lambda G: edge_connectivity(G) >= 1,
    "lambda>=2": lambda G: edge_connectivity(G) >= 2,
    "lambda>=4": lambda G: edge_connectivity(G) >= 4,
    "thomassen": lambda G: bool(thomassen_predicate(G)),
}


def _random_graph(rng: random.Random, spec: CorpusSpec) -> MixedGraph:
    n = rng.randint(*spec.n_range)
    m = rng.randint(*spec.m_range) if n >= 2 else 0
    names = [str(i) for i in range(n)]
    edges, arcs = [], []
    for _ in range(m):
        u, v = rng.sample(names, 2)
        if spec.kind == "digraph" or (spec.kind == "mixed" and rng.random() < 0.5):
            arcs.append((u, v))
        else:
            edges.append((u, v))
    return MixedGraph.from_pairs(edges, arcs, vertices=names)


def _half_policy(rng: random.Random, G: MixedGraph) -> frozenset:
    return frozenset(v for v in G.vertices if rng.random() < 0.5)


def gen_pairs(spec: CorpusSpec, stats: dict | None = None) -> Iterator[tuple[MixedGraph, frozenset]]:
    """Graphs with a vertex set ``T`` drawn by the one-half policy.

    ``T`` is drawn right after its graph from the same seeded stream, so
    the ``huoh`` filter can act on the pair. Rejection counts are written to
    ``stats`` when given.
    """
    rng = random.Random(spec.seed)
    stats = {} if stats is None else stats
    stats.update(accepted=0, rejected=0)
    streak = 0
    while stats["accepted"] < spec.count:
        G = _random_graph(rng, spec)
        T = _half_policy(rng, G)
        if spec.filter == "huoh":
            keep = bool(huoh_predicate(G, T))
        else:
            keep = _FILTERS[spec.filter](G)
        if keep:
            stats["accepted"] += 1
            streak = 0
            yield G, T
        else:
            stats["rejected"] += 1
            streak += 1
            if streak >= MAX_CONSECUTIVE_REJECTIONS:
                raise CorpusError(
                    f"filter {spec.filter!r} rejected {streak} graphs in a row "
                    f"(n in {spec.n_range}, m in {spec.m_range}); widen the ranges"
                )


def gen_graph(spec: CorpusSpec, stats: dict | None = None) -> Iterator[MixedGraph]:
    for G, _ in gen_pairs(spec, stats):
        yield G


def gen_nae(spec: CorpusSpec) -> Iterator[NaeInstance]:
    """Random instances; ``n_range`` bounds the variables, ``m_range`` the clauses.

    Unused variables are dropped and the rest renumbered, so every variable
    of an emitted instance occurs in some clause.
    """
    rng = random.Random(spec.seed)
    made = 0
    while made < spec.count:
        n = max(3, rng.randint(*spec.n_range))
        m = rng.randint(max(1, spec.m_range[0]), max(1, spec.m_range[1]))
        raw = [tuple(rng.sample(range(1, n + 1), 3)) for _ in range(m)]
        used = sorted({x for c in raw for x in c})
        ren = {x: i + 1 for i, x in enumerate(used)}
        yield NaeInstance(len(used), tuple(tuple(ren[x] for x in c) for c in raw))
        made += 1


@dataclass
class TrialReport:
    theorem: str
    seed: int
    budget: int
    trials: int = 0
    agreements: int = 0
    positives: int = 0
    disagreements: list[tuple[int, str, str, str]] = field(default_factory=list)
    unknowns: list[tuple[int, str]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        if self.theorem == "bt-divergence":
            # the literal cut condition is allowed to be too strict, never too lax
            return all(exp != "true" for _, _, exp, _ in self.disagreements)
        return not self.disagreements and not self.unknowns

    def lines(self) -> list[str]:
        """Machine-readable form; excludes wall time so it is reproducible."""
        out = [
            f"report theorem={self.theorem} seed={self.seed} budget={self.budget} "
            f"trials={self.trials} agreements={self.agreements} "
            f"disagreements={len(self.disagreements)} unknowns={len(self.unknowns)} "
            f"positives={self.positives} passed={str(self.passed).lower()}"
        ]
        for i, inp, exp, got in self.disagreements:
            out.append(f"disagreement trial={i} expected={exp} got={got} input={inp}")
        for i, inp in self.unknowns:
            out.append(f"unknown trial={i} input={inp}")
        return out

    def to_text(self) -> str:
        head = (
            f"{self.theorem}: {self.agreements}/{self.trials} agree, "
            f"{len(self.disagreements)} disagree, {len(self.unknowns)} unknown "
            f"({self.positives} positive) in {self.wall_time:.2f}s -> "
            f"{'PASS' if self.passed else 'FAIL'}"
        )
        return "\n".join([head, *self.lines()]) + "\n"


def _inline(G: MixedGraph) -> str:
    return ";".join(format_mg(G).splitlines())


def _yn(b: bool) -> str:
    return "true" if b else "false"


# each trial returns (outcome, input, expected, got, positive)


def _trial_robbins(G, T, budget):
    lam = edge_connectivity(G)
    O, _ = robbins_orientation(G)
    ok = O is not None and is_strongly_connected(apply_orientation(G, O))
    return ("agree" if ok == (lam >= 2) else "disagree"), _inline(G), _yn(lam >= 2), _yn(ok), lam >= 2


def _search_vs(pred: bool, G, target, budget):
    res = exact_orientation_search(G, target, budget)
    if res.status == "unknown":
        return "unknown", _inline(G), _yn(pred), "unknown", pred
    found = res.found
    return ("agree" if found == pred else "disagree"), _inline(G), _yn(pred), _yn(found), pred


def _trial_nw2(G, T, budget):
    return _search_vs(nash_williams_predicate(G, 2), G, "two-arc", budget)


def _trial_thomassen(G, T, budget):
    return _search_vs(bool(thomassen_predicate(G)), G, "two-vertex", budget)


def _trial_theorem8(G, T, budget):
    pred = bool(huoh_predicate(G, T))
    inp = _inline(G) + f";T {','.join(v for v in G.vertices if v in T)}"
    out = construct_2T_orientation(G, T, budget)
    if out.status == "unknown":
        return "unknown", inp, _yn(pred), "unknown", pred
    got = out.found
    if got and not is_2T_connected(apply_orientation(G, out.orientation), T):
        return "disagree", inp, _yn(pred), "invalid-orientation", pred
    if pred and not claim1_check(build_blowup(G, T)[0]):
        return "disagree", inp, "claim1", "claim1-fails", pred
    return ("agree" if got == pred else "disagree"), inp, _yn(pred), _yn(got), pred


def _trial_menger(D, T, budget):
    a = is_2vertex_connected(D)
    b = is_2vc_in(D, D.vertices)
    return ("agree" if a == b else "disagree"), _inline(D), _yn(a), _yn(b), a


def _trial_bt(M, T, budget):
    pred = bool(bt_predicate(M))
    return _search_vs(pred, M, "strong", budget)


def _trial_lemma2(phi, T, budget):
    inp = ";".join(phi.to_text().splitlines())
    feasible = nae_brute_force(phi) is not None
    art = reduce(phi)
    res = exact_orientation_search(art.graph, "two-vertex", budget)
    if res.status == "unknown":
        return "unknown", inp, _yn(feasible), "unknown", feasible
    found = res.found
    if found and not phi.is_feasible(orientation_to_assignment(art, res.orientation)):
        return "disagree", inp, "feasible-lift", "infeasible-lift", feasible
    if (count_lemma1_orientations(art) > 0) != feasible:
        return "disagree", inp, _yn(feasible), "lemma1-count-mismatch", feasible
    if feasible:
        f = nae_brute_force(phi)
        D = apply_orientation(art.graph, assignment_to_orientation(art, f))
        if not is_2vertex_connected(D):
            return "disagree", inp, "2vc-embedding", "not-2vc", feasible
    return ("agree" if found == feasible else "disagree"), inp, _yn(feasible), _yn(found), feasible


TRIALS = {
    "robbins": _trial_robbins,
    "nash-williams-2": _trial_nw2,
    "thomassen": _trial_thomassen,
    "theorem8": _trial_theorem8,
    "menger": _trial_menger,
    "bt-divergence": _trial_bt,
    "lemma2": _trial_lemma2,
}

DEFAULT_SPECS = {
    "robbins": dict(n_range=(2, 8), m_range=(1, 16), filter="connected"),
    "nash-williams-2": dict(n_range=(2, 6), m_range=(4, 14)),
    "thomassen": dict(n_range=(3, 6), m_range=(6, 14)),
    "theorem8": dict(n_range=(2, 6), m_range=(6, 14)),
    "menger": dict(n_range=(3, 7), m_range=(3, 20), kind="digraph"),
    "bt-divergence": dict(n_range=(2, 5), m_range=(1, 8), kind="mixed"),
    "lemma2": dict(n_range=(3, 6), m_range=(1, 2)),
}


def default_spec(theorem: str, count: int, seed: int, max_n: int | None = None) -> CorpusSpec:
    kw = dict(DEFAULT_SPECS[theorem])
    if max_n is not None:
        lo, hi = kw["n_range"]
        kw["n_range"] = (min(lo, max_n), max_n)
    return CorpusSpec(count=count, seed=seed, **kw)


def _run(args):
    name, i, sample, T, budget = args
    return i, TRIALS[name](sample, T, budget)


def verify_theorem(
    name: str,
    spec: CorpusSpec | None = None,
    budget: int = DEFAULT_BUDGET,
    *,
    instances: list | None = None,
    workers: int = 1,
) -> TrialReport:
    """Run the equivalence check ``name`` over a corpus.

    ``instances`` replaces the generated corpus (graphs, or NAE instances
    for ``lemma2``). With ``workers > 1`` trials run in separate processes;
    the report is the same as a sequential run.
    """
    if name not in TRIALS:
        raise ValueError(f"unknown theorem {name!r}; choose from {sorted(TRIALS)}")
    if spec is None and instances is None:
        raise ValueError("need a corpus spec or explicit instances")
    start = time.perf_counter()
    if instances is not None:
        samples = [(x, frozenset()) for x in instances]
        seed = spec.seed if spec else 0
    elif name == "lemma2":
        samples = [(phi, frozenset()) for phi in gen_nae(spec)]
        seed = spec.seed
    else:
        samples = list(gen_pairs(spec))
        seed = spec.seed
    jobs = [(name, i, x, T, budget) for i, (x, T) in enumerate(samples)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run, jobs, chunksize=4))
    else:
        results = [_run(j) for j in jobs]

    report = TrialReport(name, seed, budget)
    for i, (outcome, inp, exp, got, positive) in sorted(results, key=lambda r: r[0]):
        report.trials += 1
        report.positives += bool(positive)
        if outcome == "agree":
            report.agreements += 1
        elif outcome == "unknown":
            report.unknowns.append((i, inp))
        else:
            report.disagreements.append((i, inp, exp, got))
    report.wall_time = time.perf_counter() - start
    return report

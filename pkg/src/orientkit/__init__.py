"""Connectivity predicates and orientation algorithms for mixed graphs."""

from .connectivity import (
    INF,
    CutWitness,
    PathPair,
    Verdict,
    arc_connectivity,
    edge_connectivity,
    internally_disjoint_paths,
    is_2T_connected,
    is_2vc_in,
    is_2vertex_connected,
    is_strongly_connected,
    min_arc_cut,
    min_edge_cut,
)
from .graph import (
    Arc,
    Digraph,
    Edge,
    Graph,
    GraphError,
    MixedGraph,
    Orientation,
    apply_orientation,
    blow_up,
    contract,
    double_cycle,
)
from .nae import FANO, NaeInstance, nae_brute_force, parse_mnae
from .reduction import (
    ReductionArtifact,
    assignment_to_orientation,
    count_lemma1_orientations,
    enumerate_lemma1_orientations,
    lemma1_check,
    orientation_to_assignment,
    reduce,
)
from .search import (
    SearchOutcome,
    TargetSpec,
    bt_predicate,
    exact_orientation_search,
    nash_williams_predicate,
    robbins_orientation,
    thomassen_predicate,
)
from .tconnect import (
    BlowupMap,
    build_blowup,
    claim1_check,
    construct_2T_orientation,
    huoh_predicate,
)

__version__ = "0.1.0"

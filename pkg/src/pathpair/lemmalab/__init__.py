"""Executable proof machinery: every construction here is a checkable
procedure usable as a property-test oracle on concrete graphs."""

from .bipartite import Lemma5Report, lemma5_check
from .generators import (
    random_bipartite_planar,
    random_dirac_graph,
    random_multigraph,
    random_planar_multigraph,
    random_simple_graph,
)
from .matching import extract_matching
from .partition import (
    BadEdgeReport,
    DegreePartitionState,
    classify_bad_edges,
    degree_partition,
    hub_multigraph,
    refine_partition,
    refine_step,
    split_into_matchings,
)
from .trichotomy import (
    TrichotomyReport,
    fact1_check,
    fact1_sides,
    far_pair_count,
    find_good_matching,
    incidence_count,
    lemma3_trichotomy,
)
from .weak import (
    WeakReachability,
    auxiliary_graph_from_unreachable_sets,
    build_auxiliary_pairing_graph,
    is_weak_path,
    weak_reachability,
)

__all__ = [
    "BadEdgeReport",
    "DegreePartitionState",
    "Lemma5Report",
    "TrichotomyReport",
    "WeakReachability",
    "auxiliary_graph_from_unreachable_sets",
    "build_auxiliary_pairing_graph",
    "classify_bad_edges",
    "degree_partition",
    "extract_matching",
    "fact1_check",
    "fact1_sides",
    "far_pair_count",
    "find_good_matching",
    "hub_multigraph",
    "incidence_count",
    "is_weak_path",
    "lemma3_trichotomy",
    "lemma5_check",
    "random_bipartite_planar",
    "random_dirac_graph",
    "random_multigraph",
    "random_planar_multigraph",
    "random_simple_graph",
    "refine_partition",
    "refine_step",
    "split_into_matchings",
    "weak_reachability",
]

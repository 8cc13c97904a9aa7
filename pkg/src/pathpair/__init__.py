"""pathpair: build, route, and exhaustively verify path-pairable graphs.

A graph is path-pairable when every full pairing of its vertices can be
realized by pairwise edge-disjoint paths. This package provides the
standard families (stars, complete and complete bipartite graphs, the
leafed-clique family, the planar triangle-hub construction), a
deterministic router for the triangle-hub graphs, an exact edge-disjoint
paths solver, an exhaustive pairability verifier with automorphism-orbit
reduction, the cheap necessary conditions, and runnable versions of the
combinatorial machinery behind the linear-degree lower bound for planar
graphs.
"""

from .conditions import (
    CutConditionReport,
    cut_condition,
    faudree_consistency,
    planar_degree_floor,
)
from .errors import CertificationError, GraphFormatError, SizeCapExceeded
from .families import TriangleHubGraph, complete, complete_bipartite, k_t_q, star, triangle_hub
from .graphs import (
    UNREACHABLE,
    Multigraph,
    Pairing,
    PathSystem,
    SimpleGraph,
    contract_matching,
    contraction_vertex_map,
    edge_cut,
    induced_edge_count,
    max_degree,
    multiedge_distance,
    path_system_problems,
    validate_path_system,
)
from .minors import has_clique_minor
from .planarity import PlanarityReport, embedding_is_valid, is_planar, kuratowski_kind
from .routing import RouteCase, classify_pair, route
from .serialize import (
    emit_dot,
    emit_graph,
    emit_multigraph,
    emit_pairing,
    emit_roles,
    parse_graph,
    parse_multigraph,
    parse_pairing,
    parse_roles,
)
from .solver import DEFAULT_BUDGET, SolveResult, SolveStatus, find_disjoint_paths, residual_prune
from .verifier import (
    OddVertexCountError,
    PairabilityStatus,
    Verdict,
    automorphism_orbits,
    automorphisms,
    count_full_pairings,
    full_pairings,
    is_k_path_pairable,
    is_path_pairable,
)

__version__ = "0.1.0"

__all__ = [
    "CertificationError",
    "CutConditionReport",
    "DEFAULT_BUDGET",
    "GraphFormatError",
    "Multigraph",
    "OddVertexCountError",
    "Pairing",
    "PairabilityStatus",
    "PathSystem",
    "PlanarityReport",
    "RouteCase",
    "SimpleGraph",
    "SizeCapExceeded",
    "SolveResult",
    "SolveStatus",
    "TriangleHubGraph",
    "UNREACHABLE",
    "Verdict",
    "automorphism_orbits",
    "automorphisms",
    "classify_pair",
    "complete",
    "complete_bipartite",
    "contract_matching",
    "contraction_vertex_map",
    "count_full_pairings",
    "cut_condition",
    "edge_cut",
    "embedding_is_valid",
    "emit_dot",
    "emit_graph",
    "emit_multigraph",
    "emit_pairing",
    "emit_roles",
    "faudree_consistency",
    "find_disjoint_paths",
    "full_pairings",
    "has_clique_minor",
    "induced_edge_count",
    "is_k_path_pairable",
    "is_path_pairable",
    "is_planar",
    "k_t_q",
    "kuratowski_kind",
    "max_degree",
    "multiedge_distance",
    "parse_graph",
    "parse_multigraph",
    "parse_pairing",
    "parse_roles",
    "path_system_problems",
    "planar_degree_floor",
    "residual_prune",
    "route",
    "star",
    "triangle_hub",
    "validate_path_system",
]

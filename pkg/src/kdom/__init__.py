"""Exact solvers and an exhaustive verifier for 3-domination plus connectivity
extremal graphs on small vertex counts."""

from .graphs import (
    MAX_VERTICES,
    Graph,
    attach_pendant_paths,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    format_edge_list,
    friendship,
    graph6_decode,
    graph6_encode,
    greedy_matching,
    induced_subgraph,
    is_connected,
    join,
    max_degree,
    min_degree,
    parse_edge_list,
    path,
    remove_matching,
    star,
    wheel,
)
from .catalog import CatalogEntry, DiscrepancyNote, build_catalog, checked_catalog, self_check
from .connectivity import CutResult, brute_force_connectivity, vertex_connectivity
from .domination import (
    DominationResult,
    gamma3,
    gamma_k,
    is_k_dominating,
    is_k_tuple_dominating,
)
from .enumeration import connected_graphs
from .families import FamilyParseError, build_family, parse_family, print_family
from .isomorphism import CanonicalForm, canonical_form, canonical_graph6, is_isomorphic
from .verifier import audit_small_theorems, characterize, check_theorem, verify_bound

__all__ = [
    "CatalogEntry",
    "DiscrepancyNote",
    "build_catalog",
    "checked_catalog",
    "self_check",
    "CutResult",
    "brute_force_connectivity",
    "vertex_connectivity",
    "DominationResult",
    "gamma3",
    "gamma_k",
    "is_k_dominating",
    "is_k_tuple_dominating",
    "connected_graphs",
    "FamilyParseError",
    "build_family",
    "parse_family",
    "print_family",
    "audit_small_theorems",
    "characterize",
    "check_theorem",
    "verify_bound",
    "MAX_VERTICES",
    "Graph",
    "attach_pendant_paths",
    "complement",
    "complete",
    "complete_bipartite",
    "cycle",
    "disjoint_union",
    "format_edge_list",
    "friendship",
    "graph6_decode",
    "graph6_encode",
    "greedy_matching",
    "induced_subgraph",
    "is_connected",
    "join",
    "max_degree",
    "min_degree",
    "parse_edge_list",
    "path",
    "remove_matching",
    "star",
    "wheel",
    "CanonicalForm",
    "canonical_form",
    "canonical_graph6",
    "is_isomorphic",
]

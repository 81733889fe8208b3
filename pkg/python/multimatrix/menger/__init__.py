"""Multipartite vertex covers, matchings, separators and disjoint paths.

All solvers are exact brute force behind `Limits.vertex_guard`.
"""

from multimatrix.menger.cover import (
    CoverMatchingReport,
    EdgeMatching,
    MinimaxVerdict,
    VertexCover,
    check_cover_matching,
    max_edge_packing,
    max_matching_multipartite,
    min_vertex_cover_multipartite,
    verify_edge_matching,
    verify_vertex_cover,
)
from multimatrix.menger.paths import (
    PathSystem,
    SeparatorCertificate,
    SeparatorPathsReport,
    candidate_paths,
    check_separator_paths,
    max_disjoint_path_system,
    min_all_pairs_separator,
    separates,
    verify_path_system,
    verify_separator,
)

__all__ = [
    "CoverMatchingReport",
    "EdgeMatching",
    "MinimaxVerdict",
    "PathSystem",
    "SeparatorCertificate",
    "SeparatorPathsReport",
    "VertexCover",
    "candidate_paths",
    "check_cover_matching",
    "check_separator_paths",
    "max_disjoint_path_system",
    "max_edge_packing",
    "max_matching_multipartite",
    "min_all_pairs_separator",
    "min_vertex_cover_multipartite",
    "separates",
    "verify_edge_matching",
    "verify_path_system",
    "verify_separator",
]

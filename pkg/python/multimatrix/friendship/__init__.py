from multimatrix.friendship.decompose import (
    Decomposition,
    FriendshipReport,
    Verdict,
    check_friendship_theorem,
    clique_decomposition,
    tensorize,
    verify_decomposition,
)
from multimatrix.friendship.graph import (
    PartitionedGraph,
    graph_digest,
    parse_graph,
    serialize_graph,
)
from multimatrix.friendship.hall import HallResult, HallViolation, hall_condition

__all__ = [
    "Decomposition",
    "FriendshipReport",
    "HallResult",
    "HallViolation",
    "PartitionedGraph",
    "Verdict",
    "check_friendship_theorem",
    "clique_decomposition",
    "graph_digest",
    "hall_condition",
    "parse_graph",
    "serialize_graph",
    "tensorize",
    "verify_decomposition",
]

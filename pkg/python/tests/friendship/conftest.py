import pytest
from multimatrix.friendship import PartitionedGraph

# Three parts of two vertices, every pair of parts joined by a perfect matching,
# arranged as a 6-cycle so that no triangle exists.
HEXAGON_EDGES = [(1, 3), (2, 4), (1, 6), (2, 5), (3, 5), (4, 6)]


@pytest.fixture
def hexagon():
    """Pairwise perfect matchings without a single triangle."""
    return PartitionedGraph([[1, 2], [3, 4], [5, 6]], HEXAGON_EDGES)


@pytest.fixture
def complete_tripartite():
    """K_{2,2,2}."""
    return PartitionedGraph.complete_multipartite(3, 2)

"""Small hand-built instances used in tests and documentation."""

from __future__ import annotations

from importlib import resources

import numpy as np

from .graph import Graph, PartialColouring
from .sbm import CommunityAssignment, Instance

__all__ = ["EXAMPLE_EDGES", "three_community_instance", "three_community_path"]

# 1-based: three communities {1..4}, {5..9}, {10..14}
EXAMPLE_EDGES = (
    (1, 2), (1, 3), (2, 3), (2, 4), (3, 4),
    (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (7, 8), (7, 9),
    (10, 11), (10, 12), (10, 14), (11, 12), (11, 13), (12, 13), (13, 14),
    (1, 12), (3, 8), (4, 5), (5, 14), (3, 13), (6, 10), (9, 11),
)  # fmt: skip
EXAMPLE_COMMUNITIES = (1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3)


def three_community_instance() -> Instance:
    """14-vertex, 26-edge graph with three communities and no precolouring."""
    graph = Graph(14, np.asarray(EXAMPLE_EDGES) - 1)
    assignment = CommunityAssignment(EXAMPLE_COMMUNITIES, 3)
    return Instance(graph, assignment, PartialColouring.empty(14, 3), None)


def three_community_path():
    """Path of the shipped instance file for :func:`three_community_instance`."""
    return resources.files("softhappy") / "data" / "three_communities.col"

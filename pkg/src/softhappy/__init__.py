"""Soft happy colouring of graphs and its link to community structure."""

from .graph import (
    Graph,
    HappinessReport,
    PartialColouring,
    happiness,
    is_rho_happy,
    same_colour_degree,
)
from .metrics import EvalRecord, community_accuracy, evaluate
from .sbm import (
    CommunityAssignment,
    Instance,
    SbmParams,
    induced_colouring,
    make_instance,
    sample_graph,
    sample_precolouring,
)
from .solvers import (
    GreedySoftMHV,
    GrowthSoftMHV,
    LocalMaximalColouring,
    NeighbourGreedyColouring,
    SolveResult,
    SolverConfig,
    classify_vertices,
    exact_oracle,
    greedy_soft_mhv,
    growth_soft_mhv,
    lmc,
    ngc,
)
from .theory import ThresholdReport, threshold_report

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "PartialColouring",
    "HappinessReport",
    "happiness",
    "is_rho_happy",
    "same_colour_degree",
    "SbmParams",
    "CommunityAssignment",
    "Instance",
    "sample_graph",
    "sample_precolouring",
    "induced_colouring",
    "make_instance",
    "SolverConfig",
    "SolveResult",
    "greedy_soft_mhv",
    "ngc",
    "lmc",
    "growth_soft_mhv",
    "classify_vertices",
    "exact_oracle",
    "GreedySoftMHV",
    "NeighbourGreedyColouring",
    "LocalMaximalColouring",
    "GrowthSoftMHV",
    "EvalRecord",
    "community_accuracy",
    "evaluate",
    "ThresholdReport",
    "threshold_report",
]

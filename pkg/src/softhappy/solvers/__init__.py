"""Heuristics that extend a partial colouring to a complete one, plus an exact oracle."""

from ._base import BaseSolver, SolveResult, SolverConfig
from .greedy import GreedySoftMHV, NeighbourGreedyColouring, greedy_soft_mhv, ngc
from .growth import GrowthSoftMHV, VertexClass, classify_vertices, growth_soft_mhv
from .lmc import LocalMaximalColouring, lmc
from .oracle import MAX_COMPLETIONS, exact_oracle

SOLVERS = {
    "greedy": greedy_soft_mhv,
    "ngc": ngc,
    "lmc": lmc,
    "growth": growth_soft_mhv,
}

__all__ = [
    "SOLVERS",
    "BaseSolver",
    "SolveResult",
    "SolverConfig",
    "GreedySoftMHV",
    "NeighbourGreedyColouring",
    "LocalMaximalColouring",
    "GrowthSoftMHV",
    "VertexClass",
    "classify_vertices",
    "greedy_soft_mhv",
    "ngc",
    "lmc",
    "growth_soft_mhv",
    "exact_oracle",
    "MAX_COMPLETIONS",
]

"""Single-colour completion heuristics: Greedy-SoftMHV and Neighbour Greedy Colouring."""

from __future__ import annotations

import numpy as np

from ..graph import Graph, happy_thresholds, same_colour_counts
from ._base import BaseSolver, SolverConfig, SolveResult, _Run

__all__ = [
    "completion_happy_counts",
    "greedy_soft_mhv",
    "ngc",
    "GreedySoftMHV",
    "NeighbourGreedyColouring",
]


def completion_happy_counts(graph: Graph, colours: np.ndarray, thresholds: np.ndarray, k: int) -> np.ndarray:
    """Happy count obtained by giving every uncoloured vertex colour ``i``, for i = 1..k.

    Each candidate completion is evaluated from scratch.
    """
    uncoloured = colours == 0
    out = np.empty(k, dtype=np.int64)
    trial = colours.copy()
    for i in range(1, k + 1):
        trial[uncoloured] = i
        out[i - 1] = np.count_nonzero(same_colour_counts(graph, trial) >= thresholds)
    return out


def _adjacent_to(graph: Graph, mask: np.ndarray) -> np.ndarray:
    """Vertices with at least one neighbour in ``mask``."""
    src = graph.sources[mask[graph.indices]]
    return np.bincount(src, minlength=graph.n) > 0


def greedy_soft_mhv(graph: Graph, partial, config: SolverConfig) -> SolveResult:
    """Give all uncoloured vertices the one colour that maximises the happy count.

    Ties go to the lowest colour index.
    """
    run = _Run(graph, partial, config)
    uncoloured = run.colours == 0
    if not uncoloured.any():
        return run.result()
    thr = happy_thresholds(graph.degrees, config.rho)
    scores = completion_happy_counts(graph, run.colours, thr, run.k)
    run.work += run.k * graph.n
    best = int(np.argmax(scores)) + 1
    run.colours[uncoloured] = best
    return run.result(chosen_colour=best)


def ngc(graph: Graph, partial, config: SolverConfig) -> SolveResult:
    """Neighbour Greedy Colouring.

    Each round picks the colour whose single-colour completion is happiest and
    colours only the uncoloured neighbours of that colour class. When the
    chosen class has no uncoloured neighbours, the choice is restricted to
    classes that do; if none does, the remaining vertices are unreachable and
    all receive the round's best colour.
    """
    run = _Run(graph, partial, config)
    thr = happy_thresholds(graph.degrees, config.rho)
    rounds = 0
    while True:
        uncoloured = run.colours == 0
        if not uncoloured.any() or run.expired():
            break
        rounds += 1
        scores = completion_happy_counts(graph, run.colours, thr, run.k)
        run.work += run.k * graph.n
        best = int(np.argmax(scores)) + 1
        frontier = uncoloured & _adjacent_to(graph, run.colours == best)
        if not frontier.any():
            reachable = [
                i
                for i in range(1, run.k + 1)
                if (uncoloured & _adjacent_to(graph, run.colours == i)).any()
            ]
            if not reachable:
                run.colours[uncoloured] = best
                break
            best = max(reachable, key=lambda i: (scores[i - 1], -i))
            frontier = uncoloured & _adjacent_to(graph, run.colours == best)
        run.colours[frontier] = best
    return run.result(rounds=rounds)


class GreedySoftMHV(BaseSolver):
    """Estimator form of :func:`greedy_soft_mhv`.

    Examples
    --------
    >>> from softhappy.graph import Graph
    >>> g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    >>> GreedySoftMHV(rho=0.6).fit_predict(g, [1, 0, 0, 2]).tolist()
    [1, 1, 1, 2]
    """

    _solve = staticmethod(greedy_soft_mhv)


class NeighbourGreedyColouring(BaseSolver):
    """Estimator form of :func:`ngc`."""

    _solve = staticmethod(ngc)

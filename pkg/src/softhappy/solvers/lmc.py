"""Local Maximal Colouring."""

from __future__ import annotations

import heapq

import numpy as np

from ..graph import Graph
from ._base import BaseSolver, SolverConfig, SolveResult, _Run

__all__ = ["lmc", "LocalMaximalColouring"]


class _Frontier:
    """Uncoloured vertices adjacent to a coloured one.

    Lowest-id order uses a heap; seeded order keeps a dense list with
    swap-removal so a uniform pick costs O(1).
    """

    def __init__(self, n: int, run: _Run):
        self.run = run
        self.member = np.zeros(n, dtype=bool)
        self.items: list[int] = []

    def __len__(self) -> int:
        return len(self.items)

    def add(self, vertices: np.ndarray) -> None:
        new = vertices[~self.member[vertices]]
        if not new.size:
            return
        self.member[new] = True
        if self.run.config.deterministic_mode:
            for v in new.tolist():
                heapq.heappush(self.items, v)
        else:
            self.items.extend(new.tolist())

    def pop(self) -> int:
        if self.run.config.deterministic_mode:
            v = heapq.heappop(self.items)
        else:
            j = int(self.run.rng.integers(len(self.items)))
            self.items[j], self.items[-1] = self.items[-1], self.items[j]
            v = self.items.pop()
        self.member[v] = False
        return v


def lmc(graph: Graph, partial, config: SolverConfig) -> SolveResult:
    """Colour frontier vertices one at a time with their most frequent neighbour colour.

    The frontier is every uncoloured vertex with a coloured neighbour. Colour
    ties go to the lowest index. If the frontier empties while vertices remain
    (empty precolouring or a component without colours), an uncoloured vertex
    is picked and given the globally most frequent colour so far.

    ``work_counter`` counts neighbour-list entries inspected plus one per
    vertex coloured, which is at most ``2m + n``.
    """
    run = _Run(graph, partial, config)
    colours = run.colours
    indptr, indices = graph.indptr, graph.indices
    k = run.k
    class_sizes = np.bincount(colours, minlength=k + 1)
    frontier = _Frontier(graph.n, run)

    for v in np.flatnonzero(colours).tolist():
        nbrs = indices[indptr[v] : indptr[v + 1]]
        run.work += len(nbrs)
        frontier.add(nbrs[colours[nbrs] == 0])

    remaining = graph.n - int(np.count_nonzero(colours))
    fallbacks = 0
    while remaining:
        if run.expired():
            break
        if len(frontier):
            v = frontier.pop()
        else:
            v = run.pick(np.flatnonzero(colours == 0))
            fallbacks += 1
        nbrs = indices[indptr[v] : indptr[v + 1]]
        nbr_colours = colours[nbrs]
        run.work += len(nbrs) + 1
        tally = np.bincount(nbr_colours, minlength=k + 1)[1:]
        if tally.any():
            c = int(np.argmax(tally)) + 1
        else:
            c = int(np.argmax(class_sizes[1:])) + 1 if class_sizes[1:].any() else 1
        colours[v] = c
        class_sizes[c] += 1
        remaining -= 1
        frontier.add(nbrs[nbr_colours == 0])
    return run.result(fallbacks=fallbacks)


class LocalMaximalColouring(BaseSolver):
    """Estimator form of :func:`lmc`.

    The colouring does not depend on ``rho``; it only enters the reported
    happy count.
    """

    _solve = staticmethod(lmc)

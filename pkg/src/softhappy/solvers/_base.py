from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator

from ..exceptions import ParameterError
from ..graph import Graph, PartialColouring, check_colouring, happiness
from ..utils.validation import check_rho, check_seed

__all__ = ["SolverConfig", "SolveResult", "BaseSolver"]


@dataclass(frozen=True)
class SolverConfig:
    """Run settings shared by every solver.

    ``time_limit`` is in milliseconds, 0 meaning unlimited. With
    ``deterministic_mode`` every "choose a vertex" step takes the lowest id
    instead of a seeded uniform draw.
    """

    rho: float = 0.5
    seed: int | None = 0
    time_limit: float = 0
    deterministic_mode: bool = False

    def __post_init__(self):
        check_rho(self.rho)
        if self.time_limit < 0:
            raise ParameterError(f"time_limit must be >= 0, got {self.time_limit}")


@dataclass
class SolveResult:
    colouring: PartialColouring
    happy_count: int
    elapsed: float
    timed_out: bool = False
    work_counter: int = 0
    extras: dict = field(default_factory=dict)


class _Run:
    """Mutable per-run state: working colours, RNG, clock and work tally."""

    def __init__(self, graph: Graph, partial, config: SolverConfig):
        self.graph = graph
        self.partial = check_colouring(graph, partial)
        self.k = self.partial.k
        self.colours = self.partial.colours.copy()
        self.config = config
        self.rng = check_seed(config.seed)
        self.work = 0
        self.timed_out = False
        self._start = time.perf_counter()
        self._deadline = (
            self._start + config.time_limit / 1000.0 if config.time_limit else None
        )

    def expired(self) -> bool:
        if self._deadline is not None and time.perf_counter() >= self._deadline:
            self.timed_out = True
        return self.timed_out

    def pick(self, candidates: np.ndarray) -> int:
        """One vertex from a non-empty sorted id array."""
        if self.config.deterministic_mode:
            return int(candidates[0])
        return int(candidates[self.rng.integers(len(candidates))])

    def pick_many(self, candidates: np.ndarray, count: int) -> np.ndarray:
        count = min(max(count, 0), len(candidates))
        if self.config.deterministic_mode:
            return candidates[:count]
        return self.rng.choice(candidates, size=count, replace=False)

    def result(self, **extras) -> SolveResult:
        colouring = PartialColouring(self.colours, self.k)
        return SolveResult(
            colouring=colouring,
            happy_count=happiness(self.graph, colouring, self.config.rho).count,
            elapsed=(time.perf_counter() - self._start) * 1000.0,
            timed_out=self.timed_out,
            work_counter=self.work,
            extras=extras,
        )


def _check_graph(graph) -> Graph:
    if not isinstance(graph, Graph):
        raise TypeError(f"expected a Graph, got {type(graph).__name__}")
    return graph


class BaseSolver(BaseEstimator):
    """Estimator wrapper around a functional solver.

    ``fit(graph, y)`` takes the graph and a partial colouring ``y`` (0 for
    uncoloured vertices), in the spirit of scikit-learn's transductive
    label propagation. The completed colouring is stored in ``colouring_``.
    """

    _solve = None

    def __init__(self, rho=0.5, n_colours=None, seed=0, time_limit=0, deterministic=False):
        self.rho = rho
        self.n_colours = n_colours
        self.seed = seed
        self.time_limit = time_limit
        self.deterministic = deterministic

    def _config(self) -> SolverConfig:
        return SolverConfig(
            rho=self.rho,
            seed=self.seed,
            time_limit=self.time_limit,
            deterministic_mode=self.deterministic,
        )

    def fit(self, graph, y):
        graph = _check_graph(graph)
        partial = check_colouring(graph, y, self.n_colours)
        result = type(self)._solve(graph, partial, self._config())
        self.result_ = result
        self.colouring_ = result.colouring.colours
        self.happy_count_ = result.happy_count
        self.happy_ratio_ = result.happy_count / graph.n if graph.n else 1.0
        self.timed_out_ = result.timed_out
        self.n_colours_ = partial.k
        return self

    def fit_predict(self, graph, y):
        return self.fit(graph, y).colouring_

    def score(self, graph, y=None):
        """Fraction of rho-happy vertices in the fitted colouring."""
        if not hasattr(self, "colouring_"):
            from sklearn.exceptions import NotFittedError

            raise NotFittedError(f"{type(self).__name__} is not fitted yet")
        return happiness(_check_graph(graph), self.colouring_, self.rho).ratio

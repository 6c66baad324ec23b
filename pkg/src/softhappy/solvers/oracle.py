"""Exhaustive search over all completions of a partial colouring.

Only meant for tiny instances (tests, fixtures). Happiness is recomputed
here from the neighbour lists with its own integer threshold so that the
oracle does not share code with the heuristics it is used to check.
"""

from __future__ import annotations

import math

import numpy as np

from ..exceptions import OracleRefusal
from ..graph import Graph, PartialColouring, check_colouring
from ..utils.validation import as_fraction, check_n_colours, check_rho

__all__ = ["MAX_COMPLETIONS", "exact_oracle", "count_completions"]

MAX_COMPLETIONS = 10**7
_CHUNK = 2**16


def count_completions(partial: PartialColouring, k: int) -> int:
    return k ** int(np.count_nonzero(partial.colours == 0))


def exact_oracle(graph: Graph, partial, rho, k: int | None = None) -> tuple[PartialColouring, int]:
    """Return a completion maximising the rho-happy count, and that count.

    Ties go to the lexicographically smallest colour vector. Raises
    :class:`OracleRefusal` when there are more than ``MAX_COMPLETIONS``
    completions.
    """
    partial = check_colouring(graph, partial, k)
    k = check_n_colours(partial.k)
    check_rho(rho)
    free = np.flatnonzero(partial.colours == 0)
    total = count_completions(partial, k)
    if total > MAX_COMPLETIONS:
        raise OracleRefusal(
            f"{k}^{len(free)} = {total} completions exceeds the limit of {MAX_COMPLETIONS}"
        )

    frac = as_fraction(rho)
    neighbour_lists = [graph.neighbours(v) for v in range(graph.n)]
    need = np.array(
        [math.ceil(frac * len(nbrs)) for nbrs in neighbour_lists], dtype=np.int64
    )
    # earlier free vertices are more significant digits, so enumeration
    # order is lexicographic on the full colour vector
    weights = k ** np.arange(len(free) - 1, -1, -1, dtype=np.int64)

    best_count, best_code = -1, 0
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        batch = np.tile(partial.colours, (len(codes), 1))
        if len(free):
            batch[:, free] = (codes[:, None] // weights) % k + 1
        happy = np.zeros(len(codes), dtype=np.int64)
        for v, nbrs in enumerate(neighbour_lists):
            agree = (batch[:, nbrs] == batch[:, [v]]).sum(axis=1)
            happy += agree >= need[v]
        j = int(np.argmax(happy))
        if happy[j] > best_count:
            best_count, best_code = int(happy[j]), int(codes[j])

    colours = partial.colours.copy()
    if len(free):
        colours[free] = (best_code // weights) % k + 1
    return PartialColouring(colours, k), best_count

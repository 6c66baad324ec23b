"""Growth-SoftMHV and the vertex classes it is driven by."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graph import Graph, check_colouring, happy_thresholds
from ..utils.validation import check_rho
from ._base import BaseSolver, SolverConfig, SolveResult, _Run

__all__ = ["VertexClass", "classify_vertices", "growth_soft_mhv", "GrowthSoftMHV"]

LABELS = ("H", "U", "P", "L_p", "L_h", "L_u", "L_f")
_H, _U, _P, _LP, _LH, _LU, _LF = range(7)


@dataclass(frozen=True)
class VertexClass:
    """One label per vertex, stored as an index into :data:`LABELS`.

    Coloured vertices are H (rho-happy), U (cannot become happy) or P (can
    still become happy). Uncoloured vertices are L_p (next to a P-vertex),
    L_h / L_u (next to an H- or U-vertex, and able / unable to become happy)
    or L_f (no coloured neighbour).
    """

    codes: np.ndarray

    def mask(self, label: str) -> np.ndarray:
        return self.codes == LABELS.index(label)

    def members(self, label: str) -> np.ndarray:
        return np.flatnonzero(self.mask(label))

    def labels(self) -> list[str]:
        return [LABELS[c] for c in self.codes.tolist()]

    def counts(self) -> dict[str, int]:
        tally = np.bincount(self.codes, minlength=len(LABELS))
        return dict(zip(LABELS, tally.tolist()))

    def __getattr__(self, name):
        if name in LABELS:
            return self.mask(name)
        raise AttributeError(name)


def _classify(graph: Graph, colours: np.ndarray, thr: np.ndarray, k: int) -> np.ndarray:
    n = graph.n
    src, dst = graph.sources, graph.indices
    cs, cd = colours[src], colours[dst]
    coloured = colours != 0
    same = np.bincount(src[(cs == cd) & (cs != 0)], minlength=n)
    free = np.bincount(src[cd == 0], minlength=n)

    happy = coloured & (same >= thr)
    doomed = coloured & (same + free < thr)
    hopeful = coloured & ~happy & ~doomed

    codes = np.full(n, _LF, dtype=np.int8)
    codes[happy] = _H
    codes[doomed] = _U
    codes[hopeful] = _P

    # only edges leaving an uncoloured vertex matter from here on
    out = ~coloured[src]
    s, d = src[out], cd[out]
    next_to_p = np.bincount(s[hopeful[dst[out]]], minlength=n) > 0
    next_to_hu = np.bincount(s[(happy | doomed)[dst[out]]], minlength=n) > 0
    per_colour = np.bincount(s * (k + 1) + d, minlength=n * (k + 1)).reshape(n, k + 1)
    best = per_colour[:, 1:].max(axis=1) if k else np.zeros(n, dtype=np.int64)
    can_be_happy = free + best >= thr

    unc = ~coloured
    codes[unc & next_to_p] = _LP
    rest = unc & ~next_to_p & next_to_hu
    codes[rest & can_be_happy] = _LH
    codes[rest & ~can_be_happy] = _LU
    return codes


def classify_vertices(graph: Graph, partial, rho) -> VertexClass:
    partial = check_colouring(graph, partial)
    thr = happy_thresholds(graph.degrees, check_rho(rho))
    return VertexClass(_classify(graph, partial.colours, thr, partial.k))


class _Tally:
    """Neighbour colour counts kept up to date as vertices get coloured.

    ``counts[v, i]`` is the number of neighbours of ``v`` with colour ``i``
    (column 0: uncoloured neighbours).
    """

    def __init__(self, graph: Graph, colours: np.ndarray, k: int):
        self.graph = graph
        self.colours = colours
        n = graph.n
        self.counts = np.bincount(
            graph.sources * (k + 1) + colours[graph.indices], minlength=n * (k + 1)
        ).reshape(n, k + 1)
        self._rows = np.arange(n)

    def assign(self, vertices, colour: int) -> int:
        vertices = np.atleast_1d(np.asarray(vertices, dtype=np.int64))
        if not vertices.size:
            return 0
        self.colours[vertices] = colour
        indptr, indices = self.graph.indptr, self.graph.indices
        nbrs = np.concatenate([indices[indptr[v] : indptr[v + 1]] for v in vertices.tolist()])
        np.add.at(self.counts[:, 0], nbrs, -1)
        np.add.at(self.counts[:, colour], nbrs, 1)
        return len(nbrs)

    def coloured_classes(self, thr):
        c = self.colours
        coloured = c != 0
        same = self.counts[self._rows, c]
        free = self.counts[:, 0]
        happy = coloured & (same >= thr)
        doomed = coloured & (same + free < thr)
        return happy, doomed, coloured & ~happy & ~doomed

    def free_classes(self, thr):
        """(L_h, L_u) masks, valid when there is no P-vertex."""
        free = self.counts[:, 0]
        unc = self.colours == 0
        reached = unc & (self.graph.degrees > free)
        can = free + self.counts[:, 1:].max(axis=1) >= thr
        return reached & can, reached & ~can


def growth_soft_mhv(graph: Graph, partial, config: SolverConfig, *, verify_classes: bool = False) -> SolveResult:
    """Grow colour classes around vertices that can still be made happy.

    Priority order on every step, with vertex classes brought up to date
    after each batch of assignments:

    1. a P-vertex ``v``: colour just enough uncoloured neighbours with
       ``c(v)`` to make ``v`` happy;
    2. an L_h-vertex ``v``: give it the most frequent neighbour colour
       ``i`` and colour enough uncoloured neighbours with ``i``;
    3. an L_u-vertex: as in 2, with the neighbour request capped by what is
       available;
    4. only L_f-vertices left (no coloured vertex reaches them): pick one
       and give it the globally most frequent colour.

    Classes are derived from incrementally maintained neighbour colour
    counts; ``verify_classes`` re-derives them from scratch with
    :func:`classify_vertices` at every step and asserts agreement.
    """
    run = _Run(graph, partial, config)
    colours = run.colours
    k = run.k
    indptr, indices = graph.indptr, graph.indices
    thr = happy_thresholds(graph.degrees, config.rho)
    tally = _Tally(graph, colours, k)
    steps = {"P": 0, "L_h": 0, "L_u": 0, "L_f": 0}

    def grow_from(v, colour):
        nbrs = indices[indptr[v] : indptr[v + 1]]
        same = int(tally.counts[v, colour])
        chosen = run.pick_many(nbrs[colours[nbrs] == 0], int(thr[v]) - same)
        run.work += len(nbrs) + tally.assign(chosen, colour)

    def colour_and_grow(v):
        colour = int(np.argmax(tally.counts[v, 1:])) + 1
        run.work += tally.assign([v], colour)
        grow_from(v, colour)

    remaining = int(np.count_nonzero(colours == 0))
    while remaining:
        if run.expired():
            break
        happy, doomed, hopeful = tally.coloured_classes(thr)
        run.work += graph.n
        if verify_classes:
            _check_against_full(graph, colours, thr, k, happy, doomed, hopeful, tally)
        if hopeful.any():
            v = run.pick(np.flatnonzero(hopeful))
            grow_from(v, int(colours[v]))
            steps["P"] += 1
            if verify_classes:
                assert tally.counts[v, colours[v]] >= thr[v], f"P-vertex {v} still unhappy"
        else:
            lh, lu = tally.free_classes(thr)
            if lh.any():
                colour_and_grow(run.pick(np.flatnonzero(lh)))
                steps["L_h"] += 1
            elif lu.any():
                colour_and_grow(run.pick(np.flatnonzero(lu)))
                steps["L_u"] += 1
            else:
                v = run.pick(np.flatnonzero(colours == 0))
                sizes = np.bincount(colours, minlength=k + 1)[1:]
                run.work += tally.assign([v], int(np.argmax(sizes)) + 1)
                steps["L_f"] += 1
        remaining = int(np.count_nonzero(colours == 0))
    return run.result(steps=steps)


def _check_against_full(graph, colours, thr, k, happy, doomed, hopeful, tally):
    codes = _classify(graph, colours, thr, k)
    assert np.array_equal(codes == _H, happy)
    assert np.array_equal(codes == _U, doomed)
    assert np.array_equal(codes == _P, hopeful)
    if not hopeful.any():
        lh, lu = tally.free_classes(thr)
        assert np.array_equal(codes == _LH, lh)
        assert np.array_equal(codes == _LU, lu)


class GrowthSoftMHV(BaseSolver):
    """Estimator form of :func:`growth_soft_mhv`.

    Defaults to no time limit; the benchmark protocol used 40 s (1,000
    vertices) and 120 s (mixed sizes).
    """

    _solve = staticmethod(growth_soft_mhv)

"""Graph and colouring containers plus rho-happiness evaluation.

Vertices are 0-based. A colouring is an integer vector with values in
``{0, 1, ..., k}`` where 0 marks an uncoloured vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import ContractViolation, ParameterError
from .utils.validation import check_n_colours, check_rho, check_vertex

__all__ = [
    "Graph",
    "PartialColouring",
    "HappinessReport",
    "check_colouring",
    "happy_thresholds",
    "same_colour_counts",
    "same_colour_degree",
    "is_rho_happy",
    "happiness",
]

_INT_LIMIT = 2**62


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Immutable simple undirected graph in compressed sparse row form.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : array-like of shape (m, 2), optional
        Undirected edges as 0-based vertex pairs. Orientation and repeats are
        ignored; self-loops are rejected.

    Attributes
    ----------
    indptr : ndarray of shape (n + 1,)
        Offsets into ``indices``; the neighbours of ``v`` are
        ``indices[indptr[v]:indptr[v + 1]]``, sorted ascending.
    indices : ndarray of shape (2 * m,)
        Flat neighbour array.
    """

    __slots__ = ("_n", "_indptr", "_indices", "_sources", "_degrees")

    def __init__(self, n: int, edges=()):
        if isinstance(n, bool) or int(n) != n or n < 0:
            raise ParameterError(f"vertex count must be a non-negative integer, got {n!r}")
        n = int(n)
        e = np.asarray(edges, dtype=np.int64)
        if e.size == 0:
            e = e.reshape(0, 2)
        if e.ndim != 2 or e.shape[1] != 2:
            raise ParameterError(f"edges must have shape (m, 2), got {e.shape}")
        if e.size and (e.min() < 0 or e.max() >= n):
            raise IndexError(f"edge endpoint out of range for a graph on {n} vertices")
        if np.any(e[:, 0] == e[:, 1]):
            raise ParameterError("self-loops are not allowed")
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        # unique over the packed key also sorts edges lexicographically
        keys = np.unique(lo * max(n, 1) + hi)
        lo, hi = keys // max(n, 1), keys % max(n, 1)
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        degrees = np.bincount(src, minlength=n).astype(np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        self._n = n
        self._indptr = _readonly(indptr)
        self._indices = _readonly(dst)
        self._sources = _readonly(src)
        self._degrees = _readonly(degrees)

    @classmethod
    def from_adjacency(cls, adjacency) -> "Graph":
        """Build from a sequence of neighbour lists (or a dict keyed 0..n-1)."""
        if isinstance(adjacency, dict):
            n = len(adjacency)
            items = adjacency.items()
        else:
            n = len(adjacency)
            items = enumerate(adjacency)
        edges = [(u, v) for u, nbrs in items for v in nbrs]
        return cls(n, edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._indices) // 2

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def sources(self) -> np.ndarray:
        """Row id of every entry in ``indices`` (the CSR rows expanded)."""
        return self._sources

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def degree(self, v: int) -> int:
        v = check_vertex(v, self._n)
        return int(self._degrees[v])

    def neighbours(self, v: int) -> np.ndarray:
        v = check_vertex(v, self._n)
        return self._indices[self._indptr[v] : self._indptr[v + 1]]

    def edges(self) -> np.ndarray:
        """Edge list of shape (m, 2) with ``u < v``, sorted lexicographically."""
        keep = self._sources < self._indices
        return np.column_stack([self._sources[keep], self._indices[keep]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
        )

    def __hash__(self):
        return hash((self._n, self._indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class PartialColouring:
    """Per-vertex colours in ``{0, 1, ..., k}``; 0 means uncoloured."""

    colours: np.ndarray
    k: int

    def __post_init__(self):
        c = np.array(self.colours, dtype=np.int64, copy=True)
        if c.ndim != 1:
            raise ParameterError("colours must be one-dimensional")
        k = check_n_colours(self.k)
        if c.size and (c.min() < 0 or c.max() > k):
            raise ParameterError(f"colours must lie in 0..{k}")
        object.__setattr__(self, "colours", _readonly(c))
        object.__setattr__(self, "k", k)

    def __len__(self) -> int:
        return len(self.colours)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialColouring):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.colours, other.colours)

    @property
    def is_complete(self) -> bool:
        return not np.any(self.colours == 0)

    @property
    def uncoloured(self) -> np.ndarray:
        return np.flatnonzero(self.colours == 0)

    @property
    def n_coloured(self) -> int:
        return int(np.count_nonzero(self.colours))

    def colour_class(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.colours == i)

    @classmethod
    def empty(cls, n: int, k: int) -> "PartialColouring":
        return cls(np.zeros(n, dtype=np.int64), k)


@dataclass(frozen=True)
class HappinessReport:
    happy: np.ndarray
    count: int
    ratio: float


def check_colouring(graph: Graph, colouring, k: int | None = None) -> PartialColouring:
    """Validate ``colouring`` against ``graph`` and return a PartialColouring.

    Plain arrays are accepted; ``k`` then defaults to the largest colour
    present (at least 1).
    """
    if isinstance(colouring, PartialColouring):
        if k is not None and check_n_colours(k) != colouring.k:
            colouring = PartialColouring(colouring.colours, k)
    else:
        arr = np.asarray(colouring)
        if arr.size and not np.issubdtype(arr.dtype, np.integer):
            if not np.all(np.mod(arr, 1) == 0):
                raise ParameterError("colours must be integers")
        arr = arr.astype(np.int64)
        if k is None:
            k = max(int(arr.max()) if arr.size else 1, 1)
        colouring = PartialColouring(arr, k)
    if len(colouring) != graph.n:
        raise ContractViolation(
            f"colouring has length {len(colouring)} but the graph has {graph.n} vertices"
        )
    return colouring


def happy_thresholds(degrees, rho) -> np.ndarray:
    """Exact ``ceil(rho * deg)`` for each degree, with rho read as a decimal fraction."""
    frac: Fraction = check_rho(rho)
    num, den = frac.numerator, frac.denominator
    deg = np.asarray(degrees, dtype=np.int64)
    if deg.size == 0:
        return deg.copy()
    if den < _INT_LIMIT and num * int(deg.max()) < _INT_LIMIT:
        return -((-num * deg) // den)
    return np.array([-((-num * int(d)) // den) for d in deg.ravel()], dtype=np.int64).reshape(deg.shape)


def same_colour_counts(graph: Graph, colours: np.ndarray) -> np.ndarray:
    """For every vertex, the number of neighbours sharing its (non-zero) colour."""
    src, dst = graph.sources, graph.indices
    cs = colours[src]
    mask = (cs == colours[dst]) & (cs != 0)
    return np.bincount(src[mask], minlength=graph.n)


def same_colour_degree(graph: Graph, colouring, v: int) -> int:
    colouring = check_colouring(graph, colouring)
    v = check_vertex(v, graph.n)
    c = colouring.colours
    if c[v] == 0:
        raise ContractViolation(f"vertex {v} is uncoloured")
    return int(np.count_nonzero(c[graph.neighbours(v)] == c[v]))


def is_rho_happy(graph: Graph, colouring, v: int, rho) -> bool:
    """True iff coloured vertex ``v`` has at least ``ceil(rho * deg(v))`` same-colour neighbours."""
    same = same_colour_degree(graph, colouring, v)
    thr = happy_thresholds(np.array([graph.degree(v)]), rho)[0]
    return bool(same >= thr)


def happiness(graph: Graph, colouring, rho) -> HappinessReport:
    """Count rho-happy vertices; uncoloured vertices are reported unhappy.

    >>> g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    >>> happiness(g, [1, 1, 2], 0.5).count
    2
    """
    colouring = check_colouring(graph, colouring)
    c = colouring.colours
    thr = happy_thresholds(graph.degrees, rho)
    happy = (same_colour_counts(graph, c) >= thr) & (c != 0)
    count = int(happy.sum())
    return HappinessReport(_readonly(happy), count, count / graph.n if graph.n else 1.0)

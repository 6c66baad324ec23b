"""Seeded stochastic block model instances G(n, k, p, q).

Random streams
--------------
Every draw comes from numpy's PCG64 bit generator seeded through
``SeedSequence``. The edge stream of an instance with seed ``s`` is
``SeedSequence([s, 0])`` and its precolouring stream is
``SeedSequence([s, 1])``, so the two can be regenerated independently.
Edges are sampled by visiting unordered pairs ``(u, v)``, ``u < v``, in
lexicographic order and drawing one uniform variate per pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Integral

import numpy as np

from .exceptions import ParameterError
from .graph import Graph, PartialColouring

__all__ = [
    "SbmParams",
    "CommunityAssignment",
    "Instance",
    "block_assignment",
    "sample_graph",
    "sample_precolouring",
    "induced_colouring",
    "make_instance",
    "stream",
]

_EDGE_STREAM = 0
_PRECOLOUR_STREAM = 1
_SEED_LIMIT = 2**64


def stream(seed: int, *keys: int) -> np.random.Generator:
    """PCG64 generator for the sub-stream ``keys`` of ``seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), *keys])))


def _is_int(x) -> bool:
    return isinstance(x, Integral) and not isinstance(x, bool)


@dataclass(frozen=True)
class SbmParams:
    """Parameters of one SBM instance.

    The constructor enforces ``0 < q < p <= 1``. :meth:`relaxed` builds
    parameter sets at the probability endpoints (``q = 0`` or ``q = p``),
    which make sampling deterministic and are used for fixtures.
    """

    n: int
    k: int
    p: float
    q: float
    pcc: int = 0
    seed: int = 0
    relaxed_bounds: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("n", "k", "pcc", "seed"):
            if not _is_int(getattr(self, name)):
                raise ParameterError(f"{name} must be an integer, got {getattr(self, name)!r}")
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "q", float(self.q))
        n, k, p, q = self.n, self.k, self.p, self.q
        if n < 2:
            raise ParameterError(f"n must be at least 2, got {n}")
        if not 2 <= k <= n:
            raise ParameterError(f"k must satisfy 2 <= k <= n, got k={k}, n={n}")
        if self.relaxed_bounds:
            if not 0.0 <= q <= p <= 1.0:
                raise ParameterError(f"need 0 <= q <= p <= 1, got p={p}, q={q}")
        elif not 0.0 < q < p <= 1.0:
            raise ParameterError(f"need 0 < q < p <= 1, got p={p}, q={q}")
        if not 0 <= self.pcc <= n // k:
            raise ParameterError(f"pcc must lie in 0..{n // k}, got {self.pcc}")
        if not 0 <= self.seed < _SEED_LIMIT:
            raise ParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @classmethod
    def relaxed(cls, n, k, p, q, pcc=0, seed=0) -> "SbmParams":
        return cls(n, k, p, q, pcc, seed, relaxed_bounds=True)


@dataclass(frozen=True, eq=False)
class CommunityAssignment:
    """Ground-truth community label (1..k) of every vertex."""

    communities: np.ndarray
    k: int

    def __post_init__(self):
        c = np.array(self.communities, dtype=np.int64, copy=True)
        if c.ndim != 1 or (c.size and (c.min() < 1 or c.max() > self.k)):
            raise ParameterError(f"community labels must lie in 1..{self.k}")
        c.setflags(write=False)
        object.__setattr__(self, "communities", c)

    def __len__(self) -> int:
        return len(self.communities)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommunityAssignment):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.communities, other.communities)

    def sizes(self) -> np.ndarray:
        return np.bincount(self.communities, minlength=self.k + 1)[1:]

    def members(self, label: int) -> np.ndarray:
        return np.flatnonzero(self.communities == label)


@dataclass(frozen=True)
class Instance:
    """A generated graph with its communities and precolouring."""

    graph: Graph
    assignment: CommunityAssignment
    precolouring: PartialColouring
    params: SbmParams | None = None


def block_assignment(n: int, k: int) -> CommunityAssignment:
    """Contiguous near-equal blocks; the first ``n mod k`` communities get one extra vertex."""
    base, extra = divmod(n, k)
    sizes = np.full(k, base, dtype=np.int64)
    sizes[:extra] += 1
    return CommunityAssignment(np.repeat(np.arange(1, k + 1), sizes), k)


def sample_graph(params: SbmParams) -> tuple[Graph, CommunityAssignment]:
    """Sample a graph from G(n, k, p, q) with contiguous communities."""
    n = params.n
    assignment = block_assignment(n, params.k)
    comm = assignment.communities
    rng = stream(params.seed, _EDGE_STREAM)
    rows, cols = [], []
    for u in range(n - 1):
        others = np.arange(u + 1, n)
        prob = np.where(comm[u + 1 :] == comm[u], params.p, params.q)
        hit = others[rng.random(n - u - 1) < prob]
        if hit.size:
            rows.append(np.full(hit.size, u, dtype=np.int64))
            cols.append(hit)
    if rows:
        edges = np.column_stack([np.concatenate(rows), np.concatenate(cols)])
    else:
        edges = np.empty((0, 2), dtype=np.int64)
    return Graph(n, edges), assignment


def sample_precolouring(assignment: CommunityAssignment, pcc: int, seed) -> PartialColouring:
    """Colour ``pcc`` uniformly chosen vertices of every community with its label."""
    sizes = assignment.sizes()
    if not _is_int(pcc) or pcc < 0:
        raise ParameterError(f"pcc must be a non-negative integer, got {pcc!r}")
    if sizes.size and pcc > sizes.min():
        raise ParameterError(f"pcc={pcc} exceeds the smallest community size {sizes.min()}")
    rng = seed if isinstance(seed, np.random.Generator) else stream(seed, _PRECOLOUR_STREAM)
    colours = np.zeros(len(assignment), dtype=np.int64)
    if pcc:
        for label in range(1, assignment.k + 1):
            chosen = rng.choice(assignment.members(label), size=pcc, replace=False)
            colours[chosen] = label
    return PartialColouring(colours, assignment.k)


def induced_colouring(assignment: CommunityAssignment) -> PartialColouring:
    """The colouring that gives every vertex its community label."""
    return PartialColouring(assignment.communities, assignment.k)


def make_instance(params: SbmParams) -> Instance:
    graph, assignment = sample_graph(params)
    pre = sample_precolouring(assignment, params.pcc, params.seed)
    return Instance(graph, assignment, pre, params)

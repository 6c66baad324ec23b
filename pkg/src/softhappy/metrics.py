"""Evaluation of solver outputs: happiness and community recovery."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields

import numpy as np

from . import theory
from .exceptions import ContractViolation
from .graph import Graph, PartialColouring, happiness
from .sbm import CommunityAssignment, SbmParams

__all__ = ["EvalRecord", "CSV_FIELDS", "community_accuracy", "evaluate"]


def community_accuracy(colouring, assignment: CommunityAssignment) -> float:
    """Fraction of vertices whose colour equals their community label.

    Labels are compared directly (no permutation matching); uncoloured
    vertices count as misses.

    >>> from softhappy.sbm import CommunityAssignment
    >>> community_accuracy([1, 1, 1, 2], CommunityAssignment([1, 1, 2, 2], 2))
    0.75
    """
    colours = colouring.colours if isinstance(colouring, PartialColouring) else np.asarray(colouring)
    labels = assignment.communities
    if len(colours) != len(labels):
        raise ContractViolation(
            f"colouring has {len(colours)} entries but the assignment has {len(labels)}"
        )
    if not len(labels):
        return 1.0
    return float(np.count_nonzero(colours == labels)) / len(labels)


@dataclass
class EvalRecord:
    algo: str
    n: int
    k: int
    p: float | None
    q: float | None
    pcc: int | None
    seed: int | None
    rho: float
    happy_count: int
    happy_ratio: float
    complete_happy: bool
    community_accuracy: float | None
    elapsed_ms: float
    timed_out: bool
    xi: float | None
    rho_below_xi: bool | None

    def to_dict(self) -> dict:
        return asdict(self)


CSV_FIELDS = tuple(f.name for f in fields(EvalRecord))


def evaluate(
    graph: Graph,
    assignment: CommunityAssignment | None,
    partial,
    result,
    rho,
    params: SbmParams | None = None,
    algo: str = "",
) -> EvalRecord:
    """Build the evaluation record for one solver run.

    ``partial`` is the precolouring the solver started from; it is checked
    against the output so a solver that overwrote a precoloured vertex is
    caught here. ``xi`` uses the default ``epsilon = n**-2`` and is only
    available when model parameters are known.
    """
    out = result.colouring
    pre = partial.colours if isinstance(partial, PartialColouring) else np.asarray(partial)
    fixed = pre != 0
    if np.any(out.colours[fixed] != pre[fixed]):
        raise ContractViolation("solver output changed a precoloured vertex")
    report = happiness(graph, out, rho)
    rho_f = float(rho)
    if params is not None:
        xi = theory.xi(params.n, params.k, params.p, params.q)
        below = rho_f < xi
    else:
        xi, below = None, None
    return EvalRecord(
        algo=algo,
        n=graph.n,
        k=out.k,
        p=None if params is None else params.p,
        q=None if params is None else params.q,
        pcc=None if params is None else params.pcc,
        seed=None if params is None else params.seed,
        rho=rho_f,
        happy_count=report.count,
        happy_ratio=report.ratio,
        complete_happy=report.count == graph.n,
        community_accuracy=None if assignment is None else community_accuracy(out, assignment),
        elapsed_ms=float(result.elapsed),
        timed_out=bool(result.timed_out),
        xi=xi,
        rho_below_xi=below,
    )

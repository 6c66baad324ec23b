"""Closed-form thresholds linking SBM communities to rho-happiness.

All quantities are evaluated in double precision. For the community-induced
colouring of ``G(n, k, p, q)``:

* ``phi(k, p, q, rho) = (p (e^rho - e) + q (k - 1)(e^rho - 1)) / k``
* a single vertex is rho-unhappy with probability at most
  ``epsilon_tilde = exp(n * phi)``
* the whole graph is rho-happy with probability at least
  ``(1 - epsilon_tilde) ** n``
* ``xi`` is the largest rho for which the per-vertex bound drops below a
  chosen ``epsilon``, capped by the mean-degree bound ``p / (p + (k-1) q)``;
  ``xi_tilde`` is its limit as ``n`` grows.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .exceptions import ParameterError

__all__ = [
    "ThresholdReport",
    "expected_degree",
    "theorem1_inequality_holds",
    "phi",
    "epsilon_tilde",
    "prob_lower_bound",
    "mean_degree_bound",
    "xi",
    "xi_tilde",
    "default_epsilon",
    "threshold_report",
]


def _check_model(k, p, q, n=None):
    if n is not None and n <= 0:
        raise ParameterError(f"n must be positive, got {n}")
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    if not (0.0 <= q <= 1.0 and 0.0 < p <= 1.0):
        raise ParameterError(f"need p in (0, 1] and q in [0, 1], got p={p}, q={q}")


def _check_epsilon(epsilon):
    if not 0.0 < epsilon < 1.0:
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon}")


def _check_rho(rho, *, allow_zero=True):
    ok = (0.0 <= rho <= 1.0) if allow_zero else (0.0 < rho <= 1.0)
    if not ok:
        raise ParameterError(f"rho out of range: {rho}")


def default_epsilon(n) -> float:
    return float(n) ** -2


def expected_degree(n, k, p, q) -> float:
    """Expected degree of any vertex: ``(n/k - 1) p + ((k - 1)/k) n q``."""
    _check_model(k, p, q, n)
    return (n / k - 1.0) * p + (k - 1.0) / k * n * q


def theorem1_inequality_holds(n, k, p, q, rho, epsilon) -> bool:
    """Sufficient condition for every vertex to be rho-happy with probability >= 1 - epsilon.

    True iff ``q (k-1)(e^rho - 1) + p (e^rho - e) < (k/n) ln(epsilon)``.
    """
    _check_model(k, p, q, n)
    _check_rho(rho, allow_zero=False)
    _check_epsilon(epsilon)
    er = math.exp(rho)
    lhs = q * (k - 1) * (er - 1.0) + p * (er - math.e)
    return lhs < (k / n) * math.log(epsilon)


def phi(k, p, q, rho) -> float:
    _check_model(k, p, q)
    _check_rho(rho)
    er = math.exp(rho)
    return (p * (er - math.e) + q * (k - 1) * (er - 1.0)) / k


def epsilon_tilde(n, k, p, q, rho) -> float:
    """``exp(n * phi)``; values above 1 mean the bound is vacuous."""
    _check_model(k, p, q, n)
    x = n * phi(k, p, q, rho)
    return math.exp(x) if x < 709.0 else math.inf


def prob_lower_bound(n, eps_tilde) -> float:
    """``(1 - eps_tilde) ** n`` clamped to [0, 1]."""
    if eps_tilde >= 1.0:
        return 0.0
    if eps_tilde <= 0.0:
        return 1.0
    return min(1.0, max(0.0, math.exp(n * math.log1p(-eps_tilde))))


def mean_degree_bound(k, p, q) -> float:
    """``p / (p + (k-1) q)``: above this rho the mean same-colour degree is too small."""
    _check_model(k, p, q)
    return p / (p + (k - 1) * q)


def xi(n, k, p, q, epsilon=None) -> float:
    """Finite-n threshold on rho; ``epsilon`` defaults to ``n ** -2``."""
    _check_model(k, p, q, n)
    if epsilon is None:
        epsilon = default_epsilon(n)
    _check_epsilon(epsilon)
    denom = p + (k - 1) * q
    arg = ((k / n) * math.log(epsilon) + p * math.e + (k - 1) * q) / denom
    log_branch = math.log(arg) if arg > 0.0 else -math.inf
    return max(min(log_branch, p / denom), 0.0)


def xi_tilde(k, p, q) -> float:
    """Limit of :func:`xi` as ``n`` grows with ``k``, ``p``, ``q`` fixed."""
    _check_model(k, p, q)
    denom = p + (k - 1) * q
    return min(math.log((p * math.e + (k - 1) * q) / denom), p / denom)


@dataclass(frozen=True)
class ThresholdReport:
    n: int
    k: int
    p: float
    q: float
    rho: float
    xi: float
    xi_tilde: float
    epsilon_used: float
    phi: float
    epsilon_tilde: float
    expected_degree: float
    prob_lower_bound: float
    inequality_holds: bool

    def to_dict(self) -> dict:
        return asdict(self)


def threshold_report(n, k, p, q, rho, epsilon=None) -> ThresholdReport:
    eps = default_epsilon(n) if epsilon is None else float(epsilon)
    _check_epsilon(eps)
    eps_t = epsilon_tilde(n, k, p, q, rho)
    return ThresholdReport(
        n=int(n),
        k=int(k),
        p=float(p),
        q=float(q),
        rho=float(rho),
        xi=xi(n, k, p, q, eps),
        xi_tilde=xi_tilde(k, p, q),
        epsilon_used=eps,
        phi=phi(k, p, q, rho),
        epsilon_tilde=eps_t,
        expected_degree=expected_degree(n, k, p, q),
        prob_lower_bound=prob_lower_bound(n, eps_t),
        inequality_holds=theorem1_inequality_holds(n, k, p, q, rho, eps) if rho > 0 else False,
    )

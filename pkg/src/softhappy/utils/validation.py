"""Input validation helpers shared by the estimators and functional API."""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Real

import numpy as np

from ..exceptions import ParameterError

__all__ = ["as_fraction", "check_rho", "check_seed", "check_n_colours", "check_vertex"]


def as_fraction(value) -> Fraction:
    """Read ``value`` as an exact rational.

    Floats are read through their shortest decimal representation, so
    ``0.3`` becomes ``3/10`` rather than the binary approximation.
    Strings such as ``"0.35"`` or ``"7/20"`` are accepted as well.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise ParameterError(f"expected a number, got {value!r}")
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"cannot read {value!r} as a fraction") from exc
    if isinstance(value, Real):
        f = float(value)
        if not np.isfinite(f):
            raise ParameterError(f"expected a finite number, got {value!r}")
        return Fraction(repr(f))
    raise ParameterError(f"expected a number, got {type(value).__name__}")


def check_rho(rho, *, allow_zero: bool = True) -> Fraction:
    frac = as_fraction(rho)
    lower_ok = frac >= 0 if allow_zero else frac > 0
    if not lower_ok or frac > 1:
        bound = "[0, 1]" if allow_zero else "(0, 1]"
        raise ParameterError(f"rho must lie in {bound}, got {rho!r}")
    return frac


def check_seed(seed) -> np.random.Generator:
    """Turn a seed into a PCG64 generator; ``None`` draws fresh OS entropy."""
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, Integral) or seed < 0):
        raise ParameterError(f"seed must be a non-negative integer, got {seed!r}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def check_n_colours(k) -> int:
    if isinstance(k, bool) or not isinstance(k, Integral) or k < 1:
        raise ParameterError(f"number of colours must be a positive integer, got {k!r}")
    return int(k)


def check_vertex(v, n: int) -> int:
    if isinstance(v, bool) or not isinstance(v, Integral):
        raise TypeError(f"vertex id must be an integer, got {type(v).__name__}")
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for a graph on {n} vertices")
    return int(v)

"""Parameter sweeps over SBM instances.

A sweep enumerates instance parameter sets, generates each instance, runs
every requested algorithm at every requested rho and writes one CSV row per
(instance, algorithm, rho).

Seeding rule: the ``i``-th instance of a sweep (0-based, in enumeration
order) uses graph seed ``base_seed + i``. In ``random`` mode its parameters
are drawn from ``SeedSequence([base_seed, 2, i])``. Solvers are seeded with
the instance seed. Every row therefore carries everything needed to rebuild
its instance.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from pathlib import Path

import numpy as np

from .exceptions import ParameterError
from .io import format_value, read_rows, record_row, write_records
from .metrics import CSV_FIELDS, evaluate
from .sbm import SbmParams, induced_colouring, make_instance, stream
from .solvers import SOLVERS, SolveResult, SolverConfig

__all__ = ["ExperimentConfig", "PRESETS", "ALGORITHMS", "instance_params", "run_instance", "run_experiment"]

log = logging.getLogger(__name__)

ALGORITHMS = ("greedy", "ngc", "lmc", "growth", "community")
# outputs of these do not depend on rho, so one run serves every rho
_RHO_FREE = {"lmc", "community"}
_PARAM_STREAM = 2
_KEY_FIELDS = ("algo", "n", "k", "p", "q", "pcc", "seed", "rho")


def _rng_grid(start, stop, step):
    return [round(x, 10) for x in np.arange(start, stop + step / 2, step)]


@dataclass(frozen=True)
class ExperimentConfig:
    """Sweep definition.

    In ``grid`` mode ``n``, ``k``, ``p``, ``q``, ``pcc`` are lists whose
    Cartesian product is run ``instances`` times. In ``random`` mode each of
    them is either a list (uniform choice) or a ``[low, high]`` pair given
    through the ``*_range`` fields, and ``instances`` parameter sets are
    drawn. ``q`` may instead be given as ``q_fraction`` (``q = f * p``);
    ``q_range`` is likewise expressed as fractions of ``p``.
    Combinations with ``q > q_max_fraction * p`` are rejected, or skipped
    when ``skip_invalid_q`` is set (the benchmark grid lists q values up to
    the largest p and keeps only those within p/2).

    ``rho`` lists are evaluated in full on every instance; ``rho_range``
    instead draws one rho per instance.

    ``deterministic`` switches the solvers to lowest-id choices. Either it
    or ``timings=False`` writes ``elapsed_ms`` as 0 so that reruns produce
    byte-identical files.
    """

    mode: str = "grid"
    n: tuple = (1000,)
    k: tuple = (2,)
    p: tuple = (0.5,)
    q: tuple | None = None
    q_fraction: tuple | None = None
    pcc: tuple = (1,)
    rho: tuple | None = (0.5,)
    n_range: tuple | None = None
    k_range: tuple | None = None
    p_range: tuple | None = None
    q_range: tuple | None = None
    pcc_range: tuple | None = None
    rho_range: tuple | None = None
    q_max_fraction: float = 0.5
    skip_invalid_q: bool = False
    instances: int = 1
    base_seed: int = 0
    time_limit_ms: float = 40_000
    algorithms: tuple = ALGORITHMS
    output: str = "results.csv"
    deterministic: bool = False
    timings: bool = True
    jobs: int = 1

    def __post_init__(self):
        for name in ("n", "k", "p", "q", "q_fraction", "pcc", "rho", "algorithms",
                     "n_range", "k_range", "p_range", "q_range", "pcc_range", "rho_range"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, tuple(value))
        self.validate()

    def validate(self) -> None:
        if self.mode not in ("grid", "random"):
            raise ParameterError(f"mode must be 'grid' or 'random', got {self.mode!r}")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ParameterError(f"unknown algorithms: {sorted(unknown)}")
        if self.instances < 1:
            raise ParameterError("instances must be at least 1")
        if self.jobs < 1:
            raise ParameterError("jobs must be at least 1")
        if self.time_limit_ms < 0:
            raise ParameterError("time_limit_ms must be >= 0")
        if (self.rho is None) == (self.rho_range is None):
            raise ParameterError("give exactly one of rho and rho_range")
        if self.q is not None and self.q_fraction is not None:
            raise ParameterError("give at most one of q and q_fraction")
        if not 0 < self.q_max_fraction < 1:
            raise ParameterError("q_max_fraction must lie in (0, 1)")
        for r in self.rho or ():
            if not 0 < r <= 1:
                raise ParameterError(f"rho values must lie in (0, 1], got {r}")
        for f in self.q_fraction or ():
            if not 0 < f <= self.q_max_fraction:
                raise ParameterError(f"q_fraction {f} outside (0, {self.q_max_fraction}]")
        if self.mode == "grid":
            if self.q is None and self.q_fraction is None:
                raise ParameterError("grid mode needs q or q_fraction")
            if self.rho is None:
                raise ParameterError("grid mode needs a rho list")
            if not self.skip_invalid_q and self.q is not None:
                for p, q in itertools.product(self.p, self.q):
                    if not 0 < q <= self.q_max_fraction * p:
                        raise ParameterError(
                            f"q={q} violates 0 < q <= {self.q_max_fraction} * p for p={p}"
                        )
        # parameter sets are checked again by SbmParams when instances are built

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = set(cls.__dataclass_fields__)
        extra = set(d) - known
        if extra:
            raise ParameterError(f"unknown config keys: {sorted(extra)}")
        return cls(**d)

    @classmethod
    def from_json(cls, path) -> "ExperimentConfig":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        return asdict(self)


GRID_Q = tuple(_rng_grid(0.01, 0.41, 0.1))
RHO_GRID = tuple(_rng_grid(0.1, 1.0, 0.1))

PRESETS = {
    # full 1,000-vertex benchmark grid
    "benchmark-grid": ExperimentConfig(
        mode="grid", n=(1000,), k=tuple(range(2, 21)), p=tuple(_rng_grid(0.1, 0.9, 0.1)),
        q=GRID_Q, skip_invalid_q=True, pcc=tuple(range(1, 11)), rho=RHO_GRID,
        instances=4, time_limit_ms=40_000,
    ),
    # mixed-size benchmark: n drawn from 200..2999
    "benchmark-mixed": ExperimentConfig(
        mode="random", n_range=(200, 2999), k_range=(2, 20), p_range=(0.0, 1.0),
        q_range=(0.0, 0.5), pcc_range=(1, 10), rho=None, rho_range=(0.0, 1.0),
        instances=28_000, time_limit_ms=120_000,
    ),
    "desk-grid": ExperimentConfig(
        mode="grid", n=(500,), k=(2, 5, 10), p=(0.3, 0.7), q_fraction=(0.1,), pcc=(5,),
        rho=RHO_GRID, instances=2, time_limit_ms=40_000,
    ),
    # desk-scale ordering check: random parameters drawn from the 1,000-vertex grid
    "ordering": ExperimentConfig(
        mode="random", n=(1000,), k=tuple(range(2, 21)), p=tuple(_rng_grid(0.1, 0.9, 0.1)),
        q=GRID_Q, pcc=tuple(range(1, 11)), rho=RHO_GRID, instances=50,
        algorithms=("greedy", "ngc", "lmc", "growth"), time_limit_ms=0, timings=False,
        base_seed=2024,
    ),
}


def _grid_params(cfg: ExperimentConfig):
    for n, k, p in itertools.product(cfg.n, cfg.k, cfg.p):
        if cfg.q_fraction is not None:
            qs = [f * p for f in cfg.q_fraction]
        else:
            qs = [q for q in cfg.q if 0 < q <= cfg.q_max_fraction * p]
        for q, pcc in itertools.product(qs, cfg.pcc):
            for _ in range(cfg.instances):
                yield n, k, p, q, pcc, None


def _draw(rng, choices, bounds, integer):
    if choices is not None:
        return choices[int(rng.integers(len(choices)))]
    lo, hi = bounds
    if integer:
        return int(rng.integers(lo, hi + 1))
    # uniform on (lo, hi]
    return float(hi - (hi - lo) * rng.random())


def _random_params(cfg: ExperimentConfig, i: int):
    rng = stream(cfg.base_seed, _PARAM_STREAM, i)
    n = _draw(rng, cfg.n if cfg.n_range is None else None, cfg.n_range, True)
    k = _draw(rng, cfg.k if cfg.k_range is None else None, cfg.k_range, True)
    while True:
        p = _draw(rng, cfg.p if cfg.p_range is None else None, cfg.p_range, False)
        cap = cfg.q_max_fraction * p
        if cfg.q_fraction is not None:
            q = _draw(rng, cfg.q_fraction, None, False) * p
        elif cfg.q_range is not None:
            lo, hi = cfg.q_range
            q = _draw(rng, None, (lo * p, min(hi, cfg.q_max_fraction) * p), False)
        else:
            allowed = [q for q in cfg.q if 0 < q <= cap]
            if not allowed:
                continue
            q = _draw(rng, allowed, None, False)
        if 0 < q < p:
            break
    pcc = _draw(rng, cfg.pcc if cfg.pcc_range is None else None, cfg.pcc_range, True)
    pcc = min(pcc, n // k)
    rho = None if cfg.rho_range is None else _draw(rng, None, cfg.rho_range, False)
    return n, k, p, q, pcc, rho


def instance_params(cfg: ExperimentConfig):
    """Yield ``(SbmParams, rho_values)`` for every instance of the sweep."""
    if cfg.mode == "grid":
        source = _grid_params(cfg)
    else:
        source = (_random_params(cfg, i) for i in range(cfg.instances))
    for i, (n, k, p, q, pcc, rho) in enumerate(source):
        params = SbmParams(int(n), int(k), float(p), float(q), int(pcc), cfg.base_seed + i)
        rhos = cfg.rho if rho is None else (rho,)
        yield params, tuple(float(r) for r in rhos)


def _row_key(values) -> tuple:
    d = dict(zip(CSV_FIELDS, values)) if not isinstance(values, dict) else values
    return tuple(d[f] for f in _KEY_FIELDS)


def _sort_key(row: list[str]):
    d = dict(zip(CSV_FIELDS, row))
    algo_rank = ALGORITHMS.index(d["algo"]) if d["algo"] in ALGORITHMS else len(ALGORITHMS)
    return (int(d["seed"]), algo_rank, float(d["rho"]))


def run_instance(cfg: ExperimentConfig, params: SbmParams, rhos, done=frozenset()) -> list[list[str]]:
    """Generate one instance and return its CSV rows (skipping keys in ``done``)."""
    inst = make_instance(params)
    rows = []
    cache: dict[str, SolveResult] = {}
    for algo in cfg.algorithms:
        for rho in rhos:
            key = tuple(
                format_value(v, f)
                for f, v in zip(_KEY_FIELDS, (algo, params.n, params.k, params.p, params.q,
                                              params.pcc, params.seed, rho))
            )
            if key in done:
                continue
            if algo in cache:
                result = cache[algo]
            elif algo == "community":
                t0 = time.perf_counter()
                col = induced_colouring(inst.assignment)
                result = SolveResult(col, 0, (time.perf_counter() - t0) * 1000.0)
            else:
                config = SolverConfig(
                    rho=rho,
                    seed=params.seed,
                    time_limit=cfg.time_limit_ms,
                    deterministic_mode=cfg.deterministic,
                )
                result = SOLVERS[algo](inst.graph, inst.precolouring, config)
            if algo in _RHO_FREE:
                cache[algo] = result
            partial = inst.precolouring if algo != "community" else np.zeros(params.n, dtype=np.int64)
            rec = evaluate(inst.graph, inst.assignment, partial, result, rho, params, algo)
            if cfg.deterministic or not cfg.timings:
                rec = replace(rec, elapsed_ms=0.0)
            rows.append(record_row(rec))
    return rows


def _run_instance_job(args):
    cfg, params, rhos, done = args
    return run_instance(cfg, params, rhos, done)


def run_experiment(cfg: ExperimentConfig, output=None, progress=None) -> Path:
    """Run the sweep and write the canonical CSV to ``output`` (or ``cfg.output``).

    Rows already present in the output file are kept and not recomputed.
    While running, rows are appended to ``<output>.partial``; a trailing
    truncated row there is discarded on resume. The final file is written
    atomically in canonical order.
    """
    out = Path(output or cfg.output)
    partial = out.with_name(out.name + ".partial")
    existing = []
    for src in (out, partial):
        if src.exists():
            existing.extend(read_rows(src))
    rows = {_row_key(r): [r[f] for f in CSV_FIELDS] for r in existing}
    done = frozenset(rows)
    if done:
        log.info("resuming: %d rows already present", len(done))

    jobs = [(cfg, params, rhos, done) for params, rhos in instance_params(cfg)]
    with open(partial, "w", newline="", encoding="ascii") as fh:
        write_records(fh, rows.values())
        fh.flush()

        def consume(new_rows):
            for row in new_rows:
                rows[_row_key(row)] = row
            write_records(fh, new_rows, header=False)
            fh.flush()
            if progress is not None:
                progress(len(new_rows))

        if cfg.jobs > 1:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                for new_rows in pool.map(_run_instance_job, jobs):
                    consume(new_rows)
        else:
            for job in jobs:
                consume(_run_instance_job(job))

    tmp = out.with_name(out.name + ".tmp")
    write_records(tmp, sorted(rows.values(), key=_sort_key))
    os.replace(tmp, out)
    partial.unlink()
    return out

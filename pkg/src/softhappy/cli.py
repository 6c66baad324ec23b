"""Command line front end: ``softhappy {generate,solve,thresholds,experiment,oracle}``.

Exit codes: 0 success, 1 validation error, 2 I/O error, 3 oracle refusal.
Default output locations are relative to ``$SOFTHAPPY_OUTPUT_DIR`` (or the
working directory).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import theory
from .exceptions import ContractViolation, InstanceFormatError, OracleRefusal, ParameterError
from .experiment import ALGORITHMS, PRESETS, ExperimentConfig, run_experiment
from .io import default_output_dir, read_instance, record_row, write_instance, write_records
from .metrics import evaluate
from .sbm import SbmParams, induced_colouring, make_instance
from .solvers import SOLVERS, SolveResult, SolverConfig, exact_oracle

EXIT_OK, EXIT_VALIDATION, EXIT_IO, EXIT_ORACLE = 0, 1, 2, 3

log = logging.getLogger("softhappy")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def _out_path(arg, default_name: str) -> Path:
    return Path(arg) if arg else default_output_dir() / default_name


def cmd_generate(args) -> int:
    params = SbmParams(args.n, args.k, args.p, args.q, args.pcc, args.seed)
    inst = make_instance(params)
    out = _out_path(args.out, f"sbm_n{args.n}_k{args.k}_seed{args.seed}.col")
    write_instance(out, inst)
    print(f"wrote {out} (n={inst.graph.n}, m={inst.graph.m})")
    return EXIT_OK


def _solve_once(inst, algo, args):
    if algo == "community":
        if inst.assignment is None:
            raise ParameterError("instance has no community labels")
        t0 = time.perf_counter()
        col = induced_colouring(inst.assignment)
        return SolveResult(col, 0, (time.perf_counter() - t0) * 1000.0), None
    if algo == "oracle":
        t0 = time.perf_counter()
        col, best = exact_oracle(inst.graph, inst.precolouring, args.rho, inst.precolouring.k)
        return SolveResult(col, best, (time.perf_counter() - t0) * 1000.0), best
    config = SolverConfig(
        rho=args.rho,
        seed=args.seed,
        time_limit=args.time_limit,
        deterministic_mode=args.deterministic,
    )
    return SOLVERS[algo](inst.graph, inst.precolouring, config), None


def cmd_solve(args) -> int:
    inst = read_instance(args.graph, k=args.k)
    result, best = _solve_once(inst, args.algo, args)
    partial = inst.precolouring.colours * 0 if args.algo == "community" else inst.precolouring
    rec = evaluate(inst.graph, inst.assignment, partial, result, args.rho, inst.params, args.algo)
    if args.format == "json":
        payload = rec.to_dict()
        if best is not None:
            payload["max_happy"] = best
        text = json.dumps(payload, indent=2) + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    elif args.out:
        write_records(args.out, [rec])
    else:
        write_records(sys.stdout, [record_row(rec)])
    if args.colouring_out:
        Path(args.colouring_out).write_text(
            "".join(f"{v + 1} {c}\n" for v, c in enumerate(result.colouring.colours.tolist()))
        )
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = read_instance(args.graph, k=args.k)
    col, best = exact_oracle(inst.graph, inst.precolouring, args.rho, inst.precolouring.k)
    print(json.dumps({"max_happy": best, "n": inst.graph.n, "colouring": col.colours.tolist()}))
    return EXIT_OK


def cmd_thresholds(args) -> int:
    report = theory.threshold_report(args.n, args.k, args.p, args.q, args.rho, args.epsilon)
    d = report.to_dict()
    if args.json:
        print(json.dumps(d))
    else:
        width = max(map(len, d))
        for key, value in d.items():
            print(f"{key:<{width}}  {value}")
    return EXIT_OK


def _experiment_config(args) -> ExperimentConfig:
    if args.config:
        base = ExperimentConfig.from_json(args.config).to_dict()
    else:
        base = PRESETS[args.preset].to_dict()
    overrides = {
        "output": args.out,
        "jobs": args.jobs,
        "instances": args.instances,
        "base_seed": args.base_seed,
        "time_limit_ms": args.time_limit,
        "algorithms": args.algos,
    }
    base.update({k: v for k, v in overrides.items() if v is not None})
    if args.deterministic:
        base["deterministic"] = True
    if args.no_timings:
        base["timings"] = False
    if args.out is None and not args.config:
        base["output"] = str(default_output_dir() / f"{args.preset}.csv")
    return ExperimentConfig.from_dict(base)


def cmd_experiment(args) -> int:
    cfg = _experiment_config(args)
    out = run_experiment(cfg)
    print(f"wrote {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="softhappy", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="sample an SBM instance and write it to a file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--p", type=float, required=True)
    g.add_argument("--q", type=float, required=True)
    g.add_argument("--pcc", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="instance file path")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="run one algorithm on an instance file")
    s.add_argument("graph")
    s.add_argument("--algo", required=True, choices=[*SOLVERS, "community", "oracle"])
    s.add_argument("--rho", type=float, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--time-limit", type=float, default=40_000, help="milliseconds, 0 = unlimited")
    s.add_argument("--deterministic", action="store_true")
    s.add_argument("--k", type=int, help="number of colours (defaults to the file's k)")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--out", help="write the record here instead of stdout")
    s.add_argument("--colouring-out", help="also write '<vertex> <colour>' lines (1-based)")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="exhaustive optimum for a tiny instance")
    o.add_argument("graph")
    o.add_argument("--rho", type=float, required=True)
    o.add_argument("--k", type=int)
    o.set_defaults(func=cmd_oracle)

    t = sub.add_parser("thresholds", help="print the closed-form thresholds")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--p", type=float, required=True)
    t.add_argument("--q", type=float, required=True)
    t.add_argument("--rho", type=float, required=True)
    t.add_argument("--epsilon", type=float, help="defaults to n**-2")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_thresholds)

    e = sub.add_parser("experiment", help="run a parameter sweep to CSV")
    src = e.add_mutually_exclusive_group()
    src.add_argument("--preset", choices=sorted(PRESETS), default="desk-grid")
    src.add_argument("--config", help="JSON file with ExperimentConfig fields")
    e.add_argument("--out")
    e.add_argument("--jobs", type=int)
    e.add_argument("--instances", type=int)
    e.add_argument("--base-seed", type=int)
    e.add_argument("--time-limit", type=float, help="milliseconds, 0 = unlimited")
    e.add_argument("--algos", nargs="+", choices=ALGORITHMS)
    e.add_argument("--deterministic", action="store_true", help="lowest-id choices; implies --no-timings")
    e.add_argument("--no-timings", action="store_true", help="write elapsed_ms as 0")
    e.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except OracleRefusal as exc:
        print(f"softhappy: oracle refused: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (InstanceFormatError, OSError) as exc:
        print(f"softhappy: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ParameterError, ContractViolation, ValueError) as exc:
        print(f"softhappy: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())

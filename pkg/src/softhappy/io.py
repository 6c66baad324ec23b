"""Instance files and result tables.

Instance files are DIMACS edge files whose comment lines carry the SBM
metadata::

    c happy-sbm v1
    c params n=14 k=3 p=0.7 q=0.06 pcc=1 seed=42
    p edge 14 26
    e 1 2
    ...
    c community 1 1
    ...
    c precolour 3 1

Vertices are 1-based on disk. Edges are written once with ``u < v`` in
lexicographic order; community and precolour lines are sorted by vertex.
The ``c params`` line is omitted for graphs that did not come from the
generator. Plain DIMACS files (no metadata) are read as well.
"""

from __future__ import annotations

import csv
import io
import os
from pathlib import Path

import numpy as np

from .exceptions import InstanceFormatError
from .graph import Graph, PartialColouring
from .metrics import CSV_FIELDS, EvalRecord
from .sbm import CommunityAssignment, Instance, SbmParams

__all__ = [
    "format_instance",
    "write_instance",
    "parse_instance",
    "read_instance",
    "format_value",
    "record_row",
    "write_records",
    "read_rows",
]

MAGIC = "c happy-sbm v1"


def _fmt_float(x: float) -> str:
    return repr(float(x))


def format_instance(inst: Instance) -> str:
    g, params = inst.graph, inst.params
    lines = [MAGIC]
    if params is not None:
        lines.append(
            f"c params n={params.n} k={params.k} p={_fmt_float(params.p)} "
            f"q={_fmt_float(params.q)} pcc={params.pcc} seed={params.seed}"
        )
    lines.append(f"p edge {g.n} {g.m}")
    edges = g.edges() + 1
    lines.extend(f"e {u} {v}" for u, v in edges.tolist())
    if inst.assignment is not None:
        lines.extend(
            f"c community {v} {c}"
            for v, c in enumerate(inst.assignment.communities.tolist(), start=1)
        )
    if inst.precolouring is not None:
        cols = inst.precolouring.colours
        lines.extend(f"c precolour {v + 1} {cols[v]}" for v in np.flatnonzero(cols).tolist())
    return "\n".join(lines) + "\n"


def write_instance(path, inst: Instance) -> Path:
    path = Path(path)
    try:
        path.write_text(format_instance(inst), encoding="ascii", newline="\n")
    except OSError as exc:
        raise OSError(f"cannot write instance file {path}: {exc.strerror or exc}") from exc
    return path


def _kv(tokens, lineno) -> dict:
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep:
            raise InstanceFormatError(f"line {lineno}: expected key=value, got {tok!r}")
        out[key] = value
    return out


def parse_instance(text: str, *, k: int | None = None) -> Instance:
    """Parse instance text; ``k`` overrides the colour count when given."""
    n = None
    edges = []
    communities = {}
    precolours = {}
    params_kv = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if not tok:
            continue
        try:
            head = tok[0]
            if head == "c":
                if len(tok) >= 2 and tok[1] == "params":
                    params_kv = _kv(tok[2:], lineno)
                elif len(tok) == 4 and tok[1] == "community":
                    communities[int(tok[2])] = int(tok[3])
                elif len(tok) == 4 and tok[1] == "precolour":
                    precolours[int(tok[2])] = int(tok[3])
            elif head == "p":
                if len(tok) != 4:
                    raise InstanceFormatError(f"line {lineno}: malformed problem line")
                n = int(tok[2])
            elif head == "e":
                if len(tok) != 3:
                    raise InstanceFormatError(f"line {lineno}: malformed edge line")
                edges.append((int(tok[1]), int(tok[2])))
            else:
                raise InstanceFormatError(f"line {lineno}: unknown line type {head!r}")
        except ValueError as exc:
            if isinstance(exc, InstanceFormatError):
                raise
            raise InstanceFormatError(f"line {lineno}: {exc}") from exc
    if n is None:
        raise InstanceFormatError("missing 'p edge <n> <m>' line")

    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2) - 1
    if e.size and (e.min() < 0 or e.max() >= n):
        raise InstanceFormatError("edge endpoint outside 1..n")
    try:
        graph = Graph(n, e)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from exc
    params = None
    if params_kv is not None:
        try:
            params = SbmParams(
                n=int(params_kv["n"]),
                k=int(params_kv["k"]),
                p=float(params_kv["p"]),
                q=float(params_kv["q"]),
                pcc=int(params_kv.get("pcc", 0)),
                seed=int(params_kv.get("seed", 0)),
                relaxed_bounds=True,
            )
        except (KeyError, ValueError) as exc:
            raise InstanceFormatError(f"bad params line: {exc}") from exc
        if params.n != n:
            raise InstanceFormatError(f"params n={params.n} disagrees with p-line n={n}")

    labels = [*communities.values(), *precolours.values()]
    if k is None:
        k = params.k if params is not None else max(labels, default=1)
    for v in (*communities, *precolours):
        if not 1 <= v <= n:
            raise InstanceFormatError(f"vertex {v} outside 1..{n}")

    assignment = None
    if communities:
        if len(communities) != n:
            raise InstanceFormatError(f"{len(communities)} community lines for {n} vertices")
        comm = np.zeros(n, dtype=np.int64)
        for v, c in communities.items():
            comm[v - 1] = c
        assignment = CommunityAssignment(comm, k)
    colours = np.zeros(n, dtype=np.int64)
    for v, c in precolours.items():
        colours[v - 1] = c
    try:
        precolouring = PartialColouring(colours, k)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from exc
    return Instance(graph, assignment, precolouring, params)


def read_instance(path, *, k: int | None = None) -> Instance:
    path = Path(path)
    try:
        text = path.read_text(encoding="ascii")
    except OSError as exc:
        raise OSError(f"cannot read instance file {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise InstanceFormatError(f"{path}: not an ASCII DIMACS file") from exc
    try:
        return parse_instance(text, k=k)
    except InstanceFormatError as exc:
        raise InstanceFormatError(f"{path}: {exc}") from exc


def format_value(value, name: str = "") -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if name == "elapsed_ms":
        return f"{float(value):.3f}"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def record_row(record: EvalRecord) -> list[str]:
    d = record.to_dict()
    return [format_value(d[f], f) for f in CSV_FIELDS]


def write_records(path_or_buffer, records, *, header: bool = True) -> None:
    """Write records as CSV rows with the fixed results header."""
    own = not hasattr(path_or_buffer, "write")
    fh = open(path_or_buffer, "w", newline="", encoding="ascii") if own else path_or_buffer
    try:
        w = csv.writer(fh, lineterminator="\n")
        if header:
            w.writerow(CSV_FIELDS)
        for rec in records:
            w.writerow(rec if isinstance(rec, list) else record_row(rec))
    finally:
        if own:
            fh.close()


def read_rows(path) -> list[dict]:
    """Read a results CSV, dropping a trailing row cut short by an interrupted write."""
    text = Path(path).read_text(encoding="ascii")
    if not text:
        return []
    if not text.endswith("\n"):
        text = text[: text.rfind("\n") + 1]
    rows = list(csv.DictReader(io.StringIO(text)))
    if rows and tuple(rows[0].keys()) != CSV_FIELDS:
        raise InstanceFormatError(f"{path}: unexpected results header")
    return [r for r in rows if None not in r.values() and len(r) == len(CSV_FIELDS)]


def default_output_dir() -> Path:
    return Path(os.environ.get("SOFTHAPPY_OUTPUT_DIR", "."))

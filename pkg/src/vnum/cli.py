"""Command line front end.

Subcommands: report, symbolic-power, catalog-verify, batch.  Exit codes:
0 success, 1 input error, 2 internal cross-route disagreement, 3 fixture or
assertion failure.  Output is deterministic: identical inputs and flags
produce byte-identical output at any parallelism level.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .catalog import CM36, cm36_vertex_split
from .classify import CrossRouteError, full_report, InvariantReport
from .clutters import ZeroIdealError
from .complexes import Field
from .formats import InputDocument, ParseError, parse_edge_list, parse_graph6
from .monomials import edge_ideal, symbolic_power

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CROSS_ROUTE = 2
EXIT_ASSERTION = 3

SCHEMA = "vnum/1"


def _parse_fields(spec: str) -> tuple[Field, ...]:
    if spec == "q":
        return (Field.Q,)
    if spec == "f2":
        return (Field.F2,)
    if spec == "both":
        return (Field.Q, Field.F2)
    raise ParseError(f"unknown field {spec!r}; use q, f2, or both")


def _report_dict(rep: InvariantReport) -> dict:
    out: dict = {
        "schema": SCHEMA,
        "name": rep.name,
        "kind": rep.kind,
        "vertex_count": rep.vertex_count,
        "edge_count": rep.edge_count,
        "v": rep.v,
        "i": rep.i_dom,
        "gamma": rep.gamma,
        "beta0": rep.beta0,
        "alpha0": rep.alpha0,
        "dim": rep.dim,
    }
    for field, reg in rep.reg_by_field.items():
        out[f"reg_{field.value}"] = reg
    out["well_covered"] = rep.well_covered
    out["one_well_covered"] = rep.one_well_covered
    out["w2"] = rep.w2
    out["edge_critical"] = rep.edge_critical
    for field, val in rep.cm_by_field.items():
        out[f"cm_{field.value}"] = val
    for field, val in rep.symbolic_square_cm_by_field.items():
        out[f"symbolic_square_cm_{field.value}"] = val
    out["vertex_decomposable"] = rep.vertex_decomposable
    out["linear_resolution"] = rep.linear_resolution
    out["has_isolated_vertices"] = rep.has_isolated_vertices
    out["v_witness"] = list(rep.v_witness)
    out["edge_critical_violation"] = (
        list(rep.edge_critical_violation) if rep.edge_critical_violation else None
    )
    return out


def _cell(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ",".join(str(v) for v in value) if value else "-"
    return str(value)


def _tsv_lines(dicts: Sequence[dict]) -> list[str]:
    keys: list[str] = []
    for d in dicts:
        for k in d:
            if k not in keys:
                keys.append(k)
    lines = ["\t".join(keys)]
    for d in dicts:
        lines.append("\t".join(_cell(d.get(k)) for k in keys))
    return lines


def _load_document(path: str) -> InputDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    name = os.path.basename(path)
    if text.lstrip().startswith(("graph", "clutter", "#")):
        return parse_edge_list(text, name=name)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) == 1:
        return parse_graph6(lines[0], name=name)
    raise ParseError(f"{path}: expected an edge-list document or one graph6 line")


def cmd_report(args: argparse.Namespace) -> int:
    fields = _parse_fields(args.field)
    doc = _load_document(args.file)
    rep = full_report(
        doc.to_clutter(), fields, name=doc.name, oracle_cap=args.oracle_cap
    )
    data = _report_dict(rep)
    if args.json:
        print(json.dumps(data, indent=2))
    elif args.tsv:
        print("\n".join(_tsv_lines([data])))
    else:
        for k, v in data.items():
            print(f"{k}: {_cell(v)}")
    return EXIT_OK


def cmd_symbolic_power(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise ParseError("the power must be at least 1")
    doc = _load_document(args.file)
    c = doc.to_clutter()
    if not c.has_edges():
        raise ZeroIdealError("symbolic powers of the zero ideal are undefined")
    power = symbolic_power(c, args.k)
    for g in power.generators:
        print(g)
    return EXIT_OK


def cmd_catalog_verify(args: argparse.Namespace) -> int:
    if args.table:
        if args.table != "cm36":
            raise ParseError(f"unknown table {args.table!r}")
        return _verify_cm36()
    if args.edge_critical:
        return _scan_edge_critical(args.edge_critical)
    raise ParseError("use --table cm36 or --edge-critical <graph6-file>")


def _verify_cm36() -> int:
    from .classify import is_edge_critical, symbolic_square_cm

    failures = []
    for fix in CM36:
        g = fix.graph()
        ok_cm = symbolic_square_cm(g, Field.Q)
        ok_ec = is_edge_critical(g)
        status = "pass" if ok_cm and ok_ec else "FAIL"
        if status == "FAIL":
            failures.append(fix.label)
        print(
            f"{fix.label}\tvertices={fix.vertex_count}\tedges={len(fix.edges)}"
            f"\tsymbolic_square_cm_Q={_cell(ok_cm)}\tedge_critical={_cell(ok_ec)}"
            f"\t{status}"
        )
    small, nine = cm36_vertex_split()
    print(f"total: {len(CM36)} fixtures, split {small} + {nine}")
    if failures:
        print("failing fixtures: " + ", ".join(failures))
        return EXIT_ASSERTION
    if (small, nine) != (19, 17):
        print("unexpected vertex-count split")
        return EXIT_ASSERTION
    print(f"{len(CM36)} pass")
    return EXIT_OK


def _scan_edge_critical(path: str) -> int:
    from .classify import is_edge_critical

    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    counts: dict[int, int] = {}
    total = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        doc = parse_graph6(line, name=f"line {lineno}")
        g = doc.to_clutter()
        total += 1
        if g.vertex_count >= 2 and is_edge_critical(g):
            counts[g.vertex_count] = counts.get(g.vertex_count, 0) + 1
    for n in sorted(counts):
        print(f"vertices={n}\tedge_critical={counts[n]}")
    grand = sum(v for n, v in counts.items() if 2 <= n <= 9)
    nine = counts.get(9, 0)
    print(
        f"scanned {total} graphs; edge-critical with 2..9 vertices: {grand}, "
        f"of which {nine} have 9 vertices"
    )
    return EXIT_OK


def _batch_worker(task: tuple[int, str, str, str, int]) -> tuple[int, dict]:
    index, kind, payload, field_spec, oracle_cap = task
    fields = _parse_fields(field_spec)
    try:
        if kind == "graph6":
            doc = parse_graph6(payload, name=f"line {index + 1}")
        else:
            doc = _load_document(payload)
        rep = full_report(doc.to_clutter(), fields, name=doc.name, oracle_cap=oracle_cap)
        return index, _report_dict(rep)
    except (ParseError, ZeroIdealError, ValueError) as exc:
        return index, {"schema": SCHEMA, "name": f"line {index + 1}", "error": str(exc)}


def cmd_batch(args: argparse.Namespace) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh.read().splitlines() if ln.strip()]
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc}")
    kind = "graph6" if args.graph6 else "files"
    tasks = [
        (i, kind, line, args.field, args.oracle_cap) for i, line in enumerate(lines)
    ]
    workers = args.parallel
    env = os.environ.get("VNUM_THREADS")
    if env:
        workers = int(env)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_batch_worker, tasks))
    else:
        results = [_batch_worker(t) for t in tasks]
    rows = [row for _, row in sorted(results, key=lambda r: r[0])]
    if args.json:
        for row in rows:
            print(json.dumps(row))
    else:
        print("\n".join(_tsv_lines(rows)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vnum",
        description="Exact v-number, regularity, and Cohen-Macaulay "
        "classification of edge ideals of graphs and clutters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="full invariant report for one input")
    rep.add_argument("file")
    rep.add_argument("--field", default="q", choices=["q", "f2", "both"])
    fmt = rep.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--tsv", action="store_true")
    rep.add_argument("--oracle-cap", type=int, default=7, dest="oracle_cap")
    rep.set_defaults(func=cmd_report)

    sp = sub.add_parser("symbolic-power", help="minimal generators of I^(k)")
    sp.add_argument("file")
    sp.add_argument("k", type=int)
    sp.set_defaults(func=cmd_symbolic_power)

    cat = sub.add_parser("catalog-verify", help="check embedded or external catalogs")
    cat.add_argument("--table", choices=["cm36"])
    cat.add_argument("--edge-critical", dest="edge_critical", metavar="GRAPH6_FILE")
    cat.set_defaults(func=cmd_catalog_verify)

    bat = sub.add_parser("batch", help="report many inputs, one row each")
    bat.add_argument("file", help="file of edge-list paths, or graph6 stream with --graph6")
    bat.add_argument("--graph6", action="store_true")
    bat.add_argument("--field", default="q", choices=["q", "f2", "both"])
    bfmt = bat.add_mutually_exclusive_group()
    bfmt.add_argument("--json", action="store_true")
    bfmt.add_argument("--tsv", action="store_true", help="tab-separated (default)")
    bat.add_argument("--parallel", type=int, default=1)
    bat.add_argument("--oracle-cap", type=int, default=7, dest="oracle_cap")
    bat.set_defaults(func=cmd_batch)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ZeroIdealError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CrossRouteError as exc:
        print(f"internal cross-route disagreement: {exc}", file=sys.stderr)
        return EXIT_CROSS_ROUTE
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())

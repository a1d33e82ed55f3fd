"""``gpedim`` command line: build, solve, bound, evaluate formulas, verify.

Exit status: 0 on success or passing verification, 1 on computation errors
or failed verification, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import closed_forms as cf
from . import verify as vh
from .errors import GpedimError
from .graph import (
    NAMED_FAMILIES,
    build_generalized_petersen,
    build_named,
    load_edge_list,
    parse_gp_edge,
)
from .resolve import lower_bound_edge_dim
from .solver import SolveKind, SolveOptions, solve

WORKERS_ENV = "GPEDIM_WORKERS"


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--workers", type=_positive, default=None,
                        help=f"worker processes (default: ${WORKERS_ENV} or CPU count)")
    common.add_argument("--seed", type=int, default=vh.HarnessConfig.seed)

    p = argparse.ArgumentParser(prog="gpedim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gp = sub.add_parser("gp", parents=[common], help="emit GP(N,K)")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--k", type=int, required=True)
    out = gp.add_mutually_exclusive_group()
    out.add_argument("--dot", action="store_true")
    out.add_argument("--json", action="store_true")

    def graph_source(q, families=True):
        src = q.add_mutually_exclusive_group(required=True)
        src.add_argument("--gp", nargs=2, type=int, metavar=("N", "K"))
        src.add_argument("--input", metavar="FILE", help="edge list file, '-' for stdin")
        if families:
            src.add_argument("--family", choices=NAMED_FAMILIES)
            q.add_argument("--n", type=int, default=0)

    s = sub.add_parser("solve", parents=[common], help="exact dimension by enumeration")
    graph_source(s)
    s.add_argument("--kind", choices=[k.value for k in SolveKind], required=True)
    s.add_argument("--no-prune", action="store_true")
    s.add_argument("--max-card", type=_positive, default=None)

    b = sub.add_parser("bound", parents=[common], help="lower bounds on the edge metric dimension")
    graph_source(b, families=False)

    f = sub.add_parser("formula", parents=[common], help="evaluate closed-form representations")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--edge", metavar="LABEL", help="e.g. u0u1 or v1v3")
    f.add_argument("--source-order", action="store_true",
                   help="coordinates in the published landmark order")

    v = sub.add_parser("verify", parents=[common], help="check closed forms")
    mode = v.add_mutually_exclusive_group(required=True)
    mode.add_argument("--gp-formulas", nargs=2, type=int, metavar=("N", "K"))
    mode.add_argument("--table5", nargs="*", type=int, metavar="LO HI")
    mode.add_argument("--realization", nargs=2, type=int, metavar=("N", "K"))

    bs = sub.add_parser("basis", parents=[common], help="published basis and dimension")
    bs.add_argument("--n", type=int, required=True)
    bs.add_argument("--k", type=int, required=True)

    sub.add_parser("cells", parents=[common], help="dump every transcribed formula cell")
    return p


def _load_graph(args):
    if args.gp:
        return build_generalized_petersen(*args.gp)
    if getattr(args, "family", None):
        return build_named(args.family, args.n)
    if args.input == "-":
        return load_edge_list(sys.stdin.read())
    with open(args.input) as fh:
        return load_edge_list(fh.read())


def _emit(args, doc, text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _cmd_gp(args) -> int:
    g = build_generalized_petersen(args.n, args.k)
    if args.dot:
        sys.stdout.write(g.to_dot(f"GP_{args.n}_{args.k}"))
    elif args.json or args.format == "json":
        print(json.dumps(g.to_json()))
    else:
        sys.stdout.write(g.to_edge_list())
    return 0


def _cmd_solve(args) -> int:
    g = _load_graph(args)
    opts = SolveOptions(use_pruning=not args.no_prune, parallelism=args.workers,
                        max_cardinality=args.max_card)
    res = solve(g, args.kind, opts)
    doc = res.to_json()
    _emit(args, doc, "\n".join(f"{k}: {v}" for k, v in doc.items()))
    return 0


def _cmd_bound(args) -> int:
    rep = lower_bound_edge_dim(_load_graph(args))
    doc = rep.to_json()
    _emit(args, doc, "\n".join(f"{k}: {v}" for k, v in doc.items()))
    return 0


def _cmd_formula(args) -> int:
    g = build_generalized_petersen(args.n, args.k)
    if args.edge:
        a, b = parse_gp_edge(args.edge, args.n)
        if not g.has_edge(a, b):
            print(f"error: {args.edge} is not an edge of GP({args.n},{args.k})", file=sys.stderr)
            return 1
        edges = [g.edge_id(a, b)]
    else:
        edges = range(g.edge_count)
    lm = cf.landmark_set_gp(args.n, args.k)
    rows = []
    for e in edges:
        cell, i = cf.formula_cell(args.n, args.k, *g.edges[e])
        rep = cf.formula_representation(args.n, args.k, e, g, source_order=args.source_order)
        rows.append({"edge": g.edge_label(e), "representation": list(rep),
                     "family": cell.family, "i": i, "condition": cell.condition,
                     "source": cell.source})
    doc = {"instance": [args.n, args.k], "landmarks": [g.labels[w] for w in lm],
           "source_order": args.source_order, "edges": rows}
    text = "\n".join(f"{r['edge']:>10}  {tuple(r['representation'])}  "
                     f"[{r['source']}: {r['family']}, {r['condition']}]" for r in rows)
    _emit(args, doc, text)
    return 0


def _cmd_verify(args) -> int:
    opts = SolveOptions(parallelism=args.workers)
    if args.gp_formulas:
        rep = vh.verify_gp_formulas(*args.gp_formulas)
        text = vh.format_formula_reports([rep])
        if rep.mismatches:
            text += "\n" + "\n".join(
                f"    {m.edge}: formula {m.formula} vs BFS {m.oracle}  "
                f"[{m.source}: {m.family}, {m.condition}]" for m in rep.mismatches)
        _emit(args, rep.to_json(), text)
        return 0 if rep.passed else 1
    if args.realization:
        rows = vh.realization_table([tuple(args.realization)], opts)
        _emit(args, [r.to_json() for r in rows], vh.format_realization(rows))
        return 0 if all(r.ok for r in rows) else 1
    if len(args.table5) not in (0, 2):
        print("error: --table5 takes no arguments or LO HI", file=sys.stderr)
        return 2
    lo, hi = args.table5 or vh.HarnessConfig.table5_range
    if lo < 5 or hi > 15 or lo > hi:
        print("error: Table 5 covers 5 <= n <= 15", file=sys.stderr)
        return 2
    rows = vh.reproduce_table5(range(lo, hi + 1), opts)
    ok = all(r.ok for r in rows)
    text = vh.format_table5(rows) + f"\n{sum(r.ok for r in rows)}/{len(rows)} rows matched"
    _emit(args, [r.to_json() for r in rows], text)
    return 0 if ok else 1


def _cmd_basis(args) -> int:
    known = cf.known_dimension_gp(args.n, args.k)
    if known is None:
        doc = {"instance": [args.n, args.k], "dimension": None, "basis": None,
               "lower_bound": 3}
        text = f"GP({args.n},{args.k}): no published value (lower bound 3)"
    else:
        g = build_generalized_petersen(args.n, args.k)
        dim, basis = known
        labels = [g.labels[w] for w in basis]
        doc = {"instance": [args.n, args.k], "dimension": dim, "basis": labels}
        text = f"GP({args.n},{args.k}): dimension {dim}, basis {{{','.join(labels)}}}"
    _emit(args, doc, text)
    return 0


def _cmd_cells(args) -> int:
    cells = cf.dump_cells()
    text = "\n".join(f"{c['source']}: {c['family']}  {c['range']}  ({', '.join(c['triple'])})"
                     for c in cells)
    _emit(args, cells, text)
    return 0


COMMANDS = {"gp": _cmd_gp, "solve": _cmd_solve, "bound": _cmd_bound, "formula": _cmd_formula,
            "verify": _cmd_verify, "basis": _cmd_basis, "cells": _cmd_cells}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.workers is None:
        args.workers = _default_workers()
    try:
        return COMMANDS[args.command](args)
    except GpedimError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

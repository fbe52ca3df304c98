"""Command-line front end: tables, cross-checks, and the bijections.

Exit codes: 0 on success (and on agreement for the verification commands),
1 on usage or domain errors, 2 when independently computed values disagree,
3 when a search refuses to run or runs past its node budget.  Output is
deterministic; TSV is the default, JSON is available via --format json.
The KACMAX_THREADS environment variable caps the worker processes used for
grid commands (1 forces sequential evaluation; results are always assembled
in a fixed order either way).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .maximal_weights import maximal_dominant_weights, verify_count_conjecture
from .patterns import (
    bjs_path_to_perm,
    bjs_perm_to_path,
    count_avoiding,
    format_perm,
    parse_perm,
)
from .lattice_paths import LatticePath, count_T, parse_paths, paths_to_ytuple, ytuple_to_paths
from .tuple_sets import format_x
from .young_crystal import NodeBudgetExceeded, enumerate_weight_space, parse_diagram

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2
EXIT_RESOURCE = 3

DEFAULT_NODE_BUDGET = 10**8


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; the contract here
    # reserves 2 for genuine disagreements, so route usage errors to 1
    def error(self, message):
        raise _UsageError(message)


def _worker_count() -> int:
    raw = os.environ.get("KACMAX_THREADS")
    if raw is not None and raw.strip():
        try:
            v = int(raw)
        except ValueError:
            raise _UsageError(f"KACMAX_THREADS must be an integer, got {raw!r}") from None
        if v < 1:
            raise _UsageError(f"KACMAX_THREADS must be >= 1, got {v}")
        return v
    return min(4, os.cpu_count() or 1)


def _pmap(fn, items):
    items = list(items)
    workers = _worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


# -- multiplicity backends ---------------------------------------------------

def _mult_paths(cell):
    ell, k, _n, _budget = cell
    return count_T(ell, k)


def _mult_patterns(cell):
    ell, k, _n, _budget = cell
    return count_avoiding(ell, k)


def _mult_crystal(cell):
    ell, k, n, budget = cell
    return len(enumerate_weight_space(n, k, ell, node_budget=budget))


_BACKENDS = {"paths": _mult_paths, "patterns": _mult_patterns, "crystal": _mult_crystal}
_CONJECTURAL = {"patterns"}


def _cmd_max_weights(args):
    rep = maximal_dominant_weights(args.n, args.k, args.s)
    if args.format == "json":
        _emit_json(
            {
                "n": rep.n,
                "k": rep.k,
                "s": rep.s,
                "count": rep.count,
                "weights": [list(w.m) for w in rep.weights],
            }
        )
    else:
        print("m")
        for w in rep.weights:
            print(format_x(w.m))
        print(f"count\t{rep.count}")
    return EXIT_OK


def _cmd_count(args):
    rep = maximal_dominant_weights(args.n, args.k, args.s)
    if args.format == "json":
        _emit_json(
            {
                "n": rep.n,
                "k": rep.k,
                "s": rep.s,
                "count": rep.count,
                "formula": rep.formula_count,
                "agree": rep.agree,
            }
        )
    else:
        print("n\tk\ts\tcount\tformula\tagree")
        formula = "" if rep.formula_count is None else rep.formula_count
        agree = "" if rep.agree is None else str(rep.agree).lower()
        print(f"{rep.n}\t{rep.k}\t{rep.s}\t{rep.count}\t{formula}\t{agree}")
    if rep.agree is False:
        print(f"count formula disagrees at n={rep.n}, k={rep.k}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _cmd_multiplicity(args):
    n = args.n if args.n is not None else 2 * args.ell
    if n < 2 * args.ell:
        raise _UsageError(f"need n >= {2 * args.ell} for ell={args.ell}, got {n}")
    names = list(_BACKENDS) if args.check_all else [args.oracle]
    cell = (args.ell, args.k, n, args.node_budget)
    values = {name: _BACKENDS[name](cell) for name in names}
    agree = len(set(values.values())) == 1
    if args.format == "json":
        _emit_json(
            {
                "ell": args.ell,
                "k": args.k,
                "n": n,
                "values": values,
                "conjectural": sorted(set(names) & _CONJECTURAL),
                "agree": agree,
            }
        )
    else:
        print("ell\tk\tbackend\tmultiplicity\tnote")
        for name in names:
            note = "conjectural" if name in _CONJECTURAL else ""
            print(f"{args.ell}\t{args.k}\t{name}\t{values[name]}\t{note}")
    if not agree:
        print(f"backends disagree at ell={args.ell}, k={args.k}: {values}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _cmd_table(args):
    if args.k_min > args.k_max:
        raise _UsageError(f"--k-min {args.k_min} exceeds --k-max {args.k_max}")
    ks = list(range(args.k_min, args.k_max + 1))
    ells = list(range(1, args.ell_max + 1))
    fn = _BACKENDS[args.oracle]
    cells = [(ell, k, 2 * ell, args.node_budget) for ell in ells for k in ks]
    flat = _pmap(fn, cells)
    grid = {(c[0], c[1]): v for c, v in zip(cells, flat)}
    if args.format == "json":
        _emit_json(
            {
                "oracle": args.oracle,
                "conjectural": args.oracle in _CONJECTURAL,
                "k": ks,
                "rows": [{"ell": ell, "values": [grid[(ell, k)] for k in ks]} for ell in ells],
            }
        )
    else:
        print("ell\t" + "\t".join(f"k={k}" for k in ks))
        for ell in ells:
            print(str(ell) + "\t" + "\t".join(str(grid[(ell, k)]) for k in ks))
    return EXIT_OK


def _verify_mult_cell(cell):
    ell, k = cell
    return (ell, k, count_T(ell, k), count_avoiding(ell, k))


def _cmd_verify(args):
    bad = 0
    if args.conjecture == "count":
        rows = verify_count_conjecture(args.n_max, args.k_max)
        if args.format == "json":
            _emit_json(
                {
                    "conjecture": "count",
                    "rows": [
                        {"n": n, "k": k, "count": c, "formula": f, "agree": a}
                        for n, k, c, f, a in rows
                    ],
                }
            )
        else:
            print("n\tk\tcount\tformula\tagree")
            for n, k, c, f, a in rows:
                print(f"{n}\t{k}\t{c}\t{f}\t{str(a).lower()}")
        bad = sum(1 for row in rows if not row[4])
    else:
        cells = [(ell, k) for ell in range(1, args.ell_max + 1) for k in range(2, args.k_max + 1)]
        rows = _pmap(_verify_mult_cell, cells)
        if args.format == "json":
            _emit_json(
                {
                    "conjecture": "multiplicity",
                    "rows": [
                        {"ell": ell, "k": k, "paths": p, "patterns": q, "agree": p == q}
                        for ell, k, p, q in rows
                    ],
                }
            )
        else:
            print("ell\tk\tpaths\tpatterns\tagree")
            for ell, k, p, q in rows:
                print(f"{ell}\t{k}\t{p}\t{q}\t{str(p == q).lower()}")
        bad = sum(1 for _, _, p, q in rows if p != q)
    if bad:
        print(f"{bad} grid cells disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _cmd_bijection(args):
    if args.perm is not None:
        path = bjs_perm_to_path(parse_perm(args.perm))
        print(path.moves)
    elif args.path is not None:
        perm = bjs_path_to_perm(LatticePath(args.path))
        print(format_perm(perm))
    elif args.paths is not None:
        seq = parse_paths(args.paths)
        n = args.n if args.n is not None else 2 * seq.ell
        ys = paths_to_ytuple(seq, n)
        print(";".join(str(y) for y in ys))
    else:
        ys = tuple(parse_diagram(part) for part in args.ytuple.split(";"))
        boxes = sum(y.boxes for y in ys)
        ell = args.ell if args.ell is not None else math.isqrt(boxes)
        if ell * ell != boxes:
            raise _UsageError(
                f"diagrams hold {boxes} boxes, not a filled square; pass --ell explicitly"
            )
        n = args.n if args.n is not None else 2 * ell
        print(str(ytuple_to_paths(ys, ell, n)))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="kacmax", description="Exact weight tables and multiplicities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("max-weights", help="list the maximal dominant weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    add_format(p)
    p.set_defaults(func=_cmd_max_weights)

    p = sub.add_parser("count", help="count the maximal dominant weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    add_format(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("multiplicity", help="weight multiplicity for one (ell, k)")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=None, help="defaults to 2*ell")
    p.add_argument("--oracle", choices=sorted(_BACKENDS), default="paths")
    p.add_argument("--check-all", action="store_true", help="run every backend and compare")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    add_format(p)
    p.set_defaults(func=_cmd_multiplicity)

    p = sub.add_parser("table", help="multiplicity table over an (ell, k) grid")
    p.add_argument("--ell-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--oracle", choices=sorted(_BACKENDS), default="paths")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="cross-check a conjecture over a grid")
    p.add_argument("--conjecture", choices=("count", "multiplicity"), required=True)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--ell-max", type=int, default=6)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bijection", help="convert between permutations, paths, and diagrams")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm", help="permutation, e.g. 1342 or 1,3,4,2")
    group.add_argument("--path", help="single R/U path, e.g. RRUURURU")
    group.add_argument("--paths", help="semicolon-joined path tuple")
    group.add_argument("--ytuple", help="semicolon-joined diagrams, e.g. [-2,-1];[-1]")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.set_defaults(func=_cmd_bijection)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NodeBudgetExceeded as exc:
        print(
            f"resource guard: {exc}; try --oracle paths, which needs no search",
            file=sys.stderr,
        )
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

Exit codes: 0 success / found, 1 not found (embed) or fixture failure
(verify), 2 usage or parameter error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from kgraph.constructions import make_fp, make_g, make_host, make_zycle
from kgraph.errors import KGraphError
from kgraph.extremal import ExCoQuery, ex_co_exact
from kgraph.io import emit_edge_list, read_edge_list, report_dict, write_edge_list
from kgraph.search import SearchBudget, Status, default_workers, find_embedding, find_homomorphism

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _rational(text: str) -> str:
    if "/" not in text:
        raise argparse.ArgumentTypeError(f"eta must be written a/b, got {text!r}")
    num, _, den = text.partition("/")
    if not (num.strip().lstrip("-").isdigit() and den.strip().isdigit()):
        raise argparse.ArgumentTypeError(f"eta must be written a/b with integers, got {text!r}")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgraph", description="Uniform hypergraph constructions and searches.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a hypergraph family and write it as an edge list")
    c.add_argument("--family", required=True, choices=["zycle", "fp", "host", "g"])
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--ell", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--eta", type=_rational)
    c.add_argument("--max-vertices", type=int, default=10**5)
    c.add_argument("--out", help="output path (default: standard output)")
    c.add_argument("--json", action="store_true", help="print a JSON summary including the part layout")

    a = sub.add_parser("analyze", help="codegree report for an edge-list file")
    a.add_argument("--in", dest="infile", required=True)
    a.add_argument("--json", action="store_true")

    e = sub.add_parser("embed", help="search for a copy (or homomorphic image) of a pattern in a host")
    e.add_argument("--pattern", required=True)
    e.add_argument("--host", required=True)
    e.add_argument("--hom", action="store_true", help="allow non-injective maps")
    e.add_argument("--budget-nodes", type=int)
    e.add_argument("--budget-secs", type=float)
    e.add_argument("--threads", type=int, default=None, help="parallel root branches (default: $KGRAPH_THREADS or 1)")
    e.add_argument("--json", action="store_true")

    x = sub.add_parser("exco", help="exact codegree Turán number ex_co(n, F)")
    x.add_argument("--k", type=int, required=True)
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--pattern", required=True)
    x.add_argument("--budget-nodes", type=int)
    x.add_argument("--budget-secs", type=float)
    x.add_argument("--symmetry-breaking", action="store_true")
    x.add_argument("--out", help="write the extremal witness here")
    x.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run the fixture suite")
    v.add_argument("--suite", required=True, choices=["paper-fixtures"])
    v.add_argument("--only", action="append", help="run only the fixture with this key (repeatable)")
    v.add_argument("--json", action="store_true")
    return parser


def _need(args, *names):
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise KGraphError(f"family {args.family} requires {', '.join(missing)}")


def cmd_construct(args) -> int:
    meta = {}
    if args.family == "zycle":
        _need(args, "ell")
        h = make_zycle(args.k, args.ell)
    elif args.family == "fp":
        _need(args, "p", "n")
        h, labels = make_fp(args.k, args.p, args.n)
        meta["part_of"] = list(labels.part_of)
    elif args.family == "host":
        _need(args, "r", "eta", "n")
        h, labels = make_host(args.k, args.r, args.eta, args.n, args.p)
        meta["part_sizes"] = labels.sizes()
    else:
        _need(args, "ell", "r")
        h, layout = make_g(args.k, args.ell, args.r, args.max_vertices)
        meta["blocks"] = len(layout.blocks())
    if args.out:
        write_edge_list(h, args.out)
    elif not args.json:
        sys.stdout.write(emit_edge_list(h))
    if args.json:
        print(json.dumps({"family": args.family, "k": h.k, "n": h.n, "m": h.m, "out": args.out, **meta}))
    return EXIT_OK


def cmd_analyze(args) -> int:
    h = read_edge_list(args.infile)
    rep = report_dict(h)
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        print(f"k={h.k} n={h.n} m={h.m}")
        print(f"min codegree {rep['min_codegree']} at {rep['argmin']}, max codegree {rep['max_codegree']}")
        for d, c in rep["histogram"]:
            print(f"  d={d}: {c}")
    return EXIT_OK


def _budget(args) -> SearchBudget:
    return SearchBudget(args.budget_nodes, args.budget_secs)


def cmd_embed(args) -> int:
    f = read_edge_list(args.pattern)
    h = read_edge_list(args.host)
    workers = args.threads if args.threads is not None else default_workers()
    search = find_homomorphism if args.hom else find_embedding
    out = search(f, h, _budget(args), workers=workers)
    witness = None if out.witness is None else list(out.witness.assignment)
    if args.json:
        print(json.dumps({"status": out.status.value, "witness": witness, "nodes_explored": out.nodes_explored}))
    else:
        print(out.status.value)
        if witness is not None:
            for v, x in enumerate(witness):
                print(f"{v} -> {x}")
    return {Status.FOUND: EXIT_OK, Status.NOT_FOUND: EXIT_NOT_FOUND, Status.BUDGET_EXCEEDED: EXIT_BUDGET}[out.status]


def cmd_exco(args) -> int:
    f = read_edge_list(args.pattern)
    res = ex_co_exact(ExCoQuery(args.n, args.k, f, _budget(args)), symmetry_breaking=args.symmetry_breaking)
    if args.out:
        write_edge_list(res.witness, args.out)
    if args.json:
        print(json.dumps({
            "n": args.n,
            "k": args.k,
            "value": res.value,
            "exact": res.exact,
            "nodes_explored": res.nodes_explored,
            "witness_edges": [list(e) for e in res.witness.edges],
        }))
    else:
        print(res.value)
    return EXIT_OK if res.exact else EXIT_BUDGET


def cmd_verify(args) -> int:
    from kgraph.fixtures import run_suite

    results = run_suite(args.only)
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        for r in results:
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.key} ({r.seconds:.2f}s): {r.statement}")
            print(f"       {r.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} fixtures passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_NOT_FOUND


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "embed": cmd_embed,
    "exco": cmd_exco,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (KGraphError, OSError) as exc:
        print(f"kgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

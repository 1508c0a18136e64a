"""Command-line front end.  Every subcommand prints one JSON document on stdout.

Exit status: 0 on success, 1 on bad input, 2 when a lemma run reports a
violated hypothesis (the JSON still carries the violation record).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import constructions as C
from . import lemmas as L
from .counting import clique_count_report
from .graph import Graph
from .graph6 import Graph6Error, parse_graph6, serialize_graph6
from .ramsey import ArrowingInstance, arrows, exact_ramsey, goodness_report, n_arrows, parse_pattern
from .search import MultipartiteWitness, find_multipartite


class UsageError(Exception):
    pass


def read_graph(text: str) -> Graph:
    """``g6:<string>``, ``@path`` (graph6 line or ``{"n", "edges"}`` JSON) or a bare graph6 string."""
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read().strip()
        if text.startswith("{"):
            return Graph.from_json(text)
        return parse_graph6(text.splitlines()[0])
    if text.startswith("g6:"):
        text = text[3:]
    return parse_graph6(text)


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _parts(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_ints(chunk) for chunk in text.split(";") if chunk.strip())


def _workers(args) -> int:
    if getattr(args, "workers", None):
        return args.workers
    return int(os.environ.get("RGL_THREADS", "1"))


_OUTPUT: list[str | None] = [None]


def _emit(doc) -> None:
    text = json.dumps(L._jsonable(doc), indent=2)
    print(text)
    if _OUTPUT[0]:
        with open(_OUTPUT[0], "w") as fh:
            fh.write(text + "\n")


# --- subcommands -----------------------------------------------------------------


def cmd_construct(args) -> int:
    kind = args.family
    if kind == "burr":
        g = C.burr_graph(args.chi, args.s, args.h_order)
        params = {"chi": args.chi, "s": args.s, "h_order": args.h_order}
    elif kind == "book-only-if":
        inst = C.GoodnessInstance(p=args.p, k=args.k, n=args.n, t=max(_ints(args.a)[: args.p - 1]),
                                  a=_ints(args.a), seed=args.seed, context="only_if")
        g = C.book_only_if_graph(inst)
        params = inst.to_dict()
    elif kind == "c4free":
        g = C.c4_free_almost_regular(args.m, args.a_deg, args.seed)
        params = {"m": args.m, "a": args.a_deg}
    elif kind == "dk":
        a1, a2 = _ints(args.a)[:2]
        d, g = C.dk_witness(args.n, args.k, a1, a2)
        params = {"n": args.n, "k": args.k, "a1": a1, "a2": a2, "d": d}
    elif kind == "threshold":
        s = C.random_threshold_graph(args.p, args.k, args.C, seed=args.seed, n=args.n)
        _emit(C.provenance("threshold", {"p": args.p, "k": args.k, "C": args.C, "n": args.n},
                           args.seed, s.graph, s.audit()))
        return 0
    else:
        raise UsageError(f"unknown construction {kind!r}")
    _emit(C.provenance(kind, params, args.seed, g))
    return 0


def cmd_check_arrowing(args) -> int:
    G, H = parse_pattern(args.G), parse_pattern(args.H)
    out = {"N": args.N, "G": G.name, "H": H.name}
    if args.colouring:
        res = arrows(read_graph(args.colouring), ArrowingInstance(G, H, args.N))
        out.update(arrows=res.arrows, side=res.side, witness=res.witness)
    else:
        out["arrows"] = n_arrows(args.N, G, H, args.engine)
    _emit(out)
    return 0


def cmd_search_ramsey(args) -> int:
    res = exact_ramsey(args.G, args.H, args.engine, args.max_n)
    doc = res.to_dict()
    doc["workers"] = _workers(args)
    _emit(doc)
    return 0


def cmd_goodness_gap(args) -> int:
    _emit(goodness_report(args.G, args.H, args.engine, args.max_n))
    return 0


def cmd_count(args) -> int:
    g = read_graph(args.graph)
    _emit(json.loads(clique_count_report(g, args.p).to_json()))
    return 0


def cmd_run_lemma(args) -> int:
    g = read_graph(args.graph)
    name = args.name
    if name == "greedy":
        parts = _find_parts(g, args.parts, [args.t] * args.r)
        params = L.GreedyParams(k=args.k, r=len(parts.parts), s=args.s, t=len(parts.parts[0]))
        out = L.greedy_step(g, parts, params)
    elif name == "book-partition":
        res = L.book_partition(g, _find_parts(g, args.parts, [args.k] * (args.p - 1)))
        if isinstance(res, list):
            _emit({"lemma": name, "branch": "books", "graph6": serialize_graph6(g),
                   "witness": {"kind": "books", "books": [b.to_dict() for b in res]},
                   "measurements": {"orders": [b.order for b in res]}})
            return 0
        out = res
    elif name == "blowup":
        S = g.full if not args.s_set else sum(1 << v for v in _ints(args.s_set))
        out = L.find_blowup(g, S, args.p, args.k, args.x, args.n)
    elif name == "removal":
        res = L.make_kp_free(g, args.p, Fraction(args.beta))
        _emit({"lemma": name, "branch": "removal", "graph6": serialize_graph6(g),
               "witness": {"kind": "removal", "p": args.p, "removed": sorted(res.removed),
                           "result_graph6": serialize_graph6(res.graph)},
               "measurements": res.audit})
        return 0 if res.hypothesis_met else 2
    elif name == "stability":
        part, internal = L.stability_partition(g, args.p)
        _emit({"lemma": name, "branch": "partition", "graph6": serialize_graph6(g),
               "witness": {"kind": "partition", "parts": [list(p) for p in part.parts]},
               "measurements": {"internal_edges": internal}})
        return 0
    else:
        raise UsageError(f"unknown lemma {name!r}")
    _emit(L.trace(name, g, out))
    return 2 if isinstance(out, L.HypothesisViolated) else 0


def _find_parts(g: Graph, text: str, sizes: list[int]) -> MultipartiteWitness:
    if text:
        return MultipartiteWitness(_parts(text), True)
    hit = find_multipartite(g, sizes, induced=True)
    if hit is None:
        raise UsageError(f"no induced complete multipartite subgraph with parts {sizes}")
    return hit


def cmd_empty_pair(args) -> int:
    g = read_graph(args.graph)
    try:
        res = L.empty_pair_extract(g, args.max_spine)
    except L.TriangleFound as exc:
        _emit({"error": "triangle", "triangle": list(exc.triangle)})
        return 2
    _emit({"graph6": serialize_graph6(g), "witness": {"kind": "empty-pair", "A": res.A, "B": res.B},
           "per_k": {k: {"A": a, "B": b, "method": res.method[k]} for k, (a, b) in res.per_k.items()}})
    return 0


def cmd_audit_partition(args) -> int:
    g = read_graph(args.graph)
    rep = L.partition_audit(g, _parts(args.parts), Fraction(args.alpha))
    _emit(rep.to_dict())
    return 0


def cmd_validate(args) -> int:
    with open(args.trace) if args.trace != "-" else sys.stdin as fh:
        doc = json.load(fh)
    ok = L.validate_trace(doc)
    _emit({"valid": ok})
    return 0 if ok else 2


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bookramsey", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add_output(sp):
        sp.add_argument("--output", "-o", help="also write the JSON report to this path")

    c = sub.add_parser("construct", help="build a lower-bound graph")
    c.add_argument("--family", required=True, choices=["burr", "book-only-if", "c4free", "dk", "threshold"])
    c.add_argument("--chi", type=int, default=3)
    c.add_argument("--s", type=int, default=1)
    c.add_argument("--h-order", type=int, default=4)
    c.add_argument("--p", type=int, default=3)
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--n", type=int, default=6)
    c.add_argument("--a", default="1,2,2", help="part sizes a_1,...,a_p")
    c.add_argument("--m", type=int, default=6)
    c.add_argument("--a-deg", type=int, default=2, help="target degree for c4free")
    c.add_argument("--C", type=float, default=0.5)
    c.add_argument("--seed", type=int, default=0)
    add_output(c)
    c.set_defaults(func=cmd_construct)

    for name, fn, doc in (
        ("search-ramsey", cmd_search_ramsey, "exact r(G, H)"),
        ("goodness-gap", cmd_goodness_gap, "r(G, H) minus the general lower bound"),
    ):
        s = sub.add_parser(name, help=doc)
        s.add_argument("--G", required=True)
        s.add_argument("--H", required=True)
        s.add_argument("--engine", choices=["dfs", "exhaustive"], default="dfs")
        s.add_argument("--max-n", type=int, default=10)
        s.add_argument("--workers", type=int, default=None)
        add_output(s)
        s.set_defaults(func=fn)

    a = sub.add_parser("check-arrowing", help="decide N -> (G, H)")
    a.add_argument("--N", type=int, required=True)
    a.add_argument("--G", required=True)
    a.add_argument("--H", required=True)
    a.add_argument("--engine", choices=["dfs", "exhaustive"], default="dfs")
    a.add_argument("--colouring", help="decide this one graph instead of all graphs on N vertices")
    add_output(a)
    a.set_defaults(func=cmd_check_arrowing)

    k = sub.add_parser("count", help="clique counts and per-edge loads")
    k.add_argument("--input", "--graph", dest="graph", required=True)
    k.add_argument("--p", type=int, required=True)
    add_output(k)
    k.set_defaults(func=cmd_count)

    r = sub.add_parser("run-lemma", help="run one constructive lemma and print its trace")
    r.add_argument("--name", required=True, choices=["greedy", "book-partition", "blowup", "removal", "stability"])
    r.add_argument("--input", "--graph", dest="graph", required=True)
    r.add_argument("--parts", default="", help="parts as '0,1;2,3' (searched for when omitted)")
    r.add_argument("--p", type=int, default=3)
    r.add_argument("--k", type=int, default=1)
    r.add_argument("--r", type=int, default=1, help="number of parts for greedy")
    r.add_argument("--t", type=int, default=2, help="part size for greedy")
    r.add_argument("--s", type=int, default=1)
    r.add_argument("--x", type=int, default=1)
    r.add_argument("--n", type=int, default=1)
    r.add_argument("--s-set", default="")
    r.add_argument("--beta", default="1/20")
    add_output(r)
    r.set_defaults(func=cmd_run_lemma)

    e = sub.add_parser("empty-pair", help="empty pair from a triangle-free graph")
    e.add_argument("--input", "--graph", dest="graph", required=True)
    e.add_argument("--max-spine", type=int, default=3)
    add_output(e)
    e.set_defaults(func=cmd_empty_pair)

    p = sub.add_parser("audit-partition", help="size and density audit of a partition")
    p.add_argument("--input", "--graph", dest="graph", required=True)
    p.add_argument("--parts", required=True)
    p.add_argument("--alpha", default="1/100")
    add_output(p)
    p.set_defaults(func=cmd_audit_partition)

    v = sub.add_parser("validate", help="re-check a witness trace with the graph checkers only")
    v.add_argument("trace", help="trace JSON file, or - for stdin")
    add_output(v)
    v.set_defaults(func=cmd_validate)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors; 2 is reserved here
        return 0 if exc.code == 0 else 1
    _OUTPUT[0] = getattr(args, "output", None)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, C.PreconditionError, ValueError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

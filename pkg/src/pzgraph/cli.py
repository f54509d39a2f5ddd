"""Command-line front end: ``pzgraph VERB ...``.

Exit codes: 0 success, 1 usage error, 2 domain error (bad point, trivial
pair), 3 disagreement found by ``verify``.
"""
from __future__ import annotations

import argparse
import io
import json
import re
import sys

from .core import DistantGraphError, TrivialPair, is_distant, parse_point
from .matrices import (
    mat_to_list,
    reduce_word,
    shortest_path_matrices,
    standard_word,
)
from .paths import (
    Path,
    all_shortest_paths,
    consistent_paths,
    count_shortest_paths,
    distance,
    hamiltonian_cycle,
    standard_path,
    standard_shortest_path,
)
from .transition import corner_graph, klein_graph, sails, sails_svg, transition

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let points such as -3:2 through as positionals
        self._negative_number_matcher = re.compile(r"^-\d+(:-?\d+)?$")

    def error(self, message):
        raise UsageError(message)


def _point(text: str):
    try:
        return parse_point(text)
    except DistantGraphError:
        raise
    except ValueError as exc:  # syntax, not arithmetic
        raise UsageError(str(exc)) from None


def _pair(args):
    return _point(args.x), _point(args.y)


def _fmt_path(p) -> str:
    return " ".join(str(v) for v in p)


def cmd_dist(args, out):
    x, y = _pair(args)
    d = distance(x, y)
    return {"x": str(x), "y": str(y), "distance": d}, str(d)


def cmd_path(args, out):
    x, y = _pair(args)
    if x == y:
        raise TrivialPair("endpoints coincide")
    if is_distant(x, y):
        p = Path((x, y))
    else:
        td = transition(x, y)
        p = standard_path(td) if args.standard else standard_shortest_path(td)
    return {"path": p.to_list(), "length": len(p)}, _fmt_path(p)


def cmd_paths(args, out):
    x, y = _pair(args)
    if args.count:
        n = count_shortest_paths(x, y)
        return {"count": n}, str(n)
    ps = all_shortest_paths(x, y)
    return {"paths": [p.to_list() for p in ps]}, "\n".join(_fmt_path(p) for p in ps)


def cmd_consistent(args, out):
    x, y = _pair(args)
    td = transition(x, y)
    pa, pb = consistent_paths(td)
    doc = {
        "d_a": td.d_a,
        "d_b": td.d_b,
        "d_c": min(td.d_a, td.d_b),
        "unique": td.d_a != td.d_b,
        "a_path": pa.to_list(),
        "b_path": pb.to_list(),
    }
    text = "\n".join(
        [
            f"d_a={td.d_a} d_b={td.d_b} unique={'true' if doc['unique'] else 'false'}",
            "a: " + _fmt_path(pa),
            "b: " + _fmt_path(pb),
        ]
    )
    return doc, text


def cmd_klein(args, out):
    x, y = _pair(args)
    td = transition(x, y)
    kg = klein_graph(td)
    if args.corners:
        kg = corner_graph(kg, td)
    if args.dot:
        return kg.to_dict(), kg.to_dot("corners" if args.corners else "klein").rstrip("\n")
    return kg.to_dict(), json.dumps(kg.to_dict(), indent=2)


def cmd_factor(args, out):
    x, y = _pair(args)
    td = transition(x, y)
    w = standard_word(x, y, td)
    r = reduce_word(w)
    mats = shortest_path_matrices(x, y)
    doc = {
        "standard": w.to_dict(),
        "reduced": r.to_dict(),
        "matrices": [mat_to_list(m) for m in mats],
    }
    lines = [
        f"standard: {w.sign:+d} {list(w.coeffs)}",
        f"reduced:  {r.sign:+d} {list(r.coeffs)}",
    ]
    lines += [f"matrix:   {mat_to_list(m)}" for m in mats]
    return doc, "\n".join(lines)


def cmd_cycle(args, out):
    x = _point(args.x)
    c = hamiltonian_cycle(x, args.da, args.db)
    doc = dict(c.to_dict(), d_a=args.da, d_b=args.db)
    return doc, _fmt_path(c.vertices)


def cmd_sails(args, out):
    x, y = _pair(args)
    if x == y:
        raise TrivialPair("sails need two distinct points")
    lines = sails(x, y, args.bound)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(sails_svg(x, y, args.bound))
    doc = {"sails": [[list(p) for p in line] for line in lines]}
    if args.svg:
        doc["svg"] = args.svg
    text = "\n".join(" ".join(f"{p.u},{p.v}" for p in line) for line in lines)
    return doc, text


def cmd_verify(args, out):
    from .oracle.verify import box_corpus, random_corpus, sweep, write_jsonl

    pairs = box_corpus(args.max)
    if args.random:
        pairs += random_corpus(args.random, args.radius, args.seed)
    reports = sweep(pairs, args.bound, args.workers)
    if args.out:
        with open(args.out, "w") as fh:
            summary = write_jsonl(reports, fh)
        out.write(json.dumps(summary) + "\n")
    else:
        summary = write_jsonl(reports, out)
    return summary, None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pzgraph", description="Shortest paths in the distant graph of P(Z).")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized corpora")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def pair(name, fn, help, json_flag=True):
        s = sub.add_parser(name, help=help)
        s.add_argument("x", help="point a:b")
        s.add_argument("y", help="point a:b")
        if json_flag:
            s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        s.set_defaults(fn=fn)
        return s

    pair("dist", cmd_dist, "distance")
    s = pair("path", cmd_path, "a shortest path")
    s.add_argument("--standard", action="store_true", help="unreduced standard path")
    s = pair("paths", cmd_paths, "all shortest paths")
    s.add_argument("--count", action="store_true")
    pair("consistent", cmd_consistent, "the two consistent paths")
    s = pair("klein", cmd_klein, "Klein graph", json_flag=False)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", dest="json", action="store_true", default=argparse.SUPPRESS)
    s.add_argument("--corners", action="store_true")
    pair("factor", cmd_factor, "matrix words")
    s = pair("sails", cmd_sails, "Klein sails")
    s.add_argument("--svg", metavar="FILE")
    s.add_argument("--bound", type=int)

    s = sub.add_parser("cycle", help="Hamiltonian consistent cycle")
    s.add_argument("x")
    s.add_argument("--da", type=int, required=True)
    s.add_argument("--db", type=int, required=True)
    s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    s.set_defaults(fn=cmd_cycle)

    s = sub.add_parser("verify", help="sweep the oracle over a corpus")
    s.add_argument("--max", type=int, required=True, help="box size for y with x = 1:0")
    s.add_argument("--bound", type=int, help="BFS window (default per pair)")
    s.add_argument("--random", type=int, default=0, help="extra random pairs")
    s.add_argument("--radius", type=int, default=40)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", metavar="FILE")
    s.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        doc, text = args.fn(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DistantGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.fn is cmd_verify:
        return EXIT_DISAGREE if doc["disagreements"] else EXIT_OK
    out.write((json.dumps(doc) if args.json else text) + "\n")
    return EXIT_OK


def run(argv: list[str]) -> tuple[int, str]:
    """Run one command and return its exit code with the captured output."""
    buf = io.StringIO()
    return main(argv, buf), buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())

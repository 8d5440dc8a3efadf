"""Command-line front end.

Exit codes: 0 success, 1 a property check failed, 2 usage or capacity
error, 3 the element selector does not name a twisted identity.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, formats
from .bruhat_graph import build_bg, minimal_words, to_dot, to_json, word_label
from .groups import CapacityError, GroupContext
from .klv import PolyTable, r_poly
from .selectors import SelectorError, resolve
from .smoothness import full_report
from .twisted import InvariantError, enumerate_iota
from . import worked_example

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_SELECTOR = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, top: bool) -> None:
    default = "flip:4" if top else argparse.SUPPRESS
    p.add_argument("--model", default=default,
                   help="flip:<2n> or diagonal:<m> (default flip:4)")
    p.add_argument("--output", "-o", default=argparse.SUPPRESS if not top else None,
                   help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twisted-bruhat",
        description="Twisted identities, Bruhat graphs, KLV polynomials and rational smoothness.")
    _common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list twisted identities with ranks and covers")
    _common(p, top=False)
    p.add_argument("--format", choices=["text", "json", "poset", "dot"], default="text")

    p = sub.add_parser("graph", help="the Bruhat graph BG(w)")
    _common(p, top=False)
    p.add_argument("--w", required=True, help="element selector")
    p.add_argument("--format", choices=["dot", "json", "text"], default="dot")

    p = sub.add_parser("locus", help="rationally singular locus of the closure indexed by w")
    _common(p, top=False)
    p.add_argument("--w", required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("poly", help="Q-, R- or KLV P-polynomial")
    _common(p, top=False)
    p.add_argument("--kind", choices=["Q", "R", "P"], required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--format", choices=["text", "sparse", "json"], default="text")

    p = sub.add_parser("check", help="run invariant suites")
    _common(p, top=False)
    p.add_argument("--suite", required=True,
                   help="one of " + ", ".join(checks.SUITES) + ", or all")
    p.add_argument("--check-level", choices=["fast", "exhaustive"], default="fast")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("singular-example",
                       help="locate the rank-4 singular example in flip:6 and report it")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--output", "-o", default=argparse.SUPPRESS)
    return parser


def _poset(model: str):
    try:
        ctx = GroupContext.parse(model)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return enumerate_iota(ctx)


def cmd_enumerate(args) -> tuple[int, str]:
    poset = _poset(args.model)
    if args.format == "poset":
        return EXIT_OK, formats.export_text(poset)
    if args.format == "dot":
        return EXIT_OK, formats.hasse_dot(formats.export_text(poset))
    if args.format == "json":
        records = [{"element": poset.strings[i], "rank": poset.rank[i],
                    "covers": [poset.strings[j] for j in poset.up_covers[i]]}
                   for i in range(poset.size)]
        return EXIT_OK, json.dumps(records, indent=2) + "\n"
    lines = [f"{poset.rank[i]}\t{poset.strings[i]}\t"
             + ",".join(poset.strings[j] for j in poset.up_covers[i])
             for i in range(poset.size)]
    return EXIT_OK, "\n".join(lines) + "\n"


def _select(poset, text: str, note: list[str]) -> int:
    idx, how = resolve(poset, text)
    if how == "reversed":
        note.append(f"note: selector {text!r} read in reversed order")
    return idx


def cmd_graph(args) -> tuple[int, str]:
    poset = _poset(args.model)
    notes: list[str] = []
    w = _select(poset, args.w, notes)
    g = build_bg(poset, w)
    for n in notes:
        print(n, file=sys.stderr)
    if args.format == "dot":
        return EXIT_OK, to_dot(g)
    if args.format == "json":
        return EXIT_OK, json.dumps(to_json(g), indent=2) + "\n"
    words = minimal_words(poset)
    lines = [f"{poset.strings[v]}\t{word_label(words[v])}\trank {poset.rank[v]}\tdegree {g.degree(v)}"
             for v in g.vertices]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_locus(args) -> tuple[int, str]:
    poset = _poset(args.model)
    notes: list[str] = []
    w = _select(poset, args.w, notes)
    for n in notes:
        print(n, file=sys.stderr)
    rep = full_report(poset, w)
    if args.format == "json":
        return EXIT_OK, json.dumps(rep.to_json(), indent=2) + "\n"
    return EXIT_OK, _locus_text(rep)


def _locus_text(rep) -> str:
    poset = rep.poset
    sing = ", ".join(poset.strings[v] for v in sorted(rep.singular_points)) or "(none)"
    return (f"w = {poset.strings[rep.w]}  rank {poset.rank[rep.w]}\n"
            f"rank vector {rep.rank_vector}\n"
            f"globally smooth: {rep.globally_smooth}\n"
            f"singular points: {sing}\n")


def cmd_poly(args) -> tuple[int, str]:
    poset = _poset(args.model)
    notes: list[str] = []
    u = _select(poset, args.u, notes)
    w = _select(poset, args.w, notes)
    for n in notes:
        print(n, file=sys.stderr)
    table = PolyTable(poset)
    if args.kind == "Q":
        val = table.q(u, w)
    elif args.kind == "R":
        val = r_poly(table, u, w)
    else:
        val = table.p(u, w)
    if args.format == "json":
        return EXIT_OK, json.dumps({"kind": args.kind, "u": poset.strings[u],
                                    "w": poset.strings[w], "coefficients": val.to_json()}) + "\n"
    if args.format == "sparse":
        return EXIT_OK, val.serialize() + "\n"
    return EXIT_OK, str(val) + "\n"


def cmd_check(args) -> tuple[int, str]:
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    for n in names:
        if n not in checks.SUITES:
            raise UsageError(f"unknown suite {n!r}; choose from {', '.join(checks.SUITES)} or all")
    try:
        ctx = GroupContext.parse(args.model)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sess = checks.Session(ctx, args.check_level)
    results = checks.run_suites(names, sess)
    ok = all(r.passed for r in results)
    if args.format == "json":
        out = json.dumps([{"suite": r.name, "model": r.model, "checked": r.checked,
                           "passed": r.passed, "skipped": r.skipped or None,
                           "failures": r.failures} for r in results], indent=2) + "\n"
    else:
        lines = []
        for r in results:
            lines.append(r.summary())
            lines.extend(f"    counterexample: {f}" for f in r.failures)
        lines.append("all checks passed" if ok else "CHECK FAILURES")
        out = "\n".join(lines) + "\n"
    return (EXIT_OK if ok else EXIT_CHECK), out


def cmd_singular_example(args) -> tuple[int, str]:
    poset, w = worked_example.locate()
    idx, reading = worked_example.word_reading(poset)
    rep = full_report(poset, w)
    if args.format == "json":
        data = rep.to_json()
        data["word_reading"] = reading
        data["word_matches"] = idx == w
        return EXIT_OK, json.dumps(data, indent=2) + "\n"
    if args.format == "dot":
        return EXIT_OK, to_dot(build_bg(poset, w))
    words = minimal_words(poset)
    lines = [_locus_text(rep).rstrip("\n"),
             f"word s5s3s4s5s1s2s3s1 ({reading}) -> "
             f"{poset.strings[idx]} {'matches' if idx == w else 'DOES NOT match'}",
             "degrees:"]
    for v in sorted(rep.degrees):
        lines.append(f"  {poset.strings[v]:<8} {word_label(words[v]):<6} rank {poset.rank[v]}  "
                     f"degree {rep.degrees[v]}")
    return EXIT_OK, "\n".join(lines) + "\n"


COMMANDS = {
    "enumerate": cmd_enumerate,
    "graph": cmd_graph,
    "locus": cmd_locus,
    "poly": cmd_poly,
    "check": cmd_check,
    "singular-example": cmd_singular_example,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SelectorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SELECTOR
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_CHECK
    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point.

Exit status: 0 when nothing failed, 1 when a check or query failed, 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import automorphisms as aut
from . import link
from .parsing import ParseError, parse_aut, parse_free_aut, parse_word
from .suite import CHECKS, UnknownCheck, run_suite
from .words import LetterError, RankError


class UsageError(Exception):
    pass


def parse_range(text: str) -> List[int]:
    """``5``, ``4..6`` or ``4-6``."""
    for sep in ("..", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            try:
                lo_i, hi_i = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"bad range {text!r}") from None
            if lo_i > hi_i:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo_i, hi_i + 1))
    try:
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxfree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--only", help="comma separated check ids (" + ", ".join(CHECKS) + ")")
    v.add_argument("--n", default="4..6", help="rank range, e.g. 4..6")
    v.add_argument("--ball", type=int, default=2, help="word length bound for the injectivity ball")
    v.add_argument("--power", type=int, default=4, help="power bound for the periodicity check")
    v.add_argument("--wrap", default=aut.WRAP_MOD_N, choices=["mod-n", "mod-n-1"])
    v.add_argument("--json", action="store_true")
    v.add_argument("--output", help="also write the report to this file")

    w = sub.add_parser("word", help="word utilities")
    wsub = w.add_subparsers(dest="action", required=True)
    wr = wsub.add_parser("reduce")
    wr.add_argument("--kind", choices=["free", "cox"], required=True)
    wr.add_argument("--rank", type=int, required=True)
    wr.add_argument("text")

    a = sub.add_parser("aut", help="automorphism utilities")
    asub = a.add_subparsers(dest="action", required=True)
    ai = asub.add_parser("iota", help="image of a W_n automorphism in Aut(F_{n-1})")
    ai.add_argument("--n", type=int, required=True)
    ai.add_argument("--wrap", default=aut.WRAP_MOD_N, choices=["mod-n", "mod-n-1"])
    ai.add_argument("expr")
    an = asub.add_parser("inner", help="decide whether a free automorphism is inner")
    an.add_argument("--rank", type=int, required=True)
    an.add_argument("images", help="images of x1..xm separated by ';'")

    lk = sub.add_parser("link", help="queries on the Brady link")
    lk.add_argument("--file", help="read the link from a file instead of the built-in one")
    lsub = lk.add_subparsers(dest="action", required=True)
    ld = lsub.add_parser("dist")
    ld.add_argument("u")
    ld.add_argument("v")
    lsub.add_parser("axis")
    lsub.add_parser("girth")
    lsub.add_parser("dump")
    return p


def _verify(args) -> int:
    ids = None if args.only is None else [s.strip() for s in args.only.split(",") if s.strip()]
    report = run_suite(ids, parse_range(args.n), args.ball, args.power, args.wrap)
    out = report.to_json() if args.json else report.to_text()
    print(out)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.ok else 1


def _link(args) -> int:
    if args.file:
        with open(args.file) as fh:
            g = link.parse_link(fh.read())
    else:
        g = link.standard_link()
    if args.action == "dist":
        path = link.shortest_path(g, args.u, args.v)
        d = len(path) - 1
        print(f"d({args.u}, {args.v}) = {d} x pi/3  path: {' '.join(path)}")
    elif args.action == "girth":
        short = link.shortest_cycle(g)
        if short is None:
            print("girth >= 2pi: every embedded cycle has length >= 6 x pi/3")
            return 0
        print(f"short cycle of length {len(short)} x pi/3: {' '.join(short)}")
        return 1
    elif args.action == "axis":
        ok = True
        for label, seq in (("stated", link.BD_INV_TURNS), ("action", link.BD_INV_ACTION_TURNS)):
            for a, b in seq.turns:
                d = link.link_distance(g, a, b)
                print(f"{label:7} turn ({a}, {b}): {d} x pi/3  local geodesic={d >= link.PI}  strict={d > link.PI}")
            ok = ok and link.certify_axis(g, seq)
        print(f"axis certified (>= pi at every turn): {ok}")
        return 0 if ok else 1
    else:
        sys.stdout.write(link.format_link(g))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "word":
            print(parse_word(args.text, args.kind, args.rank))
            return 0
        if args.command == "aut" and args.action == "iota":
            phi = parse_aut(args.expr, args.n, args.wrap)
            print(aut.iota(phi))
            return 0
        if args.command == "aut" and args.action == "inner":
            g = aut.detect_inner(parse_free_aut(args.images, args.rank))
            print("none" if g is None else f"inner: conjugation by {g}")
            return 0
        return _link(args)
    except (UsageError, UnknownCheck, ParseError, LetterError, RankError,
            aut.AutomorphismError, link.LinkError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

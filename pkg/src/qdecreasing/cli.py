"""Command-line front end: ``qdec <subcommand> ...``.

Exit status is 0 on success, 2 on usage errors and 1 on domain errors or
failed verifications.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import bijection, enumeration, generation, rungraph
from .words import BinaryWord, is_q_decreasing

ORDERS = ("lex", "brgc", "gray1")
MAPS = {
    "psi": bijection.psi,
    "psi-inv": bijection.psi_inv,
    "phi": bijection.phi,
    "phi-inv": bijection.phi_inv,
}


class _Usage(Exception):
    """A flag combination argparse cannot reject on its own."""


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _word(text: str) -> BinaryWord:
    try:
        return BinaryWord.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"word must contain only 0 and 1, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qdec", description="q-decreasing binary words")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list the words of W^q_n in a given order")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--q", type=_positive, default=1)
    p.add_argument("--order", choices=ORDERS, default="lex")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("count", help="count q-decreasing words")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--q", type=_positive, default=1)
    p.add_argument("--by-ones", action="store_true", help="split the count by number of ones")
    p.add_argument("--frequency", action="store_true",
                   help="ones-frequency report for lengths 1..n (CSV)")
    p.add_argument("--plot", metavar="FILE", help="with --frequency, render the ratios")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("series", help="expand a generating function")
    p.add_argument("--kind", choices=enumeration.KINDS, required=True)
    p.add_argument("--q", type=_positive, default=1)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", metavar="FILE")
    p.add_argument("--plot", metavar="FILE")

    p = sub.add_parser("map", help="apply psi, phi or their inverses to a word")
    p.add_argument("--dir", choices=tuple(MAPS), required=True)
    p.add_argument("--q", type=_positive, default=1)
    p.add_argument("--word", type=_word, required=True)

    p = sub.add_parser("verify", help="re-check an order against brute force")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--q", type=_positive, default=1)
    p.add_argument("--order", choices=ORDERS, default="gray1")
    p.add_argument("--k", type=_positive, help="allowed distance (default: 1 for gray1, 3 for brgc)")

    p = sub.add_parser("graph", help="Fibonacci-run graph R_n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--dot", metavar="FILE", help="write DOT text to FILE ('-' for stdout)")
    p.add_argument("--with-path", action="store_true")
    p.add_argument("--drop-suffix", action="store_true", help="drop the trailing 00 in labels")
    p.add_argument("--plot", metavar="FILE")

    p = sub.add_parser("search", help="backtracking search for a 1-Gray code of W^q_n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--q", type=_positive, default=2)
    p.add_argument("--budget", type=_positive, default=generation.DEFAULT_NODE_BUDGET)
    return parser


def _brute_force(n: int, q: int) -> List[BinaryWord]:
    return [BinaryWord(b, n) for b in range(1 << n) if is_q_decreasing(BinaryWord(b, n), q)]


def _materialize(n: int, q: int, order: str) -> generation.WordList:
    if order == "lex":
        return generation.lex_list(n, q)
    if order == "brgc":
        return generation.brgc_list(n, q)
    return generation.gray1_W(n)


def _cmd_list(args, out) -> int:
    if args.format == "text" and args.order == "lex":
        generation.lex_stream(args.n, args.q, lambda w: out.write(f"{w}\n"))
        return 0
    words = _materialize(args.n, args.q, args.order)
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "q": args.q, "order": args.order,
                              "words": words.strings()}) + "\n")
    else:
        out.writelines(f"{w}\n" for w in words)
    return 0


def _cmd_count(args, out) -> int:
    n, q = args.n, args.q
    if args.frequency:
        if n < 1:
            raise _Usage("--frequency needs --n >= 1")
        reports = enumeration.frequency_trend(q, 1, n)
        out.write("n,q,u,v,total_bits,u_ratio,v_ratio\n")
        for r in reports:
            out.write(f"{r.n},{r.q},{r.u},{r.v},{r.total_bits},{r.u_ratio},{r.v_ratio}\n")
        if args.plot:
            from .plotting import plot_frequency

            plot_frequency(reports, args.plot)
        return 0
    if args.plot:
        raise _Usage("--plot requires --frequency")
    if args.by_ones:
        row = enumeration.count_by_ones(n, q)
        if args.format == "json":
            out.write(json.dumps({"n": n, "q": q, "by_ones": row}) + "\n")
        elif args.format == "csv":
            out.write("k,count\n" + "".join(f"{k},{c}\n" for k, c in enumerate(row)))
        else:
            out.write(" ".join(map(str, row)) + "\n")
        return 0
    total = enumeration.count_qdecreasing(n, q)
    if args.format == "json":
        out.write(json.dumps({"n": n, "q": q, "count": total}) + "\n")
    elif args.format == "csv":
        out.write(f"n,q,count\n{n},{q},{total}\n")
    else:
        out.write(f"{total}\n")
    return 0


def _cmd_series(args, out) -> int:
    table = enumeration.expand_series(args.kind, args.q, args.n_max)
    text = table.to_json() + "\n" if args.format == "json" else table.to_csv()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.plot:
        from .plotting import plot_series

        plot_series(table, args.plot)
    return 0


def _cmd_map(args, out) -> int:
    out.write(f"{MAPS[args.dir](args.word, args.q)}\n")
    return 0


def _cmd_verify(args, out) -> int:
    k = args.k or {"gray1": 1, "brgc": 3}.get(args.order, max(args.n, 1))
    words = _materialize(args.n, args.q, args.order)
    report = generation.verify_gray(words, k, _brute_force(args.n, args.q))
    if args.order == "lex":
        ordered = all(a < b for a, b in zip(words.bits, words.bits[1:]))
        out.write(f"lexicographic={ordered}\n")
        report.passed = report.passed and ordered
    out.write(report.summary() + "\n")
    return 0 if report.passed else 1


def _cmd_graph(args, out) -> int:
    g = rungraph.build_run_graph(args.n)
    path = rungraph.hamiltonian_path(args.n) if args.with_path else None
    out.write(f"vertices {len(g.vertices)}\nedges {len(g.edges)}\n")
    if path is not None:
        out.write("path " + " ".join(path.strings()) + "\n")
        out.write(f"cycle {str(rungraph.is_hamiltonian_cycle(path)).lower()}\n")
    if args.dot:
        text = rungraph.export_dot(g, path, drop_suffix=args.drop_suffix)
        if args.dot == "-":
            out.write(text)
        else:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(text)
    if args.plot:
        from .plotting import plot_run_graph

        plot_run_graph(g, args.plot, path)
    return 0


def _cmd_search(args, out) -> int:
    found = generation.search_gray1(args.n, args.q, budget=args.budget)
    if found is None:
        out.write("none\n")
    else:
        out.writelines(f"{w}\n" for w in found)
    return 0


COMMANDS = {
    "list": _cmd_list,
    "count": _cmd_count,
    "series": _cmd_series,
    "map": _cmd_map,
    "verify": _cmd_verify,
    "graph": _cmd_graph,
    "search": _cmd_search,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "order", None) == "gray1" and args.q != 1:
        err.write(f"qdec {args.command}: error: --order gray1 requires --q 1 (got {args.q})\n")
        return 2
    try:
        return COMMANDS[args.command](args, out)
    except _Usage as exc:
        err.write(f"qdec {args.command}: error: {exc}\n")
        return 2
    except bijection.DomainError as exc:
        err.write(f"qdec {args.command}: {exc}\n")
        return 1
    except generation.SearchBudgetExceeded as exc:
        err.write(f"qdec {args.command}: inconclusive: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

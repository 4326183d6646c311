"""Command-line frontend.

Exit codes: 0 for success and true verdicts, 1 for false verdicts (not
Gotzmann, theorem mismatch), 2 for malformed input.  Machine mode emits one
``key=value`` pair per line and is byte-stable across runs.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import certifier, combinatorics, complexes, fileformats, graphs, monomials


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _read(path: str) -> str:
    return Path(path).read_text()


def _cmd_macaulay_rep(args) -> int:
    rep = combinatorics.macaulay_rep(args.a, args.d)
    if args.machine:
        print(f"a={args.a}")
        print(f"d={args.d}")
        print("coefficients=" + " ".join(str(b) for b in rep.coefficients))
    else:
        terms = " + ".join(
            f"C({b},{i})"
            for b, i in zip(rep.coefficients, range(args.d, 0, -1))
        )
        print(f"{args.a} = {terms}")
    return 0


def _cmd_pseudopower(args) -> int:
    if args.macaulay:
        value = combinatorics.macaulay_pseudopower(args.a, args.d)
    else:
        value = combinatorics.kruskal_katona_pseudopower(args.a, args.d)
    print(f"value={value}" if args.machine else value)
    return 0


def _cmd_hilbert(args) -> int:
    ideal = fileformats.parse_ideal(_read(args.ideal))
    k = args.degree
    h_ring = monomials.hilbert_ring(ideal.ambient_vars, k)
    h_ideal = monomials.hilbert_ideal(ideal, k)
    h_quotient = h_ring - h_ideal
    if args.machine:
        print(f"degree={k}")
        print(f"h_ring={h_ring}")
        print(f"h_ideal={h_ideal}")
        print(f"h_quotient={h_quotient}")
    else:
        print(f"H(P, {k})   = {h_ring}")
        print(f"H(I, {k})   = {h_ideal}")
        print(f"H(P/I, {k}) = {h_quotient}")
    return 0


def _cmd_fvector(args) -> int:
    if args.ideal:
        ideal = fileformats.parse_ideal(_read(args.ideal))
        complex_ = complexes.stanley_reisner_complex(ideal)
    else:
        complex_ = fileformats.parse_complex(_read(args.complex))
    fv = complexes.f_vector(complex_)
    if args.machine:
        for i, f in enumerate(fv):
            print(f"f_{i}={f}")
    else:
        print(" ".join(str(f) for f in fv))
    return 0


def _print_report(report: certifier.GotzmannReport, machine: bool) -> None:
    if machine:
        print(f"degree_d={report.degree_d}")
        print(f"h_quotient_d={report.h_quotient_d}")
        print(f"h_quotient_d1={report.h_quotient_d1}")
        print(f"macaulay_bound={report.macaulay_bound}")
        if report.square_free_check is not None:
            print(f"square_free_check={_bool(report.square_free_check)}")
        print(f"is_gotzmann={_bool(report.is_gotzmann)}")
    else:
        d = report.degree_d
        print(f"generation degree d:  {d}")
        print(f"H(P/I, {d}):           {report.h_quotient_d}")
        print(f"H(P/I, {d + 1}):           {report.h_quotient_d1}")
        print(f"Macaulay bound:       {report.macaulay_bound}")
        if report.square_free_check is not None:
            status = "pass" if report.square_free_check else "FAIL"
            print(f"square-free f-check:  {status}")
        verdict = "GOTZMANN" if report.is_gotzmann else "not Gotzmann"
        print(f"verdict:              {verdict}")


def _cmd_gotzmann(args) -> int:
    if args.ideal:
        ideal = fileformats.parse_ideal(_read(args.ideal))
    else:
        g = fileformats.parse_graph(_read(args.graph))
        ideal = graphs.edge_ideal(g)
    report = certifier.certify(ideal)
    _print_report(report, args.machine)
    return 0 if report.is_gotzmann else 1


def _cmd_verify(args) -> int:
    try:
        summary = certifier.verify_star_theorem(args.max_vertices, args.workers)
    except certifier.StarTheoremMismatch as exc:
        print(f"MISMATCH: {exc}", file=sys.stderr)
        return 1
    if args.machine:
        print(f"max_vertices={summary.max_vertices}")
        print(f"graphs_checked={summary.graphs_checked}")
        print(f"stars_found={summary.stars_found}")
        print(f"gotzmann_found={summary.gotzmann_found}")
        print(f"mismatches={summary.mismatches}")
    else:
        print(f"vertex range:         1..{summary.max_vertices}")
        print(f"graphs checked:       {summary.graphs_checked}")
        print(f"stars found:          {summary.stars_found}")
        print(f"Gotzmann edge ideals: {summary.gotzmann_found}")
        print(f"mismatches:           {summary.mismatches}")
        print(f"wall time:            {summary.wall_time_seconds:.2f} s")
    return 0


def _cmd_lex_ideal(args) -> int:
    ideal = monomials.lex_segment_ideal(args.n, args.d, args.count)
    sys.stdout.write(fileformats.format_ideal(ideal))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gotzmann",
        description="Exact Hilbert-function combinatorics of monomial ideals: "
        "Macaulay representations, Stanley-Reisner f-vectors, edge ideals "
        "and a Gotzmann certifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    machine_parent = argparse.ArgumentParser(add_help=False)
    machine_parent.add_argument(
        "--machine", action="store_true",
        help="emit one key=value pair per line",
    )

    p = sub.add_parser(
        "macaulay-rep", parents=[machine_parent],
        help="Macaulay representation of A at degree D",
    )
    p.add_argument("a", type=int, metavar="A")
    p.add_argument("d", type=int, metavar="D")
    p.set_defaults(func=_cmd_macaulay_rep)

    p = sub.add_parser(
        "pseudopower", parents=[machine_parent],
        help="Macaulay or Kruskal-Katona pseudo-power of A at degree D",
    )
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--macaulay", action="store_true",
                      help="A^<D>: top and bottom incremented")
    kind.add_argument("--kk", action="store_true",
                      help="A^(D): only bottoms incremented")
    p.add_argument("a", type=int, metavar="A")
    p.add_argument("d", type=int, metavar="D")
    p.set_defaults(func=_cmd_pseudopower)

    p = sub.add_parser(
        "hilbert", parents=[machine_parent],
        help="Hilbert values of an ideal file at one degree",
    )
    p.add_argument("--ideal", required=True, metavar="FILE")
    p.add_argument("--degree", required=True, type=int, metavar="K")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser(
        "fvector", parents=[machine_parent],
        help="f-vector of a complex file, or of the Stanley-Reisner complex "
        "of a square-free ideal file",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ideal", metavar="FILE")
    src.add_argument("--complex", metavar="FILE")
    p.set_defaults(func=_cmd_fvector)

    p = sub.add_parser(
        "gotzmann", parents=[machine_parent],
        help="certify an ideal file, or the edge ideal of a graph file; "
        "exit 0 if Gotzmann, 1 otherwise",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ideal", metavar="FILE")
    src.add_argument("--graph", metavar="FILE")
    p.set_defaults(func=_cmd_gotzmann)

    p = sub.add_parser(
        "verify-star-theorem", parents=[machine_parent],
        help="exhaustively check, on all labeled graphs up to N vertices, "
        "that edge ideals are Gotzmann exactly for stars",
    )
    p.add_argument("--max-vertices", required=True, type=int, metavar="N")
    p.add_argument("--workers", type=int, default=1, metavar="W")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "lex-ideal", parents=[machine_parent],
        help="emit the lex-segment ideal of COUNT degree-D monomials in N "
        "variables, in the ideal file format",
    )
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("d", type=int, metavar="D")
    p.add_argument("count", type=int, metavar="COUNT")
    p.set_defaults(func=_cmd_lex_ideal)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (fileformats.InputFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every command prints exact rationals.  Exit status is 0 on success, 1 when
the library rejects the input (the diagnostic goes to stderr and nothing
is printed on stdout), and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from ._exact import as_fraction, format_fraction
from .balls import Ball, Kind, classify_balls
from .cantor import cantor_stage_member, phi, psi, psi_decode
from .dyadic import DyadicInterval, classify_dyadic
from .metricprops import check_axioms, snowflake
from .padic import abs_p, series_sum, to_padic
from .seqspace import (
    Alphabet,
    d_rho,
    d_rho_bi,
    format_sequence,
    parse_bisequence,
    parse_sequence,
    shift_insert,
)
from .space import read_matrix


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _with_float(args, value: Fraction) -> str:
    out = format_fraction(value)
    if getattr(args, "float", False):
        out += f" ~{float(value):.17g}"
    return out


def _padic_val(args):
    return _with_float(args, abs_p(args.x, args.p))


def _padic_expand(args):
    return str(to_padic(args.x, args.p, args.digits))


def _padic_sum(args):
    value, converged = series_sum(args.terms, args.prime, args.digits)
    return f"{value} converged={'yes' if converged else 'no'}"


def _seq_dist(args):
    alphabet = Alphabet(args.alphabet)
    if args.bi:
        a, b = parse_bisequence(args.a, alphabet), parse_bisequence(args.b, alphabet)
        value = d_rho_bi(a, b, args.rho)
    else:
        a, b = parse_sequence(args.a, alphabet), parse_sequence(args.b, alphabet)
        value = d_rho(a, b, args.rho)
    return _with_float(args, value.exact())


def _seq_shift(args):
    alphabet = Alphabet(args.alphabet)
    return format_sequence(shift_insert(args.symbol, parse_sequence(args.seq, alphabet)))


def _cantor_phi(args):
    return _with_float(args, phi(parse_sequence(args.seq)))


def _cantor_psi(args):
    return _with_float(args, psi(parse_sequence(args.seq)))


def _cantor_decode(args):
    b = psi_decode(args.x)
    return "none" if b is None else format_sequence(b)


def _cantor_stage(args):
    return "yes" if cantor_stage_member(args.x, args.n) else "no"


def _check_axioms(args):
    return str(check_axioms(read_matrix(args.matrix)))


def _check_snowflake(args):
    return str(snowflake(read_matrix(args.matrix), args.tau).report)


def _balls_classify(args):
    space = read_matrix(args.matrix)
    b1 = Ball(args.c1, args.r1, Kind(args.k1))
    b2 = Ball(args.c2, args.r2, Kind(args.k2))
    return classify_balls(space, b1, b2).value


def _dyadic_classify(args):
    return classify_dyadic(DyadicInterval(args.i1, args.l1), DyadicInterval(args.i2, args.l2)).value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ultrametric", description="Exact ultrametric computations.")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    padic = groups.add_parser("padic", help="p-adic valuations and expansions")
    sub = padic.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("val", help="p-adic absolute value |x|_p")
    p.add_argument("x", type=_rational)
    p.add_argument("p", type=int)
    p.add_argument("--float", action="store_true", help="append a decimal approximation")
    p.set_defaults(func=_padic_val)
    p = sub.add_parser("expand", help="truncated p-adic expansion")
    p.add_argument("x", type=_rational)
    p.add_argument("p", type=int)
    p.add_argument("--digits", type=int, required=True)
    p.set_defaults(func=_padic_expand)
    p = sub.add_parser("sum", help="sum a finite run of a p-adic series")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("terms", nargs="+", type=_rational)
    p.set_defaults(func=_padic_sum)

    seq = groups.add_parser("seq", help="sequence spaces")
    sub = seq.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("dist", help="d_rho between two sequence literals")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--rho", type=_rational, required=True)
    p.add_argument("--bi", action="store_true", help="literals are '@<start> <seq>' bi-sequences")
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--float", action="store_true")
    p.set_defaults(func=_seq_dist)
    p = sub.add_parser("shift", help="prepend a symbol")
    p.add_argument("symbol", type=int)
    p.add_argument("seq")
    p.add_argument("--alphabet", type=int, default=2)
    p.set_defaults(func=_seq_shift)

    cantor = groups.add_parser("cantor", help="binary and Cantor-set encodings")
    sub = cantor.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, func, text in (("phi", _cantor_phi, "binary value"), ("psi", _cantor_psi, "Cantor-set value")):
        p = sub.add_parser(name, help=text)
        p.add_argument("seq")
        p.add_argument("--float", action="store_true")
        p.set_defaults(func=func)
    p = sub.add_parser("decode", help="the binary sequence psi maps to x, or 'none'")
    p.add_argument("x", type=_rational)
    p.set_defaults(func=_cantor_decode)
    p = sub.add_parser("stage", help="membership in the n-th Cantor stage")
    p.add_argument("x", type=_rational)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cantor_stage)

    check = groups.add_parser("check", help="metric axiom checks on a matrix file")
    sub = check.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("axioms")
    p.add_argument("matrix")
    p.set_defaults(func=_check_axioms)
    p = sub.add_parser("snowflake")
    p.add_argument("matrix")
    p.add_argument("--tau", type=_rational, required=True)
    p.set_defaults(func=_check_snowflake)

    balls = groups.add_parser("balls", help="ball relations on a matrix file")
    sub = balls.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("classify")
    p.add_argument("matrix")
    kinds = [k.value for k in Kind]
    for n in ("1", "2"):
        p.add_argument(f"c{n}", metavar=f"center{n}")
        p.add_argument(f"r{n}", metavar=f"radius{n}", type=_rational)
        p.add_argument(f"k{n}", metavar=f"kind{n}", choices=kinds)
    p.set_defaults(func=_balls_classify)

    dyadic = groups.add_parser("dyadic", help="dyadic intervals")
    sub = dyadic.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("classify")
    for name in ("i1", "l1", "i2", "l2"):
        p.add_argument(name, type=int)
    p.set_defaults(func=_dyadic_classify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (ValueError, KeyError, ArithmeticError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"ultrametric: {msg}", file=sys.stderr)
        return 1
    print(out)
    return 0


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

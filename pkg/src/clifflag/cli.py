"""Command-line front end: interpolate, eval and diagnose subcommands.

Problem files are JSON with an explicit signature (blade tokens such as
``e1`` do not determine one):

    {"signature": {"p": 0, "q": 2},
     "points": ["0", "1 + e1", "e1", "e2", "e12"],
     "values": ["1", "-1", "1", "e12", "-e2"]}

All output is exact; ``--decimal N`` appends clearly marked N-digit
approximations. Exit codes: 0 success, 2 parse/input error, 3 collinearity
violation, 4 repeated conjugacy class in R(0,3).
"""

from __future__ import annotations

import argparse
import decimal
import json
import sys

from .errors import (
    AlgebraError,
    CollinearityViolated,
    MultiPointClassInR03,
    ParseError,
)
from .interpolate import (
    InterpolationProblem,
    brute_force_interpolate,
    group_by_class,
    interpolate,
)
from .multivector import R03, Multivector, Signature, same_class
from .poly import Polynomial

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_COLLINEARITY = 3
EXIT_MULTIPOINT = 4


def _parse_signature(text: str) -> Signature:
    parts = text.replace(" ", "").split(",")
    if len(parts) != 2:
        raise ParseError(f"signature must look like 'p,q', got {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"signature must be two integers, got {text!r}") from None
    try:
        return Signature(p, q)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _decimal_str(value, digits: int) -> str:
    ctx = decimal.Context(prec=digits)
    return str(ctx.divide(decimal.Decimal(value.numerator), decimal.Decimal(value.denominator)))


def _decimal_multivector(mv: Multivector, digits: int) -> str:
    parts = []
    for mask, c in enumerate(mv.coeffs):
        if not c:
            continue
        body = _decimal_str(abs(c), digits)
        if mask:
            blade = "e" + "".join(
                str(b + 1) for b in range(mask.bit_length()) if mask >> b & 1
            )
            body = f"{body} {blade}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _decimal_polynomial(poly: Polynomial, digits: int) -> str:
    if not poly:
        return "(0)"
    terms = []
    for h in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[h]
        if not c:
            continue
        body = f"({_decimal_multivector(c, digits)})"
        terms.append(body if h == 0 else f"X^{h}*{body}")
    return " + ".join(terms)


def _load_problem(path: str) -> InterpolationProblem:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("problem file must be a JSON object")
    try:
        sig_doc = doc["signature"]
        points = doc["points"]
        values = doc["values"]
    except KeyError as exc:
        raise ParseError(f"problem file is missing the {exc} key") from None
    if not isinstance(sig_doc, dict) or "p" not in sig_doc or "q" not in sig_doc:
        raise ParseError('signature must be an object like {"p": 0, "q": 2}')
    try:
        sig = Signature(int(sig_doc["p"]), int(sig_doc["q"]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad signature: {exc}") from None
    if not isinstance(points, list) or not isinstance(values, list):
        raise ParseError("points and values must be arrays of strings")
    if len(points) != len(values) or not points:
        raise ParseError("points and values must have equal length >= 1")
    pairs = [
        (Multivector.parse(str(p), sig), Multivector.parse(str(w), sig))
        for p, w in zip(points, values)
    ]
    return InterpolationProblem.from_pairs(sig, pairs)


def cmd_interpolate(args) -> int:
    problem = _load_problem(args.file)
    poly = interpolate(problem)
    print(poly)
    if args.decimal:
        print(f"approx[{args.decimal} digits] ~ {_decimal_polynomial(poly, args.decimal)}")
    if args.verify:
        for x, w in problem.pairs:
            print(f"residual at {x}: {poly(x) - w}")
    if args.oracle:
        result = brute_force_interpolate(problem, args.max_degree)
        if result.kind == "unique":
            print("oracle: AGREE" if result.polynomial == poly else "oracle: DISAGREE")
        elif result.kind == "affine_family":
            member = all(result.polynomial(x) == w for x, w in problem.pairs)
            bound = (
                args.max_degree
                if args.max_degree is not None
                else group_by_class(problem).degree_bound
            )
            status = "solution lies in it" if member else "DISAGREE"
            print(
                f"oracle: AFFINE-FAMILY at max degree {bound} "
                f"(not unique, above the construction bound; {status})"
            )
        else:
            print("oracle: DISAGREE (no solution found)")
    return EXIT_OK


def cmd_eval(args) -> int:
    sig = _parse_signature(args.signature)
    poly = Polynomial.parse(args.polynomial, sig)
    point = Multivector.parse(args.point, sig)
    value = poly(point)
    print(value)
    if args.decimal:
        print(f"approx[{args.decimal} digits] ~ {_decimal_multivector(value, args.decimal)}")
    return EXIT_OK


def cmd_diagnose(args) -> int:
    sig = _parse_signature(args.signature)
    points = [Multivector.parse(text, sig) for text in args.points]
    for idx, x in enumerate(points, start=1):
        print(f"point {idx}: {x}")
        in_cone = x.in_quadratic_cone()
        print(f"  in quadratic cone: {'yes' if in_cone else 'no'}")
        if sig == R03:
            print(f"  psi+ = {x.psi_plus()}  psi- = {x.psi_minus()}")
        print(f"  class: {x.conjugacy_class() if in_cone else '-'}")
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            x, y = points[a], points[b]
            if x.in_quadratic_cone() and y.in_quadratic_cone():
                shared = "yes" if same_class(x, y) else "no"
            else:
                shared = "-"
            invertible = "yes" if (x - y).is_invertible() else "no"
            print(
                f"pair ({a + 1},{b + 1}): same class: {shared}; "
                f"difference invertible: {invertible}"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clifflag",
        description="Exact Clifford-algebra arithmetic and Lagrange interpolation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_int = sub.add_parser("interpolate", help="interpolate a JSON problem file")
    p_int.add_argument("file", help="problem file (JSON)")
    p_int.add_argument("--verify", action="store_true", help="print per-point residuals")
    p_int.add_argument(
        "--oracle", action="store_true", help="cross-check against the linear-system oracle"
    )
    p_int.add_argument(
        "--max-degree", type=int, default=None, metavar="D",
        help="oracle degree bound (default: the construction bound)",
    )
    p_int.add_argument(
        "--decimal", type=int, default=0, metavar="N",
        help="also print N-digit decimal approximations",
    )
    p_int.set_defaults(func=cmd_interpolate)

    p_eval = sub.add_parser("eval", help="evaluate a polynomial at a point")
    p_eval.add_argument("-s", "--signature", required=True, metavar="P,Q")
    p_eval.add_argument("polynomial", help="polynomial text, e.g. 'X^2*(1) + (e1)'")
    p_eval.add_argument("point", help="multivector text, e.g. '1 + e1'")
    p_eval.add_argument("--decimal", type=int, default=0, metavar="N")
    p_eval.set_defaults(func=cmd_eval)

    p_diag = sub.add_parser(
        "diagnose", help="cone membership, classes and invertibility of differences"
    )
    p_diag.add_argument("-s", "--signature", required=True, metavar="P,Q")
    p_diag.add_argument("points", nargs="+", help="multivector texts")
    p_diag.set_defaults(func=cmd_diagnose)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CollinearityViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COLLINEARITY
    except MultiPointClassInR03 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MULTIPOINT
    except (ParseError, AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

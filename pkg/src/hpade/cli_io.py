"""Tuple documents, JSON/text rendering, and the command-line driver.

Rationals cross the process boundary as strings ("p" or "p/q"), never as
floating point, so every consumer can reconstruct the exact values.  Exit
codes are the machine-readable summary: 0 success, 2 unparseable or
schema-violating input, 3 degeneracy (a used index is not normal), 4
insufficient truncation, 1 internal failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from .diagnostics import DegreeDrop, Normal, OrderShortfall, Singular, Verdict
from .duality import (
    DualityReport,
    PolyMatrix,
    assemble_m1,
    assemble_m2,
    check_duality,
    polymatrix_det,
)
from .errors import (
    HermitePadeError,
    InsufficientTruncation,
    LeadingZero,
    NotNormal,
    ParseError,
    SchemaError,
)
from .normality import check_general_position, random_tuple
from .series_core import (
    LaurentSeries,
    OrderBound,
    Polynomial,
    SeriesTuple,
    format_polynomial,
)
from .type1_hp import MultiIndexType1, solve_type1
from .type2_hp import MultiIndexType2, pair_indices, solve_type2

SCHEMA_VERSION = "1"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(token, position: str) -> Fraction:
    if isinstance(token, bool) or not isinstance(token, (str, int)):
        raise SchemaError(f"coefficient at {position} must be a rational string, got {type(token).__name__}")
    if isinstance(token, int):
        return Fraction(token)
    text = token.strip()
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational literal: {token!r}", position=position)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", position=position) from None


def parse_tuple(document: str) -> SeriesTuple:
    """Parse a tuple document (JSON text) into an exact SeriesTuple.

    The document holds, per series, the coefficients of z**-l for
    l = 0, 1, ... as rational strings.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, position=f"offset {exc.pos}") from None
    if not isinstance(data, dict):
        raise SchemaError("document root must be an object")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}")
    m = data.get("m")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise SchemaError("'m' must be an integer >= 1")
    coefficients = data.get("coefficients")
    if not isinstance(coefficients, list) or len(coefficients) != m + 1:
        raise SchemaError(f"'coefficients' must list {m + 1} series for m={m}")
    lengths = set()
    series = []
    for j, row in enumerate(coefficients):
        if not isinstance(row, list) or not row:
            raise SchemaError(f"series {j} must be a non-empty list of rationals")
        lengths.add(len(row))
        coeffs = [
            _parse_rational(tok, position=f"series {j}, coefficient {l}")
            for l, tok in enumerate(row)
        ]
        if coeffs[0] == 0:
            raise LeadingZero(f"series {j}: leading coefficient is zero")
        series.append(LaurentSeries(0, coeffs))
    if len(lengths) != 1:
        raise SchemaError("all series must store the same number of coefficients")
    return SeriesTuple(series)


def tuple_document(F: SeriesTuple) -> dict:
    """The JSON-ready document for a tuple (exact string rationals)."""
    return {
        "schema_version": SCHEMA_VERSION,
        "m": F.m,
        "coefficients": [[str(c) for c in f.coeffs] for f in F.series],
    }


def serialize_tuple(F: SeriesTuple) -> str:
    return json.dumps(tuple_document(F), indent=2) + "\n"


def polynomial_document(p: Polynomial) -> dict:
    return {
        "coefficients": [str(c) for c in p.coeffs],
        "text": format_polynomial(p),
    }


def order_document(o: OrderBound) -> dict:
    return {"value": o.value, "is_lower_bound": o.is_lower_bound, "text": str(o)}


def matrix_document(mat: PolyMatrix) -> list:
    return [
        [polynomial_document(mat.entry(i, j)) for j in range(mat.dim)]
        for i in range(mat.dim)
    ]


def verdict_document(v: Verdict) -> dict:
    doc: dict = {"kind": v.kind}
    if isinstance(v, Singular):
        doc["rank"] = v.rank
        doc["witness"] = [str(c) for c in v.witness]
    elif isinstance(v, DegreeDrop):
        doc["polynomial_index"] = v.polynomial_index
        doc["achieved_degree"] = (
            None if not isinstance(v.achieved_degree, int) else v.achieved_degree
        )
    elif isinstance(v, OrderShortfall):
        doc["achieved"] = order_document(v.achieved)
        doc["required"] = v.required
        doc["pair_index"] = v.pair_index
    return doc


def _matrix_lines(label: str, mat: PolyMatrix) -> list[str]:
    lines = [f"{label}:"]
    for i in range(mat.dim):
        lines.append("  [" + ", ".join(str(mat.entry(i, j)) for j in range(mat.dim)) + "]")
    return lines


def _read_tuple(path: str) -> SeriesTuple:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", position=path) from None
    return parse_tuple(text)


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        F = random_tuple(seed=args.seed, m=args.m, num_coeffs=args.coeffs, height=args.height)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    document = serialize_tuple(F)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(document)
        _emit(
            {"written": args.out, "m": F.m, "coeffs": args.coeffs, "fingerprint": F.fingerprint},
            [f"wrote m={F.m} tuple with {args.coeffs} coefficients per series to {args.out}"],
            args.format,
        )
    else:
        if args.format == "json":
            print(json.dumps(tuple_document(F), indent=2))
        else:
            sys.stdout.write(document)
    return 0


def _check_slot(value: int | None, m: int, name: str) -> None:
    if value is not None and not 0 <= value <= m:
        raise SchemaError(f"--{name} must lie in [0, {m}] for this tuple")


def _cmd_type1(args: argparse.Namespace) -> int:
    F = _read_tuple(args.input)
    _check_slot(args.k, F.m, "k")
    ks = [args.k] if args.k is not None else list(range(F.m + 1))
    solutions = [solve_type1(F, MultiIndexType1(n=args.n, k=k, m=F.m)) for k in ks]
    payload = {
        "command": "type1",
        "m": F.m,
        "n": args.n,
        "solutions": [
            {
                "k": sol.index.k,
                "polynomials": [polynomial_document(q) for q in sol.polynomials],
                "residual_order": order_document(sol.residual_order_achieved),
            }
            for sol in solutions
        ],
    }
    lines = []
    for sol in solutions:
        lines.append(f"k={sol.index.k}:")
        for j, q in enumerate(sol.polynomials):
            lines.append(f"  Q_{j} = {q}")
        lines.append(f"  residual order: {sol.residual_order_achieved}")
    _emit(payload, lines, args.format)
    return 0


def _cmd_type2(args: argparse.Namespace) -> int:
    F = _read_tuple(args.input)
    _check_slot(args.s, F.m, "s")
    ss = [args.s] if args.s is not None else list(range(F.m + 1))
    solutions = [solve_type2(F, MultiIndexType2(n=args.n, s=s, m=F.m)) for s in ss]
    payload = {
        "command": "type2",
        "m": F.m,
        "n": args.n,
        "solutions": [
            {
                "s": sol.index.s,
                "polynomials": [polynomial_document(p) for p in sol.polynomials],
                "residual_orders": [
                    {"pair": j, "order": order_document(o)}
                    for j, o in zip(pair_indices(sol.index), sol.residual_orders_achieved)
                ],
            }
            for sol in solutions
        ],
    }
    lines = []
    for sol in solutions:
        lines.append(f"s={sol.index.s}:")
        for j, p in enumerate(sol.polynomials):
            lines.append(f"  P_{j} = {p}")
        for j, o in zip(pair_indices(sol.index), sol.residual_orders_achieved):
            lines.append(f"  residual order (pair {j}): {o}")
    _emit(payload, lines, args.format)
    return 0


def _cmd_normality(args: argparse.Namespace) -> int:
    F = _read_tuple(args.input)
    report = check_general_position(F, args.n)
    payload = {
        "command": "normality",
        "m": report.m,
        "n": report.n,
        "general_position_at_n": report.general_position_at_n,
        "verdicts": [
            {"family": family, "slot": slot, "verdict": verdict_document(v)}
            for family, slot, v in report.items()
        ],
    }
    lines = [f"n={report.n}, m={report.m}"]
    for family, slot, v in report.items():
        lines.append(f"  {family}[{slot}]: {v}")
    lines.append(
        "general position at n: " + ("yes" if report.general_position_at_n else "no")
    )
    _emit(payload, lines, args.format)
    return 0 if report.general_position_at_n else 3


def _cmd_theorem1(args: argparse.Namespace) -> int:
    F = _read_tuple(args.input)
    n = args.n
    sols1 = [solve_type1(F, MultiIndexType1(n=n, k=k, m=F.m)) for k in range(F.m + 1)]
    sols2 = [solve_type2(F, MultiIndexType2(n=n, s=s, m=F.m)) for s in range(F.m + 1)]
    m1 = assemble_m1(sols1)
    m2 = assemble_m2(sols2)
    report: DualityReport = check_duality(m1, m2)
    det1 = polymatrix_det(m1)
    det2 = polymatrix_det(m2)
    payload = {
        "command": "theorem1",
        "m": F.m,
        "n": n,
        "m1": matrix_document(m1),
        "m2": matrix_document(m2),
        "product": matrix_document(report.product),
        "det_m1": polynomial_document(det1),
        "det_m2": polynomial_document(det2),
        "identity": report.holds,
        "offending": [list(pos) for pos in report.offending],
    }
    lines = []
    lines.extend(_matrix_lines("M1", m1))
    lines.extend(_matrix_lines("M2", m2))
    lines.extend(_matrix_lines("M1*M2", report.product))
    lines.append(f"det(M1) = {det1}")
    lines.append(f"det(M2) = {det2}")
    lines.append("identity: " + ("yes" if report.holds else f"no ({report})"))
    _emit(payload, lines, args.format)
    return 0 if report.holds else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hpade",
        description=(
            "Exact construction of the two inverse polynomial matrices built "
            "from type I and type II simultaneous rational approximations."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a seeded random tuple")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--m", type=int, required=True, help="number of series minus one")
    gen.add_argument("--coeffs", type=int, required=True, help="coefficients per series")
    gen.add_argument("--height", type=int, default=10, help="bound on numerators/denominators")
    gen.add_argument("--out", help="write the document here instead of stdout")
    gen.set_defaults(func=_cmd_gen)

    t1 = sub.add_parser("type1", parents=[common], help="solve type I systems")
    t1.add_argument("--input", required=True, help="tuple document path")
    t1.add_argument("--n", type=int, required=True)
    t1.add_argument("--k", type=int, default=None, help="one slot (default: all)")
    t1.set_defaults(func=_cmd_type1)

    t2 = sub.add_parser("type2", parents=[common], help="solve type II systems")
    t2.add_argument("--input", required=True, help="tuple document path")
    t2.add_argument("--n", type=int, required=True)
    t2.add_argument("--s", type=int, default=None, help="one slot (default: all)")
    t2.set_defaults(func=_cmd_type2)

    norm = sub.add_parser(
        "normality", parents=[common], help="classify all systems used at n"
    )
    norm.add_argument("--input", required=True, help="tuple document path")
    norm.add_argument("--n", type=int, required=True)
    norm.set_defaults(func=_cmd_normality)

    th = sub.add_parser(
        "theorem1",
        parents=[common],
        help="full pipeline: solve everything, assemble M1 and M2, check M1*M2 == I",
    )
    th.add_argument("--input", required=True, help="tuple document path")
    th.add_argument("--n", type=int, required=True)
    th.set_defaults(func=_cmd_theorem1)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, SchemaError, LeadingZero) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotNormal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InsufficientTruncation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except HermitePadeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()

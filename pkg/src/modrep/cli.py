"""Command-line front end.

Subcommands: decompose, rep, kernel-info, congruence, scan, gamma-d,
probe-abelian.  Output is text by default; --format json/csv where it
makes sense.  Alphas are entered as exact fractions only.  Exit codes:
0 success, 2 parse error, 3 membership error, 4 enumeration cap, 5
undecided at the modulus bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import gcd

from .analyzer import (
    UndecidedAtBoundError,
    abelianness_probe,
    decide_congruence,
    gamma_d_info,
    kernel_report,
)
from .character import Alpha, decompose_gamma04, parse_alpha
from .engine import DEFAULT_CAP, DEFAULT_MAX_MODULUS, GroupTooLargeError, ModulusBoundError
from .induced import u_alpha
from .monomial import Monomial
from .psl2z import MembershipError, ParseError, decompose_st, parse_element

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MEMBERSHIP = 3
EXIT_CAP = 4
EXIT_UNDECIDED = 5

CACHE_DIR_ENV = "MODREP_CACHE_DIR"
SCAN_CSV_HEADER = "alpha,N,index,genus,cusps,level,free_generators,congruent"


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _grid_lines(mono: Monomial) -> list[str]:
    cells = [
        ["0" if p is None else ("1" if p.is_zero() else f"e({p})") for p in row]
        for row in mono.to_dense()
    ]
    width = max(len(c) for row in cells for c in row)
    return ["  ".join(c.rjust(width) for c in row) for row in cells]


def _cmd_decompose(args) -> str:
    m = parse_element(args.input)
    if args.gamma04:
        word = decompose_gamma04(m)
    else:
        word = decompose_st(m)
    if args.format == "json":
        return _dump_json(
            {
                "matrix": [[m.a, m.b], [m.c, m.d]],
                "kind": "gamma04" if args.gamma04 else "st",
                "word": str(word),
            }
        )
    return str(word)


def _cmd_rep(args) -> str:
    a = parse_alpha(args.alpha)
    g = parse_element(args.element)
    mono = u_alpha(a, g)
    if args.format == "json":
        out = {"alpha": str(a), "element": [[g.a, g.b], [g.c, g.d]]}
        out.update(mono.to_json_dict())
        return _dump_json(out)
    return "\n".join(_grid_lines(mono))


def _report_pairs(report) -> list[tuple[str, str]]:
    pairs = [
        ("alpha", str(report.alpha)),
        ("N", str(report.n_order)),
        ("index", str(report.index)),
        ("genus", str(report.genus)),
        ("cusps", str(report.cusps)),
        ("level", str(report.level)),
        ("free_generators", str(report.free_generators)),
        ("area_over_pi", str(report.area_over_pi)),
    ]
    if report.cross_checks is not None:
        pairs += [
            ("image_order", str(report.cross_checks.image_order)),
            ("diagonal_order", str(report.cross_checks.diagonal_order)),
            ("t_image_order", str(report.cross_checks.t_image_order)),
        ]
    return pairs


def _cmd_kernel_info(args) -> str:
    a = parse_alpha(args.alpha)
    report = kernel_report(a, verify=args.verify, cap=args.cap)
    if args.format == "json":
        return _dump_json(report.to_json_dict())
    pairs = _report_pairs(report)
    if args.format == "csv":
        return ",".join(k for k, _ in pairs) + "\n" + ",".join(v for _, v in pairs)
    return "\n".join(f"{k} = {v}" for k, v in pairs)


def _cmd_congruence(args) -> str:
    a = parse_alpha(args.alpha)
    cert = decide_congruence(
        a, max_modulus=args.max_modulus, cap=args.cap, cache_dir=args.cache_dir
    )
    if args.format == "json":
        return _dump_json(cert.to_json_dict())
    lines = [
        f"alpha = {cert.alpha}",
        f"N = {cert.n_order}",
        f"checked_level = {cert.checked_level}",
        f"congruent = {str(cert.congruent).lower()}",
        f"kernel = {cert.kernel_id}",
    ]
    if cert.witness is not None:
        w = cert.witness
        lines += [
            f"witness_matrix = {w.element}",
            f"witness_word = {w.word}",
            f"witness_image = {json.dumps(w.image.to_json_dict(), sort_keys=True)}",
        ]
    return "\n".join(lines)


def _scan_fractions(max_den: int, full_range: bool) -> list[Fraction]:
    top = Fraction(1) if full_range else Fraction(1, 2)
    out = set()
    for q in range(1, max_den + 1):
        for p in range(0, q + 1):
            if gcd(p, q) != 1:
                continue
            f = Fraction(p, q)
            if f < top or (not full_range and f == top):
                out.add(f)
    return sorted(out)


def _cmd_scan(args) -> str:
    if args.max_den < 1:
        raise ParseError("--max-den must be >= 1")
    rows = []
    for f in _scan_fractions(args.max_den, args.full_range):
        a = Alpha.from_fraction(f)
        report = kernel_report(a)
        cert = decide_congruence(
            a, max_modulus=args.max_modulus, cap=args.cap, cache_dir=args.cache_dir
        )
        rows.append(
            (
                str(a),
                report.n_order,
                report.index,
                report.genus,
                report.cusps,
                report.level,
                report.free_generators,
                cert.congruent,
            )
        )
    if args.format == "json":
        keys = SCAN_CSV_HEADER.split(",")
        return _dump_json([dict(zip(keys, row)) for row in rows])
    lines = [SCAN_CSV_HEADER]
    for row in rows:
        cells = [str(x).lower() if isinstance(x, bool) else str(x) for x in row]
        lines.append(",".join(cells))
    if args.format == "csv":
        return "\n".join(lines)
    widths = [max(len(line.split(",")[i]) for line in lines) for i in range(8)]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(line.split(","), widths))
        for line in lines
    )


def _cmd_gamma_d(args) -> str:
    info = gamma_d_info(args.d)
    if args.format == "json":
        return _dump_json(info.to_json_dict())
    items = info.to_json_dict()
    return "\n".join(
        f"{k} = {str(v).lower() if isinstance(v, bool) else v}" for k, v in items.items()
    )


def _cmd_probe_abelian(args) -> str:
    report = abelianness_probe(args.k, args.samples, seed=args.seed)
    out = {
        "k": report.k,
        "modulus": report.modulus,
        "samples": report.samples,
        "sampled_all_in": report.sampled_all_in,
        "witness_commutator": str(report.witness_commutator),
        "witness_in": report.witness_in,
    }
    if report.first_failure is not None:
        out["first_failure"] = str(report.first_failure)
    if args.format == "json":
        return _dump_json(out)
    return "\n".join(
        f"{k} = {str(v).lower() if isinstance(v, bool) else v}" for k, v in out.items()
    )


_CSV_COMMANDS = {"scan", "kernel-info"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cache-dir", default=os.environ.get(CACHE_DIR_ENV))
    common.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--max-modulus", type=int, default=DEFAULT_MAX_MODULUS)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="modrep",
        description="Exact arithmetic for the induced 6-dimensional monomial "
        "representations of PSL(2,Z) and congruence certification of their kernels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="write an element as a word")
    p.add_argument("input", help="matrix [[a,b],[c,d]] or S/T word")
    p.add_argument("--gamma04", action="store_true", help="decompose over T and V=ST^4S")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("rep", parents=[common], help="print the 6x6 induced image")
    p.add_argument("--alpha", required=True, help="character parameter p/q")
    p.add_argument("element", help="matrix [[a,b],[c,d]] or S/T word")
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("kernel-info", parents=[common], help="kernel invariant suite")
    p.add_argument("--alpha", required=True)
    p.add_argument("--verify", action="store_true", help="cross-check by enumeration")
    p.set_defaults(func=_cmd_kernel_info)

    p = sub.add_parser("congruence", parents=[common], help="congruence certificate")
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=_cmd_congruence)

    p = sub.add_parser("scan", parents=[common], help="table over all p/q up to a bound")
    p.add_argument("--max-den", type=int, required=True)
    p.add_argument("--full-range", action="store_true", help="alphas in [0,1) not [0,1/2]")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("gamma-d", parents=[common], help="genus-zero kernel bound data")
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_gamma_d)

    p = sub.add_parser("probe-abelian", parents=[common], help="commutator sampling mod 2^(k+2)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=500)
    p.set_defaults(func=_cmd_probe_abelian)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command not in _CSV_COMMANDS:
        print(f"csv output is not supported for {args.command!r}", file=sys.stderr)
        return EXIT_PARSE
    try:
        output = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MembershipError as exc:
        print(f"membership error: {exc}", file=sys.stderr)
        return EXIT_MEMBERSHIP
    except GroupTooLargeError as exc:
        print(f"enumeration cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UndecidedAtBoundError, ModulusBoundError) as exc:
        print(f"undecided at modulus bound: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(output)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

Subcommands: classify | search | multiplier | family | tables | oeis |
bounds | palsquare.  JSON is the canonical machine format; CSV and
b-file output are projections of it.  Exit codes: 0 success, 1
verification failure or CONFLICT-WITH-PAPER present, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import digit_bound
from .classify import ARH, MRH, NIVEN, classify
from .digitvec import DigitVec
from .families import (
    ALL_ONES,
    ALTERNATING,
    NIVEN_NOT_MRH,
    REPUNIT12,
    SQUARE,
    FamilyParameterError,
    gen_all_ones,
    gen_alternating,
    gen_niven_not_mrh,
    gen_repunit12,
    gen_square_family,
    verify_family,
)
from .oeis import bfile_deviation_note, first_terms
from .search import (
    ALLOW,
    FORBID,
    SearchConfig,
    multiplier_multiplicity,
    numbers_for_multiplier,
    palindromic_square_search,
    scan_range,
)
from .tables import reproduce_all_tables, reproduce_table, section1_counts

FAMILY_NAMES = {
    "repunit12": REPUNIT12,
    "all-ones": ALL_ONES,
    "alternating": ALTERNATING,
    "square": SQUARE,
    "niven-not-mrh": NIVEN_NOT_MRH,
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rhnumbers",
        description="Additive and multiplicative Ramanujan-Hardy numbers in arbitrary bases",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", type=int, default=10, help="numeration base (default 10)")
    common.add_argument(
        "--format",
        choices=("json", "csv", "bfile"),
        default="json",
        help="output format (default json)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify one integer")
    p.add_argument("n", help="the integer (decimal value, or digit string with --digits)")
    p.add_argument(
        "--digits",
        action="store_true",
        help="interpret N as a base-b digit string instead of a decimal value",
    )

    p = sub.add_parser("search", parents=[common], help="scan an inclusive range")
    p.add_argument("--max", type=_positive_int, required=True, dest="hi")
    p.add_argument("--min", type=_positive_int, default=1, dest="lo")
    p.add_argument("--kind", choices=(ARH, MRH, NIVEN), required=True)
    p.add_argument("--no-zero-digits", action="store_true")
    p.add_argument("--multiplier", type=_positive_int, default=None)
    p.add_argument("--partitions", type=_positive_int, default=1)

    p = sub.add_parser(
        "multiplier", parents=[common], help="complete number set for one multiplier"
    )
    p.add_argument("--multiplier", type=_positive_int, required=True)
    p.add_argument("--kind", choices=(ARH, MRH), required=True)
    p.add_argument("--no-zero-digits", action="store_true")

    p = sub.add_parser("family", parents=[common], help="generate/verify a family instance")
    p.add_argument("name", choices=sorted(FAMILY_NAMES))
    p.add_argument("--k", type=_nonnegative_int, default=None)
    p.add_argument("--p", type=_positive_int, default=None)
    p.add_argument("--n", type=_positive_int, default=None)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("tables", parents=[common], help="reproduce printed tables")
    p.add_argument(
        "--which",
        choices=("1", "2", "3", "counts", "all"),
        default="all",
        help="table to reproduce, or the headline counts",
    )

    p = sub.add_parser("oeis", parents=[common], help="emit an OEIS b-file")
    p.add_argument("--seq", choices=("A305130", "A305131"), required=True)
    p.add_argument("--count", type=_positive_int, required=True)

    p = sub.add_parser("bounds", parents=[common], help="digit-count bound for (base, M)")
    p.add_argument("--multiplier", type=_positive_int, required=True)
    p.add_argument("--kind", choices=(ARH, MRH), required=True)

    p = sub.add_parser("palsquare", parents=[common], help="palindromes with zero-free MRH squares")
    p.add_argument("--limit", type=_positive_int, required=True)
    return parser


def _print_json(obj, out) -> None:
    print(json.dumps(obj, indent=2), file=out)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _classify_rows(results) -> list[list]:
    rows = []
    for n, res in results:
        d = res.to_json_dict()
        rows.append(
            [
                d["n"],
                d["base"],
                d["niven"],
                ";".join(str(w["m"]) for w in d["arh"]),
                ";".join(str(w["m"]) for w in d["mrh"]),
                d["quadratic_niven"],
                d["strongly_quadratic_niven"],
            ]
        )
    return rows


_CLASSIFY_HEADER = [
    "n",
    "base",
    "niven",
    "arh_multipliers",
    "mrh_multipliers",
    "quadratic_niven",
    "strongly_quadratic_niven",
]


def run_cli(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return _dispatch(args, out, err)
    except (FamilyParameterError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def _dispatch(args, out, err) -> int:
    if args.command == "classify":
        if args.digits:
            n = DigitVec.parse(args.n, args.base)
        else:
            n = DigitVec.from_int(int(args.n), args.base)
        result = classify(n)
        if args.format == "csv":
            print(_csv_text(_CLASSIFY_HEADER, _classify_rows([(n.to_int(), result)])), end="", file=out)
        else:
            _print_json(result.to_json_dict(), out)
        return 0

    if args.command == "search":
        cfg = SearchConfig(
            base=args.base,
            lo=args.lo,
            hi=args.hi,
            kind=args.kind,
            zero_digit_policy=FORBID if args.no_zero_digits else ALLOW,
            multiplier_filter=args.multiplier,
        )
        results = list(scan_range(cfg, partitions=args.partitions))
        if args.format == "json":
            _print_json(
                {
                    "config": {
                        "base": cfg.base,
                        "lo": cfg.lo,
                        "hi": cfg.hi,
                        "kind": cfg.kind,
                        "zero_digit_policy": cfg.zero_digit_policy,
                        "multiplier_filter": cfg.multiplier_filter,
                    },
                    "count": len(results),
                    "results": [res.to_json_dict() for _, res in results],
                },
                out,
            )
        elif args.format == "csv":
            print(_csv_text(_CLASSIFY_HEADER, _classify_rows(results)), end="", file=out)
        else:
            for i, (n, _) in enumerate(results, start=1):
                print(f"{i} {n}", file=out)
        return 0

    if args.command == "multiplier":
        policy = FORBID if args.no_zero_digits else ALLOW
        numbers = numbers_for_multiplier(args.base, args.multiplier, args.kind, policy)
        if args.format == "json":
            _print_json(
                {
                    "base": args.base,
                    "multiplier": args.multiplier,
                    "kind": args.kind,
                    "zero_digit_policy": policy,
                    "multiplicity": multiplier_multiplicity(
                        args.base, args.multiplier, args.kind, policy
                    ),
                    "numbers": numbers,
                },
                out,
            )
        elif args.format == "csv":
            print(_csv_text(["n"], [[n] for n in numbers]), end="", file=out)
        else:
            for i, n in enumerate(numbers, start=1):
                print(f"{i} {n}", file=out)
        return 0

    if args.command == "family":
        inst = _build_family(args)
        payload = inst.to_json_dict()
        code = 0
        if args.verify:
            report = verify_family(inst)
            payload = report.to_json_dict()
            if not report.passed:
                code = 1
        _print_json(payload, out)
        return code

    if args.command == "tables":
        if args.which == "counts":
            report = section1_counts(base=args.base)
            _print_json(report.to_json_dict(), out)
            return 0
        if args.which == "all":
            reports = reproduce_all_tables()
            _print_json([r.to_json_dict() for r in reports], out)
        else:
            reports = [reproduce_table(f"T{args.which}")]
            _print_json(reports[0].to_json_dict(), out)
        return 1 if any(r.has_toolkit_mismatch for r in reports) else 0

    if args.command == "oeis":
        terms = first_terms(args.seq, args.count)
        text = "".join(f"{i} {v}\n" for i, v in enumerate(terms, start=1))
        print(text, end="", file=out)
        note = bfile_deviation_note(args.seq, terms)
        if note:
            print(note, file=err)
        return 0

    if args.command == "bounds":
        spec = digit_bound(args.base, args.multiplier, args.kind)
        _print_json(spec.to_json_dict(), out)
        return 0

    if args.command == "palsquare":
        hits = palindromic_square_search(args.limit, base=args.base)
        if args.format == "csv":
            print(_csv_text(["n", "square", "square_digit_sum"], [list(h) for h in hits]), end="", file=out)
        else:
            _print_json(
                [{"n": n, "square": sq, "square_digit_sum": s} for n, sq, s in hits], out
            )
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def _build_family(args):
    family = FAMILY_NAMES[args.name]
    def need(param, flag):
        if param is None:
            raise FamilyParameterError(flag, f"family {args.name!r} requires {flag}")
        return param
    if family == REPUNIT12:
        if args.base != 10:
            raise FamilyParameterError("base is 10", "repunit12 is a base-10 family")
        return gen_repunit12(need(args.k, "--k"))
    if family == ALL_ONES:
        return gen_all_ones(args.base, need(args.p, "--p"))
    if family == ALTERNATING:
        return gen_alternating(args.base, need(args.p, "--p"))
    if family == SQUARE:
        return gen_square_family(args.base, need(args.k, "--k"))
    return gen_niven_not_mrh(args.base, need(args.n, "--n"))


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command-line front end.

Evaluation subcommands parse the sheaf / Hall grammars and print canonical
(or JSON-line) output; ``verify`` and ``oracle-check`` run the suites.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import run_oracle_check, run_verify
from .hall import (
    bracket,
    coproduct,
    format_hall,
    format_hall_tensor,
    parse_hall,
    star,
)
from .lie import RhoMode
from .modules import (
    NotNormalError,
    classify,
    format_module_class,
    parse_module,
)
from .parsing import ParseError
from .report import Report
from .sheaves import format_sheaf, hom_count, k0_class, parse_sheaf, extensions


def _single_summand(text: str):
    cls = parse_sheaf(text)
    if len(cls) != 1:
        raise ParseError("expected a single indecomposable summand", 0)
    return cls.summands[0]


def _print_reports(reports: list[Report], as_json: bool) -> int:
    failed = False
    for report in reports:
        if as_json:
            for record in report.records:
                print(json.dumps(record.as_json()))
        else:
            print(report.summary())
        failed = failed or not report.passed
    return 1 if failed else 0


def _cmd_classify(args) -> int:
    if args.module_file == "-":
        text = sys.stdin.read()
    else:
        with open(args.module_file, "r", encoding="utf-8") as handle:
            text = handle.read()
    module = parse_module(text)
    cls = classify(module)
    if args.json:
        print(json.dumps({"class": format_module_class(cls)}))
    else:
        print(format_module_class(cls))
    return 0


def _cmd_hom(args) -> int:
    source = _single_summand(args.source)
    target = _single_summand(args.target)
    count = hom_count(source, target)
    if args.json:
        print(json.dumps({"source": str(source), "target": str(target), "count": count}))
    else:
        print(count)
    return 0


def _cmd_product(args) -> int:
    result = star(parse_hall(args.left), parse_hall(args.right))
    if args.json:
        for support, coeff in result.items():
            print(json.dumps({"sheaf": format_sheaf(support), "coeff": str(coeff)}))
    else:
        print(format_hall(result))
    return 0


def _cmd_bracket(args) -> int:
    result = bracket(parse_hall(args.left), parse_hall(args.right))
    if args.json:
        for support, coeff in result.items():
            print(json.dumps({"sheaf": format_sheaf(support), "coeff": str(coeff)}))
    else:
        print(format_hall(result))
    return 0


def _cmd_coproduct(args) -> int:
    result = coproduct(parse_hall(args.element))
    if args.json:
        for (left, right), coeff in result.items():
            print(
                json.dumps(
                    {
                        "left": format_sheaf(left),
                        "right": format_sheaf(right),
                        "coeff": str(coeff),
                    }
                )
            )
    else:
        print(format_hall_tensor(result))
    return 0


def _cmd_k0(args) -> int:
    cls = parse_sheaf(args.sheaf)
    image = k0_class(cls)
    if args.json:
        print(
            json.dumps(
                {
                    "sheaf": format_sheaf(cls),
                    "k0": [image.rank, image.degree, {str(i): m for i, m in image.cyclic}],
                }
            )
        )
    else:
        print(str(image))
    return 0


def _cmd_extensions(args) -> int:
    quot = parse_sheaf(args.quotient)
    sub = parse_sheaf(args.sub)
    for middle, count in extensions(quot, sub):
        if args.json:
            print(json.dumps({"middle": format_sheaf(middle), "count": count}))
        else:
            print(f"{count}*[{format_sheaf(middle)}]")
    return 0


def _cmd_verify(args) -> int:
    mode = RhoMode.PAPER_LITERAL if args.mode == "paper-literal" else RhoMode.CORRECTED
    return _print_reports(run_verify(max_index=args.max_index, mode=mode), args.json)


def _cmd_oracle_check(args) -> int:
    return _print_reports(run_oracle_check(bound=args.bound), args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f1hall",
        description="Sheaf classes on the monoid projective line and their Hall algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a module file into indecomposables")
    p.add_argument("module_file", help="path to a 'name -> target' file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("hom", help="morphism count between two indecomposables")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("product", help="convolution product of two Hall expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("coproduct", help="coproduct of a Hall expression")
    p.add_argument("element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_coproduct)

    p = sub.add_parser("bracket", help="commutator of two Hall expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("k0", help="Grothendieck class of a sheaf expression")
    p.add_argument("sheaf")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_k0)

    p = sub.add_parser("extensions", help="middle terms extending QUOTIENT by SUB")
    p.add_argument("quotient")
    p.add_argument("sub")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_extensions)

    p = sub.add_parser("verify", help="run the algebra and Lie correspondence suites")
    p.add_argument("--max-index", type=int, default=4)
    p.add_argument("--mode", choices=["corrected", "paper-literal"], default="corrected")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle-check", help="run every count against its brute-force oracle")
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except NotNormalError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

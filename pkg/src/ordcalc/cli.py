"""Command-line interface: ``ordcalc eval|compare|laws|table|repl``.

Exit codes: 0 success, 1 a law missed its expected polarity, 2 usage, parse
or domain error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cnf import cmp
from .expr import ExprError, evaluate, parse, print_json, print_latex, print_text
from .harness import (
    CATALOG,
    FAILS,
    LAW_TABLE,
    GenParams,
    check_law,
    law_ids,
    render,
)

PRINTERS = {"text": print_text, "latex": print_latex, "json": print_json}

EXIT_OK, EXIT_LAW_FAILED, EXIT_USAGE = 0, 1, 2


def _eval_or_report(text: str, err):
    try:
        return evaluate(parse(text))
    except ExprError as exc:
        print(exc.render(text), file=err)
        return None


def cmd_eval(expr: str, fmt: str = "text", out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    value = _eval_or_report(expr, err)
    if value is None:
        return EXIT_USAGE
    print(PRINTERS[fmt](value), file=out)
    return EXIT_OK


def cmd_compare(e1: str, e2: str, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    a = _eval_or_report(e1, err)
    if a is None:
        return EXIT_USAGE
    b = _eval_or_report(e2, err)
    if b is None:
        return EXIT_USAGE
    print("<=>"[cmp(a, b) + 1], file=out)
    return EXIT_OK


def _describe_counterexample(report) -> str:
    inputs = report.failures[0][0]
    if len(inputs) <= 3 and all(not isinstance(x, (list, tuple)) for x in inputs):
        names = ("α", "β", "γ")
        return " ".join(f"{n}={render(x)}" for n, x in zip(names, inputs))
    return render(inputs)


def cmd_laws(law: str = "all", params: GenParams = GenParams(), trials: int = 200,
             as_json: bool = False, jobs: int = 1, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    if law == "all":
        ids = law_ids()
    elif law in CATALOG:
        ids = [law]
    else:
        print(f"unknown law {law!r}; known laws: {', '.join(law_ids())}", file=err)
        return EXIT_USAGE
    reports = [check_law(i, params, trials, jobs) for i in ids]
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.law_id:<20} expect {r.expected_polarity:<5}  " \
               f"{len(r.failures)}/{r.trials} failing trials"
        if r.failures and r.expected_polarity == FAILS:
            line += f"  counterexample: {_describe_counterexample(r)}"
        elif r.failures:
            inputs, lhs, rhs = r.failures[0]
            line += f"  first failure: inputs {render(inputs)} lhs {render(lhs)} rhs {render(rhs)}"
        print(line, file=out)
    if as_json:
        doc = {
            "seed": params.seed,
            "trials": trials,
            "bounds": {"max_depth": params.max_depth, "max_terms": params.max_terms,
                       "max_coeff": params.max_coeff},
            "passed": all(r.passed for r in reports),
            "laws": [r.to_dict() for r in reports],
        }
        print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_LAW_FAILED


TABLE_TRIALS = 50


def cmd_table(params: GenParams = GenParams(), out=None) -> int:
    out = out or sys.stdout
    ok = True
    print("(w+2) squared under the three exponentiations:", file=out)
    for op in ("^", "j^", "#^"):
        print(f"  {op:<3} {print_text(evaluate(parse(f'(w+2) {op} 2')))}", file=out)
    print(file=out)
    cols = ("successor-based", "(+)-based", "(x)-based")
    width = 30
    print(f"{'law':<34}" + "".join(f"{c:<{width}}" for c in cols), file=out)
    for row, cells in LAW_TABLE:
        line = f"{row:<34}"
        for law_id in cells:
            if law_id is None:
                line += f"{'not applicable':<{width}}"
                continue
            r = check_law(law_id, params, TABLE_TRIALS)
            ok &= r.passed
            line += f"{('PASS ' if r.passed else 'FAIL ') + law_id:<{width}}"
        print(line, file=out)
    return EXIT_OK if ok else EXIT_LAW_FAILED


def cmd_repl(inp=None, out=None, err=None) -> int:
    inp, out, err = inp or sys.stdin, out or sys.stdout, err or sys.stderr
    fmt = "text"
    interactive = inp.isatty()
    while True:
        if interactive:
            print("ord> ", end="", file=out, flush=True)
        line = inp.readline()
        if not line:
            return EXIT_OK
        line = line.strip()
        if not line:
            continue
        if line in (":q", ":quit"):
            return EXIT_OK
        if line in (":latex", ":json", ":text"):
            fmt = line[1:] if fmt != line[1:] else "text"
            print(f"format: {fmt}", file=err)
            continue
        value = _eval_or_report(line, err)
        if value is not None:
            print(PRINTERS[fmt](value), file=out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ordcalc",
                                 description="Exact ordinal arithmetic below epsilon_0.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    p.add_argument("--format", choices=sorted(PRINTERS), default="text")

    p = sub.add_parser("compare", help="compare two expressions")
    p.add_argument("e1")
    p.add_argument("e2")

    p = sub.add_parser("laws", help="check algebraic laws on seeded random ordinals")
    p.add_argument("--law", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--max-terms", type=int, default=3)
    p.add_argument("--max-coeff", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--json", action="store_true")
    p.add_argument("--list", action="store_true", help="list law ids and exit")

    sub.add_parser("table", help="reproduce the (w+2)^2 triple and the law grid")
    sub.add_parser("repl", help="interactive calculator")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "eval":
        return cmd_eval(args.expr, args.format)
    if args.command == "compare":
        return cmd_compare(args.e1, args.e2)
    if args.command == "laws":
        if args.list:
            for law_id in law_ids():
                print(f"{law_id:<20} {CATALOG[law_id].title}")
            return EXIT_OK
        try:
            params = GenParams(args.max_depth, args.max_terms, args.max_coeff, args.seed)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        return cmd_laws(args.law, params, args.trials, args.json, args.jobs)
    if args.command == "table":
        return cmd_table()
    return cmd_repl()


if __name__ == "__main__":
    sys.exit(main())

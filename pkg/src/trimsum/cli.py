"""Command-line front end: weights, single tests, traces, comparisons, fuzzing.

Numbers are always passed as strings so arbitrarily long inputs work.
The divisibility verdict goes to stdout, never into the exit code:
0 means the command ran, 1 a domain error, 2 a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analyzer, oracle
from .digits import parse
from .families import (
    BINOMIAL,
    FAMILIES,
    LAST_DIGITS,
    LEFT_TRIM,
    SUM,
    TALMUD,
    TRIM,
    TestRule,
    Trace,
    apply_once,
    iterate,
)
from .weights import INVERSE, METHODS, ROUNDING, TABLE, weight_inverse, weight_rounding, weight_table


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _add_common(p: argparse.ArgumentParser, with_q: bool = True) -> None:
    if with_q:
        p.add_argument("-q", type=int, required=True, help="divisor under test")
    p.add_argument("--base", type=int, default=10, help="radix of the number text (2..36)")
    p.add_argument("--json", action="store_true", help="emit stable JSON instead of text")


def _rule_from(family: str, q: int, base: int) -> TestRule:
    builders = {
        TRIM: TestRule.trim,
        SUM: TestRule.sum,
        BINOMIAL: TestRule.binomial,
        LEFT_TRIM: TestRule.left_trim,
        LAST_DIGITS: TestRule.last_digits,
    }
    if family == TALMUD:
        if q != 7:
            raise ValueError("the Talmud test is fixed at q=7")
        return TestRule.talmud()
    return builders[family](q, base)


def _cmd_weight(args) -> int:
    derive = {TABLE: weight_table, ROUNDING: weight_rounding, INVERSE: weight_inverse}
    if args.method == INVERSE:
        w = weight_inverse(args.q, args.base)
    else:
        if args.base != 10:
            raise ValueError(f"method {args.method!r} is base-10 only; use --method inverse")
        w = derive[args.method](args.q)
    methods = None
    if args.base == 10:
        methods = {
            TABLE: weight_table(args.q).omega,
            ROUNDING: weight_rounding(args.q).omega,
            INVERSE: weight_inverse(args.q, 10).omega,
        }
    agree = len(set(methods.values())) == 1 if methods else None
    if args.json:
        _emit_json(
            {
                "q": args.q,
                "base": args.base,
                "omega": w.omega,
                "method": w.method,
                "methods": methods,
                "agree": agree,
            }
        )
    else:
        tail = "n/a" if agree is None else ("yes" if agree else "NO")
        print(f"q={args.q} base={args.base} omega={w.omega:+d} method={w.method} agree={tail}")
    return 0


def _cmd_apply(args) -> int:
    family = args.family
    q = 7 if family == TALMUD else args.q
    rule = _rule_from(family, q, args.base)
    a = parse(args.number, args.base)
    result = apply_once(a, rule)
    if args.json:
        payload = {
            "family": family,
            "q": rule.q,
            "base": rule.base,
            "input": a.render(),
            "result": result.render(),
        }
        if family == LAST_DIGITS:
            payload["k"] = rule.k
        _emit_json(payload)
    else:
        print(result.render())
    return 0


def _render_trace(trace: Trace) -> str:
    rule = trace.rule
    omega = "" if rule.omega is None else f" omega={rule.omega:+d}"
    lines = [f"rule: family={rule.family} q={rule.q} base={rule.base}{omega}"]
    for i, step in enumerate(trace.steps, start=1):
        coeffs = list(step.stacked.coeffs)
        val = step.collapsed.render()
        if step.op in ("stack", "left_trim"):
            lines.append(f"step {i}: {step.op} -> {coeffs} = {val}")
        else:
            lines.append(f"step {i}: {step.op} -> {val}")
    lines.append(f"terminal: {trace.terminal.render()}")
    lines.append(f"verdict: {trace.verdict.replace('_', ' ')}")
    return "\n".join(lines)


def _cmd_trace(args) -> int:
    if args.family != TALMUD and args.q is None:
        args.parser.error("argument -q is required for this --family")
    q = 7 if args.family == TALMUD and args.q is None else args.q
    rule = _rule_from(args.family, q, args.base)
    a = parse(args.number, args.base)
    trace = iterate(a, rule, stacked=args.stacked)
    if args.json:
        _emit_json(trace.as_json())
    else:
        print(_render_trace(trace))
    return 0


def _cmd_compare(args) -> int:
    q_list = [int(part) for part in args.q.split(",") if part]
    numbers = [parse(text, args.base) for text in args.numbers]
    table = analyzer.compare(q_list, numbers, args.base)
    if args.json:
        _emit_json(table.as_json())
    else:
        print(table.to_csv(), end="")
    return 0


def _cmd_check(args) -> int:
    rule = _rule_from(args.family, args.q, args.base)
    report = oracle.fuzz_equivalence(rule, args.trials, args.max_digits, args.seed)
    if args.json:
        _emit_json(report.as_json())
    else:
        print(
            f"family={rule.family} q={rule.q} base={rule.base} trials={report.trials} "
            f"seed={report.seed} mismatches={report.mismatches} "
            f"mean_length_drop={report.mean_length_drop:.4f}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trimsum",
        description="Trimming, summing and binomial divisibility tests over arbitrary bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weight", help="derive the trimming weight for a divisor")
    _add_common(p)
    p.add_argument("--method", choices=METHODS, default=INVERSE)
    p.set_defaults(func=_cmd_weight)

    for family, name, blurb in [
        (TRIM, "trim", "apply one right trim"),
        (SUM, "sum", "weighted digit sum, weights from the top digit"),
        (BINOMIAL, "binomial", "binomial digit sum, weights from the last digit"),
        (LAST_DIGITS, "lastdigit", "keep the low digits (q must divide a base power)"),
    ]:
        p = sub.add_parser(name, help=blurb)
        _add_common(p)
        p.add_argument("number", help="the number, as text in the chosen base")
        p.set_defaults(func=_cmd_apply, family=family)

    p = sub.add_parser("talmud", help="twice the hundreds plus the last two digits (q=7)")
    _add_common(p, with_q=False)
    p.add_argument("number")
    p.set_defaults(func=_cmd_apply, family=TALMUD, q=7)

    p = sub.add_parser("trace", help="iterate a rule to its verdict, printing each step")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("-q", type=int, default=None, help="divisor (optional for talmud)")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.add_argument("--stacked", action="store_true", help="trim on stacked coefficients")
    p.add_argument("number")
    p.set_defaults(func=_cmd_trace, parser=p)

    p = sub.add_parser("compare", help="cost table across binomial, sum and trim")
    p.add_argument("-q", required=True, help="comma-separated divisors, e.g. 7,9,11")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.add_argument("numbers", nargs="+")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("check", help="seeded fuzz: a rule must preserve divisibility")
    p.add_argument("--family", choices=FAMILIES, required=True)
    _add_common(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-digits", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

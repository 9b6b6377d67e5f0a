"""Command-line interface: ``binomprime {check,witnesses,bench,selftest}``.

Exit codes: 0 prime / success, 1 composite, 2 usage or parse error,
3 work budget exceeded, 4 a self-test found a counterexample.
"""

import argparse
import json
import sys

from . import bench as _bench
from .errors import UnsupportedMode, WorkBudgetExceeded
from .primality import EvalMode, TestKind, Verdict, default_mode, run_test, small_prime_factors
from .selftest import run_selftest

EXIT_PRIME = 0
EXIT_OK = 0
EXIT_COMPOSITE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_FALSIFIED = 4

SELECTORS = [k.value for k in TestKind] + ["all"]


def parse_nat(text):
    """Non-negative integer in decimal or ``0x`` hex."""
    s = text.strip().replace("_", "")
    try:
        value = int(s[2:], 16) if s.lower().startswith("0x") else int(s, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}")
    if value < 0 or s.startswith(("-", "+")):
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}")
    return value


def parse_kinds(text):
    kinds = []
    for part in text.split(","):
        part = part.strip().lower()
        if not part:
            continue
        if part == "all":
            return list(TestKind)
        try:
            kinds.append(TestKind(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"unknown test {part!r}; choose from {', '.join(SELECTORS)}")
    if not kinds:
        raise argparse.ArgumentTypeError("empty test list")
    return kinds


def _kind_mode(kind, mode_arg):
    mode = default_mode(kind) if mode_arg is None else EvalMode(mode_arg)
    if mode is EvalMode.REDUCED and not kind.supports_reduced:
        raise UnsupportedMode(f"{kind.value} has no reduced evaluator")
    return mode


def _verdict_word(verdict):
    return "prime" if verdict is Verdict.PRIME else "composite"


def _text_report(report, label=False):
    head = f"{report.kind.value}: " if label else ""
    lines = [head + _verdict_word(report.verdict)]
    if report.witnesses:
        lines.append("witnesses: " + ", ".join(map(str, report.witnesses)))
    if report.note:
        lines.append("note: " + report.note)
    return "\n".join(lines)


def cmd_check(args, out, err):
    if args.test == "all":
        return _check_all(args, out, err)
    kind = TestKind(args.test)
    try:
        mode = _kind_mode(kind, args.mode)
    except UnsupportedMode as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    try:
        report = run_test(args.n, kind, mode, args.short_circuit, budget=args.budget)
    except WorkBudgetExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2), file=out)
    else:
        print(_text_report(report), file=out)
    return EXIT_PRIME if report.is_prime else EXIT_COMPOSITE


def _check_all(args, out, err):
    reports = []
    for kind in TestKind:
        # an explicit --mode applies only where the kind supports it
        mode = default_mode(kind)
        if args.mode is not None and (kind.supports_reduced or args.mode == EvalMode.REFERENCE.value):
            mode = EvalMode(args.mode)
        try:
            reports.append(run_test(args.n, kind, mode, args.short_circuit, budget=args.budget))
        except WorkBudgetExceeded as exc:
            print(f"skipped {kind.value}: {exc}", file=err)
    if not reports:
        print("error: every test exceeded the work budget", file=err)
        return EXIT_BUDGET
    if args.json:
        print(json.dumps([r.to_json_dict() for r in reports], indent=2), file=out)
    else:
        for r in reports:
            print(_text_report(r, label=True), file=out)
    verdicts = {r.verdict for r in reports}
    if len(verdicts) > 1:
        print(f"FAIL disagreement at n={args.n}: "
              + ", ".join(f"{r.kind.value}={_verdict_word(r.verdict)}" for r in reports), file=err)
        return EXIT_FALSIFIED
    return EXIT_PRIME if verdicts == {Verdict.PRIME} else EXIT_COMPOSITE


def cmd_witnesses(args, out, err):
    n = args.n
    if n <= 3:
        print(f"error: witnesses needs n > 3, got {n}", file=err)
        return EXIT_USAGE
    found = sorted(small_prime_factors(n))
    cofactor = n
    for p in found:
        while cofactor % p == 0:
            cofactor //= p
    if not found:
        status = "prime"
    elif cofactor == 1:
        status = "one"
    else:
        status = "untested by this method"
    if args.json:
        doc = {
            "n": str(n),
            "witnesses": [str(p) for p in found],
            "cofactor": str(cofactor),
            "cofactor_status": status,
            "prime": not found,
        }
        print(json.dumps(doc, indent=2), file=out)
        return EXIT_OK
    if not found:
        print("witnesses: none (prime)", file=out)
        return EXIT_OK
    print("witnesses: " + ", ".join(map(str, found)), file=out)
    line = f"cofactor: {cofactor}"
    if cofactor > 1:
        line += " (primality untested by this method)"
    print(line, file=out)
    return EXIT_OK


def cmd_bench(args, out, err):
    if args.start > args.stop:
        print(f"error: empty range {args.start}..{args.stop}", file=err)
        return EXIT_USAGE
    try:
        rows = _bench.run_bench(range(args.start, args.stop + 1), args.tests, args.mode, args.budget)
    except UnsupportedMode as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if args.output and args.output != "-":
        with open(args.output, "w", newline="") as fh:
            _bench.write_csv(rows, fh)
    else:
        _bench.write_csv(rows, out)
    if args.plot:
        from .plotting import plot_bench

        plot_bench(rows, args.plot, title=f"n = {args.start}..{args.stop}")
        print(f"wrote figure {args.plot}", file=err)
    return EXIT_OK


def cmd_selftest(args, out, err):
    if args.limit < 4:
        print(f"error: selftest limit must be at least 4, got {args.limit}", file=err)
        return EXIT_USAGE
    results = run_selftest(args.limit, args.tests, budget=args.budget)
    for r in results:
        print(r.line(), file=out)
    failed = [r for r in results if not r.passed]
    if failed:
        worst = min(failed, key=lambda r: r.counterexample)
        print(f"minimal counterexample: n={worst.counterexample} in {worst.name}", file=out)
        return EXIT_FALSIFIED
    print(f"all {len(results)} checks passed", file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="binomprime", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=parse_nat, default=None,
                        help="multiplication budget (default: $BINOM_WORK_BUDGET or 10^7)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide primality with one test (or all)")
    p.add_argument("n", type=parse_nat)
    p.add_argument("--test", choices=SELECTORS, default="t22")
    p.add_argument("--mode", choices=[m.value for m in EvalMode], default=None)
    p.add_argument("--short-circuit", action="store_true", help="stop at the first nonzero term")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witnesses", help="prime divisors up to sqrt(n) and the leftover cofactor")
    p.add_argument("n", type=parse_nat)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("bench", help="term/multiplication counts over a range, as CSV")
    p.add_argument("start", type=parse_nat)
    p.add_argument("stop", type=parse_nat)
    p.add_argument("--tests", type=parse_kinds, default=list(TestKind))
    p.add_argument("--mode", choices=["default", "both"] + [m.value for m in EvalMode], default="default")
    p.add_argument("-o", "--output", default=None, help="CSV path (default: stdout)")
    p.add_argument("--plot", default=None, metavar="PATH", help="also render a figure to PATH")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="sweep the tests against trial division")
    p.add_argument("limit", type=parse_nat)
    p.add_argument("--tests", type=parse_kinds, default=None)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit codes: 0 solved or report written, 1 infeasible, 2 not found,
3 usage or parse error, 4 overflow or oracle ceiling.
"""

import argparse
import sys
from pathlib import Path

from .errors import (
    CeilingExceeded,
    Infeasible,
    NotCoprime,
    NotFound,
    ParseError,
    ValidationError,
)
from .harness import (
    audit_csv,
    audit_formula,
    bench_csv,
    generate_instance,
    parse_strategy,
    run_bench,
    run_coverage,
    run_example1,
    run_solve,
)
from .model import format_instance, format_solution, parse_instance
from .two_term import frobenius_two

EXIT_OK, EXIT_INFEASIBLE, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_OVERFLOW = range(5)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}")


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_solve(args):
    instance = parse_instance(Path(args.instance).read_bytes())
    try:
        solution = run_solve(instance, args.method, spread=args.spread)
    except Infeasible as exc:
        print(f"INFEASIBLE {exc.certificate}")
        return EXIT_INFEASIBLE
    except NotFound:
        print("NOTFOUND")
        return EXIT_NOT_FOUND
    sys.stdout.write(format_solution(solution))
    return EXIT_OK


def cmd_coverage(args):
    report = run_coverage(args.weights, args.s_min, args.s_max, jobs=args.jobs)
    _write(args.out, report.to_csv())
    return EXIT_OK


def cmd_gen(args):
    strategy = parse_strategy(args.strategy)
    instance = generate_instance(args.n, args.max_weight, strategy, args.seed)
    sys.stdout.write(format_instance(instance))
    return EXIT_OK


def cmd_frobenius(args):
    if len(args.weights) != 2:
        raise ValidationError("frobenius takes exactly two weights")
    p1, p2 = sorted(args.weights)
    print(frobenius_two(p1, p2))
    return EXIT_OK


def cmd_example1(args):
    report = run_example1(jobs=args.jobs)
    if args.out:
        _write(args.out, report.to_csv())
    for key, value in report.summary():
        print(f"{key:36s} {value}")
    return EXIT_OK


def cmd_audit(args):
    _write(args.out, audit_csv(audit_formula(args.max_weight)))
    return EXIT_OK


def cmd_bench(args):
    sizes = args.sizes or None
    results = run_bench(args.seed, args.cases, **({"sizes": sizes} if sizes else {}))
    _write(args.out, bench_csv(results))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="ussp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one instance file")
    p.add_argument("--instance", required=True)
    p.add_argument("--method", choices=["auto", "chain", "multi", "dp"], default="auto")
    p.add_argument("--spread", action="store_true",
                   help="spread the chain residual over the other weights")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("coverage", help="per-target outcome table over an s range")
    p.add_argument("--weights", type=_int_list, required=True)
    p.add_argument("--s-min", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("gen", help="seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--strategy", required=True,
                   help="above, near-above, below or uniform:LO:HI")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("frobenius", help="Frobenius number of a coprime pair")
    p.add_argument("--weights", type=_int_list, required=True)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("example1", help="reproduce the W={11,13,15,19,21} experiment")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_example1)

    p = sub.add_parser("audit", help="closed-form vs exact representable counts")
    p.add_argument("--max-weight", type=int, default=15)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("bench", help="chain solver wall clock for large n")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--cases", type=int, required=True)
    p.add_argument("--sizes", type=_int_list)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OverflowError, CeilingExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except Infeasible as exc:
        print(f"INFEASIBLE {exc.certificate}")
        return EXIT_INFEASIBLE
    except (ParseError, ValidationError, NotCoprime, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

    qtsystem solve FILE i,j [--below] [--paths] [--q1]
    qtsystem verify SUITE FILE [--range J] [--seed S] [--mutations K] [--machine]
    qtsystem qsystem --n N [--noncommutative]
    qtsystem oracle FILE i,j

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 point on the wrong
side of the boundary or outside a common cluster, 4 window too small.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .boundary import Point, parse_boundary, projection
from .errors import (
    AboveBoundary,
    BadWindow,
    BelowBoundary,
    ConeViolation,
    MissingValue,
    ParityError,
    ParseError,
    WindowExhausted,
)
from .network import classical_oracle, enumerate_paths, solve_above, solve_below
from .qlaurent import Polynomial, eval_q1, to_text
from .qsystem import (
    SEED,
    nc_sequence,
    nc_verify,
    qq_network,
    qq_relation,
    qq_solve,
    qq_verify_conjugation,
    qtext,
)
from .suites import SUITES, Check, RunReport, run_suite

EXIT_FAIL, EXIT_INPUT, EXIT_SIDE, EXIT_WINDOW = 1, 2, 3, 4


class UsageError(Exception):
    pass


def parse_point(text: str) -> Point:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"point must look like 'i,j', got {text!r}") from None
    if (i + j) % 2:
        raise ParityError(f"point ({i},{j}) has i + j odd")
    return Point(i, j)


def read_boundary(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_boundary(text)


def cmd_solve(args) -> int:
    b, values = read_boundary(args.file)
    p = parse_point(args.point)
    if args.below:
        target, value = solve_below(b, p)
        print(f"T[{target.i},{target.j}] = {to_text(value)}")
        entry = 2
    else:
        value = solve_above(b, p)
        print(to_text(value))
        entry = 1
    if args.paths:
        path = projection(b, p)
        monos = enumerate_paths(b, path, entry, entry)
        end = Polynomial.gen(path.end)
        print(f"paths: {len(monos)}")
        for m in monos:
            print("  " + to_text(Polynomial.from_monomial(m) * end))
    if args.q1:
        if not values:
            raise MissingValue("--q1 needs 'value' lines in the boundary file")
        print(f"q=1: {eval_q1(value, values)}")
    return 0


def cmd_oracle(args) -> int:
    b, values = read_boundary(args.file)
    p = parse_point(args.point)
    print(classical_oracle(b, values, p))
    return 0


def cmd_verify(args) -> int:
    b, _ = read_boundary(args.file)
    start = time.perf_counter()
    checks = run_suite(args.suite, b, jrange=args.range, seed=args.seed, mutations=args.mutations)
    command = f"verify {args.suite} {args.file} --range {args.range} --seed {args.seed} --mutations {args.mutations}"
    report = RunReport(command, checks)
    if args.timing:
        report.elapsed = time.perf_counter() - start
    sys.stdout.write(report.render(machine=args.machine))
    return 0 if report.ok else EXIT_FAIL


def cmd_qsystem(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError(f"--n must be at least 1, got {n}")
    checks: list[Check] = []
    if args.noncommutative:
        for j in range(n + 1):
            print(f"R{j} = {nc_sequence(j)}")
        for c in nc_verify(n):
            checks.append(Check("qsystem-nc", f"{c.name}:n={c.n}", c.ok, c.lhs, c.rhs))
        command = f"qsystem --n {n} --noncommutative"
    else:
        for j in range(n + 1):
            print(f"R{j} = {qtext(qq_solve(SEED, j))}")
        for j in range(1, n + 1):
            ok = qq_network(SEED, j) == qq_solve(SEED, j)
            checks.append(Check("qsystem", f"network:j={j}", ok))
            lhs, rhs = qq_relation(SEED, j)
            if lhs == rhs:
                checks.append(Check("qsystem", f"relation:j={j}", True))
            else:
                checks.append(Check("qsystem", f"relation:j={j}", False, qtext(lhs), qtext(rhs)))
        checks.append(Check("qsystem", "conjugation", qq_verify_conjugation(SEED)))
        command = f"qsystem --n {n}"
    report = RunReport(command, checks)
    sys.stdout.write(report.render(machine=args.machine))
    return 0 if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtsystem", description="Exact solver for the quantum A1 T-system.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="T at a point, in the variables of a boundary")
    p.add_argument("file")
    p.add_argument("point", help="i,j with i + j even")
    p.add_argument("--below", action="store_true", help="return the reflected point under the boundary")
    p.add_argument("--paths", action="store_true", help="list the connector paths")
    p.add_argument("--q1", action="store_true", help="evaluate at q = 1 with the file's values")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("file")
    p.add_argument("--range", type=int, default=5, help="rows |j| <= RANGE (default 5)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mutations", type=int, default=0, help="also run on K random mutations")
    p.add_argument("--machine", action="store_true", help="only PASS/FAIL lines")
    p.add_argument("--timing", action="store_true", help="append elapsed time to the summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qsystem", help="the quantum or non-commutative Q-system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--noncommutative", action="store_true")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_qsystem)

    p = sub.add_parser("oracle", help="exact q = 1 value by the rational recursion")
    p.add_argument("file")
    p.add_argument("point")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ParityError, MissingValue, BadWindow, UsageError) as exc:
        code, msg = EXIT_INPUT, exc
    except (BelowBoundary, AboveBoundary, ConeViolation) as exc:
        code, msg = EXIT_SIDE, exc
    except WindowExhausted as exc:
        code, msg = EXIT_WINDOW, exc
    # KeyError wraps its message in quotes
    text = msg.args[0] if msg.args else str(msg)
    print(f"error: {text}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``pegsol <subcommand> ...``.

Exit codes: 0 on success, 2 for usage or parse errors, 3 when a produced
plan fails its own replay check or a verification suite finds a mismatch.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Iterable, Sequence

from . import automaton, bench as bench_mod, oracle
from .core import PegError, parse_config
from .minpegs import solve_min
from .solver import Plan, UnsolvableError, solve_single

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT = 0, 2, 3


class InvariantViolation(Exception):
    pass


def _emit(args, text: str, obj) -> None:
    if args.json:
        print(json.dumps(obj))
    else:
        print(text)


def _configs(args) -> Iterable[str]:
    if args.config is not None:
        yield args.config
        return
    for line in sys.stdin:
        line = line.strip()
        if line:
            yield line


def _checked(plan: Plan) -> Plan:
    try:
        plan.validate()
    except (PegError, AssertionError) as exc:
        raise InvariantViolation(f"plan for {plan.initial} failed replay: {exc}") from exc
    return plan


def cmd_check(args) -> int:
    for text in _configs(args):
        c = parse_config(text)
        ok = automaton.is_solvable(c)
        _emit(args, "solvable" if ok else "unsolvable", {"config": text, "solvable": ok})
    return EXIT_OK


def cmd_solve(args) -> int:
    for text in _configs(args):
        c = parse_config(text)
        try:
            plan = _checked(solve_single(c))
        except UnsolvableError as exc:
            print(f"unsolvable: {exc}", file=sys.stderr)
            if args.json:
                print(json.dumps({"initial": text, "solvable": False}))
            continue
        _emit(args, plan.to_text(), plan.to_json())
    return EXIT_OK


def cmd_min(args) -> int:
    for text in _configs(args):
        result = solve_min(parse_config(text))
        _checked(result.combined)
        for seg in result.segments:
            _checked(seg.plan)
        lines = [f"k={result.k}"]
        lines += [f"{s.start}-{s.end} {s.plan.initial}: {s.plan.to_text()}".rstrip()
                  for s in result.segments]
        lines.append("plan: " + result.combined.to_text())
        _emit(args, "\n".join(lines), result.to_json())
    return EXIT_OK


def cmd_count(args) -> int:
    n = automaton.count_solvable(args.n)
    _emit(args, str(n), {"n": args.n, "count": n})
    return EXIT_OK


def cmd_enum(args) -> int:
    words = automaton.enumerate_solvable(args.n)
    _emit(args, "\n".join(words), {"n": args.n, "configurations": words})
    return EXIT_OK


def cmd_oracle(args) -> int:
    for text in _configs(args):
        k = oracle.oracle_min_pegs(parse_config(text), override=args.override)
        if args.min:
            _emit(args, str(k), {"config": text, "min_pegs": k})
        else:
            ok = k == 1
            _emit(args, "solvable" if ok else "unsolvable", {"config": text, "solvable": ok})
    return EXIT_OK


def run_verify(maxlen: int) -> dict:
    """Exhaustive cross-checks against the oracle for every board up to ``maxlen`` cells."""
    tallies = {name: [0, 0] for name in ("recognizer", "single", "minimum")}
    dfa = automaton.language_dfa()
    for n in range(1, maxlen + 1):
        for bits in itertools.product("01", repeat=n):
            s = "".join(bits)
            truth = oracle.oracle_min_pegs(s, override=True)
            accepted = dfa.accepts(s)
            tallies["recognizer"][0] += 1
            tallies["recognizer"][1] += accepted != (truth == 1)
            if accepted:
                tallies["single"][0] += 1
                try:
                    plan = solve_single(s)
                    plan.validate()
                    ok = len(plan.moves) == s.count("1") - 1
                except (PegError, AssertionError):
                    ok = False
                tallies["single"][1] += not ok
            if "1" in s:
                result = solve_min(s)
                tallies["minimum"][0] += 1
                tallies["minimum"][1] += result.k != truth
    return tallies


def cmd_verify(args) -> int:
    tallies = run_verify(args.maxlen)
    failed = False
    for name, (checked, bad) in tallies.items():
        print(f"{name}: {checked} checked, {checked - bad} passed, {bad} failed")
        failed |= bad > 0
    return EXIT_INVARIANT if failed else EXIT_OK


def cmd_bench(args) -> int:
    t = bench_mod.bench(args.len, seed=args.seed, runs=args.runs)
    obj = {"length": t.length, "seed": args.seed,
           "solve_single_s": t.single, "solve_min_s": t.minimum}
    _emit(args, f"length={t.length} seed={args.seed} "
                f"solve_single={t.single:.6f}s solve_min={t.minimum:.6f}s", obj)
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(prog="pegsol", description="One-dimensional peg solitaire.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_config(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("config", nargs="?",
                       help="board as a 0/1 string; read one per line from stdin if omitted")
        p.set_defaults(func=func)
        return p

    with_config("check", cmd_check, "is the board reducible to one peg?")
    with_config("solve", cmd_solve, "moves reducing the board to one peg")
    with_config("min", cmd_min, "reduce the board to the fewest pegs the block split allows")
    p = with_config("oracle", cmd_oracle, "exhaustive search (small boards)")
    p.add_argument("--min", action="store_true", help="print the minimum peg count")
    p.add_argument("--override", action="store_true",
                   help=f"allow boards longer than {oracle.MAX_CELLS} cells")

    for name, func, help_ in (("count", cmd_count, "number of solvable boards with n pegs"),
                              ("enum", cmd_enum, "list the solvable boards with n pegs")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("n", type=_positive)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="cross-check everything against the oracle")
    p.add_argument("--maxlen", type=_positive, default=12)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time the solvers on a random board")
    p.add_argument("--len", type=_positive, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=_positive, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except PegError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run())

"""Time solve_single and solve_min on random solvable boards of growing length.

    python scripts/bench_linearity.py --lengths 1000 10000 100000 1000000
"""

import argparse

from pegsol.bench import BenchConfig, sweep


def main():
    defaults = BenchConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lengths", type=int, nargs="+", default=list(defaults.lengths))
    ap.add_argument("--seed", type=int, default=defaults.seed)
    ap.add_argument("--runs", type=int, default=defaults.runs)
    args = ap.parse_args()
    cfg = BenchConfig(tuple(args.lengths), args.seed, args.runs)

    print(f"{'cells':>9} {'single s':>10} {'min s':>10} {'us/cell':>8}")
    prev = None
    for t in sweep(cfg):
        line = f"{t.length:>9} {t.single:>10.4f} {t.minimum:>10.4f} {1e6 * t.minimum / t.length:>8.2f}"
        if prev is not None:
            line += f"   x{t.minimum / prev.minimum:.2f} for x{t.length / prev.length:.1f} cells"
        print(line)
        prev = t


if __name__ == "__main__":
    main()

"""Number of single-peg-solvable boards with n pegs, three ways.

Counts up to translation: a board is identified with the stretch from its
first to its last peg. The automaton count is exact for every n; the closed
form holds from n = 4; the exhaustive count is only run for small n.
"""

import argparse
import time

from pegsol.automaton import count_solvable
from pegsol.oracle import oracle_count_classes


def closed_form(n):
    if n <= 3:
        return [1, 1, 2][n - 1]
    return n * n - 7 * n + (15 if n % 2 == 0 else 16)


def main():
    ap = argparse.ArgumentParser(description="solvable board counts")
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--oracle-up-to", type=int, default=7,
                    help="also count by exhaustive search up to this many pegs")
    args = ap.parse_args()
    print(f"{'n':>3} {'automaton':>10} {'formula':>8} {'search':>7}")
    for n in range(1, args.max_n + 1):
        dfa_count = count_solvable(n)
        search = ""
        if n <= args.oracle_up_to:
            t0 = time.perf_counter()
            search = f"{oracle_count_classes(n):>7}  ({time.perf_counter() - t0:.2f}s)"
        flag = "" if dfa_count == closed_form(n) else "  MISMATCH"
        print(f"{n:>3} {dfa_count:>10} {closed_form(n):>8} {search}{flag}")


if __name__ == "__main__":
    main()

"""Where the block split and exhaustive search disagree on the fewest pegs.

For every board up to --maxlen cells, compares the split into independently
solvable blocks against the true minimum. Prints per-length tallies and the
shortest disagreements.
"""

import argparse
import itertools
from collections import Counter

from pegsol.minpegs import min_peg_partition
from pegsol.oracle import oracle_min_pegs


def main():
    ap = argparse.ArgumentParser(description="block split vs exhaustive minimum")
    ap.add_argument("--maxlen", type=int, default=12)
    ap.add_argument("--show", type=int, default=10)
    args = ap.parse_args()
    examples = []
    excess = Counter()
    for n in range(1, args.maxlen + 1):
        boards = bad = 0
        for bits in itertools.product("01", repeat=n):
            s = "".join(bits)
            if "1" not in s:
                continue
            boards += 1
            split = min_peg_partition(s)[0]
            truth = oracle_min_pegs(s, override=True)
            if split != truth:
                bad += 1
                excess[split - truth] += 1
                if len(examples) < args.show:
                    examples.append((s, truth, split))
        print(f"n={n:>2}: {boards:>5} boards, {bad:>4} where the split is worse")
    print("excess pegs:", dict(sorted(excess.items())))
    for s, truth, split in examples:
        print(f"  {s}: search {truth}, split {split}")


if __name__ == "__main__":
    main()

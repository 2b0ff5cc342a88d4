"""Random solvable boards and timing helpers."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

from .core import Configuration, replay_unhops
from .minpegs import solve_min
from .solver import Family, Orientation, Tag, solve_single, unhop_script

_SHAPES = {
    # tag: (fixed cells, number of repeated two-cell groups)
    Tag.STAGE1: (4, 1),
    Tag.STAGE2: (6, 2),
    Tag.STAGE3: (6, 3),
    Tag.STAGE4: (4, 2),
    Tag.STAGE5: (8, 3),
}


def random_family(length: int, rng: random.Random) -> Family:
    """A shape of roughly ``length`` cells with randomly split repetition counts."""
    tag = rng.choice(list(_SHAPES))
    fixed, groups = _SHAPES[tag]
    budget = max(0, (length - fixed) // 2)
    if tag is Tag.STAGE3:
        budget = max(budget, 1)
    cuts = sorted(rng.randint(0, budget) for _ in range(groups - 1))
    params = [hi - lo for lo, hi in zip([0] + cuts, cuts + [budget])]
    if tag is Tag.STAGE3 and params[1] == 0:
        # keep at least one 11 block ahead of the gap
        donor = max(range(len(params)), key=params.__getitem__)
        params[donor] -= 1
        params[1] += 1
    orientation = rng.choice(list(Orientation))
    return Family(tag, orientation, tuple(params))


def random_solvable(length: int, rng: random.Random, pad: int = 2) -> Configuration:
    """A board reducible to one peg, built by replaying unhops from a lone peg."""
    family = random_family(length - 2 * pad, rng)
    left = rng.randint(0, pad)
    right = rng.randint(0, pad)
    n = family.length + left + right
    board = ["0"] * n
    board[left + family.origin] = "1"
    script = unhop_script(family)
    shifted = [type(u)(u.at + left, u.dir) for u in script]
    return replay_unhops("".join(board), shifted)


@dataclass(frozen=True)
class BenchConfig:
    lengths: tuple = (1_000, 2_000, 10_000, 20_000, 100_000, 200_000)
    seed: int = 2024
    runs: int = 5
    pad: int = 2


@dataclass
class Timing:
    length: int
    single: float
    minimum: float


def time_call(fn, arg, runs: int = 5) -> float:
    samples = []
    for _ in range(runs):
        t0 = time.perf_counter()
        fn(arg)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def bench(length: int, seed: int = 0, runs: int = 5) -> Timing:
    """Median wall time of solve_single and solve_min on one random solvable board."""
    c = random_solvable(length, random.Random(seed))
    solve_min(c)  # warm the layer cache
    return Timing(len(c), time_call(solve_single, c, runs), time_call(solve_min, c, runs))


def sweep(cfg: BenchConfig) -> list[Timing]:
    """Time both solvers on one board per length, all drawn from a single generator."""
    rng = random.Random(cfg.seed)
    boards = [random_solvable(n, rng, cfg.pad) for n in cfg.lengths]
    solve_min(boards[0])
    return [Timing(len(c), time_call(solve_single, c, cfg.runs), time_call(solve_min, c, cfg.runs))
            for c in boards]

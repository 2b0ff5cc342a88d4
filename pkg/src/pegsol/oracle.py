"""Exhaustive ground truth: memoized search over every hop sequence."""

from __future__ import annotations

import itertools
import sys

from .automaton import DomainError
from .core import PEG, HOLE, ConfigLike, PegError

MAX_CELLS = 24


class SizeGuardError(PegError, ValueError):
    pass


_CACHE: dict[str, int] = {}


def _search(s: str, memo: dict | None) -> int:
    if memo is not None:
        hit = memo.get(s)
        if hit is not None:
            return hit
    pegs = s.count(PEG)
    best = pegs
    n = len(s)
    for i in range(n):
        if s[i] != PEG:
            continue
        for d in (-1, 1):
            land = i + 2 * d
            if 0 <= land < n and s[i + d] == PEG and s[land] == HOLE:
                cells = list(s)
                cells[i] = cells[i + d] = HOLE
                cells[land] = PEG
                best = min(best, _search("".join(cells), memo))
                if best == 1:
                    break
        if best == 1:
            break
    if memo is not None:
        memo[s] = best
    return best


def oracle_min_pegs(c: ConfigLike, *, override: bool = False, cache: dict | None = _CACHE) -> int:
    """Fewest pegs reachable from ``c`` by any sequence of hops.

    The memo is keyed on the exact board string, holes at the ends included.
    Pass ``cache=None`` to search without memoization.
    """
    s = str(c)
    if len(s) > MAX_CELLS and not override:
        raise SizeGuardError(
            f"board of {len(s)} cells exceeds the oracle cap of {MAX_CELLS}; pass override=True")
    if s.count(PEG) == 0:
        return 0
    if sys.getrecursionlimit() < len(s) + 100:
        sys.setrecursionlimit(len(s) + 100)
    return _search(s, cache)


def oracle_solvable(c: ConfigLike, **kw) -> bool:
    return oracle_min_pegs(c, **kw) == 1


def oracle_count_classes(n: int, maxlen: int | None = None) -> int:
    """Count trimmed n-peg strings that are solvable once given the holes they need.

    A trimmed string t counts when t, 0t or t0 reduces to a single peg, so the
    011/110 pair is counted once, as 11.
    """
    if n < 1:
        raise DomainError(f"peg count must be >= 1, got {n}")
    if maxlen is None:
        maxlen = 2 * n + 2
    if maxlen < n:
        raise DomainError(f"maxlen {maxlen} is shorter than the peg count {n}")
    if n == 1:
        return 1
    total = 0
    for length in range(n, maxlen + 1):
        for inner in itertools.combinations(range(1, length - 1), n - 2):
            cells = [HOLE] * length
            for i in (0, length - 1, *inner):
                cells[i] = PEG
            t = "".join(cells)
            if any(oracle_solvable(v, override=True) for v in (t, HOLE + t, t + HOLE)):
                total += 1
    return total

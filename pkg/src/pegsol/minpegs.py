"""Fewest reachable pegs, by shortest paths in a layered graph.

Vertices are pairs (automaton state, board position). Symbol arcs advance one
cell; restart arcs jump from an accepting state back to the start state at the
same position, closing off one independently solvable block. A shortest path
from (start, 0) to (start, n) takes n symbol arcs and k restart arcs, where k
is the fewest pegs the board can be reduced to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .automaton import Nfa, build_language_nfa
from .core import ConfigLike, Configuration, Move, PegError, as_config, gc_paused
from .solver import Plan, solve_single


class NoPegsError(PegError, ValueError):
    pass


INF = float("inf")


@dataclass
class LayeredDag:
    """The graph spelled out vertex by vertex. Meant for small boards and for checking."""

    automaton: Nfa
    cells: str
    arcs: dict = field(default_factory=dict)

    def __post_init__(self):
        a, n = self.automaton, len(self.cells)
        preds: dict = {(q, i): [] for i in range(n + 1) for q in range(a.n_states)}
        for i, ch in enumerate(self.cells):
            for q in range(a.n_states):
                for t in a.delta[q][int(ch)]:
                    preds[(t, i + 1)].append((q, i))
        for i in range(n + 1):
            for t in a.accepting:
                if t != a.start:
                    preds[(a.start, i)].append((t, i))
        self.arcs = preds

    @property
    def n_vertices(self) -> int:
        return len(self.arcs)

    @property
    def n_arcs(self) -> int:
        return sum(map(len, self.arcs.values()))

    def scan_order(self) -> list:
        """Positions ascending; within a position accepting states come before the start."""
        a = self.automaton
        order = []
        for i in range(len(self.cells) + 1):
            others = [q for q in range(a.n_states) if q != a.start]
            others.sort(key=lambda q: q not in a.accepting)
            order += [(q, i) for q in others] + [(a.start, i)]
        return order

    def shortest_paths(self) -> dict:
        source = (self.automaton.start, 0)
        dist = {}
        for v in self.scan_order():
            if v == source:
                dist[v] = 0
                continue
            best = min((dist[u] for u in self.arcs[v]), default=INF)
            dist[v] = best + 1
        return dist

    def distance(self) -> float:
        """Length of the shortest (start, 0) -> (start, n) path; inf when there is none."""
        return self.shortest_paths()[(self.automaton.start, len(self.cells))]


class _Scanner:
    """Forward scan over the layers with the per-layer relaxation cached.

    A layer is kept as the rank of each live state's distance among the
    distinct distances, plus the distinct distances themselves (less the
    position). The relaxation only ever compares d + 1 with d' + 2, so its
    outcome depends on the ranks and on the gaps between consecutive
    distances capped at 2. Those take finitely many values however long the
    board is, so each cell costs one dictionary lookup and, at most, an
    update of a handful of levels.
    """

    def __init__(self, nfa: Nfa):
        self.nfa = nfa
        self.accepting_others = tuple(sorted(t for t in nfa.accepting if t != nfa.start))
        first = [None] * nfa.n_states
        first[nfa.start] = 0
        self.ranks = [tuple(first)]
        self.rank_id = {self.ranks[0]: 0}
        # a state is (ranks id, capped gaps)
        self.states = [(0, ())]
        self.state_id = {self.states[0]: 0}
        self.step = {}
        self.back_id: dict = {}
        self.back_sets: list = []
        self.back_step: dict = {}
        self.rev = nfa.reversed()

    def _state(self, key: tuple) -> int:
        sid = self.state_id.get(key)
        if sid is None:
            sid = self.state_id[key] = len(self.states)
            self.states.append(key)
        return sid

    def _relax(self, sid: int, bit: int):
        nfa = self.nfa
        rid, gaps = self.states[sid]
        level = [0]
        for g in gaps:
            level.append(level[-1] + g)
        raw = [None] * nfa.n_states
        source = {}
        for q, r in enumerate(self.ranks[rid]):
            if r is None:
                continue
            d = level[r] + 1
            source.setdefault(d, (r, 1))
            for t in nfa.delta[q][bit]:
                if raw[t] is None or d < raw[t]:
                    raw[t] = d
        restart = [raw[t] for t in self.accepting_others if raw[t] is not None]
        s = nfa.start
        if restart:
            d = min(restart) + 1
            if raw[s] is None or d < raw[s]:
                raw[s] = d
                source.setdefault(d, (source[d - 1][0], 2))
        values = sorted({d for d in raw if d is not None})
        rank_of = {d: r for r, d in enumerate(values)}
        ranks = tuple(None if d is None else rank_of[d] for d in raw)
        nrid = self.rank_id.get(ranks)
        if nrid is None:
            nrid = self.rank_id[ranks] = len(self.ranks)
            self.ranks.append(ranks)
        # levels are stored less the position, so a symbol arc adds 0 and a restart 1
        mapping = tuple((r, add - 1) for r, add in (source[d] for d in values))
        new_gaps = []
        for (r1, a1), (r2, a2) in zip(mapping, mapping[1:]):
            g = level[r2] - level[r1]
            if g >= 2 and a2 < a1:
                break  # the true gap may be 1 or more; read it off the levels
            new_gaps.append(min(2, g + a2 - a1))
        else:
            nsid = self._state((nrid, tuple(new_gaps)))
            return nsid, nrid, _identity(mapping), ranks[s]
        return -1, nrid, _identity(mapping), ranks[s]

    def forward(self, cells: str) -> tuple[list, int | None]:
        """Per-position best block counts for each prefix, and the full shortest distance.

        ``counts[i]`` is the distance to (start, i) minus i, i.e. the fewest
        blocks the first i cells split into (None when impossible).
        """
        step = self.step
        state = self._state
        sid, levels, srank = 0, [0], 0
        counts = [0]
        append = counts.append
        for b in cells.encode():
            key = (sid, b & 1)
            hit = step.get(key)
            if hit is None:
                hit = step[key] = self._relax(sid, b & 1)
            sid, rid, mapping, srank = hit
            if mapping is not None:
                levels = [levels[r] + add for r, add in mapping]
            if sid < 0:
                sid = state((rid, tuple([min(2, y - x) for x, y in zip(levels, levels[1:])])))
            append(None if srank is None else levels[srank])
        k = counts[-1]
        return counts, None if k is None else k + len(cells)

    def _back(self, sid: int, bit: int) -> tuple[int, bool]:
        key = (sid, bit)
        hit = self.back_step.get(key)
        if hit is None:
            rev = self.rev
            current = self.back_sets[sid]
            nxt = frozenset(t for q in current for t in rev.delta[q][bit])
            nid = self._intern(nxt)
            hit = self.back_step[key] = (nid, not nxt.isdisjoint(rev.accepting))
        return hit

    def _intern(self, states: frozenset) -> int:
        sid = self.back_id.get(states)
        if sid is None:
            sid = self.back_id[states] = len(self.back_sets)
            self.back_sets.append(states)
        return sid

    def cuts(self, cells: str, counts: list) -> list[int]:
        """Block boundaries of one optimal split, found right to left.

        From each boundary e, walk left with the reversed automaton and stop at
        the first j where cells[j:e] is a block and the prefix before j splits
        into one block fewer. Every cell is visited once, so this is linear.
        """
        start_set = self._intern(frozenset([self.rev.start]))
        ends = [len(cells)]
        e = len(cells)
        data = cells.encode()
        while e > 0:
            need = counts[e] - 1
            sid = start_set
            j = e
            while True:
                j -= 1
                sid, block = self._back(sid, data[j] & 1)
                if block and counts[j] == need:
                    break
                if j == 0:
                    raise AssertionError(f"no optimal block ends at {e} in {cells}")
            ends.append(j)
            e = j
        ends.reverse()
        return ends


def _identity(mapping: tuple):
    """None when the mapping keeps every level as it is."""
    if all(r == i and add == 0 for i, (r, add) in enumerate(mapping)):
        return None
    return mapping


@lru_cache(maxsize=8)
def _scanner(nfa: Nfa) -> _Scanner:
    return _Scanner(nfa)


def shortest_path_length(c: ConfigLike, automaton: Nfa | None = None) -> int | None:
    """Distance from (start, 0) to (start, n); n + k when the board has a peg."""
    nfa = automaton or build_language_nfa()
    return _scanner(nfa).forward(str(c))[1]


def min_peg_partition(c: ConfigLike, automaton: Nfa | None = None) -> tuple[int, list[int]]:
    """Fewest pegs ``k`` and the positions of the k restart arcs on one shortest path.

    The last position is always n; consecutive positions delimit the blocks.
    Ties are broken by making the blocks as short as possible from the right.
    """
    cells = str(c)
    if "1" not in cells:
        raise NoPegsError(f"{cells!r} has no pegs")
    scanner = _scanner(automaton or build_language_nfa())
    counts, total = scanner.forward(cells)
    k = total - len(cells)
    ends = scanner.cuts(cells, counts)
    assert len(ends) == k + 1 and counts[-1] == k
    return k, ends[1:]


@dataclass(frozen=True)
class Segment:
    start: int
    end: int
    plan: Plan

    def to_json(self) -> dict:
        return {"start": self.start, "end": self.end, "plan": self.plan.to_json()}


@dataclass(frozen=True)
class SolveResult:
    k: int
    segments: tuple
    combined: Plan

    def to_json(self) -> dict:
        return {"k": self.k, "segments": [s.to_json() for s in self.segments],
                "plan": self.combined.to_json()}


def solve_min(c: ConfigLike, automaton: Nfa | None = None) -> SolveResult:
    """Reduce ``c`` to the fewest possible pegs; each block is played independently."""
    c = as_config(c)
    if c.peg_count == 0:
        return SolveResult(0, (), Plan(c, (), 0))
    with gc_paused():
        k, ends = min_peg_partition(c, automaton)
        segments = []
        moves: list[Move] = []
        start = 0
        for end in ends:
            local = solve_single(Configuration(c.cells[start:end]), check=False)
            segments.append(Segment(start, end, local))
            moves += [Move(m.pos + start, m.dir) for m in local.moves]
            start = end
    return SolveResult(k, tuple(segments), Plan(c, tuple(moves), k))

"""Finite automata for the language of single-peg-solvable configurations.

The language is written down as a regular expression in the usual textbook
notation (``+`` is union, ``w*`` is zero or more, ``w^+`` one or more). It is
parsed into an AST, compiled to an epsilon-NFA by structural induction,
stripped of epsilon moves, and optionally determinized and minimized.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .core import ConfigLike, PegError

ALPHABET = "01"

# The core language L. Solvable boards are exactly 0* L 0*.
L_TEXT = (
    "1 + 011 + 110"
    " + 11(01)*(00 + 00(11)^+ + (11)^+00 + (11)*1011 + 1101(11)*)(10)*11"
    " + 11(01)*(11)*01 + 10(11)*(10)*11"
)
LANGUAGE_TEXT = f"0*({L_TEXT})0*"


class DomainError(PegError, ValueError):
    pass


class RegexSyntaxError(PegError, ValueError):
    pass


# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class Sym:
    char: str

    def __str__(self):
        return self.char


@dataclass(frozen=True)
class Union_:
    parts: tuple

    def __str__(self):
        return "(" + " + ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Concat:
    parts: tuple

    def __str__(self):
        return "".join(_wrap(p) for p in self.parts)


@dataclass(frozen=True)
class Star:
    inner: "Regex"

    def __str__(self):
        return _wrap(self.inner, atom=True) + "*"


@dataclass(frozen=True)
class Plus:
    inner: "Regex"

    def __str__(self):
        return _wrap(self.inner, atom=True) + "^+"


Regex = Union[Sym, Union_, Concat, Star, Plus]


def _wrap(node, atom=False) -> str:
    if isinstance(node, Sym) or isinstance(node, Union_):
        return str(node)
    if atom and isinstance(node, Concat):
        return f"({node})"
    return str(node)


class _Parser:
    """Recursive descent: union := concat ('+' concat)*; concat := postfix+;
    postfix := atom ('*' | '^+')*; atom := '0' | '1' | '(' union ')'."""

    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.i = 0

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def parse(self) -> Regex:
        node = self.union()
        if self.i != len(self.text):
            raise RegexSyntaxError(f"unexpected {self.peek()!r} at {self.i} in {self.text!r}")
        return node

    def union(self) -> Regex:
        parts = [self.concat()]
        while self.peek() == "+":
            self.i += 1
            parts.append(self.concat())
        return parts[0] if len(parts) == 1 else Union_(tuple(parts))

    def concat(self) -> Regex:
        parts = []
        while self.peek() and self.peek() in "01(":
            parts.append(self.postfix())
        if not parts:
            raise RegexSyntaxError(f"empty operand at {self.i} in {self.text!r}")
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def postfix(self) -> Regex:
        node = self.atom()
        while True:
            if self.peek() == "*":
                self.i += 1
                node = Star(node)
            elif self.text.startswith("^+", self.i):
                self.i += 2
                node = Plus(node)
            else:
                return node

    def atom(self) -> Regex:
        ch = self.peek()
        if ch in ("0", "1"):
            self.i += 1
            return Sym(ch)
        if ch == "(":
            self.i += 1
            node = self.union()
            if self.peek() != ")":
                raise RegexSyntaxError(f"missing ')' at {self.i} in {self.text!r}")
            self.i += 1
            return node
        raise RegexSyntaxError(f"unexpected {ch!r} at {self.i} in {self.text!r}")


def parse_regex(text: str) -> Regex:
    return _Parser(text).parse()


def reverse_regex(node: Regex) -> Regex:
    """AST for the mirror-image language."""
    if isinstance(node, Sym):
        return node
    if isinstance(node, Union_):
        return Union_(tuple(reverse_regex(p) for p in node.parts))
    if isinstance(node, Concat):
        return Concat(tuple(reverse_regex(p) for p in reversed(node.parts)))
    if isinstance(node, Star):
        return Star(reverse_regex(node.inner))
    return Plus(reverse_regex(node.inner))


LANGUAGE_AST = parse_regex(LANGUAGE_TEXT)
L_AST = parse_regex(L_TEXT)


# ---------------------------------------------------------------- automata


@dataclass(frozen=True)
class Nfa:
    """Epsilon-free NFA over {0, 1}; ``delta[q][b]`` is the tuple of successors on bit b."""

    n_states: int
    start: int
    accepting: frozenset
    delta: tuple

    @property
    def is_epsilon_free(self) -> bool:
        # structurally guaranteed: transitions are indexed by a consumed symbol only
        return all(len(row) == len(ALPHABET) for row in self.delta)

    def transitions(self) -> Iterator[tuple[int, str, int]]:
        for q, row in enumerate(self.delta):
            for b, targets in enumerate(row):
                for t in targets:
                    yield q, ALPHABET[b], t

    def accepts(self, word: ConfigLike) -> bool:
        current = {self.start}
        for b in str(word).encode():
            current = {t for q in current for t in self.delta[q][b & 1]}
            if not current:
                return False
        return not current.isdisjoint(self.accepting)

    def reversed(self) -> "Nfa":
        """NFA for the reversed language (fresh start state, old start accepting)."""
        back = [([], []) for _ in range(self.n_states)]
        for q, row in enumerate(self.delta):
            for b, targets in enumerate(row):
                for t in targets:
                    back[t][b].append(q)
        new_start = self.n_states
        start_row = tuple(sorted({q for t in self.accepting for q in back[t][b]}) for b in range(2))
        delta = tuple(tuple(tuple(sorted(set(x))) for x in row) for row in back) + (start_row,)
        accepting = {self.start}
        if self.start in self.accepting:
            accepting.add(new_start)
        return Nfa(self.n_states + 1, new_start, frozenset(accepting), delta)


@dataclass(frozen=True)
class Dfa:
    """Complete DFA over {0, 1}; ``delta[q] == (on_0, on_1)``."""

    n_states: int
    start: int
    accepting: frozenset
    delta: tuple

    def run(self, word: ConfigLike, state: int | None = None) -> int:
        q = self.start if state is None else state
        delta = self.delta
        for b in str(word).encode():
            q = delta[q][b & 1]
        return q

    def accepts(self, word: ConfigLike) -> bool:
        return self.run(word) in self.accepting

    def live_states(self) -> frozenset:
        """States from which some accepting state is reachable."""
        back = [[] for _ in range(self.n_states)]
        for q, row in enumerate(self.delta):
            for t in row:
                back[t].append(q)
        seen = set(self.accepting)
        queue = deque(seen)
        while queue:
            for p in back[queue.popleft()]:
                if p not in seen:
                    seen.add(p)
                    queue.append(p)
        return frozenset(seen)

    def as_nfa(self) -> Nfa:
        """The same automaton viewed as an NFA, with the dead states dropped."""
        live = self.live_states()
        if self.start not in live:
            return Nfa(1, 0, frozenset(), (((), ()),))
        order = sorted(live)
        index = {q: i for i, q in enumerate(order)}
        delta = tuple(
            tuple((index[t],) if t in live else () for t in self.delta[q]) for q in order
        )
        return Nfa(len(order), index[self.start],
                   frozenset(index[q] for q in self.accepting), delta)


# --- Thompson construction and epsilon elimination


class _EpsNfa:
    def __init__(self):
        self.eps: list[list[int]] = []
        self.sym: list[list[tuple[int, int]]] = []

    def state(self) -> int:
        self.eps.append([])
        self.sym.append([])
        return len(self.eps) - 1

    def build(self, node: Regex) -> tuple[int, int]:
        """Return (entry, exit) for the fragment recognizing ``node``."""
        if isinstance(node, Sym):
            a, b = self.state(), self.state()
            self.sym[a].append((int(node.char), b))
            return a, b
        if isinstance(node, Concat):
            first, last = self.build(node.parts[0])
            for part in node.parts[1:]:
                a, b = self.build(part)
                self.eps[last].append(a)
                last = b
            return first, last
        if isinstance(node, Union_):
            a, b = self.state(), self.state()
            for part in node.parts:
                x, y = self.build(part)
                self.eps[a].append(x)
                self.eps[y].append(b)
            return a, b
        if isinstance(node, Star):
            a, b = self.state(), self.state()
            x, y = self.build(node.inner)
            self.eps[a] += [x, b]
            self.eps[y] += [x, b]
            return a, b
        if isinstance(node, Plus):
            # w^+ = w w*: the fragment must be traversed at least once
            a, b = self.state(), self.state()
            x, y = self.build(node.inner)
            self.eps[a].append(x)
            self.eps[y] += [x, b]
            return a, b
        raise TypeError(f"not a regex node: {node!r}")

    def closure(self, q: int) -> set[int]:
        seen = {q}
        stack = [q]
        while stack:
            for t in self.eps[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen


def _prune(n: int, start: int, accepting: set, delta: list) -> Nfa:
    """Keep states that are reachable from start and co-reachable to acceptance."""
    fwd = {start}
    stack = [start]
    while stack:
        q = stack.pop()
        for targets in delta[q]:
            for t in targets:
                if t not in fwd:
                    fwd.add(t)
                    stack.append(t)
    back = [set() for _ in range(n)]
    for q in range(n):
        for targets in delta[q]:
            for t in targets:
                back[t].add(q)
    co = set(accepting)
    stack = list(co)
    while stack:
        for p in back[stack.pop()]:
            if p not in co:
                co.add(p)
                stack.append(p)
    keep = sorted((fwd & co) | {start})
    index = {q: i for i, q in enumerate(keep)}
    new_delta = tuple(
        tuple(tuple(sorted(index[t] for t in delta[q][b] if t in index)) for b in range(2))
        for q in keep
    )
    return Nfa(len(keep), index[start], frozenset(index[q] for q in accepting if q in index), new_delta)


def nfa_from_regex(node: Regex) -> Nfa:
    eps = _EpsNfa()
    entry, exit_ = eps.build(node)
    n = len(eps.eps)
    closures = [eps.closure(q) for q in range(n)]
    delta = []
    for q in range(n):
        row = (set(), set())
        for p in closures[q]:
            for b, t in eps.sym[p]:
                row[b].add(t)
        delta.append(row)
    accepting = {q for q in range(n) if exit_ in closures[q]}
    return _prune(n, entry, accepting, delta)


@lru_cache(maxsize=None)
def build_language_nfa() -> Nfa:
    """Epsilon-free NFA for the solvable boards 0* L 0*."""
    return nfa_from_regex(LANGUAGE_AST)


@lru_cache(maxsize=None)
def language_dfa() -> Dfa:
    return determinize_minimize(build_language_nfa())


@lru_cache(maxsize=None)
def core_dfa() -> Dfa:
    """Minimal DFA for L itself (no surrounding holes)."""
    return determinize_minimize(nfa_from_regex(L_AST))


# --- subset construction and Hopcroft minimization


def determinize(nfa: Nfa) -> Dfa:
    start = frozenset([nfa.start])
    index = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for b in range(2):
            nxt = frozenset(t for q in subset for t in nfa.delta[q][b])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
        i += 1
    accepting = frozenset(i for i, s in enumerate(order) if not s.isdisjoint(nfa.accepting))
    return Dfa(len(order), 0, accepting, tuple(delta))


def _reachable(dfa: Dfa) -> list[int]:
    seen = {dfa.start}
    order = [dfa.start]
    for q in order:
        for t in dfa.delta[q]:
            if t not in seen:
                seen.add(t)
                order.append(t)
    return order


def minimize(dfa: Dfa) -> Dfa:
    """Hopcroft partition refinement, then canonical BFS renumbering."""
    states = _reachable(dfa)
    live = set(states)
    inverse = {q: ([], []) for q in states}
    for q in states:
        for b, t in enumerate(dfa.delta[q]):
            inverse[t][b].append(q)
    acc = frozenset(q for q in states if q in dfa.accepting)
    rej = frozenset(live - acc)
    partition = {p for p in (acc, rej) if p}
    work = set(partition)
    while work:
        splitter = work.pop()
        for b in range(2):
            pre = {p for q in splitter for p in inverse[q][b]}
            if not pre:
                continue
            for block in list(partition):
                inside = block & pre
                if not inside or inside == block:
                    continue
                outside = block - inside
                partition.remove(block)
                partition |= {inside, outside}
                if block in work:
                    work.remove(block)
                    work |= {inside, outside}
                else:
                    work.add(min(inside, outside, key=len))
    block_of = {q: blk for blk in partition for q in blk}
    # canonical numbering by BFS from the start block, 0-edge before 1-edge
    start_blk = block_of[dfa.start]
    number = {start_blk: 0}
    order = [start_blk]
    for blk in order:
        q = next(iter(blk))
        for t in dfa.delta[q]:
            tb = block_of[t]
            if tb not in number:
                number[tb] = len(order)
                order.append(tb)
    delta = tuple(
        tuple(number[block_of[t]] for t in dfa.delta[next(iter(blk))]) for blk in order
    )
    accepting = frozenset(number[blk] for blk in order if blk <= acc)
    return Dfa(len(order), 0, accepting, delta)


def determinize_minimize(nfa: Nfa) -> Dfa:
    return minimize(determinize(nfa))


def accepts(automaton: Nfa | Dfa | None, c: ConfigLike) -> bool:
    """Is ``c`` reducible to a single peg? Defaults to the minimal language DFA."""
    if automaton is None:
        automaton = language_dfa()
    return automaton.accepts(c)


def is_solvable(c: ConfigLike) -> bool:
    return language_dfa().accepts(c)


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Language equality by exploring the product automaton."""
    return find_difference(a, b) is None


def find_difference(a: Dfa, b: Dfa) -> str | None:
    """Shortest word accepted by exactly one of the two DFAs, or None."""
    start = (a.start, b.start)
    parent = {start: None}
    queue = deque([start])
    while queue:
        p, q = pair = queue.popleft()
        if (p in a.accepting) != (q in b.accepting):
            word = []
            while parent[pair] is not None:
                pair, ch = parent[pair]
                word.append(ch)
            return "".join(reversed(word))
        for bit in range(2):
            nxt = (a.delta[p][bit], b.delta[q][bit])
            if nxt not in parent:
                parent[nxt] = (pair, ALPHABET[bit])
                queue.append(nxt)
    return None


def intersection_witness(a: Dfa, b: Dfa) -> str | None:
    """Shortest word accepted by both DFAs, or None when the intersection is empty."""
    start = (a.start, b.start)
    parent = {start: None}
    queue = deque([start])
    while queue:
        p, q = pair = queue.popleft()
        if p in a.accepting and q in b.accepting:
            word = []
            while parent[pair] is not None:
                pair, ch = parent[pair]
                word.append(ch)
            return "".join(reversed(word))
        for bit in range(2):
            nxt = (a.delta[p][bit], b.delta[q][bit])
            if nxt not in parent:
                parent[nxt] = (pair, ALPHABET[bit])
                queue.append(nxt)
    return None


def regex_dfa(text: str) -> Dfa:
    return determinize_minimize(nfa_from_regex(parse_regex(text)))


# ---------------------------------------------------------------- counting


def count_solvable(n: int) -> int:
    """Number of distinct solvable configurations with ``n`` pegs.

    011 and 110 are one class, and surrounding holes are ignored.
    """
    if n < 1:
        raise DomainError(f"peg count must be >= 1, got {n}")
    if n <= 2:
        return 1
    if n == 3:
        return 2
    return n * n - 7 * n + (15 if n % 2 == 0 else 16)


def enumerate_solvable(n: int, max_len: int | None = None) -> list[str]:
    """Trimmed representatives of the solvable configurations with ``n`` pegs, sorted.

    Words are found by depth-first search over the minimal DFA of L, bounded
    by length ``max_len`` (default ``2n + 2``).
    """
    if n < 1:
        raise DomainError(f"peg count must be >= 1, got {n}")
    if n == 2:
        return ["11"]
    if max_len is None:
        max_len = 2 * n + 2
    dfa = core_dfa()
    live = dfa.live_states()
    found = []
    stack = [(dfa.start, "", 0)]
    while stack:
        q, word, ones = stack.pop()
        if ones == n and q in dfa.accepting and word.startswith("1") and word.endswith("1"):
            found.append(word)
        if len(word) == max_len:
            continue
        for bit, ch in enumerate(ALPHABET):
            t = dfa.delta[q][bit]
            o = ones + bit
            if t in live and o <= n:
                stack.append((t, word + ch, o))
    return sorted(found)


def count_words(dfa: Dfa, pegs: int, length: int) -> int:
    """Number of accepted words with exactly ``length`` cells and ``pegs`` pegs (DP over the DFA)."""
    table = {(dfa.start, 0): 1}
    for _ in range(length):
        nxt: dict = {}
        for (q, ones), ways in table.items():
            for bit in range(2):
                key = (dfa.delta[q][bit], ones + bit)
                if key[1] <= pegs:
                    nxt[key] = nxt.get(key, 0) + ways
        table = nxt
    return sum(w for (q, ones), w in table.items() if ones == pegs and q in dfa.accepting)


# ---------------------------------------------------------------- export


def transition_table(automaton: Nfa | Dfa) -> str:
    """Plain-text dump: header lines for start/accepting, then ``state symbol state``."""
    lines = [
        f"# states {automaton.n_states}",
        f"# start {automaton.start}",
        "# accepting " + " ".join(map(str, sorted(automaton.accepting))),
    ]
    if isinstance(automaton, Nfa):
        lines += [f"{q} {ch} {t}" for q, ch, t in automaton.transitions()]
    else:
        lines += [f"{q} {ALPHABET[b]} {t}" for q, row in enumerate(automaton.delta)
                  for b, t in enumerate(row)]
    return "\n".join(lines) + "\n"


def parse_transition_table(text: str) -> Nfa:
    n = start = None
    accepting: frozenset = frozenset()
    arcs = []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "#":
            if parts[1] == "states":
                n = int(parts[2])
            elif parts[1] == "start":
                start = int(parts[2])
            elif parts[1] == "accepting":
                accepting = frozenset(map(int, parts[2:]))
            continue
        q, ch, t = parts
        arcs.append((int(q), ALPHABET.index(ch), int(t)))
    if n is None or start is None:
        raise ValueError("transition table lacks a '# states' or '# start' header")
    delta = [(set(), set()) for _ in range(n)]
    for q, b, t in arcs:
        delta[q][b].add(t)
    return Nfa(n, start, accepting,
               tuple(tuple(tuple(sorted(x)) for x in row) for row in delta))

"""Linear-time play for boards that reduce to one peg.

Every solvable board with three or more pegs is built backwards from a single
peg through a short list of parameterized shapes. We recognise the shape,
emit the unhops that build it, and play them back in reverse as hops.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field

from .automaton import language_dfa
from .core import (
    ConfigLike, Configuration, Move, PegError, Unhop, as_config, gc_paused, replay,
    trim,
)

# Plain ints rather than Direction members: tuples holding only ints drop out
# of cyclic GC tracking, which keeps million-move plans linear in practice.
L, R = -1, 1


class NotClassifiableError(PegError, ValueError):
    pass


class UnsolvableError(PegError, ValueError):
    pass


class Tag(enum.Enum):
    SINGLETON = "Singleton"
    TWO_PEGS_WITH_HOLE = "TwoPegsWithHole"
    STAGE1 = "Stage1"
    STAGE2 = "Stage2"
    STAGE3 = "Stage3"
    STAGE4 = "Stage4"
    STAGE5 = "Stage5"


class Orientation(enum.Enum):
    AS_IS = "AsIs"
    MIRRORED = "Mirrored"


# One regex per shape; each group is a run of a repeated two-cell block.
_PATTERNS = {
    Tag.STAGE1: re.compile(r"10((?:10)*)11"),
    Tag.STAGE2: re.compile(r"11((?:01)*)00((?:10)*)11"),
    Tag.STAGE3: re.compile(r"11((?:01)*)((?:11)+)00((?:10)*)11"),
    Tag.STAGE4: re.compile(r"11((?:01)*)((?:11)*)01"),
    Tag.STAGE5: re.compile(r"11((?:01)*)((?:11)*)1011((?:10)*)11"),
}

_TEMPLATES = {
    Tag.SINGLETON: ("1",),
    Tag.TWO_PEGS_WITH_HOLE: ("110",),
    Tag.STAGE1: ("10", "10", "11"),
    Tag.STAGE2: ("11", "01", "00", "10", "11"),
    Tag.STAGE3: ("11", "01", "11", "00", "10", "11"),
    Tag.STAGE4: ("11", "01", "11", "01"),
    Tag.STAGE5: ("11", "01", "11", "1011", "10", "11"),
}

# which template pieces are repeated, in parameter order
_REPEATED = {
    Tag.SINGLETON: (),
    Tag.TWO_PEGS_WITH_HOLE: (),
    Tag.STAGE1: (1,),
    Tag.STAGE2: (1, 3),
    Tag.STAGE3: (1, 2, 4),
    Tag.STAGE4: (1, 2),
    Tag.STAGE5: (1, 2, 4),
}


@dataclass(frozen=True)
class Family:
    """A recognised shape: which stage, which way round, and its repetition counts."""

    tag: Tag
    orientation: Orientation = Orientation.AS_IS
    params: tuple = ()

    def __post_init__(self):
        if len(self.params) != len(_REPEATED[self.tag]) or any(p < 0 for p in self.params):
            raise ValueError(f"bad parameters {self.params} for {self.tag.value}")
        if self.tag is Tag.STAGE3 and self.params[1] < 1:
            raise ValueError("Stage3 needs at least one 11 block before the 00")

    @property
    def length(self) -> int:
        return len(self._render_as_is())

    def _render_as_is(self) -> str:
        pieces = list(_TEMPLATES[self.tag])
        for slot, count in zip(_REPEATED[self.tag], self.params):
            pieces[slot] = pieces[slot] * count
        return "".join(pieces)

    def render(self) -> str:
        s = self._render_as_is()
        return s if self.orientation is Orientation.AS_IS else s[::-1]

    @property
    def origin(self) -> int:
        """Cell holding the single peg the unhop script starts from."""
        return _script(self)[0]


def classify(c: ConfigLike) -> Family:
    """Find the shape that renders exactly ``c``, trying the mirror image last."""
    s = str(c)
    if not s:
        raise NotClassifiableError("empty configuration")
    for orientation, text in ((Orientation.AS_IS, s), (Orientation.MIRRORED, s[::-1])):
        if text == "1":
            return Family(Tag.SINGLETON, orientation)
        if text == "110":
            return Family(Tag.TWO_PEGS_WITH_HOLE, orientation)
        for tag, pattern in _PATTERNS.items():
            m = pattern.fullmatch(text)
            if m:
                params = tuple(len(g) // 2 for g in m.groups())
                return Family(tag, orientation, params)
    raise NotClassifiableError(f"{s} matches no single-peg shape")


def _stage1_at(offset: int, reps: int) -> tuple[int, list[Unhop]]:
    """Build 10(10)^reps 11 with its leftmost cell at ``offset``."""
    origin = offset + 2
    script = [Unhop(origin, L), Unhop(offset + 1, R)]
    script += [Unhop(offset + 3 + 2 * j, R) for j in range(reps)]
    return origin, script


def _stage2(a: int, b: int) -> tuple[int, list[Unhop]]:
    """11(01)^a 00 (10)^b 11: a Stage1 block, then a+1 unhops of its leftmost peg."""
    offset = 2 * a + 2
    origin, script = _stage1_at(offset, b)
    script += [Unhop(offset - 2 * i, L) for i in range(a + 1)]
    return origin, script


def _shift_gap(a: int, steps: int) -> list[Unhop]:
    # the 00 of a Stage2 board sits at 2a+2; each unhop moves it two cells right
    return [Unhop(2 * a + 4 + 2 * j, L) for j in range(steps)]


def _script(f: Family) -> tuple[int, list[Unhop]]:
    tag, p = f.tag, f.params
    if tag is Tag.SINGLETON:
        origin, script = 0, []
    elif tag is Tag.TWO_PEGS_WITH_HOLE:
        origin, script = 2, [Unhop(2, L)]
    elif tag is Tag.STAGE1:
        origin, script = _stage1_at(0, p[0])
    elif tag is Tag.STAGE2:
        origin, script = _stage2(*p)
    elif tag is Tag.STAGE3:
        a, c, b = p
        origin, script = _stage2(a, b + c)
        script += _shift_gap(a, c)
    elif tag is Tag.STAGE4:
        a, c = p
        if c == 0:
            # 11(01)^(a+1) is the mirror image of 10(10)^a 11
            mirrored = Family(Tag.STAGE1, _flip(f.orientation), (a,))
            return _script(mirrored)
        # the 00 is pushed all the way through to the right end
        origin, script = _stage2(a, c - 1)
        script += _shift_gap(a, c)
    else:
        a, c, b = p
        origin, script = _stage2(a, b + c + 1)
        script += _shift_gap(a, c + 1)
        gap = 2 * a + 2 * c + 4
        script.append(Unhop(gap - 1, R))
    if f.orientation is Orientation.MIRRORED:
        n = f.length
        origin = n - 1 - origin
        script = [Unhop(n - 1 - u.at, -u.dir) for u in script]
    return origin, script


def _flip(o: Orientation) -> Orientation:
    return Orientation.MIRRORED if o is Orientation.AS_IS else Orientation.AS_IS


def unhop_script(f: Family) -> list[Unhop]:
    """Unhops taking a lone peg at ``f.origin`` to the board ``f.render()``."""
    return _script(f)[1]


@dataclass(frozen=True)
class Plan:
    initial: Configuration
    moves: tuple = field(default=())
    final_pegs: int = 1

    def replay(self) -> Configuration:
        return replay(self.initial, self.moves)

    def validate(self) -> Configuration:
        end = self.replay()
        if end.peg_count != self.final_pegs:
            raise AssertionError(
                f"plan ends with {end.peg_count} pegs, expected {self.final_pegs}")
        return end

    def to_json(self) -> dict:
        return {"initial": self.initial.cells, "final_pegs": self.final_pegs,
                "moves": [m.to_json() for m in self.moves]}

    @classmethod
    def from_json(cls, obj: dict | str) -> "Plan":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(Configuration(obj["initial"]),
                   tuple(Move.from_json(m) for m in obj["moves"]), int(obj["final_pegs"]))

    def to_text(self) -> str:
        return " ".join(map(str, self.moves))


def _window(c: Configuration) -> tuple[int, Family]:
    """Locate the sub-board to play on and the shape it has."""
    t, offset = trim(c)
    if t.cells == "11":
        n = len(c)
        if offset + 2 < n:
            return offset, Family(Tag.TWO_PEGS_WITH_HOLE, Orientation.AS_IS)
        if offset > 0:
            return offset - 1, Family(Tag.TWO_PEGS_WITH_HOLE, Orientation.MIRRORED)
        raise UnsolvableError(f"{c} has no hole next to its two pegs")
    return offset, classify(t)


def solve_single(c: ConfigLike, *, check: bool = True) -> Plan:
    """Hops reducing a solvable board to one peg, in the board's own coordinates.

    With ``check`` (the default) membership is first tested on the minimal
    DFA; otherwise an unsolvable board surfaces as NotClassifiableError.
    """
    c = as_config(c)
    if check and not language_dfa().accepts(c):
        raise UnsolvableError(f"{c} cannot be reduced to a single peg")
    offset, family = _window(c)
    with gc_paused():
        script = unhop_script(family)
        moves = tuple([Move(u.at + 2 * u.dir + offset, -u.dir) for u in reversed(script)])
    return Plan(c, moves, 1)

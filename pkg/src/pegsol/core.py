"""Board representation, hops and unhops for one-dimensional peg solitaire.

A configuration is the whole board written as a string of ``'1'`` (peg) and
``'0'`` (hole). There are no cells beyond the ends of the string.
"""

from __future__ import annotations

import contextlib
import enum
import gc
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

PEG = "1"
HOLE = "0"


class PegError(Exception):
    """Base class for errors raised by this package."""


class ParseError(PegError, ValueError):
    pass


class IllegalMoveError(PegError, ValueError):
    """Raised when a hop or unhop is not legal; ``reason`` names the failed clause."""

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


class IllegalUnhopError(IllegalMoveError):
    pass


class Direction(enum.IntEnum):
    LEFT = -1
    RIGHT = 1

    @property
    def letter(self) -> str:
        return "L" if self is Direction.LEFT else "R"

    @classmethod
    def from_letter(cls, letter: str) -> "Direction":
        try:
            return {"L": cls.LEFT, "R": cls.RIGHT}[letter]
        except KeyError:
            raise ParseError(f"bad direction {letter!r}, expected 'L' or 'R'") from None


L = Direction.LEFT
R = Direction.RIGHT


class Move(NamedTuple):
    """A hop: the peg at ``pos`` jumps over its neighbour in direction ``dir``."""

    pos: int
    dir: Direction

    def __str__(self) -> str:
        return f"{self.pos}{Direction(self.dir).letter}"

    @classmethod
    def parse(cls, text: str) -> "Move":
        text = text.strip()
        if len(text) < 2 or not text[:-1].isdigit():
            raise ParseError(f"bad move {text!r}, expected e.g. '3L'")
        return cls(int(text[:-1]), Direction.from_letter(text[-1]))

    def to_json(self) -> dict:
        return {"from": self.pos, "dir": Direction(self.dir).letter}

    @classmethod
    def from_json(cls, obj: dict) -> "Move":
        return cls(int(obj["from"]), Direction.from_letter(obj["dir"]))

    def inverse(self) -> "Unhop":
        """The unhop that undoes this move."""
        return Unhop(self.pos + 2 * self.dir, Direction(-self.dir))


class Unhop(NamedTuple):
    """A reverse move: the peg at ``at`` splits into the two cells in direction ``dir``."""

    at: int
    dir: Direction

    def inverse(self) -> Move:
        return Move(self.at + 2 * self.dir, Direction(-self.dir))


@dataclass(frozen=True)
class Configuration:
    cells: str

    def __post_init__(self):
        if self.cells.strip("01"):
            raise ParseError(f"configuration may only contain '0' and '1': {self.cells!r}")

    def __str__(self) -> str:
        return self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __getitem__(self, i: int) -> str:
        return self.cells[i]

    @property
    def peg_count(self) -> int:
        return self.cells.count(PEG)


ConfigLike = Union[Configuration, str]


def parse_config(text: str) -> Configuration:
    if not text:
        raise ParseError("empty configuration")
    return Configuration(text)


def as_config(c: ConfigLike) -> Configuration:
    """Accept either a Configuration or its string form. The empty string is allowed here."""
    return c if isinstance(c, Configuration) else Configuration(c)


def peg_count(c: ConfigLike) -> int:
    return str(c).count(PEG)


def trim(c: ConfigLike) -> tuple[Configuration, int]:
    """Return the window from the first peg to the last peg, and its offset."""
    s = str(c)
    first = s.find(PEG)
    if first < 0:
        return Configuration(""), 0
    last = s.rfind(PEG)
    return Configuration(s[first:last + 1]), first


def reverse(c: ConfigLike) -> Configuration:
    return Configuration(str(c)[::-1])


def mirror_move(m: Move, n: int) -> Move:
    """Image of a move under reflection of a board of length ``n``."""
    return Move(n - 1 - m.pos, Direction(-m.dir))


def _check_move(s: str, pos: int, d: int) -> str | None:
    n = len(s)
    for idx in (pos, pos + d, pos + 2 * d):
        if not 0 <= idx < n:
            return "out of bounds"
    if s[pos] != PEG:
        return "jumper missing"
    if s[pos + d] != PEG:
        return "victim missing"
    if s[pos + 2 * d] != HOLE:
        return "landing occupied"
    return None


def _check_unhop(s: str, at: int, d: int) -> str | None:
    n = len(s)
    for idx in (at, at + d, at + 2 * d):
        if not 0 <= idx < n:
            return "out of bounds"
    if s[at] != PEG:
        return "peg missing"
    if s[at + d] != HOLE or s[at + 2 * d] != HOLE:
        return "target occupied"
    return None


def is_legal(c: ConfigLike, m: Move) -> bool:
    return _check_move(str(c), m.pos, int(m.dir)) is None


def legal_moves(c: ConfigLike) -> list[Move]:
    """All legal hops, ordered by (pos, dir)."""
    s = str(c)
    moves = []
    for i in range(len(s)):
        if s[i] != PEG:
            continue
        for d in (L, R):
            if _check_move(s, i, d) is None:
                moves.append(Move(i, d))
    return moves


def legal_unhops(c: ConfigLike) -> list[Unhop]:
    s = str(c)
    return [Unhop(i, d) for i in range(len(s)) for d in (L, R)
            if s[i] == PEG and _check_unhop(s, i, d) is None]


def apply_move(c: ConfigLike, m: Move) -> Configuration:
    s = str(c)
    pos, d = m.pos, int(m.dir)
    reason = _check_move(s, pos, d)
    if reason is not None:
        raise IllegalMoveError(f"illegal move {Move(pos, Direction(d))} on {s}: {reason}", reason)
    cells = list(s)
    cells[pos] = HOLE
    cells[pos + d] = HOLE
    cells[pos + 2 * d] = PEG
    return Configuration("".join(cells))


def apply_unhop(c: ConfigLike, u: Unhop) -> Configuration:
    s = str(c)
    at, d = u.at, int(u.dir)
    reason = _check_unhop(s, at, d)
    if reason is not None:
        raise IllegalUnhopError(f"illegal unhop {at}{Direction(d).letter} on {s}: {reason}", reason)
    cells = list(s)
    cells[at] = HOLE
    cells[at + d] = PEG
    cells[at + 2 * d] = PEG
    return Configuration("".join(cells))


@contextlib.contextmanager
def gc_paused():
    """Suspend cyclic GC while building large acyclic results (plans of ~n tuples)."""
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def replay(c: ConfigLike, moves: Iterable[Move]) -> Configuration:
    """Apply a move sequence in linear total time, checking legality at every step."""
    board = bytearray(str(c), "ascii")
    n = len(board)
    one, zero = ord(PEG), ord(HOLE)
    for k, m in enumerate(moves):
        pos, d = m.pos, int(m.dir)
        land = pos + 2 * d
        if not (0 <= pos < n and 0 <= land < n):
            raise IllegalMoveError(f"move #{k} {m} out of bounds", "out of bounds")
        if board[pos] != one or board[pos + d] != one or board[land] != zero:
            reason = _check_move(board.decode(), pos, d)
            raise IllegalMoveError(f"move #{k} {m} illegal: {reason}", reason or "illegal")
        board[pos] = zero
        board[pos + d] = zero
        board[land] = one
    return Configuration(board.decode())


def replay_unhops(c: ConfigLike, unhops: Iterable[Unhop]) -> Configuration:
    """Apply an unhop sequence in linear total time."""
    board = bytearray(str(c), "ascii")
    n = len(board)
    one, zero = ord(PEG), ord(HOLE)
    for k, u in enumerate(unhops):
        at, d = u.at, int(u.dir)
        far = at + 2 * d
        if not (0 <= at < n and 0 <= far < n):
            raise IllegalUnhopError(f"unhop #{k} {u} out of bounds", "out of bounds")
        if board[at] != one or board[at + d] != zero or board[far] != zero:
            raise IllegalUnhopError(f"unhop #{k} {u} illegal on {board.decode()}", "illegal")
        board[at] = zero
        board[at + d] = one
        board[far] = one
    return Configuration(board.decode())

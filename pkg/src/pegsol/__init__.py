"""One-dimensional peg solitaire: recognizer, constructive solver, block splitter, oracle."""

from .automaton import (
    accepts, build_language_nfa, count_solvable, determinize_minimize, enumerate_solvable,
    is_solvable, language_dfa,
)
from .core import (
    Configuration, Direction, Move, Unhop, apply_move, apply_unhop, legal_moves,
    parse_config, peg_count, replay, reverse, trim,
)
from .minpegs import SolveResult, min_peg_partition, solve_min
from .oracle import oracle_count_classes, oracle_min_pegs, oracle_solvable
from .solver import Family, Plan, classify, solve_single, unhop_script

__all__ = [
    "Configuration", "Direction", "Family", "Move", "Plan", "SolveResult", "Unhop",
    "accepts", "apply_move", "apply_unhop", "build_language_nfa", "classify",
    "count_solvable", "determinize_minimize", "enumerate_solvable", "is_solvable",
    "language_dfa", "legal_moves", "min_peg_partition", "oracle_count_classes",
    "oracle_min_pegs", "oracle_solvable", "parse_config", "peg_count", "replay",
    "reverse", "solve_min", "solve_single", "trim", "unhop_script",
]

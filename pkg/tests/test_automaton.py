import re

import pytest
from hypothesis import given, strategies as st

from pegsol.automaton import (
    L_AST, L_TEXT, LANGUAGE_AST, DomainError, Plus, RegexSyntaxError, Union_, accepts,
    build_language_nfa, core_dfa, count_solvable, count_words, determinize, determinize_minimize,
    enumerate_solvable, equivalent, find_difference, intersection_witness, language_dfa,
    minimize, nfa_from_regex, parse_regex, parse_transition_table, regex_dfa, reverse_regex,
    transition_table,
)

from conftest import all_strings


def _py_pattern():
    """Python's backtracking engine on the same expression: an independent recognizer."""
    text = L_TEXT.replace(" ", "")
    out = []
    i = 0
    while i < len(text):
        if text.startswith("^+", i):
            out.append("+")
            i += 2
        elif text[i] == "+":
            out.append("|")
            i += 1
        elif text[i] == "(":
            out.append("(?:")
            i += 1
        else:
            out.append(text[i])
            i += 1
    return re.compile("0*(?:" + "".join(out) + ")0*")


PY_LANGUAGE = _py_pattern()


@pytest.mark.parametrize("word, expected", [
    ("1011", True), ("11", False), ("", False), ("110010101011", True),
    ("111111101111", True), ("1111", False), ("011", True), ("110", True), ("1", True),
])
def test_accepts_examples(word, expected):
    assert build_language_nfa().accepts(word) is expected
    assert language_dfa().accepts(word) is expected
    assert accepts(None, word) is expected


def test_nfa_is_epsilon_free_and_small():
    nfa = build_language_nfa()
    assert nfa.is_epsilon_free
    assert all(len(row) == 2 for row in nfa.delta)
    assert nfa.n_states < 100


def test_ast_keeps_plus_nodes_and_round_trips():
    def nodes(n):
        yield n
        for child in getattr(n, "parts", ()):
            yield from nodes(child)
        if hasattr(n, "inner"):
            yield from nodes(n.inner)
    assert sum(isinstance(n, Plus) for n in nodes(L_AST)) == 2
    top = L_AST
    assert isinstance(top, Union_) and len(top.parts) == 6
    assert parse_regex(str(LANGUAGE_AST)) == LANGUAGE_AST


@pytest.mark.parametrize("bad", ["(01", "01)", "0+", "*1", "2"])
def test_regex_syntax_errors(bad):
    with pytest.raises(RegexSyntaxError):
        parse_regex(bad)


def test_pipeline_matches_python_re():
    nfa, dfa = build_language_nfa(), language_dfa()
    for s in all_strings(14):
        expected = PY_LANGUAGE.fullmatch(s) is not None
        assert dfa.accepts(s) is expected, s
    for s in all_strings(11):
        assert nfa.accepts(s) is (PY_LANGUAGE.fullmatch(s) is not None), s


def test_dfa_idempotent_and_canonical():
    dfa = language_dfa()
    again = determinize_minimize(dfa.as_nfa())
    assert again.n_states == dfa.n_states
    assert again == minimize(determinize(dfa.as_nfa()))
    assert again == dfa


def test_language_closed_under_reversal():
    mirrored = regex_dfa(str(reverse_regex(LANGUAGE_AST)))
    assert find_difference(language_dfa(), mirrored) is None
    assert equivalent(language_dfa(), determinize_minimize(build_language_nfa().reversed()))


def test_find_difference_spots_a_change():
    other = regex_dfa("0*(1 + 011 + 110)0*")
    diff = find_difference(language_dfa(), other)
    assert diff == "1011"


def test_at_most_one_double_hole():
    # two separate runs of 00, or a run of three holes
    bad = regex_dfa("(0+1)*000(0+1)* + (0+1)*001(0+1)*00(0+1)*")
    assert intersection_witness(core_dfa(), bad) is None
    # the monitor itself catches offenders
    assert intersection_witness(regex_dfa("1100110011"), bad) == "1100110011"
    for n in range(1, 9):
        for w in enumerate_solvable(n):
            assert "000" not in w and w.count("00") <= 1


def test_count_solvable_values():
    assert [count_solvable(n) for n in range(1, 8)] == [1, 1, 2, 3, 6, 9, 16]
    assert count_solvable(4) == 3 and count_solvable(7) == 16
    with pytest.raises(DomainError):
        count_solvable(0)


def test_enumerate_examples():
    assert enumerate_solvable(1) == ["1"]
    assert enumerate_solvable(2) == ["11"]
    assert enumerate_solvable(3) == ["1011", "1101"]
    # frozen from the oracle over every trimmed 4-peg string up to length 10
    assert enumerate_solvable(4) == ["101011", "110011", "110101"]
    with pytest.raises(DomainError):
        enumerate_solvable(0)


@pytest.mark.parametrize("n", range(1, 13))
def test_enumeration_matches_count(n):
    words = enumerate_solvable(n)
    assert len(words) == len(set(words)) == count_solvable(n)
    assert words == sorted(words)


@pytest.mark.parametrize("n", range(3, 11))
def test_length_cap_is_not_binding(n):
    assert enumerate_solvable(n, max_len=3 * n + 6) == enumerate_solvable(n)
    assert max(map(len, enumerate_solvable(n))) <= 2 * n + 2


@pytest.mark.parametrize("n", range(3, 10))
def test_count_words_dp_agrees(n):
    dfa = core_dfa()
    by_dp = sum(count_words(dfa, n, m) for m in range(n, 2 * n + 3))
    assert by_dp == count_solvable(n)


def test_transition_table_round_trip():
    nfa = build_language_nfa()
    text = transition_table(nfa)
    assert text.startswith("# states")
    back = parse_transition_table(text)
    assert back == nfa
    dfa_text = transition_table(language_dfa())
    assert equivalent(determinize_minimize(parse_transition_table(dfa_text)), language_dfa())


@given(st.text(alphabet="01", max_size=40))
def test_nfa_and_dfa_agree(s):
    assert build_language_nfa().accepts(s) == language_dfa().accepts(s)


def test_nfa_from_regex_small_cases():
    nfa = nfa_from_regex(parse_regex("(01)^+"))
    assert nfa.accepts("01") and nfa.accepts("0101")
    assert not nfa.accepts("") and not nfa.accepts("010")
    star = nfa_from_regex(parse_regex("(01)*"))
    assert star.accepts("") and star.accepts("0101")

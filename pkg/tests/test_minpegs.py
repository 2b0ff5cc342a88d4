import random

import pytest
from hypothesis import given, strategies as st

from pegsol.automaton import build_language_nfa, language_dfa
from pegsol.bench import random_solvable
from pegsol.minpegs import (
    LayeredDag, NoPegsError, min_peg_partition, shortest_path_length, solve_min,
)
from pegsol.oracle import oracle_min_pegs

from conftest import all_strings

words = st.text(alphabet="01", min_size=1, max_size=8)


def test_partition_examples():
    assert min_peg_partition("11011") == (2, [4, 5])
    assert min_peg_partition("1111") == (4, [1, 2, 3, 4])
    assert min_peg_partition("1011") == (1, [4])
    # ties: trailing blocks as short as possible
    assert min_peg_partition("1001") == (2, [3, 4])


def test_no_pegs():
    with pytest.raises(NoPegsError):
        min_peg_partition("000")
    result = solve_min("0000")
    assert result.k == 0 and result.segments == () and result.combined.moves == ()


def test_solve_min_examples():
    r = solve_min("11011")
    assert r.k == 2
    assert [s.plan.initial.cells for s in r.segments] == ["1101", "1"]
    r = solve_min("11")
    assert r.k == 2 and r.combined.moves == ()
    assert [(s.start, s.end) for s in r.segments] == [(0, 1), (1, 2)]
    r = solve_min("110010101011")
    assert r.k == 1 and len(r.combined.moves) == 6
    assert r.combined.validate().peg_count == 1


def test_path_length_identity_and_explicit_graph():
    nfa = build_language_nfa()
    for s in all_strings(7):
        dag = LayeredDag(nfa, s)
        assert dag.n_vertices == nfa.n_states * (len(s) + 1)
        if "1" in s:
            k = min_peg_partition(s)[0]
            assert shortest_path_length(s) == len(s) + k == dag.distance()
        else:
            assert shortest_path_length(s) is None
            assert dag.distance() == float("inf")


def test_scan_order_puts_accepting_before_start():
    nfa = build_language_nfa()
    order = LayeredDag(nfa, "101").scan_order()
    layer = [q for q, i in order if i == 2]
    assert layer[-1] == nfa.start
    first_plain = next(k for k, q in enumerate(layer) if q not in nfa.accepting)
    assert all(q in nfa.accepting for q in layer[:first_plain])


def test_witness_and_segments():
    dfa = language_dfa()
    for s in all_strings(12):
        if "1" not in s:
            continue
        r = solve_min(s)
        assert r.combined.validate().peg_count == r.k
        assert len(r.combined.moves) == s.count("1") - r.k
        assert r.segments[0].start == 0 and r.segments[-1].end == len(s)
        for a, b in zip(r.segments, r.segments[1:]):
            assert a.end == b.start
        for seg in r.segments:
            assert dfa.accepts(s[seg.start:seg.end])
            assert seg.plan.validate().peg_count == 1


def test_single_block_iff_solvable():
    dfa = language_dfa()
    for s in all_strings(14):
        if "1" in s:
            assert (min_peg_partition(s)[0] == 1) == dfa.accepts(s)


def test_block_split_bounds_the_true_minimum():
    for s in all_strings(11):
        if "1" in s:
            assert min_peg_partition(s)[0] >= oracle_min_pegs(s)


def test_known_gap_against_exhaustive_search():
    # The pegs from two blocks can share a cell once one block has moved off
    # it, which no split into solvable blocks captures.
    assert oracle_min_pegs("01111") == 2
    assert min_peg_partition("01111")[0] == 3
    assert oracle_min_pegs("00111111000") == 3
    assert min_peg_partition("00111111000")[0] == 4


@given(words, words)
def test_subadditive(u, v):
    if "1" in u and "1" in v:
        assert min_peg_partition(u + v)[0] <= min_peg_partition(u)[0] + min_peg_partition(v)[0]


def test_any_epsilon_free_automaton_gives_same_split_size():
    as_nfa = language_dfa().as_nfa()
    for s in all_strings(11):
        if "1" in s:
            assert min_peg_partition(s, as_nfa)[0] == min_peg_partition(s)[0]


def _split_dp(s):
    # fewest blocks for every prefix, trying every last block with the DFA
    dfa = language_dfa()
    best = [0] + [None] * len(s)
    for i in range(1, len(s) + 1):
        for j in range(i):
            if best[j] is not None and dfa.accepts(s[j:i]):
                if best[i] is None or best[j] + 1 < best[i]:
                    best[i] = best[j] + 1
    return best


pieces = st.lists(st.sampled_from(["11", "01", "10", "00", "1", "0", "1111", "1010"]),
                  min_size=1, max_size=60)


@given(pieces)
def test_scan_matches_direct_split_on_long_boards(chunks):
    # long runs of 11 and 10 keep costly partial blocks alive far behind the best one
    s = "".join(chunks)
    if "1" not in s:
        return
    best = _split_dp(s)
    assert min_peg_partition(s)[0] == best[-1]
    assert shortest_path_length(s) == len(s) + best[-1]


def test_scan_on_long_shapes():
    for s in ("0011" + "01" * 60 + "11" * 70 + "00" + "10" * 50 + "11",
              "0" + "11" * 90 + "01" + "1",
              "11" + "01" * 30 + "11" * 80 + "1011" + "10" * 40 + "11" + "1" * 7):
        assert min_peg_partition(s)[0] == _split_dp(s)[-1]


def test_json_shape():
    obj = solve_min("11011").to_json()
    assert obj["k"] == 2
    assert [seg["plan"]["initial"] for seg in obj["segments"]] == ["1101", "1"]
    assert obj["segments"][0]["start"] == 0 and obj["segments"][1]["end"] == 5


def test_large_inputs():
    c = random_solvable(100_000, random.Random(3))
    r = solve_min(c)
    assert r.k == 1
    assert r.combined.validate().peg_count == 1
    rng = random.Random(5)
    noise = "".join(rng.choice("01") for _ in range(20_000))
    r = solve_min(noise)
    assert r.combined.validate().peg_count == r.k

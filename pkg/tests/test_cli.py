import io
import json
import sys

import pytest

from pegsol.cli import EXIT_INVARIANT, EXIT_OK, EXIT_USAGE, run, run_verify
from pegsol.core import replay
from pegsol.solver import Plan


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    assert call(capsys, "check", "1011") == (EXIT_OK, "solvable\n", "")
    assert call(capsys, "check", "11")[1] == "unsolvable\n"


def test_count_and_enum(capsys):
    assert call(capsys, "count", "5")[1] == "6\n"
    assert call(capsys, "enum", "4")[1].split() == ["101011", "110011", "110101"]
    code, out, _ = call(capsys, "enum", "3", "--json")
    assert json.loads(out) == {"n": 3, "configurations": ["1011", "1101"]}


def test_min_json_round_trip(capsys):
    code, out, _ = call(capsys, "min", "11011", "--json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["k"] == 2
    assert [s["plan"]["initial"] for s in obj["segments"]] == ["1101", "1"]
    combined = Plan.from_json(obj["plan"])
    assert replay(combined.initial, combined.moves).peg_count == obj["k"]
    for seg in obj["segments"]:
        plan = Plan.from_json(seg["plan"])
        assert replay(plan.initial, plan.moves).peg_count == plan.final_pegs


def test_solve_text_and_json(capsys):
    assert call(capsys, "solve", "011")[1] == "2L\n"
    code, out, _ = call(capsys, "solve", "1011", "--json")
    plan = Plan.from_json(out)
    assert plan.validate().peg_count == 1
    code, out, err = call(capsys, "solve", "1111")
    assert code == EXIT_OK and out == "" and "unsolvable" in err


def test_batch_stdin(capsys, monkeypatch):
    code, out, _ = call(capsys, "check", stdin="1011\n11\n\n110\n", monkeypatch=monkeypatch)
    assert out.split() == ["solvable", "unsolvable", "solvable"]


def test_oracle(capsys):
    assert call(capsys, "oracle", "11011", "--min")[1] == "2\n"
    assert call(capsys, "oracle", "110011")[1] == "solvable\n"
    code, _, err = call(capsys, "oracle", "1" * 30)
    assert code == EXIT_USAGE and "override" in err
    assert call(capsys, "oracle", "1" * 26, "--min", "--override")[1] == "26\n"


@pytest.mark.parametrize("argv", [
    ("check", "10x1"), ("count", "0"), ("bogus",), (), ("check", "1", "2"), ("solve", ""),
])
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""


def test_bench_reproducible(capsys):
    from pegsol.bench import random_solvable
    import random
    assert random_solvable(500, random.Random(4)) == random_solvable(500, random.Random(4))
    code, out, _ = call(capsys, "bench", "--len", "2000", "--seed", "4", "--runs", "1", "--json")
    obj = json.loads(out)
    assert code == EXIT_OK and obj["seed"] == 4 and obj["length"] > 1000


def test_verify_reports_counts(capsys):
    code, out, _ = call(capsys, "verify", "--maxlen", "4")
    assert code == EXIT_OK
    assert "recognizer: 30 checked, 30 passed, 0 failed" in out
    tallies = run_verify(5)
    # 01111 and its mirror are the first boards the block split overcounts
    assert tallies["minimum"] == [57, 2]
    code, out, _ = call(capsys, "verify", "--maxlen", "5")
    assert code == EXIT_INVARIANT
    assert "minimum: 57 checked, 55 passed, 2 failed" in out

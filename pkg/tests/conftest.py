import itertools

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

_VERDICTS = []


def all_strings(maxlen, minlen=1):
    for n in range(minlen, maxlen + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


def brute_moves(s):
    """Legal hops by testing every (index, direction) pair against the hop rule."""
    found = []
    for i in range(len(s)):
        for d in (-1, 1):
            cells = [i, i + d, i + 2 * d]
            if all(0 <= x < len(s) for x in cells) and s[i] == "1" and s[i + d] == "1" \
                    and s[i + 2 * d] == "0":
                found.append((i, d))
    return found


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    def record(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        _VERDICTS.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in _VERDICTS:
            terminalreporter.write_line(line)

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from twistpoly.setsys import SetSystem, make_set_system  # noqa: E402


@pytest.fixture
def six_system():
    return make_set_system([str(i) for i in range(1, 7)], [["1", "2"], ["3", "4", "5"], ["3", "4", "5", "6"]])


@pytest.fixture
def nonbinary():
    return make_set_system(["1", "2", "3"], [[], ["1", "2"], ["1", "3"], ["2", "3"], ["1", "2", "3"]])


@st.composite
def proper_set_systems(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=min(1 << n, 12)))
    return SetSystem.from_masks([str(i + 1) for i in range(n)], masks)


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request, capsys):
    """Record one acceptance line; shown live and again in the terminal summary."""
    def record(number, ok, detail):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
        request.config.stash.setdefault(_ACCEPTANCE, []).append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

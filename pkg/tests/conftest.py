from importlib import resources

import pytest

from flatsep.automata import Dfa


def fixture_path(name):
    return str(resources.files("flatsep") / "fixtures" / name)


@pytest.fixture
def fx():
    return fixture_path


@pytest.fixture
def even_a():
    # (aa)*: a swaps the two states
    return Dfa.from_transitions(2, ("a",), 0, {0}, {(0, "a"): 1, (1, "a"): 0})


@pytest.fixture
def one_state():
    alpha = ("<", ">", "a", "b")
    return Dfa.from_transitions(1, alpha, 0, {0}, {(0, s): 0 for s in alpha})


@pytest.fixture
def bracket_parity():
    alpha = ("<", ">", "a", "b")
    t = {(q, s): q for q in (0, 1) for s in alpha}
    t[(0, "<")], t[(1, "<")] = 1, 0
    return Dfa.from_transitions(2, alpha, 0, {0}, t)


_LINES = pytest.StashKey()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    lines = request.config.stash.setdefault(_LINES, {})

    def record(number, title, ok, detail=""):
        line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title}"
        if detail:
            line += f" ({detail})"
        lines[number] = line
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])

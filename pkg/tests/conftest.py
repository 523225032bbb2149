import pytest

from medtri.search import SearchConfig, run_search
from medtri.triangle import IntTriangle

SMALLEST_SIDES = (136, 170, 174)
SMALLEST_MEDIANS = (158, 131, 127)


@pytest.fixture
def smallest():
    return IntTriangle(*SMALLEST_SIDES)


@pytest.fixture(scope="session")
def found_1000():
    """Certified integer-median triangles with largest side <= 1000."""
    return run_search(SearchConfig(max_side=1000, use_even_filter=False))


@pytest.fixture(scope="session")
def found_triangles(found_1000):
    return [IntTriangle(*r.sides) for r in found_1000.records]


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per criterion, then assert it."""

    def check(number, ok, detail):
        _ACCEPTANCE_LINES.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return check


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mvbern import ProbabilityTable  # noqa: E402

TABLE_61 = [0.15, 0.21, 0.21, 0.03, 0.21, 0.03, 0.03, 0.13]
TABLE_62 = [0.1, 0.2, 0.1, 0.2, 0.05, 0.15, 0.1, 0.1]


@pytest.fixture
def table61():
    return ProbabilityTable(TABLE_61, n=3)


@pytest.fixture
def table62():
    return ProbabilityTable(TABLE_62, n=3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


ACCEPTANCE_LINES = []


@pytest.fixture
def verdict(request):
    """Record one pass/fail line per acceptance criterion, then assert it."""

    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

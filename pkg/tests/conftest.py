import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from skewenergy.enumeration import enumerate_bicyclic, enumerate_unicyclic  # noqa: E402
from skewenergy.orientations import orientation_class_reps  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def corpus_classes(max_n: int = 8):
    """Every orientation class of every unicyclic and bicyclic graph up to ``max_n``."""
    out = []
    for n in range(3, max_n + 1):
        for g in enumerate_unicyclic(n):
            out.extend(orientation_class_reps(g))
    for n in range(4, max_n + 1):
        for g in enumerate_bicyclic(n):
            out.extend(orientation_class_reps(g))
    return out


@pytest.fixture(scope="session")
def corpus():
    return corpus_classes(8)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

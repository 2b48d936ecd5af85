import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from chromaq.graphs import Graph, bowtie  # noqa: E402
from chromaq.qpoly import QPoly  # noqa: E402
from chromaq.symfunc import ESym  # noqa: E402


def P(*c):
    return QPoly(c)


# the bowtie expansion, written out once
BOWTIE_X = ESym({
    (3, 2): P(0, 0, 1, 2, 1),
    (4, 1): P(0, 1, 3, 4, 3, 1),
    (5,): P(1, 3, 4, 4, 4, 3, 1),
})

CLAW = Graph(4, frozenset({(1, 3), (2, 3), (3, 4)}))
CLAW_X = ESym({(2, 1, 1): P(1), (2, 2): P(-2), (3, 1): P(5), (4,): P(4)})


@pytest.fixture
def bow():
    return bowtie()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance"):
            lines.extend(getattr(mod, "LINES", []))
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(set(lines)):
            terminalreporter.write_line(line)

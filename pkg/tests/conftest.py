import random

import pytest

from graphdot import Graph
from graphdot.graph import complete, cycle, disjoint_union, empty, path, star


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def shuffled(rng: random.Random, g: Graph) -> Graph:
    mapping = list(range(g.n))
    rng.shuffle(mapping)
    return g.relabel(mapping)


@pytest.fixture
def rng():
    return random.Random(20240611)


# small named graphs used across modules
K4 = complete(4)
E4 = empty(4)
P3 = path(3)
K3 = complete(3)
C4 = cycle(4)
C5 = cycle(5)
C6 = cycle(6)
TWO_K2 = disjoint_union(complete(2), complete(2))
K3_K1 = disjoint_union(complete(3), complete(1))
S3 = star(4, 3)
P4 = path(4)


# acceptance verdicts, printed once at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")

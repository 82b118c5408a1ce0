import random
from functools import lru_cache

import pytest

from subcubic_packing.enumeration import enumerate_upto
from subcubic_packing.graph import build_graph

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def graphs_upto(nmax: int):
    return tuple(enumerate_upto(nmax))


def random_graph(rng: random.Random, n: int, p: float = 0.3, max_degree: int | None = None):
    edges = []
    deg = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p and (max_degree is None or (deg[u] < max_degree and deg[v] < max_degree)):
                edges.append((u, v))
                deg[u] += 1
                deg[v] += 1
    return build_graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

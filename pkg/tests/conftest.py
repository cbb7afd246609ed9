"""Shared graph builders and corpus generators for the test suite."""

import itertools
import random
import sys

import pytest

from quasiclique.graph import Graph


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # echo the acceptance criterion verdicts after the run; test-time prints
    # are hidden by output capture unless -s is given
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT_LINES", ()) if mod else ()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def complete(n: int) -> Graph:
    return Graph.from_edges(itertools.combinations(range(n), 2), n=n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n=n)


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def k4_minus_edge() -> Graph:
    # K4 on {0,1,2,3} without the (2,3) edge
    edges = [e for e in itertools.combinations(range(4), 2) if e != (2, 3)]
    return Graph.from_edges(edges, n=4)


def er_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(edges, n=n)


def disjoint_union(*parts: Graph) -> Graph:
    edges = []
    base = 0
    total = 0
    for g in parts:
        for u in range(g.n):
            for w in g.neighbors_of(u):
                if u < int(w):
                    edges.append((base + u, base + int(w)))
        base += g.n
        total += g.n
    return Graph.from_edges(edges, n=total)


def er_corpus(count: int, seed: int, n_lo: int = 1, n_hi: int = 16) -> list[Graph]:
    """Random Erdos-Renyi instances covering n in [n_lo, n_hi], p in {0.1..0.9}."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = n_lo + i % (n_hi - n_lo + 1)
        p = 0.1 * (1 + (i // (n_hi - n_lo + 1)) % 9)
        out.append(er_graph(n, p, rng))
    return out


# 8 vertices; the largest 4-plex has 7 vertices and the largest 3-plex 6,
# so the basic iteration at gamma=0.55 walks s: 8 -> 7 -> 6 and stops.
TWO_STEP_EDGES = [
    (0, 1), (0, 5), (0, 6), (0, 7), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
    (2, 5), (2, 7), (3, 5), (3, 6), (3, 7), (4, 5), (4, 7), (5, 6),
]


def two_step_instance() -> Graph:
    return Graph.from_edges(TWO_STEP_EDGES, n=8)


def k4_plus_triangle() -> Graph:
    """Disjoint K4 and K3: the midpoint-probe walkthrough instance."""
    return disjoint_union(complete(4), complete(3))


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    return er_corpus(120, seed=2024)

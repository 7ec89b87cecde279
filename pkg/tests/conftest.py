import os
import random
from fractions import Fraction
from itertools import combinations

import hypothesis
import networkx as nx
import pytest
from hypothesis import strategies as st

from mrce.graph import RootedGraph

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def to_nx(g: RootedGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def brute_force_best(g: RootedGraph):
    """Max ratio over all vertex subsets, connectivity judged by networkx.

    Shares no code with the package's enumeration.  Returns (ratio, size,
    sorted tuple) of the best set under the package's tie rule.
    """
    G = to_nx(g)
    others = [v for v in range(g.n) if v != g.root]
    best = None
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            s = (g.root,) + extra
            if not nx.is_connected(G.subgraph(s)):
                continue
            closed = set(s).union(*(G[v] for v in s))
            key = (-Fraction(len(closed), len(s)), len(s), tuple(sorted(s)))
            if best is None or key < best:
                best = key
    return -best[0], best[1], best[2]


def path_graph(n: int, root: int = 0) -> RootedGraph:
    return RootedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], root)


def star_graph(m: int, root: int = 0) -> RootedGraph:
    return RootedGraph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)], root)


def complete_graph(n: int, root: int = 0) -> RootedGraph:
    return RootedGraph.from_edges(n, list(combinations(range(n), 2)), root)


def cycle_graph(n: int, root: int = 0) -> RootedGraph:
    return RootedGraph.from_edges(n, [(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i)
                                      for i in range(n)], root)


def random_graph(rng: random.Random, n: int, p: float) -> RootedGraph:
    """Connected G(n, p) sample with a random root, built with networkx."""
    while True:
        G = nx.gnp_random_graph(n, p, seed=rng.randrange(2**31))
        if nx.is_connected(G):
            return RootedGraph.from_edges(n, list(G.edges()), rng.randrange(n))


@st.composite
def rooted_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**31 - 1))
    p = draw(st.floats(0.1, 0.9))
    return random_graph(random.Random(seed), n, p)


@st.composite
def graph_and_feasible_set(draw, max_n=9):
    """A rooted graph plus a connected vertex set containing the root."""
    g = draw(rooted_graphs(max_n=max_n))
    rng = random.Random(draw(st.integers(0, 2**31 - 1)))
    return g, grow_random_set(g, rng)


def grow_random_set(g: RootedGraph, rng: random.Random, size=None) -> tuple[int, ...]:
    target = size if size is not None else rng.randint(1, g.n)
    s = {g.root}
    while len(s) < target:
        frontier = sorted({w for v in s for w in g.adjacency[v]} - s)
        if not frontier:
            break
        s.add(rng.choice(frontier))
    return tuple(sorted(s))


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    """Record a one-line verdict for an acceptance criterion."""
    def _report(label: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

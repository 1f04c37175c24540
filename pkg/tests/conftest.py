import itertools
import sys

import networkx as nx
import numpy as np
import pytest

from dicolor.digraph import Digraph, vertices


def to_nx(d, mask=None):
    g = nx.DiGraph()
    keep = range(d.n) if mask is None else vertices(mask)
    g.add_nodes_from(keep)
    keep = set(keep)
    g.add_edges_from((u, v) for u, v in d.arcs() if u in keep and v in keep)
    return g


def nx_acyclic(d, mask):
    return nx.is_directed_acyclic_graph(to_nx(d, mask))


def brute_alpha(d):
    """Largest acyclic vertex subset, checked with networkx."""
    for size in range(d.n, -1, -1):
        for s in itertools.combinations(range(d.n), size):
            if nx.is_directed_acyclic_graph(to_nx(d).subgraph(s)):
                return size
    return 0


def brute_chi(d):
    g = to_nx(d)
    for k in range(1, d.n + 1):
        for colors in itertools.product(range(k), repeat=d.n):
            if all(nx.is_directed_acyclic_graph(
                    g.subgraph([v for v in range(d.n) if colors[v] == c])) for c in range(k)):
                return k
    return 0


def all_digraphs(n):
    """Every labelled strict digraph on ``n`` vertices."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for bits in range(1 << len(pairs)):
        yield Digraph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


C3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
DIGON = Digraph(2, [(0, 1), (1, 0)])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)

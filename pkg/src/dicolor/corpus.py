"""Reproducible collections of small test digraphs."""

from __future__ import annotations

import numpy as np

from .digraph import Digraph
from .families import (
    d_tournament, directed_cycle, random_digraph, random_orientation,
    random_tournament, s_tournament, transitive_tournament,
)


def named_digraphs() -> list[tuple[str, Digraph]]:
    out = [("empty1", Digraph(1)), ("empty4", Digraph(4))]
    out += [(f"C{n}", directed_cycle(n)) for n in range(2, 8)]
    out += [(f"T{n}", transitive_tournament(n)) for n in range(1, 8)]
    out += [(f"S{n}", s_tournament(n)) for n in range(1, 9)]
    out += [(f"D{n}", d_tournament(n)) for n in range(3, 9)]
    out += [
        ("digon+isolated", Digraph(3, [(0, 1), (1, 0)])),
        ("bidirected_K3", Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])),
        ("bidirected_K4", Digraph(4, [(u, v) for u in range(4) for v in range(4) if u != v])),
        ("two_triangles", Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])),
        ("bowtie", Digraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])),
    ]
    return out


def random_corpus(count: int, n_max: int = 9, seed: int = 0,
                  n_min: int = 1) -> list[tuple[str, Digraph]]:
    """Seeded mix of random digraphs (with digons), random orientations and
    random tournaments with ``n_min <= n <= n_max``."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        kind = i % 3
        if kind == 0:
            p = float(rng.choice([0.1, 0.2, 0.35, 0.5]))
            out.append((f"rand{i}_n{n}_p{p}", random_digraph(n, p, rng)))
        elif kind == 1:
            p = float(rng.choice([0.3, 0.5, 0.8]))
            out.append((f"orient{i}_n{n}_p{p}", random_orientation(n, p, rng)))
        else:
            out.append((f"tour{i}_n{n}", random_tournament(n, rng)))
    return out


def standard_corpus(seed: int = 0, count: int = 200, n_max: int = 9):
    return named_digraphs() + random_corpus(count, n_max, seed)

"""Named digraph families, random generators and tournament enumeration.

Vertex ``v_i`` of the 1-based textbook labelling is vertex ``i - 1`` here.
"""

from __future__ import annotations

import itertools
import math
import warnings
from typing import Iterator

import numpy as np

from .digraph import Digraph, DigraphError, CapacityError, is_acyclic, mask_of
from .errors import NotATournamentError

TOURNAMENT_ENUM_LIMIT = 6
ISOMORPHISM_LIMIT = 8
KNN_BUDGET = 10**6


def _rng(rng):
    return np.random.default_rng(rng)


def _need_positive(n):
    if n < 1:
        raise DigraphError("need at least one vertex")


def transitive_tournament(n: int) -> Digraph:
    """Vertex ``i`` beats every ``j > i``."""
    _need_positive(n)
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def s_tournament(n: int) -> Digraph:
    """The tournament ``S_n``.

    Start from the acyclic tournament where each vertex beats all lower
    vertices, then reverse the Hamiltonian path ``n-1 -> n-2 -> ... -> 0``.
    """
    _need_positive(n)
    arcs = [(i, j) for i in range(n) for j in range(i - 1)]
    arcs += [(i, i + 1) for i in range(n - 1)]
    return Digraph(n, arcs)


def d_tournament(n: int) -> Digraph:
    """The tournament ``D_n``: transitive except that ``n-1`` beats ``0``.

    For ``n <= 2`` there is no room for the reversed arc and the transitive
    tournament is returned with a warning.
    """
    _need_positive(n)
    if n <= 2:
        warnings.warn(f"D_{n} is degenerate; returning the transitive tournament",
                      stacklevel=2)
        return transitive_tournament(n)
    arcs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, n - 1)]
    arcs.append((n - 1, 0))
    return Digraph(n, arcs)


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise DigraphError("a directed cycle needs at least 2 vertices")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def random_tournament(n: int, rng=None) -> Digraph:
    """Each pair ``i < j`` is oriented by an independent fair coin."""
    _need_positive(n)
    rng = _rng(rng)
    pairs = list(itertools.combinations(range(n), 2))
    coins = rng.integers(0, 2, size=len(pairs))
    return Digraph(n, [(i, j) if c else (j, i) for (i, j), c in zip(pairs, coins)])


def random_digraph(n: int, p: float, rng=None) -> Digraph:
    """Each ordered pair carries an arc independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise DigraphError(f"probability {p} outside [0, 1]")
    rng = _rng(rng)
    hits = rng.random((n, n)) < p
    return Digraph(n, [(u, v) for u in range(n) for v in range(n)
                       if u != v and hits[u, v]])


def random_orientation(n: int, p: float, rng=None) -> Digraph:
    """Random digon-free digraph: each pair is an edge w.p. ``p``, oriented by a coin."""
    if not 0.0 <= p <= 1.0:
        raise DigraphError(f"probability {p} outside [0, 1]")
    rng = _rng(rng)
    arcs = []
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < p:
            arcs.append((i, j) if rng.random() < 0.5 else (j, i))
    return Digraph(n, arcs)


def layered_digraph(n: int, k: int, p: float, rng=None) -> Digraph:
    """Random digraph whose every directed cycle has length divisible by ``k``.

    Vertices get a random level in ``0..k-1``; arcs only go from level ``i``
    to level ``i + 1 (mod k)``, so each cycle winds around the levels.
    """
    if k < 2:
        raise DigraphError("need k >= 2")
    rng = _rng(rng)
    level = rng.integers(0, k, size=n)
    hits = rng.random((n, n)) < p
    return Digraph(n, [(u, v) for u in range(n) for v in range(n)
                       if u != v and hits[u, v] and level[v] == (level[u] + 1) % k])


# -- K_{n,n} orientations ------------------------------------------------------

def _knn_digraph(n, bits):
    """Left side ``0..n-1``, right side ``n..2n-1``; bit ``i*n+j`` set means i -> n+j."""
    arcs = []
    for i in range(n):
        for j in range(n):
            arcs.append((i, n + j) if bits[i * n + j] else (n + j, i))
    return Digraph(2 * n, arcs)


def knn_cycle_property(d: Digraph, n: int, t: int, left=None, right=None) -> bool:
    """Every ``t``-subset of ``left`` together with every ``t``-subset of
    ``right`` induces a subdigraph containing a directed cycle."""
    left = range(n) if left is None else left
    right = range(n, 2 * n) if right is None else right
    rmasks = [mask_of(J) for J in itertools.combinations(right, t)]
    for I in itertools.combinations(left, t):
        im = mask_of(I)
        for jm in rmasks:
            if is_acyclic(d, im | jm):
                return False
    return True


def search_knn_orientation(n: int, t: int, attempts: int, rng=None,
                           budget: int = KNN_BUDGET) -> Digraph | None:
    """Sample random orientations of ``K_{n,n}`` until one has a directed cycle
    in each of its ``K_{t,t}`` subdigraphs.

    Every candidate is checked exhaustively over all ``C(n,t)**2`` subset
    pairs. Returns ``None`` once ``attempts`` samples have failed.
    """
    if not 1 <= t <= n:
        raise DigraphError(f"need 1 <= t <= n, got t={t}, n={n}")
    pairs = math.comb(n, t) ** 2
    if pairs > budget:
        raise CapacityError("C(n,t)^2", pairs, budget)
    rng = _rng(rng)
    for _ in range(attempts):
        d = _knn_digraph(n, rng.integers(0, 2, size=n * n))
        if knn_cycle_property(d, n, t):
            return d
    return None


def oriented_multipartite(k: int, part_size: int, t: int, rng=None,
                          attempts: int = 1000) -> Digraph | None:
    """Orient the complete ``k``-partite graph block by block.

    Part ``i`` is ``i*part_size .. (i+1)*part_size - 1``; every pair of parts
    gets an orientation from :func:`search_knn_orientation`. Returns ``None``
    if some block search fails.
    """
    rng = _rng(rng)
    s = part_size
    arcs = []
    for a, b in itertools.combinations(range(k), 2):
        block = search_knn_orientation(s, t, attempts, rng)
        if block is None:
            return None
        for u, v in block.arcs():
            u = a * s + u if u < s else b * s + (u - s)
            v = a * s + v if v < s else b * s + (v - s)
            arcs.append((u, v))
    return Digraph(k * s, arcs)


# -- tournaments -------------------------------------------------------------

def tournament_from_code(n: int, code: int) -> Digraph:
    """Decode orientation bits; bit ``b`` covers the ``b``-th pair ``(i, j)``,
    ``i < j``, in lexicographic order and means ``i -> j`` when set."""
    arcs = []
    for b, (i, j) in enumerate(itertools.combinations(range(n), 2)):
        arcs.append((i, j) if code >> b & 1 else (j, i))
    return Digraph(n, arcs)


def tournament_code(d: Digraph) -> int:
    if not d.is_tournament():
        raise NotATournamentError("not a tournament")
    code = 0
    for b, (i, j) in enumerate(itertools.combinations(range(d.n), 2)):
        if d.has_arc(i, j):
            code |= 1 << b
    return code


def enumerate_tournaments(n: int, limit: int = TOURNAMENT_ENUM_LIMIT,
                          codes: range | None = None) -> Iterator[Digraph]:
    """All ``2**C(n,2)`` labelled tournaments on ``n`` vertices in code order.

    ``codes`` restricts the enumeration to a sub-range (for sharding).
    """
    _need_positive(n)
    if n > limit:
        raise CapacityError("n", n, limit)
    total = 1 << (n * (n - 1) // 2)
    for code in codes if codes is not None else range(total):
        yield tournament_from_code(n, code)


def find_isomorphism(a: Digraph, b: Digraph, pin=None) -> list[int] | None:
    """A permutation ``p`` with ``u -> v`` in ``a`` iff ``p[u] -> p[v]`` in ``b``.

    ``pin`` maps some vertices of ``a`` to required images in ``b``.
    Backtracking with (out-degree, in-degree) pruning; fine for small ``n``.
    """
    n = a.n
    if b.n != n:
        return None
    key_a = [(a.out_adj[v].bit_count(), a.in_adj[v].bit_count()) for v in range(n)]
    key_b = [(b.out_adj[v].bit_count(), b.in_adj[v].bit_count()) for v in range(n)]
    if sorted(key_a) != sorted(key_b):
        return None
    pin = dict(pin or {})
    for u, w in pin.items():
        if key_a[u] != key_b[w]:
            return None
    order = sorted(range(n), key=lambda v: (v not in pin, v))
    image = [-1] * n
    used = 0

    def extend(i):
        nonlocal used
        if i == n:
            return True
        u = order[i]
        choices = [pin[u]] if u in pin else range(n)
        for w in choices:
            if used >> w & 1 or key_a[u] != key_b[w]:
                continue
            if any(a.has_arc(u, x) != b.has_arc(w, image[x])
                   or a.has_arc(x, u) != b.has_arc(image[x], w)
                   for x in order[:i]):
                continue
            image[u] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            image[u] = -1
        return False

    return list(image) if extend(0) else None


def tournaments_isomorphic(a: Digraph, b: Digraph,
                           limit: int = ISOMORPHISM_LIMIT) -> bool:
    if not (a.is_tournament() and b.is_tournament()):
        raise NotATournamentError("both inputs must be tournaments")
    if a.n != b.n:
        raise DigraphError("tournaments of different order")
    if a.n > limit:
        raise CapacityError("n", a.n, limit)
    return find_isomorphism(a, b) is not None


def count_directed_triangles(d: Digraph) -> int:
    """Directed 3-cycles, counted by brute force over vertex triples."""
    count = 0
    for x, y, z in itertools.combinations(range(d.n), 3):
        if d.has_arc(x, y) and d.has_arc(y, z) and d.has_arc(z, x):
            count += 1
        if d.has_arc(x, z) and d.has_arc(z, y) and d.has_arc(y, x):
            count += 1
    return count

"""Acyclic colourings: exact chromatic number and three constructive colourings.

A colouring is proper when every colour class induces an acyclic subdigraph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digraph import (
    TABLE_LIMIT, Digraph, acyclic_subset_table, find_cycle, girth, is_acyclic,
    lowest, strongly_connected_components, vertices,
)
from .errors import (
    CapacityError, LocalSearchError, PartColoringError, PreconditionError,
)

TWO_COLOR_LIMIT = 24


@dataclass(frozen=True)
class Coloring:
    """Colour index per vertex; indices are compacted to ``0..k-1``."""

    colors: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels) -> Coloring:
        remap = {}
        return cls(tuple(remap.setdefault(c, len(remap)) for c in labels))

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return masks


@dataclass(frozen=True)
class Partition:
    part: tuple[int, ...]
    t: int

    def masks(self) -> list[int]:
        out = [0] * self.t
        for v, p in enumerate(self.part):
            out[p] |= 1 << v
        return out


def _color_classes(colors) -> dict[int, int]:
    classes: dict[int, int] = {}
    for v, c in enumerate(colors):
        classes[c] = classes.get(c, 0) | 1 << v
    return classes


def is_proper_coloring(d: Digraph, coloring) -> bool:
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colors) != d.n:
        raise ValueError(f"expected {d.n} colours, got {len(colors)}")
    return all(is_acyclic(d, m) for m in _color_classes(colors).values())


def monochromatic_cycle(d: Digraph, coloring) -> list[int] | None:
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    for m in _color_classes(colors).values():
        c = find_cycle(d, m)
        if c is not None:
            return c
    return None


# -- exact -------------------------------------------------------------------

def exact_chromatic_number(d: Digraph, limit: int = TABLE_LIMIT) -> int:
    """Least ``j`` such that ``j`` acyclic sets cover V(D).

    Counts covers by inclusion-exclusion, ``sum_X (-1)^(n-|X|) a(X)^j`` where
    ``a(X)`` is the number of acyclic subsets of ``X``; a cover by ``j`` sets
    exists iff a partition into at most ``j`` acyclic blocks does.
    """
    n = d.n
    if n == 0:
        return 0
    if n > limit:
        raise CapacityError("n", n, limit)
    a = acyclic_subset_table(d, limit).astype(np.int64)
    for b in range(n):   # zeta transform over subsets
        bit = 1 << b
        idx = np.flatnonzero(np.arange(1 << n) & bit)
        a[idx] += a[idx ^ bit]
    sign = np.where((n - np.bitwise_count(np.arange(1 << n))) % 2 == 0, 1, -1)
    keys, counts = np.unique(np.stack([a, sign]), axis=1, return_counts=True)
    for j in range(1, n + 1):
        total = sum(int(s) * int(c) * int(v) ** j
                    for (v, s), c in zip(keys.T, counts))
        if total > 0:
            return j
    raise AssertionError("singletons always cover")


def exact_coloring(d: Digraph, limit: int = 14) -> Coloring:
    """An optimal colouring, read back from the block-partition table."""
    from .polynomial import _partition_counts

    if d.n == 0:
        return Coloring(())
    f = _partition_counts(d, limit=limit)
    acyc = acyclic_subset_table(d, max(limit, d.n))
    colors = [0] * d.n
    S = d.full
    j = int(np.flatnonzero(f[S])[0])
    color = 0
    while S:
        low = S & -S
        rest = S ^ low
        sub = rest
        while True:
            block = sub | low
            if acyc[block] and f[S ^ block, j - 1] > 0:
                break
            sub = (sub - 1) & rest
        for v in vertices(block):
            colors[v] = color
        color += 1
        S ^= block
        j -= 1
    return Coloring(tuple(colors))


# -- depth mod k -------------------------------------------------------------

def dfs_mod_k_coloring(d: Digraph, k: int) -> Coloring:
    """Colour each vertex by its depth, modulo ``k``, in a DFS tree of its
    strongly connected component rooted at the component's lowest vertex.

    Proper whenever ``D`` has no directed cycle of length 1 mod ``k``; if the
    result is improper a :class:`PreconditionError` carries a monochromatic cycle.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    depth = [0] * d.n
    for comp in strongly_connected_components(d):
        root = lowest(comp)
        seen = 1 << root
        stack = [(root, iter(vertices(d.out_adj[root] & comp)))]
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
            elif not seen >> w & 1:
                seen |= 1 << w
                depth[w] = depth[v] + 1
                stack.append((w, iter(vertices(d.out_adj[w] & comp))))
    c = Coloring(tuple(x % k for x in depth))
    witness = monochromatic_cycle(d, c)
    if witness is not None:
        raise PreconditionError(
            f"monochromatic cycle {witness} of length {len(witness)}; "
            f"the digraph has a cycle of length 1 mod {k}", witness)
    return c


# -- greedy by girth ---------------------------------------------------------

def girth_color_bound(d: Digraph) -> int:
    """``floor((n-1)/(g-1)) + 1``, or 1 for an acyclic digraph."""
    g = girth(d)
    if g == math.inf:
        return 1
    return (d.n - 1) // (g - 1) + 1


def greedy_girth_coloring(d: Digraph) -> Coloring:
    """Give each vertex, in index order, the least colour keeping its class acyclic.

    A colour is blocked only by a cycle through ``v`` using at least ``g-1``
    earlier vertices of that colour, so at most ``floor((n-1)/(g-1)) + 1``
    colours are used.
    """
    classes: list[int] = []
    colors = []
    for v in range(d.n):
        for c, m in enumerate(classes):
            if is_acyclic(d, m | 1 << v):
                classes[c] |= 1 << v
                colors.append(c)
                break
        else:
            classes.append(1 << v)
            colors.append(len(classes) - 1)
    return Coloring(tuple(colors))


# -- local-search partition ----------------------------------------------------

def _arcs_between(d, v, part_mask):
    return (d.out_adj[v] & part_mask).bit_count() + (d.in_adj[v] & part_mask).bit_count()


def local_search_partition(d: Digraph, t: int) -> Partition:
    """Move single vertices between ``t`` parts while the number of arcs
    joining different parts strictly grows.

    Starts with vertex ``i`` in part ``i mod t``; each round applies the first
    improving move in (vertex, target part) order.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    part = [v % t for v in range(d.n)]
    masks = [0] * t
    for v, p in enumerate(part):
        masks[p] |= 1 << v
    improved = True
    while improved:
        improved = False
        for v in range(d.n):
            own = _arcs_between(d, v, masks[part[v]])
            for q in range(t):
                if q != part[v] and _arcs_between(d, v, masks[q]) < own:
                    masks[part[v]] &= ~(1 << v)
                    masks[q] |= 1 << v
                    part[v] = q
                    improved = True
                    break
            if improved:
                break
    return Partition(tuple(part), t)


def cut_size(d: Digraph, partition: Partition) -> int:
    return sum(1 for u, v in d.arcs() if partition.part[u] != partition.part[v])


def two_color_exact(d: Digraph, s: int, limit: int = TWO_COLOR_LIMIT):
    """Acyclic 2-colouring of the subdigraph induced on ``s`` by backtracking.

    Returns the colours of ``vertices(s)`` in increasing vertex order, or
    ``None`` if no such colouring exists.
    """
    vs = vertices(s)
    if len(vs) > limit:
        raise CapacityError("|s|", len(vs), limit)
    colors = [0] * len(vs)
    classes = [0, 0]

    def place(i):
        if i == len(vs):
            return True
        bit = 1 << vs[i]
        for c in ((0,) if i == 0 else (0, 1)):
            if is_acyclic(d, classes[c] | bit):
                classes[c] |= bit
                colors[i] = c
                if place(i + 1):
                    return True
                classes[c] &= ~bit
        return False

    return tuple(colors) if place(0) else None


def partition_color_bound(d: Digraph) -> int:
    k = max_degree(d)
    return 4 * k // 5 + 2


def max_degree(d: Digraph) -> int:
    """``max(Delta+, Delta-)``."""
    return max((max(d.out_adj[v].bit_count(), d.in_adj[v].bit_count())
                for v in range(d.n)), default=0)


def partition_coloring(d: Digraph, limit: int = TWO_COLOR_LIMIT) -> Coloring:
    """Split into ``t = ceil((2k+1)/5)`` parts by local search, then 2-colour
    each part exactly, for at most ``2t <= floor(4k/5) + 2`` colours.

    ``k = max(Delta+, Delta-)``. At the local optimum every vertex has at most
    4 neighbours in its own part.
    """
    k = max_degree(d)
    t = -(-(2 * k + 1) // 5)
    partition = local_search_partition(d, t)
    masks = partition.masks()
    for v in range(d.n):
        inside = d.neighbours(v) & masks[partition.part[v]]
        if inside.bit_count() > 4:
            raise LocalSearchError(
                f"vertex {v} has {inside.bit_count()} neighbours in its own part")
    labels = [0] * d.n
    for p, m in enumerate(masks):
        if not m:
            continue
        two = two_color_exact(d, m, limit)
        if two is None:
            raise PartColoringError(m, p)
        for v, c in zip(vertices(m), two):
            labels[v] = 2 * p + c
    return Coloring.from_labels(labels)

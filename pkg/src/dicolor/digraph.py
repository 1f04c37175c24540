"""Strict loopless digraphs on at most 63 vertices, stored as bitmasks.

Vertex sets are plain ``int`` masks throughout the package: bit ``v`` is
set iff vertex ``v`` belongs to the set.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import CapacityError, DigraphError, EdgeListError

MAX_VERTICES = 63
TABLE_LIMIT = 20

INFINITE = math.inf


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << int(v)
    return m


def vertices(mask: int) -> list[int]:
    """Members of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class DegreeTriple(NamedTuple):
    d_out: int
    d_in: int
    d_underlying: int


class Digraph:
    """Immutable strict loopless digraph.

    ``out_adj[u]`` and ``in_adj[v]`` are bitmasks of out- and in-neighbours.
    Digons are allowed.
    """

    __slots__ = ("n", "out_adj", "in_adj")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError("n", n, MAX_VERTICES)
        out = [0] * n
        for u, v in arcs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            out[u] |= 1 << v
        self._set(n, out)

    def _set(self, n, out):
        inn = [0] * n
        for u in range(n):
            m = out[u]
            while m:
                low = m & -m
                inn[low.bit_length() - 1] |= 1 << u
                m ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out_adj", tuple(out))
        object.__setattr__(self, "in_adj", tuple(inn))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @classmethod
    def from_out_adjacency(cls, out_adj: Iterable[int]) -> Digraph:
        out = [int(m) for m in out_adj]
        n = len(out)
        if n > MAX_VERTICES:
            raise CapacityError("n", n, MAX_VERTICES)
        full = (1 << n) - 1
        for u, m in enumerate(out):
            if m & ~full:
                raise DigraphError(f"vertex {u} has out-neighbours outside range")
            if m >> u & 1:
                raise DigraphError(f"loop at vertex {u}")
        d = cls.__new__(cls)
        d._set(n, out)
        return d

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in vertices(self.out_adj[u])]

    @property
    def num_arcs(self) -> int:
        return sum(m.bit_count() for m in self.out_adj)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def neighbours(self, v: int) -> int:
        return self.out_adj[v] | self.in_adj[v]

    def digons(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n)
                for v in vertices(self.out_adj[u] & self.in_adj[u]) if u < v]

    def is_digon_free(self) -> bool:
        return all(self.out_adj[u] & self.in_adj[u] == 0 for u in range(self.n))

    def is_tournament(self) -> bool:
        for u in range(self.n):
            others = self.full & ~(1 << u)
            if self.out_adj[u] & self.in_adj[u] or self.neighbours(u) != others:
                return False
        return True

    def isolated(self) -> list[int]:
        return [v for v in range(self.n) if self.neighbours(v) == 0]

    def induced(self, mask: int) -> tuple[Digraph, list[int]]:
        """Induced subdigraph on ``mask``, relabelled 0..|mask|-1.

        Returns the subdigraph and the list mapping new labels to old ones.
        """
        keep = vertices(mask)
        index = {v: i for i, v in enumerate(keep)}
        arcs = [(index[u], index[v]) for u in keep
                for v in vertices(self.out_adj[u] & mask)]
        return Digraph(len(keep), arcs), keep

    def relabel(self, perm: Iterable[int]) -> Digraph:
        """Digraph with arc ``perm[u] -> perm[v]`` for each arc ``u -> v``."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise DigraphError("relabel needs a permutation of 0..n-1")
        return Digraph(self.n, [(perm[u], perm[v]) for u, v in self.arcs()])

    def without_arc(self, u: int, v: int) -> Digraph:
        if not self.has_arc(u, v):
            raise DigraphError(f"no arc {u} -> {v}")
        out = list(self.out_adj)
        out[u] &= ~(1 << v)
        return Digraph.from_out_adjacency(out)

    def reverse(self) -> Digraph:
        return Digraph.from_out_adjacency(self.in_adj)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self):
        return hash((self.n, self.out_adj))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


# -- serialization -----------------------------------------------------------

def parse_edge_list(text: str) -> Digraph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` arcs.

    Lines starting with ``#`` and blank lines are skipped.
    """
    header = None
    n = m = 0
    seen = set()
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(lineno, "negative count in header")
            if a > MAX_VERTICES:
                raise EdgeListError(lineno, f"n={a} exceeds {MAX_VERTICES}")
            header, n, m = lineno, a, b
            continue
        if len(arcs) == m:
            raise EdgeListError(lineno, f"more than the declared {m} arcs")
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListError(lineno, f"vertex index out of range 0..{n - 1}")
        if a == b:
            raise EdgeListError(lineno, f"loop at vertex {a}")
        if (a, b) in seen:
            raise EdgeListError(lineno, f"duplicate arc {a} -> {b}")
        seen.add((a, b))
        arcs.append((a, b))
    if header is None:
        raise EdgeListError(0, "missing 'n m' header")
    if len(arcs) != m:
        raise EdgeListError(lineno if text else 0,
                            f"declared {m} arcs, found {len(arcs)}")
    return Digraph(n, arcs)


def to_edge_list(d: Digraph) -> str:
    arcs = d.arcs()
    lines = [f"{d.n} {len(arcs)}"] + [f"{u} {v}" for u, v in arcs]
    return "\n".join(lines) + "\n"


def to_dot(d: Digraph, colors=None, name: str = "D") -> str:
    """DOT text; ``colors`` (one int per vertex) adds a ``color`` attribute."""
    lines = [f"digraph {name} {{"]
    for v in range(d.n):
        if colors is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{v}:{colors[v]}", colorscheme=set312, '
                         f"style=filled, fillcolor={colors[v] % 12 + 1}];")
    lines += [f"  {u} -> {v};" for u, v in d.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- structure ---------------------------------------------------------------

def is_acyclic(d: Digraph, s: int) -> bool:
    """True iff the subdigraph induced on mask ``s`` has no directed cycle."""
    if s & ~d.full:
        raise DigraphError("vertex set has bits outside 0..n-1")
    inn = d.in_adj
    changed = True
    while s and changed:
        changed = False
        m = s
        while m:
            low = m & -m
            m ^= low
            if inn[low.bit_length() - 1] & s == 0:
                s ^= low
                changed = True
    return s == 0


def acyclic_subset_table(d: Digraph, limit: int = TABLE_LIMIT) -> np.ndarray:
    """Boolean array over all ``2**n`` masks: entry ``s`` is ``is_acyclic(d, s)``.

    A set is acyclic iff it has a vertex with no in-neighbour inside it whose
    removal leaves an acyclic set; filled one popcount layer at a time.
    """
    n = d.n
    if n > limit:
        raise CapacityError("n", n, limit)
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.bitwise_count(masks)
    table = np.zeros(1 << n, dtype=bool)
    table[0] = True
    for r in range(1, n + 1):
        layer = masks[pc == r]
        ok = np.zeros(layer.shape, dtype=bool)
        for v in range(n):
            bit = 1 << v
            src = ((layer & bit) != 0) & ((layer & d.in_adj[v]) == 0)
            ok[src] |= table[layer[src] ^ bit]
        table[layer] = ok
    return table


def strongly_connected_components(d: Digraph) -> list[int]:
    """Tarjan's algorithm; components come out in reverse topological order."""
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[int] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, vertices(d.out_adj[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, succ = work[-1]
            if succ:
                w = succ.pop(0)
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, vertices(d.out_adj[w])))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = 0
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp |= 1 << w
                    if w == v:
                        break
                comps.append(comp)
    return comps


def is_strongly_connected(d: Digraph) -> bool:
    return d.n > 0 and len(strongly_connected_components(d)) == 1


def _shortest_cycle_through(d: Digraph, v: int, within: int) -> list[int] | None:
    """Shortest directed cycle through ``v`` inside ``within``, as a vertex list."""
    parent = {v: None}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for w in vertices(d.out_adj[u] & within):
                if w == v:
                    path = [u]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    return None


def shortest_cycle(d: Digraph, within: int | None = None) -> list[int] | None:
    """A shortest directed cycle inside ``within`` (default: everything)."""
    within = d.full if within is None else within
    best = None
    for v in vertices(within):
        c = _shortest_cycle_through(d, v, within)
        if c is not None and (best is None or len(c) < len(best)):
            best = c
            if len(best) == 2:
                break
    return best


def girth(d: Digraph):
    """Length of a shortest directed cycle, or ``INFINITE`` if there is none."""
    best = INFINITE
    full = d.full
    for v in range(d.n):
        # BFS layers from v's out-neighbours until v is reached again
        seen = 1 << v
        frontier = d.out_adj[v]
        step = 1
        while frontier and step < best:
            if frontier >> v & 1:
                best = step
                break
            seen |= frontier
            nxt = 0
            for u in vertices(frontier):
                nxt |= d.out_adj[u]
            frontier = nxt & (full & ~seen | (1 << v))
            step += 1
    return best


def _is_single_cycle(d: Digraph, s: int) -> bool:
    start = lowest(s)
    v, steps = start, 0
    while True:
        v = lowest(d.out_adj[v] & s)
        steps += 1
        if v == start:
            return steps == s.bit_count()


def _induced_cycles_by_subsets(d: Digraph) -> list[int]:
    n = d.n
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.bitwise_count(masks) >= 2
    for v in range(n):
        has = (masks >> v & 1).astype(bool)
        deg_ok = ((np.bitwise_count(masks & d.out_adj[v]) == 1)
                  & (np.bitwise_count(masks & d.in_adj[v]) == 1))
        ok &= ~has | deg_ok
    return [int(s) for s in masks[ok] if _is_single_cycle(d, int(s))]


def _induced_cycles_by_paths(d: Digraph) -> list[int]:
    """Chordless-path extension rooted at each cycle's lowest vertex."""
    found = []
    out, inn = d.out_adj, d.in_adj
    for s in range(d.n):
        higher = d.full & ~((1 << (s + 1)) - 1)
        stack = [(1 << s, s)]
        while stack:
            path, last = stack.pop()
            not_root = path & ~(1 << s)
            not_last = path & ~(1 << last)
            for w in vertices(out[last] & higher & ~path):
                if inn[w] & not_last or out[w] & not_root:
                    continue
                if out[w] >> s & 1:
                    found.append(path | 1 << w)
                else:
                    stack.append((path | 1 << w, w))
    return sorted(found)


def enumerate_induced_cycles(d: Digraph, method: str = "auto") -> list[int]:
    """Vertex masks of all induced directed cycles, sorted by mask value.

    ``method`` is ``"subsets"`` (all 2**n masks), ``"paths"`` (chordless path
    extension) or ``"auto"`` (subsets up to ``TABLE_LIMIT`` vertices).
    """
    if method == "auto":
        method = "subsets" if d.n <= TABLE_LIMIT else "paths"
    if method == "subsets":
        if d.n > TABLE_LIMIT:
            raise CapacityError("n", d.n, TABLE_LIMIT)
        return _induced_cycles_by_subsets(d)
    if method == "paths":
        return _induced_cycles_by_paths(d)
    raise ValueError(f"unknown method {method!r}")


def count_cycles_of_length(d: Digraph, length: int) -> int:
    """Number of directed cycles (as cyclic vertex sequences) of exactly ``length``."""
    if length < 2:
        return 0
    count = 0
    out = d.out_adj
    for s in range(d.n):
        higher = d.full & ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, 1)]
        while stack:
            v, path, k = stack.pop()
            if k == length:
                count += out[v] >> s & 1
                continue
            for w in vertices(out[v] & higher & ~path):
                stack.append((w, path | 1 << w, k + 1))
    return count


def find_cycle(d: Digraph, within: int | None = None) -> list[int] | None:
    """Any directed cycle inside ``within`` (depth-first back-edge search)."""
    within = d.full if within is None else within
    state = {}
    for root in vertices(within):
        if root in state:
            continue
        state[root] = 1
        path = [root]
        iters = [iter(vertices(d.out_adj[root] & within))]
        while iters:
            w = next(iters[-1], None)
            if w is None:
                state[path.pop()] = 2
                iters.pop()
            elif state.get(w) == 1:
                return path[path.index(w):]
            elif w not in state:
                state[w] = 1
                path.append(w)
                iters.append(iter(vertices(d.out_adj[w] & within)))
    return None


def degree_sequence(d: Digraph) -> list[DegreeTriple]:
    return [DegreeTriple(d.out_adj[v].bit_count(), d.in_adj[v].bit_count(),
                         d.neighbours(v).bit_count()) for v in range(d.n)]


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask

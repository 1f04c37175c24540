"""Lower bounds on the acyclic independence number and matching extractors.

``alpha(D)`` is the size of a largest vertex set inducing no directed cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .digraph import (
    TABLE_LIMIT, Digraph, acyclic_subset_table, degree_sequence,
    enumerate_induced_cycles, girth, is_acyclic, lowest, shortest_cycle,
)
from .errors import DigraphError, NotATournamentError


@dataclass(frozen=True)
class BoundReport:
    formula_id: str
    applicable: bool
    value: float | None = None
    note: str = ""

    def to_dict(self):
        return {"formula": self.formula_id, "applicable": self.applicable,
                "value": self.value, "note": self.note}


def _inapplicable(formula_id, note):
    return BoundReport(formula_id, False, None, note)


def caro_wei_directed_bound(d: Digraph, exact: bool = False):
    """Sum over vertices of ``1/(1+d+) + 1/(1+d-) - 1/(1+d)``.

    ``d`` is the number of distinct neighbours, so a digon counts once.
    Returns a ``Fraction`` when ``exact`` is set.
    """
    one = Fraction(1) if exact else 1.0
    return sum((one / (1 + t.d_out) + one / (1 + t.d_in) - one / (1 + t.d_underlying)
                for t in degree_sequence(d)), 0 * one)


def caro_wei_undirected_bound(d: Digraph, exact: bool = False):
    one = Fraction(1) if exact else 1.0
    return sum((one / (1 + t.d_underlying) for t in degree_sequence(d)), 0 * one)


def degree_form_bound(d: Digraph, exact: bool = False):
    """Sum of ``(3d+2)/((d+1)(d+2))`` over underlying degrees.

    Only a valid lower bound for digon-free digraphs; on a digon it gives 5/3.
    """
    total = sum(Fraction(3 * k + 2, (k + 1) * (k + 2))
                for _, _, k in degree_sequence(d))
    return Fraction(total) if exact else float(total)


def density_bound(d: Digraph) -> BoundReport:
    """``n / (2k/3 + 1)`` with ``k = m/n``; needs no isolated vertex and no digon."""
    fid = "density"
    if d.n == 0:
        return _inapplicable(fid, "empty digraph")
    if d.isolated():
        return _inapplicable(fid, "isolated vertices present")
    if not d.is_digon_free():
        return _inapplicable(fid, "digons present; the convexity argument needs "
                                  "sum of degrees = 2m")
    k = d.num_arcs / d.n
    return BoundReport(fid, True, d.n / (2 * k / 3 + 1))


def max_geometric_degree(d: Digraph) -> float:
    return max((math.sqrt(t.d_out * t.d_in) for t in degree_sequence(d)), default=0.0)


def digon_free_bound(d: Digraph) -> BoundReport:
    fid = "digon_free"
    if not d.is_digon_free():
        return _inapplicable(fid, "digons present")
    return BoundReport(fid, True, d.n / (2 * max_geometric_degree(d) / 3 + 1))


def _girth_formula(n, g, t):
    return (g - 1) / g * (n ** g / (t * g)) ** (1 / (g - 1))


def girth_cycle_bound(d: Digraph) -> BoundReport:
    """``((g-1)/g) * (n^g / (t g))^(1/(g-1))`` for girth ``g`` and ``t``
    induced cycles; applicable when ``t g >= n``."""
    fid = "girth_cycles"
    g = girth(d)
    if g == math.inf:
        return _inapplicable(fid, "acyclic digraph has no girth")
    t = len(enumerate_induced_cycles(d))
    if t * g < d.n:
        return _inapplicable(fid, f"t*g = {t * g} < n = {d.n}")
    return BoundReport(fid, True, _girth_formula(d.n, g, t))


def tournament_triangle_bound(d: Digraph) -> BoundReport:
    """``(2/3) n sqrt(n / (3t))`` for a tournament with ``t`` directed triangles.

    Applicable when ``1 <= t`` and ``3t >= n``, i.e. exactly when the girth
    bound applies with ``g = 3``.
    """
    fid = "tournament_triangles"
    if not d.is_tournament():
        raise NotATournamentError("tournament_triangle_bound needs a tournament")
    t = len(enumerate_induced_cycles(d))
    if t == 0:
        return _inapplicable(fid, "transitive tournament")
    if 3 * t < d.n:
        return _inapplicable(fid, f"3t = {3 * t} < n = {d.n}")
    n = d.n
    return BoundReport(fid, True, 2 / 3 * n * math.sqrt(n / (3 * t)))


def all_bounds(d: Digraph) -> list[BoundReport]:
    reports = [
        BoundReport("caro_wei_directed", True, caro_wei_directed_bound(d)),
        BoundReport("caro_wei_undirected", True, caro_wei_undirected_bound(d),
                    "undirected baseline; always valid since independent sets are acyclic"),
    ]
    if d.is_digon_free():
        reports.append(BoundReport("degree_form", True, degree_form_bound(d)))
    else:
        reports.append(_inapplicable("degree_form", "digons present"))
    reports += [density_bound(d), digon_free_bound(d), girth_cycle_bound(d)]
    if d.is_tournament():
        reports.append(tournament_triangle_bound(d))
    else:
        reports.append(_inapplicable("tournament_triangles", "not a tournament"))
    return reports


# -- extractors --------------------------------------------------------------

def permutation_acyclic_set(d: Digraph, perm) -> int:
    """Vertices whose out-neighbours, or whose in-neighbours, all come later in ``perm``.

    ``perm`` lists the vertices from left to right. The result is acyclic:
    the right-most vertex of any cycle has an out- and an in-neighbour on its left.
    """
    perm = [int(v) for v in perm]
    if sorted(perm) != list(range(d.n)):
        raise DigraphError("perm must be a permutation of 0..n-1")
    later = d.full
    chosen = 0
    for v in perm:
        later &= ~(1 << v)
        if d.out_adj[v] & ~later == 0 or d.in_adj[v] & ~later == 0:
            chosen |= 1 << v
    assert is_acyclic(d, chosen)
    return chosen


def best_of_permutations(d: Digraph, samples: int, rng=None) -> int:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(rng)
    best = None
    for _ in range(samples):
        s = permutation_acyclic_set(d, rng.permutation(d.n))
        if best is None or s.bit_count() > best.bit_count():
            best = s
    return best


def random_deletion_acyclic_set(d: Digraph, p: float, rng=None, cycles=None) -> int:
    """Keep each vertex with probability ``p``, then break the surviving induced
    cycles by deleting the lowest vertex of the lowest-mask cycle until none is left."""
    if not 0.0 <= p <= 1.0:
        raise DigraphError(f"probability {p} outside [0, 1]")
    rng = np.random.default_rng(rng)
    if cycles is None:
        cycles = enumerate_induced_cycles(d)
    keep = rng.random(d.n) < p
    s = sum(1 << v for v in range(d.n) if keep[v])
    for c in cycles:
        # deleting a vertex only removes cycles, so one ordered pass suffices
        if c & s == c:
            s &= ~(1 << lowest(c))
    return s


def exact_max_acyclic_set(d: Digraph, limit: int = TABLE_LIMIT) -> int:
    """A maximum acyclic vertex set.

    Up to ``limit`` vertices the full acyclicity table is scanned; above it a
    branch and bound over shortest cycles is used.
    """
    if d.n <= limit:
        table = acyclic_subset_table(d, limit)
        masks = np.flatnonzero(table)
        sizes = np.bitwise_count(masks)
        return int(masks[np.argmax(sizes)])
    return _max_acyclic_branch_and_bound(d)


def _max_acyclic_branch_and_bound(d: Digraph) -> int:
    best = permutation_acyclic_set(d, range(d.n))
    seen = set()

    def search(s):
        nonlocal best
        if s.bit_count() <= best.bit_count() or s in seen:
            return
        seen.add(s)
        cycle = shortest_cycle(d, s)
        if cycle is None:
            best = s
            return
        for v in cycle:
            search(s & ~(1 << v))

    search(d.full)
    return best


def alpha(d: Digraph, limit: int = TABLE_LIMIT) -> int:
    return exact_max_acyclic_set(d, limit).bit_count()

"""Exact dichromatic polynomials.

``P(D; k)`` counts assignments of ``k`` colours whose colour classes are all
acyclic. It is computed from the numbers ``a_j`` of partitions of the vertex
set into ``j`` nonempty acyclic blocks via ``P(k) = sum_j a_j k(k-1)...(k-j+1)``.
All arithmetic here is on Python integers.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .digraph import (
    Digraph, acyclic_subset_table, count_cycles_of_length, girth, is_acyclic,
)
from .errors import CapacityError, DigraphError

POLY_LIMIT = 14
BRUTE_FORCE_BUDGET = 6**8


class Polynomial:
    """Integer polynomial with coefficients in ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other):
        return other if isinstance(other, Polynomial) else Polynomial((other,))

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + -self._lift(other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Polynomial((1,))
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = f"{mag}" if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        return s + "".join(f" {sg} {b}" for sg, b in terms[1:])


def falling_factorial(j: int) -> Polynomial:
    """``x (x-1) ... (x-j+1)``."""
    p = Polynomial((1,))
    for i in range(j):
        p = p * Polynomial((-i, 1))
    return p


@functools.lru_cache(maxsize=4096)
def _submask_table(mask: int):
    """All submasks of ``mask`` as a read-only int64 array (cached: the
    table depends only on the mask, so small digraphs share it)."""
    bits = [b for b in range(mask.bit_length()) if mask >> b & 1]
    r = np.arange(1 << len(bits), dtype=np.int64)
    sub = np.zeros_like(r)
    for i, b in enumerate(bits):
        sub |= ((r >> i) & 1) << b
    sub.flags.writeable = False
    return sub


def _partition_counts(d: Digraph, together=None, limit: int = POLY_LIMIT):
    """``f[S, j]`` = partitions of ``S`` into ``j`` nonempty acyclic blocks.

    The block holding the lowest vertex of ``S`` is chosen first. With
    ``together=(u, v)`` only partitions placing ``u`` and ``v`` in the same
    block are counted.
    """
    n = d.n
    if n > limit:
        raise CapacityError("n", n, limit)
    acyc = acyclic_subset_table(d, max(limit, n))
    f = np.zeros((1 << n, n + 1), dtype=np.int64)
    f[0, 0] = 1
    if together is not None:
        u, v = together
    for S in range(1, 1 << n):
        low = S & -S
        rest = S ^ low
        sub = _submask_table(rest)
        blocks = sub | low
        ok = acyc[blocks]
        if together is not None:
            ok &= ((blocks >> u) & 1) == ((blocks >> v) & 1)
        f[S, 1:] = f[rest ^ sub[ok], :-1].sum(axis=0)
    return f


def block_counts(d: Digraph, limit: int = POLY_LIMIT) -> list[int]:
    """``[a_0, ..., a_n]``: partitions of V(D) into exactly ``j`` acyclic blocks."""
    if d.n == 0:
        return [1]
    return [int(x) for x in _partition_counts(d, limit=limit)[d.full]]


def _from_block_counts(counts) -> Polynomial:
    total = Polynomial()
    for j, a in enumerate(counts):
        if a:
            total = total + a * falling_factorial(j)
    return total


def dichromatic_polynomial(d: Digraph, limit: int = POLY_LIMIT) -> Polynomial:
    return _from_block_counts(block_counts(d, limit))


def count_colorings_bruteforce(d: Digraph, k: int,
                               budget: int = BRUTE_FORCE_BUDGET) -> int:
    """Count proper ``k``-colourings by trying all ``k**n`` assignments."""
    n = d.n
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k ** n > budget:
        raise CapacityError("k^n", k ** n, budget)
    if n == 0:
        return 1
    if k == 0:
        return 0
    assign = np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int64)
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    ok = np.ones(len(assign), dtype=bool)
    for c in range(k):
        classes = ((assign == c) * weights).sum(axis=1)
        uniq, inverse = np.unique(classes, return_inverse=True)
        good = np.array([is_acyclic(d, int(s)) for s in uniq])
        ok &= good[inverse]
    return int(ok.sum())


def falling_value(k: int, j: int) -> int:
    return math.perm(k, j) if k >= 0 else 0


def constrained_counts(d: Digraph, u: int, v: int, k: int,
                       limit: int = POLY_LIMIT) -> tuple[int, int]:
    """``(same, diff)``: proper ``k``-colourings with ``u``, ``v`` equal / different."""
    if u == v:
        raise DigraphError("constrained_counts needs u != v")
    total = dichromatic_polynomial(d, limit)(k)
    f = _partition_counts(d, together=(u, v), limit=limit)
    same = sum(int(a) * falling_value(k, j) for j, a in enumerate(f[d.full]))
    return same, total - same


def constrained_polynomials(d: Digraph, u: int, v: int,
                            limit: int = POLY_LIMIT) -> tuple[Polynomial, Polynomial]:
    """``(P_same, P_diff)`` as polynomials."""
    if u == v:
        raise DigraphError("constrained_polynomials needs u != v")
    same = _from_block_counts(_partition_counts(d, (u, v), limit)[d.full])
    return same, dichromatic_polynomial(d, limit) - same


# -- closed forms --------------------------------------------------------------

def sn_closed_form(n: int) -> Polynomial:
    """``sum_{i=1..n} C(i, n-i) x (x-1)^(i-1)``, cross-checked against the recurrence."""
    if n < 1:
        raise DigraphError("n must be >= 1")
    x = Polynomial.x()
    xm1 = Polynomial((-1, 1))
    p = Polynomial()
    for i in range(1, n + 1):
        c = math.comb(i, n - i)
        if c:
            p = p + c * x * xm1 ** (i - 1)
    if p != sn_recurrence(n):
        raise ArithmeticError(f"binomial sum and recurrence disagree at n={n}")
    return p


def sn_recurrence(n: int) -> Polynomial:
    """``f_1 = x``, ``f_2 = x^2``, ``f_n = (x-1)(f_{n-1} + f_{n-2})``."""
    if n < 1:
        raise DigraphError("n must be >= 1")
    xm1 = Polynomial((-1, 1))
    prev, cur = Polynomial((0, 1)), Polynomial((0, 0, 1))
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, xm1 * (cur + prev)
    return cur


def dn_closed_form(n: int) -> Polynomial:
    """``x (x-1)^(n-2) + x^(n-1) (x-1)``."""
    if n < 3:
        raise DigraphError("D_n closed form needs n >= 3")
    x = Polynomial.x()
    xm1 = Polynomial((-1, 1))
    return x * xm1 ** (n - 2) + x ** (n - 1) * xm1


# -- top coefficients ----------------------------------------------------------

@dataclass
class CoefficientReport:
    n: int
    girth: int
    polynomial: Polynomial
    vanishing: dict = field(default_factory=dict)   # degree -> coefficient
    leading_degree: int = 0
    leading_coefficient: int = 0
    cycles_of_girth_length: int = 0

    @property
    def ok(self) -> bool:
        return (all(c == 0 for c in self.vanishing.values())
                and self.leading_coefficient == -self.cycles_of_girth_length)

    def to_dict(self):
        return {
            "n": self.n, "girth": self.girth,
            "vanishing": {str(k): str(v) for k, v in self.vanishing.items()},
            "degree": self.leading_degree,
            "coefficient": str(self.leading_coefficient),
            "cycles_of_girth_length": self.cycles_of_girth_length,
            "ok": self.ok,
        }


def coefficient_report(d: Digraph, poly: Polynomial | None = None,
                       limit: int = POLY_LIMIT) -> CoefficientReport:
    """Coefficients of ``x^(n-1) .. x^(n-g+2)`` (expected zero) and of
    ``x^(n-g+1)`` (expected minus the number of ``g``-cycles)."""
    g = girth(d)
    if g == math.inf:
        raise DigraphError("coefficient_report needs a digraph with a cycle")
    n = d.n
    p = dichromatic_polynomial(d, limit) if poly is None else poly
    return CoefficientReport(
        n=n, girth=g, polynomial=p,
        vanishing={e: p.coefficient(e) for e in range(n - 1, n - g + 1, -1)},
        leading_degree=n - g + 1,
        leading_coefficient=p.coefficient(n - g + 1),
        cycles_of_girth_length=count_cycles_of_length(d, g),
    )

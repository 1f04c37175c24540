"""Exhaustive checks of the extremal results about strong tournaments.

Every labelled tournament of order ``n`` is enumerated; ``D_n`` is recognised
up to relabelling with an explicit isomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import Digraph, is_acyclic, is_strongly_connected
from .errors import CapacityError, DigraphError
from .families import (
    d_tournament, enumerate_tournaments, find_isomorphism, random_digraph,
    tournament_code,
)
from .polynomial import constrained_polynomials, dichromatic_polynomial, dn_closed_form


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checked: int = 0
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {"suite": self.suite, "params": self.params, "checked": self.checked,
                "violations": self.violations, "stats": self.stats, "ok": self.ok}


def strong_tournaments(n: int, limit: int = 6):
    for t in enumerate_tournaments(n, limit):
        if is_strongly_connected(t):
            yield t


def _check_order(n, limit):
    if n < 3:
        raise DigraphError("need n >= 3")
    if n > limit:
        raise CapacityError("n", n, limit)


def verify_dn_maximality(n: int, ks, limit: int = 6) -> VerificationReport:
    """``P(T;k) < P(D_n;k)`` for every strong tournament ``T`` not isomorphic to
    ``D_n``, with equality for the relabellings of ``D_n``."""
    _check_order(n, limit)
    ks = list(ks)
    if any(k < 2 for k in ks):
        raise ValueError("all k must be >= 2")
    dn = d_tournament(n)
    target = dn_closed_form(n)
    rep = VerificationReport("dn-max", {"n": n, "ks": ks})
    if dichromatic_polynomial(dn) != target:
        rep.violations.append({"reason": "closed form differs from DP for D_n"})
    isomorphs = 0
    for t in strong_tournaments(n, limit):
        rep.checked += 1
        is_dn = find_isomorphism(t, dn) is not None
        isomorphs += is_dn
        p = dichromatic_polynomial(t)
        for k in ks:
            got, best = p(k), target(k)
            if (got != best) if is_dn else (got >= best):
                rep.violations.append({"code": tournament_code(t), "k": k,
                                       "P_T": str(got), "P_Dn": str(best),
                                       "isomorphic_to_Dn": is_dn})
    rep.stats = {"strong_tournaments": rep.checked, "dn_isomorphs": isomorphs}
    return rep


def verify_allcycle_lemma(n: int, limit: int = 6) -> VerificationReport:
    """For strong ``T`` and arc ``e = u -> v``: ``T - e`` is acyclic iff some
    isomorphism ``T -> D_n`` sends ``u`` to ``v_n`` and ``v`` to ``v_1``."""
    _check_order(n, limit)
    dn = d_tournament(n)
    rep = VerificationReport("allcycle", {"n": n})
    hits = {}
    for t in strong_tournaments(n, limit):
        code = tournament_code(t)
        for u, v in t.arcs():
            rep.checked += 1
            acyclic = is_acyclic(t.without_arc(u, v), t.full)
            mapped = find_isomorphism(t, dn, pin={u: n - 1, v: 0}) is not None
            if acyclic != mapped:
                rep.violations.append({"code": code, "arc": [u, v],
                                       "acyclic_after_removal": acyclic,
                                       "maps_to_special_arc": mapped})
            if acyclic:
                hits[code] = hits.get(code, 0) + 1
    rep.stats = {
        "tournaments_with_such_arc": len(hits),
        "arcs_per_tournament": sorted(set(hits.values())),
    }
    return rep


def verify_puv_bound(n: int, ks, limit: int = 5) -> VerificationReport:
    """Colourings giving ``u`` and ``v`` different colours number at most
    ``k^(n-1) (k-1)``, with equality iff ``{u, v}`` is the reversed pair of a
    copy of ``D_n``.

    The count is symmetric in ``u`` and ``v``, so the equality case is matched
    against the unordered pair ``{v_n, v_1}``.
    """
    _check_order(n, limit)
    ks = list(ks)
    if any(k < 2 for k in ks):
        raise ValueError("all k must be >= 2")
    dn = d_tournament(n)
    rep = VerificationReport("puv", {"n": n, "ks": ks})
    equalities = 0
    for t in strong_tournaments(n, limit):
        code = tournament_code(t)
        diff_cache = {}
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                key = (min(u, v), max(u, v))
                if key not in diff_cache:
                    diff_cache[key] = constrained_polynomials(t, u, v)[1]
                diff = diff_cache[key]
                special = (find_isomorphism(t, dn, pin={u: n - 1, v: 0}) is not None
                           or find_isomorphism(t, dn, pin={u: 0, v: n - 1}) is not None)
                for k in ks:
                    rep.checked += 1
                    got, cap = diff(k), k ** (n - 1) * (k - 1)
                    equalities += got == cap
                    if got > cap or (got == cap) != special:
                        rep.violations.append({"code": code, "u": u, "v": v, "k": k,
                                               "diff": str(got), "cap": str(cap),
                                               "special_pair": special})
    rep.stats = {"equality_cases": equalities}
    return rep


def verify_puv_general(n: int, ks, samples: int, rng=None, p: float = 0.5) -> VerificationReport:
    """The inequality on random strongly connected digraphs (not only tournaments).

    Only the upper bound is asserted: a directed ``n``-cycle with ``u -> v`` on
    it already attains equality without being a tournament.
    """
    import numpy as np

    rng = np.random.default_rng(rng)
    ks = list(ks)
    rep = VerificationReport("puv-general", {"n": n, "ks": ks, "samples": samples})
    equalities = 0
    while rep.checked < samples:
        d = random_digraph(n, p, rng)
        if not is_strongly_connected(d):
            continue
        rep.checked += 1
        for u in range(n):
            for v in range(u + 1, n):
                diff = constrained_polynomials(d, u, v)[1]
                for k in ks:
                    got, cap = diff(k), k ** (n - 1) * (k - 1)
                    equalities += got == cap
                    if got > cap:
                        rep.violations.append({"arcs": d.arcs(), "u": u, "v": v,
                                               "k": k, "diff": str(got), "cap": str(cap)})
    rep.stats = {"equality_cases": equalities}
    return rep

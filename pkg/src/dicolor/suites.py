"""Named verification suites used by ``dicolor verify``."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations

from .corpus import random_corpus, standard_corpus
from .digraph import girth
from .extremal import (
    VerificationReport, verify_allcycle_lemma, verify_dn_maximality, verify_puv_bound,
)
from .families import enumerate_tournaments, s_tournament
from .independence import alpha, caro_wei_directed_bound, permutation_acyclic_set
from .polynomial import coefficient_report, dichromatic_polynomial, sn_closed_form, sn_recurrence


def _merge(name, reports, params):
    rep = VerificationReport(name, params)
    for r in reports:
        rep.checked += r.checked
        rep.violations += r.violations
        rep.stats[f"{r.suite}:{r.params}"] = r.stats
    return rep


def suite_dn_max(max_n=5, seed=0):
    ns = range(4, min(max_n, 6) + 1)
    return _merge("dn-max", [verify_dn_maximality(n, range(2, 6)) for n in ns],
                  {"ns": list(ns), "ks": [2, 3, 4, 5]})


def suite_allcycle(max_n=6, seed=0):
    ns = range(3, min(max_n, 6) + 1)
    return _merge("allcycle", [verify_allcycle_lemma(n) for n in ns], {"ns": list(ns)})


def suite_puv(max_n=5, seed=0):
    ns = range(3, min(max_n, 5) + 1)
    return _merge("puv", [verify_puv_bound(n, range(2, 5)) for n in ns],
                  {"ns": list(ns), "ks": [2, 3, 4]})


def suite_sn(max_n=10, seed=0):
    rep = VerificationReport("sn", {"max_n": max_n})
    for n in range(1, max_n + 1):
        rep.checked += 1
        closed = sn_closed_form(n)
        if closed != dichromatic_polynomial(s_tournament(n)) or closed != sn_recurrence(n):
            rep.violations.append({"n": n, "closed_form": str(closed)})
    return rep


def suite_coeff(max_n=6, seed=0, samples=300):
    rep = VerificationReport("coeff", {"max_tournament_n": min(max_n, 6),
                                       "samples": samples, "seed": seed})
    digraphs = []
    for n in range(3, min(max_n, 6) + 1):
        digraphs += [(f"tournament{n}", t) for t in enumerate_tournaments(n)]
    digraphs += random_corpus(samples, 9, seed, n_min=2)
    skipped = 0
    for name, d in digraphs:
        if girth(d) == math.inf:
            skipped += 1
            continue
        rep.checked += 1
        r = coefficient_report(d)
        if not r.ok:
            rep.violations.append({"name": name, "arcs": d.arcs(), **r.to_dict()})
    rep.stats = {"acyclic_skipped": skipped}
    return rep


def suite_caro_wei(max_n=5, seed=0, samples=500):
    """Soundness against exact alpha plus the exact permutation-average identity."""
    rep = VerificationReport("caro-wei", {"max_tournament_n": min(max_n, 5),
                                          "samples": samples, "seed": seed})
    digraphs = []
    for n in range(1, min(max_n, 5) + 1):
        digraphs += [(f"tournament{n}", t) for t in enumerate_tournaments(n)]
    digraphs += random_corpus(samples, 9, seed)
    for name, d in digraphs:
        rep.checked += 1
        bound, a = caro_wei_directed_bound(d, exact=True), alpha(d)
        if bound > a:
            rep.violations.append({"name": name, "bound": str(bound), "alpha": a})
    averaged = 0
    for name, d in standard_corpus(seed, samples // 5, 6):
        if d.n > 6:
            continue
        averaged += 1
        total = sum(permutation_acyclic_set(d, p).bit_count() for p in permutations(range(d.n)))
        mean = Fraction(total, math.factorial(d.n))
        if mean != caro_wei_directed_bound(d, exact=True):
            rep.violations.append({"name": name, "mean": str(mean)})
    rep.stats = {"expectation_checked": averaged}
    return rep


SUITES = {
    "dn-max": suite_dn_max,
    "allcycle": suite_allcycle,
    "puv": suite_puv,
    "coeff": suite_coeff,
    "sn": suite_sn,
    "caro-wei": suite_caro_wei,
}

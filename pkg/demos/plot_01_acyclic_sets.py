"""
Large acyclic sets
==================

How big an acyclic vertex set can a digraph be guaranteed to contain?
We compare the lower bounds on a few digraphs against the true answer.
"""

import numpy as np

from dicolor import Digraph, alpha, all_bounds
from dicolor.families import d_tournament, directed_cycle, random_orientation
from dicolor.independence import best_of_permutations, random_deletion_acyclic_set

###############################################################################
# The bounds side by side
# -----------------------
#
# Every report says whether its formula applies. The digon is a useful
# corner case: the degree-based forms would exceed alpha there, so they
# are switched off.

samples = {
    "C5": directed_cycle(5),
    "D6": d_tournament(6),
    "digon": Digraph(2, [(0, 1), (1, 0)]),
    "orientation": random_orientation(9, 0.6, 1),
}
for name, d in samples.items():
    print(f"{name}: alpha = {alpha(d)}")
    for r in all_bounds(d):
        value = f"{r.value:.3f}" if r.applicable else "n/a"
        print(f"    {r.formula_id:<24} {value}")

###############################################################################
# Turning the expectation into a set
# ----------------------------------
#
# Order the vertices at random and keep each vertex whose out-neighbours, or
# whose in-neighbours, all come later. The kept set is acyclic and its mean
# size is the directed Caro-Wei value. Taking the best of many
# orders quickly reaches it.

d = random_orientation(14, 0.5, 7)
best = best_of_permutations(d, 2000, 0)
print("best of 2000 orders:", best.bit_count(), " exact:", alpha(d))

###############################################################################
# Random deletion
# ---------------
#
# Keep each vertex with probability p and then delete one vertex from every
# surviving induced cycle. On C5 the optimum is p = 1.

rng = np.random.default_rng(0)
for p in (0.5, 0.8, 1.0):
    sizes = [random_deletion_acyclic_set(directed_cycle(5), p, rng).bit_count()
             for _ in range(2000)]
    print(f"p = {p}: mean size {np.mean(sizes):.3f}")

"""
Dichromatic polynomials
=======================

P(D; k) counts proper k-colourings. It is assembled from the numbers of
partitions into j acyclic blocks, expanded in falling factorials.
"""

from dicolor import dichromatic_polynomial
from dicolor.digraph import Digraph
from dicolor.families import d_tournament, directed_cycle, s_tournament
from dicolor.polynomial import (
    block_counts, coefficient_report, count_colorings_bruteforce,
    dn_closed_form, sn_closed_form,
)

###############################################################################
# Small cases
# -----------

c3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
print("C3:", dichromatic_polynomial(c3), " blocks:", block_counts(c3))
print("brute force at k = 4:", count_colorings_bruteforce(c3, 4),
      " polynomial:", dichromatic_polynomial(c3)(4))

###############################################################################
# Two tournament families with closed forms
# -----------------------------------------

for n in (5, 8):
    print(f"S{n}:", dichromatic_polynomial(s_tournament(n)) == sn_closed_form(n),
          sn_closed_form(n))
    print(f"D{n}:", dichromatic_polynomial(d_tournament(n)) == dn_closed_form(n),
          dn_closed_form(n))

###############################################################################
# The top coefficients
# --------------------
#
# Below the leading term, the first g - 2 coefficients vanish. The next one
# is minus the number of shortest cycles.

for d in (directed_cycle(5), d_tournament(6)):
    r = coefficient_report(d)
    print(f"girth {r.girth}: vanishing {r.vanishing}, "
          f"x^{r.leading_degree} has {r.leading_coefficient}, "
          f"{r.cycles_of_girth_length} shortest cycles")

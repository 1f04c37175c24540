"""
Which strong tournament has the most colourings?
================================================

Among strongly connected tournaments of order n, the transitive tournament
with its one long arc reversed (D_n) maximises P(T; k). We confirm this by
enumerating every labelled tournament.
"""

from dicolor.extremal import verify_allcycle_lemma, verify_dn_maximality, verify_puv_bound
from dicolor.families import d_tournament
from dicolor.polynomial import constrained_counts

###############################################################################
# Exhaustive maximality
# ---------------------

for n in (4, 5):
    rep = verify_dn_maximality(n, range(2, 6))
    print(f"n = {n}: {rep.checked} strong tournaments, {rep.stats['dn_isomorphs']} "
          f"copies of D_n, violations {len(rep.violations)}")

###############################################################################
# Arcs whose removal kills every cycle
# ------------------------------------
#
# Such an arc exists exactly when T is a relabelled D_n, and it is the reversed arc.

print(verify_allcycle_lemma(5).stats)

###############################################################################
# Colourings splitting a pair
# ---------------------------
#
# The number of colourings giving u and v different colours is at most
# k^(n-1) (k-1). D_n meets this on its reversed pair.

n, k = 6, 3
same, diff = constrained_counts(d_tournament(n), n - 1, 0, k)
print("D6 special pair:", diff, "cap:", k ** (n - 1) * (k - 1))
print("puv check n = 4:", verify_puv_bound(4, range(2, 5)).ok)

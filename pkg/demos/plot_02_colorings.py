"""
Acyclic colourings
==================

Colour classes must induce acyclic subdigraphs. Three constructive
colourings are compared with the exact dichromatic number.
"""

from dicolor import exact_chromatic_number
from dicolor.coloring import (
    dfs_mod_k_coloring, girth_color_bound, greedy_girth_coloring,
    partition_color_bound, partition_coloring,
)
from dicolor.families import d_tournament, directed_cycle, layered_digraph, random_tournament

###############################################################################
# Depth modulo k
# --------------
#
# When every cycle has length divisible by k, colouring by DFS depth mod k
# never closes a monochromatic cycle.

d = layered_digraph(12, 3, 0.5, 2)
c = dfs_mod_k_coloring(d, 3)
print("layered digraph, k = 3:", c.colors, "uses", c.k, "colours")

###############################################################################
# Greedy by girth
# ---------------
#
# Long shortest cycles leave room for big colour classes.

for n in (5, 9, 13):
    d = directed_cycle(n)
    print(f"C{n}: greedy {greedy_girth_coloring(d).k}, bound {girth_color_bound(d)}")

###############################################################################
# Local search then exact two-colouring
# -------------------------------------
#
# With k = max(out-degree, in-degree) the vertices are split into
# ceil((2k+1)/5) parts. Each part is then two-coloured exactly.

for d in (random_tournament(11, 3), d_tournament(12)):
    c = partition_coloring(d)
    print(f"n = {d.n}: partition {c.k} colours, bound {partition_color_bound(d)}, "
          f"exact chi {exact_chromatic_number(d)}")

"""
Exact invariants and how they scale with depth
==============================================

Chromatic and clique numbers stay put. Vertex cover and independence
numbers multiply by n at each level, and the lifted witnesses show why.
"""

from sierpgraph import build_direct, cycle_graph
from sierpgraph.invariants import lift_coloring, lift_cover
from sierpgraph.solvers import (
    chromatic_number,
    clique_number,
    independence_number,
    vertex_cover_number,
)
from sierpgraph.validate import is_proper_coloring, is_vertex_cover

g = cycle_graph(5)
chi, colors = chromatic_number(g)
beta, cover = vertex_cover_number(g)
print("C5: chi =", chi, " omega =", clique_number(g)[0], " beta =", beta)

for t in (1, 2, 3):
    s = build_direct(g, t)
    print(f"t={t}  n={s.n:4d}  chi={chromatic_number(s)[0]}  omega={clique_number(s)[0]}  "
          f"beta={vertex_cover_number(s)[0]:3d}  alpha={independence_number(s)[0]:3d}")

# colour a word by its last letter; keep a word if its last letter is in the cover
s = build_direct(g, 3)
print("lifted colouring proper:", is_proper_coloring(s, lift_coloring(g, colors, 3)))
lifted = lift_cover(g, cover, 3)
print("lifted cover valid:", is_vertex_cover(s, lifted), "size", len(lifted))

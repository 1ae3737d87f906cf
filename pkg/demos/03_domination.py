"""
Domination in S(G, t)
=====================

Lifting a minimum dominating set D gives n^(t-1)|D| vertices. Words of the
form w'uu with u in D' can be dropped, where D' is the part of D whose
vertices have a neighbour inside D. xi is the largest such D' over all D.
"""

from sierpgraph import build_direct, cycle_graph, path_graph, star_graph
from sierpgraph.graph import double_star
from sierpgraph.invariants import (
    domination_profile,
    domination_upper_bound,
    domination_witness,
    equivalence_check,
)
from sierpgraph.solvers import domination_number
from sierpgraph.validate import is_dominating_set

for name, g in [("C4", cycle_graph(4)), ("K_1,3", star_graph(3)), ("double star", double_star(2, 2))]:
    p = domination_profile(g)
    bound = domination_upper_bound(g.n, p.gamma, p.xi, 2)
    s = build_direct(g, 2)
    d_star = domination_witness(g, p.xi_set, p.xi_subset, 2)
    print(f"{name:12s} gamma={p.gamma} xi={p.xi} gamma-sets={len(p.gamma_sets)}  "
          f"bound={bound}  |D*|={len(d_star)} dominating={is_dominating_set(s, d_star)}  "
          f"exact={domination_number(s)[0]}")

# stars: the lifted centre set has (r+1)^(t-1) vertices and is optimal for r >= 2
for r in (2, 3):
    print("star", r, "t=3:", domination_number(build_direct(star_graph(r), 3))[0], (r + 1) ** 2)

# with one edge the base has two gamma-sets, and S(K2,3) is the path on 8 vertices
v = equivalence_check(path_graph(2), 3)
print("K2, t=3: lifted size", v.expected, "but exact", v.observed)

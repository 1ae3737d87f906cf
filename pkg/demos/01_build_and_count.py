"""
Building S(G, t) from a small base graph
========================================

Words over the vertex set become vertices; two words are joined when they
share a prefix w and look like ``w x y..y`` and ``w y x..x`` for an edge xy.
"""

from sierpgraph import build_direct, build_recursive, tailed_triangle_graph
from sierpgraph.graph import leaves
from sierpgraph.invariants import order_size_formula
from sierpgraph.sierpinski import extreme_vertices, word_label

# a 7-vertex graph with a triangle 2-3-4 and a pendant path 4-5-6
g = tailed_triangle_graph()
print("base:", g.n, "vertices,", g.m, "edges")

# depth 2: seven copies of G glued by single bridges
s2 = build_direct(g, 2)
print("S(G,2):", s2.n, "vertices,", s2.m, "edges")
print("formula:", order_size_formula(g.n, g.m, 2))

# the recursive construction gives the same edge list
assert build_recursive(g, 2).edges == s2.edges

# edges inside copy 0 and the bridge 02 -- 20 to copy 2
for u, v in s2.edges[:8]:
    print(word_label(s2.word(u)), "--", word_label(s2.word(v)))

# constant words are the extreme vertices; they keep their base degree
for w in extreme_vertices(s2)[:3]:
    print("extreme", word_label(w), "degree", s2.degree(s2.code(w)))

# depth 3 grows fast: 343 vertices
s3 = build_direct(g, 3)
print("S(G,3):", s3.n, s3.m, "leaves:", len(leaves(s3)))

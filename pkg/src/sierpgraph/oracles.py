"""Brute-force reference values by full subset enumeration.

Only meant for graphs with a handful of vertices (n <= 10 or so). Nothing here
shares code with :mod:`sierpgraph.solvers`.
"""

from __future__ import annotations

from itertools import combinations

from .graph import BaseGraph


def _neighbor_sets(g: BaseGraph) -> list[set[int]]:
    nb = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def _independent(g: BaseGraph, s: frozenset[int]) -> bool:
    return not any(u in s and v in s for u, v in g.edges)


def independent_subsets(g: BaseGraph) -> list[int]:
    """Bit masks of all independent vertex subsets (including the empty set)."""
    out = []
    for mask in range(1 << g.n):
        if not any(mask >> u & 1 and mask >> v & 1 for u, v in g.edges):
            out.append(mask)
    return out


def brute_chromatic(g: BaseGraph) -> int:
    """Fewest independent sets covering V, by dynamic programming over subsets."""
    full = (1 << g.n) - 1
    indep = set(independent_subsets(g))
    inf = g.n + 1
    best = [inf] * (full + 1)
    best[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        # the class containing the lowest vertex of mask, enumerated as submasks
        sub = mask
        while sub:
            if sub & low and sub in indep:
                cand = best[mask ^ sub] + 1
                if cand < best[mask]:
                    best[mask] = cand
            sub = (sub - 1) & mask
    return best[full]


def brute_clique(g: BaseGraph) -> int:
    edges = set(g.edges)
    for k in range(g.n, 0, -1):
        for s in combinations(range(g.n), k):
            if all((a, b) in edges for a, b in combinations(s, 2)):
                return k
    return 0


def brute_independence(g: BaseGraph) -> int:
    for k in range(g.n, -1, -1):
        for s in combinations(range(g.n), k):
            if _independent(g, frozenset(s)):
                return k
    return 0


def brute_vertex_cover(g: BaseGraph) -> int:
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            ss = set(s)
            if all(u in ss or v in ss for u, v in g.edges):
                return k
    return g.n


def _dominates(nb: list[set[int]], s: tuple[int, ...], n: int) -> bool:
    seen = set(s)
    for v in s:
        seen |= nb[v]
    return len(seen) == n


def brute_gamma_sets(g: BaseGraph) -> tuple[int, list[tuple[int, ...]]]:
    """Domination number and every minimum dominating set, lexicographically."""
    nb = _neighbor_sets(g)
    for k in range(1, g.n + 1):
        hits = [s for s in combinations(range(g.n), k) if _dominates(nb, s, g.n)]
        if hits:
            return k, hits
    raise AssertionError("V itself always dominates")


def brute_domination(g: BaseGraph) -> int:
    return brute_gamma_sets(g)[0]


def brute_xi(g: BaseGraph) -> int:
    """Max |D'| over gamma-sets D and subsets D' of D with <D'> free of isolated vertices.

    The empty D' counts (vacuously no isolated vertex).
    """
    nb = _neighbor_sets(g)
    _, family = brute_gamma_sets(g)
    best = 0
    for d in family:
        for k in range(len(d), best, -1):
            if any(all(nb[v] & set(sub) for v in sub) for sub in combinations(d, k)):
                best = k
                break
    return best

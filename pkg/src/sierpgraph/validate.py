"""Witness validators.

These deliberately avoid the bit-set machinery of the solvers and work from
the plain edge tuple, so a bug on one side cannot hide a bug on the other.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

from .graph import BaseGraph


def is_proper_coloring(g: BaseGraph, colors: Sequence[int] | Mapping[int, int]) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges)


def is_clique(g: BaseGraph, vertices: Iterable[int]) -> bool:
    vs = sorted(set(vertices))
    edges = set(g.edges)
    return all((a, b) in edges for i, a in enumerate(vs) for b in vs[i + 1:])


def is_independent_set(g: BaseGraph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    return not any(u in s and v in s for u, v in g.edges)


def is_vertex_cover(g: BaseGraph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    return all(u in s or v in s for u, v in g.edges)


def is_dominating_set(g: BaseGraph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    if any(v < 0 or v >= g.n for v in s):
        return False
    dominated = set(s)
    for u, v in g.edges:
        if u in s:
            dominated.add(v)
        if v in s:
            dominated.add(u)
    return len(dominated) == g.n

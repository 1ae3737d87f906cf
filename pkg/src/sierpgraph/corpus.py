"""Deterministic graph corpora: all small connected graphs, trees, named families.

Connected graphs on n vertices are grown from those on n - 1 by attaching a
new vertex to every non-empty subset; isomorphic copies are rejected through a
canonical certificate. Every connected graph has a non-cut vertex, so nothing
is missed. The output order is (size, certificate), which is canonical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .graph import BaseGraph, complete_graph, cycle_graph, is_connected, path_graph, star_graph

# number of connected graphs / trees on n unlabelled vertices
KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
KNOWN_TREES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


def certificate(n: int, edges) -> tuple:
    """Isomorphism-invariant key: lexicographically smallest relabelled edge set.

    Vertices are first split into classes by (degree, sorted neighbour
    degrees); only permutations inside classes are tried.
    """
    nb = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    sig = [(len(nb[v]), tuple(sorted(len(nb[u]) for u in nb[v]))) for v in range(n)]
    keys = sorted(set(sig), reverse=True)
    classes = [[v for v in range(n) if sig[v] == k] for k in keys]
    best = None
    for parts in product(*(permutations(c) for c in classes)):
        order = [v for part in parts for v in part]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges))
        if best is None or code < best:
            best = code
    return (tuple(keys), best)


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[BaseGraph, ...]:
    if n == 1:
        return (BaseGraph(1),)
    seen = {}
    for g in _connected(n - 1):
        for mask in range(1, 1 << (n - 1)):
            edges = list(g.edges) + [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            key = certificate(n, edges)
            if key not in seen:
                seen[key] = key[1]
    ordered = sorted(seen, key=lambda k: (len(k[1]), k))
    return tuple(BaseGraph(n, seen[k]) for k in ordered)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[BaseGraph, ...]:
    if n == 1:
        return (BaseGraph(1),)
    seen = {}
    for g in _trees(n - 1):
        for u in range(n - 1):
            edges = list(g.edges) + [(u, n - 1)]
            key = certificate(n, edges)
            seen.setdefault(key, key[1])
    return tuple(BaseGraph(n, seen[k]) for k in sorted(seen))


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: BaseGraph


def connected_graphs(max_n: int, min_n: int = 1) -> list[NamedGraph]:
    out = []
    for n in range(min_n, max_n + 1):
        for i, g in enumerate(_connected(n)):
            out.append(NamedGraph(f"conn{n}_{i:03d}", g))
    return out


def trees(max_n: int, min_n: int = 1) -> list[NamedGraph]:
    out = []
    for n in range(min_n, max_n + 1):
        for i, g in enumerate(_trees(n)):
            out.append(NamedGraph(f"tree{n}_{i:03d}", g))
    return out


def stars(r_max: int, r_min: int = 1) -> list[NamedGraph]:
    return [NamedGraph(f"star{r}", star_graph(r)) for r in range(r_min, r_max + 1)]


def cycles(max_n: int) -> list[NamedGraph]:
    return [NamedGraph(f"cycle{n}", cycle_graph(n)) for n in range(3, max_n + 1)]


def completes(max_n: int) -> list[NamedGraph]:
    return [NamedGraph(f"complete{n}", complete_graph(n)) for n in range(1, max_n + 1)]


def paths(max_n: int) -> list[NamedGraph]:
    return [NamedGraph(f"path{n}", path_graph(n)) for n in range(1, max_n + 1)]


def random_graphs(count: int, max_n: int, seed: int = 20240917, min_n: int = 1) -> list[NamedGraph]:
    """Labelled G(n, p) samples with n and p drawn per graph; reproducible."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.uniform(0.15, 0.85)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        out.append(NamedGraph(f"rand{i:04d}_n{n}", BaseGraph(n, edges)))
    return out


FAMILIES = ("connected", "trees", "stars", "cycles", "completes", "paths")


def family(name: str, max_n: int, min_n: int = 1) -> list[NamedGraph]:
    """Corpus by family name; for ``stars`` the bound is on r, not on n."""
    if name == "connected":
        return connected_graphs(max_n, min_n)
    if name == "trees":
        return trees(max_n, min_n)
    if name == "stars":
        return stars(max_n, max(min_n, 1))
    if name == "cycles":
        return [g for g in cycles(max_n) if g.graph.n >= min_n]
    if name == "completes":
        return completes(max_n)[min_n - 1:]
    if name == "paths":
        return paths(max_n)[min_n - 1:]
    raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def check_counts(max_n: int) -> None:
    """Compare generated corpus sizes against the published enumeration counts."""
    for n in range(1, max_n + 1):
        got = len(_connected(n))
        if n in KNOWN_CONNECTED and got != KNOWN_CONNECTED[n]:
            raise AssertionError(f"{got} connected graphs on {n} vertices, expected {KNOWN_CONNECTED[n]}")
        if not all(is_connected(g) for g in _connected(n)):
            raise AssertionError("disconnected graph in connected corpus")
        got = len(_trees(n))
        if n in KNOWN_TREES and got != KNOWN_TREES[n]:
            raise AssertionError(f"{got} trees on {n} vertices, expected {KNOWN_TREES[n]}")

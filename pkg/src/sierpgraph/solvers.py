"""Exact solvers for chromatic, clique, cover, independence and domination numbers.

All searches run on integer bit-sets and share a :class:`SolverBudget`.
Running out of budget raises :class:`~sierpgraph.errors.ResourceLimitError`;
a solver never returns a value it has not proved optimal.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .errors import PreconditionError, ResourceLimitError
from .graph import BaseGraph, bits, from_mask, induced_isolated_mask, to_mask


@dataclass(frozen=True)
class SolverBudget:
    max_nodes: int = 10**9
    max_seconds: float = 300.0


DEFAULT_BUDGET = SolverBudget()


class _Meter:
    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, budget: SolverBudget | None):
        budget = budget or DEFAULT_BUDGET
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = time.perf_counter() + budget.max_seconds

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise ResourceLimitError(f"search exceeded {self.max_nodes} nodes")
        if not self.nodes & 0x3FF and time.perf_counter() > self.deadline:
            raise ResourceLimitError("search exceeded its wall-clock budget")


def _sorted_tuple(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


# -- maximum clique ---------------------------------------------------------

def _color_sort(adj, p: int) -> tuple[list[int], list[int]]:
    """Greedy colour classes of ``p``; returns vertices and their colour bounds."""
    order, bound = [], []
    left, color = p, 0
    while left:
        color += 1
        q = left
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            left &= ~low
            order.append(v)
            bound.append(color)
    return order, bound


def _max_clique(adj, p: int, meter: _Meter, best: int = 0) -> int:
    best_size = best.bit_count()

    def expand(r: int, r_size: int, p: int):
        nonlocal best, best_size
        meter.tick()
        order, bound = _color_sort(adj, p)
        for i in range(len(order) - 1, -1, -1):
            if r_size + bound[i] <= best_size:
                return
            v = order[i]
            r2 = r | 1 << v
            p2 = p & adj[v]
            if p2:
                expand(r2, r_size + 1, p2)
            elif r_size + 1 > best_size:
                best, best_size = r2, r_size + 1
            p &= ~(1 << v)

    if p:
        expand(0, 0, p)
    return best


def clique_number(g: BaseGraph, budget: SolverBudget | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact clique number and a maximum clique."""
    clique = _max_clique(g.adj, g.all_mask, _Meter(budget))
    return clique.bit_count(), _sorted_tuple(clique)


# -- chromatic number -------------------------------------------------------

def _dsatur_greedy(g: BaseGraph) -> list[int]:
    n, adj = g.n, g.adj
    colors = [-1] * n
    sat = [0] * n
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda u: (sat[u].bit_count(), g.degree(u), -u))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in bits(adj[v]):
            sat[u] |= 1 << c
    return colors


def _k_colorable(g: BaseGraph, k: int, seed: tuple[int, ...], meter: _Meter) -> list[int] | None:
    """DSATUR backtracking for a proper k-colouring; ``seed`` is pre-coloured 0,1,..."""
    n, adj = g.n, g.adj
    colors = [-1] * n
    # sat_count[v][c]: neighbours of v carrying colour c
    sat_count = [[0] * k for _ in range(n)]
    sat = [0] * n

    def paint(v, c):
        colors[v] = c
        for u in bits(adj[v]):
            sat_count[u][c] += 1
            sat[u] |= 1 << c

    def unpaint(v, c):
        colors[v] = -1
        for u in bits(adj[v]):
            sat_count[u][c] -= 1
            if not sat_count[u][c]:
                sat[u] &= ~(1 << c)

    for i, v in enumerate(seed):
        paint(v, i)
    uncolored = set(range(n)) - set(seed)
    used = len(seed)

    def search(used: int) -> bool:
        meter.tick()
        if not uncolored:
            return True
        v = max(uncolored, key=lambda u: (sat[u].bit_count(), g.degree(u), -u))
        uncolored.discard(v)
        for c in range(min(used + 1, k)):
            if sat[v] >> c & 1:
                continue
            paint(v, c)
            if search(max(used, c + 1)):
                return True
            unpaint(v, c)
        uncolored.add(v)
        return False

    return colors if search(used) else None


def chromatic_number(g: BaseGraph, budget: SolverBudget | None = None) -> tuple[int, list[int]]:
    """Exact chromatic number and a colouring using colours 1..k.

    The lower bound is a maximum clique (which also seeds the colouring to
    break symmetry), the upper bound a DSATUR greedy colouring.
    """
    meter = _Meter(budget)
    clique = _max_clique(g.adj, g.all_mask, meter)
    lo = max(1, clique.bit_count())
    best = _dsatur_greedy(g)
    hi = max(best) + 1
    seed = _sorted_tuple(clique)
    for k in range(lo, hi):
        found = _k_colorable(g, k, seed, meter)
        if found is not None:
            best = found
            break
    k = max(best) + 1
    return k, [c + 1 for c in best]


# -- independence / vertex cover -------------------------------------------

def _components(adj, p: int) -> list[int]:
    comps = []
    while p:
        comp = frontier = p & -p
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & p & ~comp
            comp |= frontier
        comps.append(comp)
        p &= ~comp
    return comps


def _reduce(adj: list[int], p: int) -> tuple[int, int, list[tuple[int, int, int, int]]]:
    """Apply independent-set reductions until none fires.

    * simplicial vertex (neighbourhood is a clique, which covers degrees 0
      and 1 and a degree-two vertex inside a triangle): take it;
    * degree-two vertex ``v`` with non-adjacent neighbours ``a``, ``b``: fold
      {v, a, b} into a fresh vertex appended to ``adj`` (alpha drops by one).

    ``adj`` is extended in place. Returns (taken vertices, remaining pool,
    fold records ``(new, v, a, b)`` in creation order).
    """
    taken = 0
    folds = []
    changed = True
    while changed:
        changed = False
        for v in bits(p):
            if not p >> v & 1:
                continue
            nb = adj[v] & p
            deg = nb.bit_count()
            if deg <= 1 or all(not (nb & ~adj[u] & ~(1 << u)) for u in bits(nb)):
                taken |= 1 << v
                p &= ~(nb | 1 << v)
                changed = True
            elif deg == 2:
                a, b = bits(nb)
                gone = 1 << v | 1 << a | 1 << b
                merged = (adj[a] | adj[b]) & p & ~gone
                k = len(adj)
                adj.append(merged)
                for u in bits(merged):
                    adj[u] |= 1 << k
                p = (p & ~gone) | 1 << k
                folds.append((k, v, a, b))
                changed = True
    return taken, p, folds


def _unfold(sol: int, folds) -> int:
    for k, v, a, b in reversed(folds):
        if sol >> k & 1:
            sol = (sol & ~(1 << k)) | 1 << a | 1 << b
        else:
            sol |= 1 << v
    return sol


def _clique_cover_bound(adj, p: int) -> int:
    """Size of a greedy partition of ``p`` into cliques, an upper bound on alpha."""
    count = 0
    while p:
        low = p & -p
        v = low.bit_length() - 1
        cand = adj[v] & p
        p &= ~low
        while cand:
            lu = cand & -cand
            u = lu.bit_length() - 1
            p &= ~lu
            cand &= adj[u]
        count += 1
    return count


def _max_independent(g: BaseGraph, p: int, meter: _Meter) -> int:
    """Branch and reduce; ``solve`` returns a set larger than ``floor`` or None."""

    def solve(adj, p: int, floor: int) -> int | None:
        meter.tick()
        adj = list(adj)
        taken, p, folds = _reduce(adj, p)
        need = floor - taken.bit_count() - len(folds)
        if not p:
            sol = 0 if need < 0 else None
        elif _clique_cover_bound(adj, p) <= need:
            sol = None
        else:
            comps = _components(adj, p)
            if len(comps) > 1:
                bounds = [_clique_cover_bound(adj, c) for c in comps]
                slack = sum(bounds)
                sol, size = 0, 0
                for comp, ub in zip(comps, bounds):
                    slack -= ub
                    part = solve(adj, comp, need - size - slack)
                    if part is None:
                        sol = None
                        break
                    sol |= part
                    size += part.bit_count()
            else:
                v = max(bits(p), key=lambda u: ((adj[u] & p).bit_count(), -u))
                sol = solve(adj, p & ~(adj[v] | 1 << v), need - 1)
                if sol is not None:
                    sol |= 1 << v
                    need = sol.bit_count()
                other = solve(adj, p & ~(1 << v), need)
                if other is not None:
                    sol = other
        if sol is None:
            return None
        return _unfold(sol | taken, folds)

    return solve(g.adj, p, -1)


def independence_number(g: BaseGraph, budget: SolverBudget | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact independence number and a maximum independent set."""
    s = _max_independent(g, g.all_mask, _Meter(budget))
    return s.bit_count(), _sorted_tuple(s)


def vertex_cover_number(g: BaseGraph, budget: SolverBudget | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact vertex cover number: the complement of a maximum independent set."""
    s = _max_independent(g, g.all_mask, _Meter(budget))
    cover = g.all_mask & ~s
    return cover.bit_count(), _sorted_tuple(cover)


# -- domination -------------------------------------------------------------

def _packing_bound(closed, undominated: int, allowed: int) -> int:
    """Greedy count of undominated vertices with pairwise disjoint candidate sets."""
    used = 0
    count = 0
    for u in bits(undominated):
        c = closed[u] & allowed
        if not c & used:
            count += 1
            used |= c
    return count


def _coverage_bound(closed, undominated: int, allowed: int) -> int:
    """Fractional covering bound.

    Undominated ``u`` gets weight 1 / (largest number of undominated vertices
    any of its candidate dominators covers); a chosen vertex collects at most
    weight 1, so the weights sum to a lower bound.
    """
    gain = {}
    total = 0.0
    for u in bits(undominated):
        best = 0
        for c in bits(closed[u] & allowed):
            k = gain.get(c)
            if k is None:
                k = gain[c] = (closed[c] & undominated).bit_count()
            if k > best:
                best = k
        if not best:
            return undominated.bit_count() + 1
        total += 1.0 / best
    return math.ceil(total - 1e-9)


def _pick_branch_vertex(closed, undominated: int, allowed: int) -> tuple[int, int]:
    """Undominated vertex with the fewest allowed dominators."""
    best_u, best_c, best_k = -1, 0, None
    for u in bits(undominated):
        c = closed[u] & allowed
        k = c.bit_count()
        if best_k is None or k < best_k:
            best_u, best_c, best_k = u, c, k
            if k <= 1:
                break
    return best_u, best_c


def _greedy_dominating(closed, full: int) -> int:
    undominated, chosen = full, 0
    while undominated:
        v = max(bits(full), key=lambda c: ((closed[c] & undominated).bit_count(), -c))
        chosen |= 1 << v
        undominated &= ~closed[v]
    return chosen


def _interaction_components(closed, undominated: int, allowed: int) -> list[int]:
    """Split undominated vertices into groups that share no candidate dominator."""
    comps = []
    left = undominated
    while left:
        comp = frontier = left & -left
        reach = 0
        while frontier:
            for u in bits(frontier):
                reach |= closed[u] & allowed
            grown = 0
            for c in bits(reach):
                grown |= closed[c]
            frontier = grown & left & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def _min_dominating(g: BaseGraph, meter: _Meter) -> int:
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    full = g.all_mask

    def lower(undominated: int, allowed: int) -> int:
        return max(_packing_bound(closed, undominated, allowed),
                   _coverage_bound(closed, undominated, allowed))

    # (undominated, relevant allowed) -> exact answer, or proven lower bound
    exact: dict[tuple[int, int], int] = {}
    floor: dict[tuple[int, int], int] = {}

    def solve(undominated: int, allowed: int, cutoff: int) -> int | None:
        """Cheapest set of allowed vertices dominating ``undominated``, if smaller than cutoff."""
        if not undominated:
            return 0
        reach = 0
        for u in bits(undominated):
            reach |= closed[u]
        key = (undominated, allowed & reach)
        if key in exact:
            hit = exact[key]
            return hit if hit.bit_count() < cutoff else None
        if floor.get(key, 0) >= cutoff:
            return None
        found = _solve(undominated, allowed, cutoff)
        if found is None:
            floor[key] = max(floor.get(key, 0), cutoff)
        else:
            exact[key] = found
        return found

    def _solve(undominated: int, allowed: int, cutoff: int) -> int | None:
        meter.tick()
        if lower(undominated, allowed) >= cutoff:
            return None
        comps = _interaction_components(closed, undominated, allowed)
        if len(comps) > 1:
            bounds = [lower(c, allowed) for c in comps]
            slack = sum(bounds)
            sol, size = 0, 0
            for comp, lb in zip(comps, bounds):
                slack -= lb
                part = solve(comp, allowed, cutoff - size - slack)
                if part is None:
                    return None
                sol |= part
                size += part.bit_count()
            return sol
        _, cands = _pick_branch_vertex(closed, undominated, allowed)
        if not cands:
            return None
        cover = {c: closed[c] & undominated for c in bits(cands)}
        # drop a candidate whose coverage is contained in another's
        keep = [c for c in cover
                if not any(o != c and cover[c] & ~cover[o] == 0
                           and (cover[c] != cover[o] or o < c) for o in cover)]
        keep.sort(key=lambda c: (-cover[c].bit_count(), c))
        best = None
        for c in keep:
            sub = solve(undominated & ~closed[c], allowed, cutoff - 1)
            if sub is not None:
                best = sub | 1 << c
                cutoff = best.bit_count()
            allowed &= ~(1 << c)
        return best

    greedy = _greedy_dominating(closed, full)
    found = solve(full, full, greedy.bit_count())
    return greedy if found is None else found


def domination_number(g: BaseGraph, budget: SolverBudget | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact domination number and a minimum dominating set."""
    d = _min_dominating(g, _Meter(budget))
    return d.bit_count(), _sorted_tuple(d)


@dataclass(frozen=True)
class GammaSetFamily:
    """All minimum dominating sets of a graph, in lexicographic order."""

    gamma: int
    sets: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.sets)

    @property
    def unique(self) -> bool:
        return len(self.sets) == 1


def enumerate_gamma_sets(g: BaseGraph, budget: SolverBudget | None = None) -> GammaSetFamily:
    """Every dominating set of size gamma(g).

    Depth-first: branch on the undominated vertex with fewest dominators and,
    after exploring dominator ``c``, forbid ``c`` in the sibling branches, so
    each set is reached exactly once.
    """
    meter = _Meter(budget)
    gamma = _min_dominating(g, meter).bit_count()
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    found = []

    def search(undominated: int, allowed: int, chosen: int, size: int):
        meter.tick()
        if not undominated:
            found.append(chosen)
            return
        if size >= gamma:
            return
        if size + _packing_bound(closed, undominated, allowed) > gamma:
            return
        _, cands = _pick_branch_vertex(closed, undominated, allowed)
        for c in bits(cands):
            search(undominated & ~closed[c], allowed, chosen | 1 << c, size + 1)
            allowed &= ~(1 << c)

    search(g.all_mask, g.all_mask, 0, 0)
    sets = sorted(_sorted_tuple(s) for s in found)
    return GammaSetFamily(gamma, tuple(sets))


def xi_pair(g: BaseGraph, family: GammaSetFamily | None = None,
            budget: SolverBudget | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A gamma-set D and a largest D' within it inducing no isolated vertex.

    For fixed D the largest such D' is D minus its vertices isolated in <D>.
    Ties go to the lexicographically first D.
    """
    family = family or enumerate_gamma_sets(g, budget)
    best = None
    for d in family.sets:
        dm = to_mask(d)
        core = dm & ~induced_isolated_mask(g, dm)
        if best is None or core.bit_count() > best[1].bit_count():
            best = (dm, core)
    return _sorted_tuple(best[0]), _sorted_tuple(best[1])


def xi(g: BaseGraph, family: GammaSetFamily | None = None,
       budget: SolverBudget | None = None) -> int:
    return len(xi_pair(g, family, budget)[1])


def has_unique_gamma_set(g: BaseGraph, budget: SolverBudget | None = None) -> bool:
    return enumerate_gamma_sets(g, budget).unique


def dominated_mask(g: BaseGraph, s: int) -> int:
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def require_dominating(g: BaseGraph, d) -> int:
    dm = to_mask(d)
    if dominated_mask(g, dm) != g.all_mask:
        raise PreconditionError(f"{sorted(from_mask(dm))} does not dominate the graph")
    return dm

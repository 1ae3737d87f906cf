"""One test per acceptance criterion; each prints a PASS/FAIL line with its time."""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from sierpgraph import oracles
from sierpgraph.corpus import check_counts, connected_graphs, random_graphs, trees
from sierpgraph.graph import tailed_triangle_graph, induced_isolated_mask, is_connected, leaves, star_graph, to_mask
from sierpgraph.harness import CampaignSpec, run_campaign
from sierpgraph.invariants import (
    domination_profile,
    domination_upper_bound,
    domination_witness,
    leaf_count_formula,
    order_size_formula,
    star_domination_formula,
)
from sierpgraph.sierpinski import build_direct, build_recursive
from sierpgraph.solvers import (
    chromatic_number,
    clique_number,
    domination_number,
    enumerate_gamma_sets,
    independence_number,
    vertex_cover_number,
    xi,
)
from sierpgraph.validate import is_dominating_set


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.failures = []
        self.checked = 0

    def expect(self, ok, what):
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.failures.append(f"raised {exc_type.__name__}: {exc}")
        if elapsed > self.limit:
            self.failures.append(f"took {elapsed:.1f}s > {self.limit}s")
        verdict = "FAIL" if self.failures else "PASS"
        line = (f"[{verdict}] criterion {self.number:>2} {self.title}: "
                f"{self.checked} checks in {elapsed:.2f}s (limit {self.limit}s)")
        if self.failures:
            line += "; " + "; ".join(self.failures[:5])
        ACCEPTANCE_LINES.append(line)
        print(line)
        return False


CORPUS5 = connected_graphs(5)


def test_criterion_01_construction_equivalence():
    with Criterion(1, "direct and recursive construction agree", 60) as c:
        check_counts(5)
        c.expect(len(CORPUS5) == 31, f"corpus has {len(CORPUS5)} graphs")
        for ng in CORPUS5:
            for t in (1, 2, 3):
                a, b = build_direct(ng.graph, t), build_recursive(ng.graph, t)
                c.expect(a.n == b.n and a.edges == b.edges, f"{ng.name} t={t}")
    assert not c.failures


def test_criterion_02_order_and_size():
    with Criterion(2, "order n^t and size m(n^t-1)/(n-1)", 60) as c:
        for ng in CORPUS5:
            g = ng.graph
            for t in range(1, 5):
                if g.n**t > 10**4:
                    continue
                sg = build_direct(g, t)
                c.expect((sg.n, sg.m) == order_size_formula(g.n, g.m, t), f"{ng.name} t={t}")
    assert not c.failures


def test_criterion_03_tree_leaves():
    with Criterion(3, "leaf count of S(T,t) and tree-ness", 120) as c:
        forest = trees(7)
        c.expect(len(forest) == 1 + 1 + 1 + 2 + 3 + 6 + 11, "tree corpus size")
        for ng in forest:
            g = ng.graph
            for t in range(1, 5):
                if g.n**t > 10**4:
                    continue
                sg = build_direct(g, t)
                c.expect(len(leaves(sg)) == leaf_count_formula(g, t), f"{ng.name} t={t} leaves")
                c.expect(sg.m == sg.n - 1 and is_connected(sg), f"{ng.name} t={t} not a tree")
    assert not c.failures


def test_criterion_04_chi_omega():
    with Criterion(4, "chi and omega unchanged by S(.,t)", 600) as c:
        for ng in CORPUS5:
            g = ng.graph
            chi, omega = chromatic_number(g)[0], clique_number(g)[0]
            for t in (1, 2, 3):
                sg = build_direct(g, t)
                c.expect(chromatic_number(sg)[0] == chi, f"{ng.name} t={t} chi")
                c.expect(clique_number(sg)[0] == omega, f"{ng.name} t={t} omega")
    assert not c.failures


def test_criterion_05_beta_alpha():
    with Criterion(5, "beta and alpha scale by n^(t-1), Gallai identity", 600) as c:
        for ng in CORPUS5:
            g = ng.graph
            beta, alpha = vertex_cover_number(g)[0], independence_number(g)[0]
            for t in (1, 2, 3):
                sg = build_direct(g, t)
                b_s, a_s = vertex_cover_number(sg)[0], independence_number(sg)[0]
                c.expect(b_s == g.n ** (t - 1) * beta, f"{ng.name} t={t} beta")
                c.expect(a_s == g.n ** (t - 1) * alpha, f"{ng.name} t={t} alpha")
                c.expect(a_s + b_s == sg.n, f"{ng.name} t={t} gallai")
    assert not c.failures


def test_criterion_06_domination_bound():
    with Criterion(6, "gamma(S(G,2)) <= n gamma - xi with a valid D*", 600) as c:
        for ng in CORPUS5:
            g = ng.graph
            prof = domination_profile(g)
            bound = domination_upper_bound(g.n, prof.gamma, prof.xi, 2)
            sg = build_direct(g, 2)
            witness = domination_witness(g, prof.xi_set, prof.xi_subset, 2)
            c.expect(len(witness) == bound and is_dominating_set(sg, witness), f"{ng.name} D*")
            c.expect(domination_number(sg)[0] <= bound, f"{ng.name} bound")
    assert not c.failures


def test_criterion_07_stars():
    exact = [(r, 2) for r in range(1, 5)] + [(1, 3), (2, 3)]
    larger = [(r, t) for r in range(1, 7) for t in (2, 3, 4) if (r, t) not in exact]
    with Criterion(7, "gamma(S(K_1r,t)) = (r+1)^(t-1)", 600) as c:
        for r, t in exact:
            sg = build_direct(star_graph(r), t)
            got = domination_number(sg)[0]
            want = star_domination_formula(r, t)
            c.expect(got == want, f"r={r} t={t}: exact {got} vs formula {want}")
        for r, t in larger:
            sg = build_direct(star_graph(r), t)
            witness = domination_witness(star_graph(r), [0], [], t)
            ok = len(witness) == star_domination_formula(r, t) and is_dominating_set(sg, witness)
            c.expect(ok, f"r={r} t={t} witness")
    assert not c.failures


def test_criterion_08_equivalence():
    with Criterion(8, "gamma(S(G,3)) = n^2 gamma iff xi = 0 and unique gamma-set", 600) as c:
        in_scope = 0
        for ng in connected_graphs(4):
            g = ng.graph
            prof = domination_profile(g)
            if prof.gamma != prof.beta:
                continue
            in_scope += 1
            gamma_s = domination_number(build_direct(g, 3))[0]
            side_a = gamma_s == g.n**2 * prof.gamma
            side_b = prof.xi == 0 and prof.unique
            c.expect(side_a == side_b, f"{ng.name}: a={side_a} b={side_b} gamma(S)={gamma_s}")
        c.expect(in_scope > 0, "no graph with gamma = beta")
    assert not c.failures


def _xi_by_subsets(g, d):
    from itertools import combinations

    for k in range(len(d), 0, -1):
        if any(not induced_isolated_mask(g, to_mask(s)) for s in combinations(d, k)):
            return k
    return 0


def test_criterion_09_oracle_equivalence():
    sample = random_graphs(200, 8, seed=20240917)
    with Criterion(9, "solvers match brute-force oracles", 600) as c:
        for ng in CORPUS5 + sample:
            g = ng.graph
            fam = enumerate_gamma_sets(g)
            gamma_b, sets_b = oracles.brute_gamma_sets(g)
            c.expect(chromatic_number(g)[0] == oracles.brute_chromatic(g), f"{ng.name} chi")
            c.expect(clique_number(g)[0] == oracles.brute_clique(g), f"{ng.name} omega")
            c.expect(vertex_cover_number(g)[0] == oracles.brute_vertex_cover(g), f"{ng.name} beta")
            c.expect(independence_number(g)[0] == oracles.brute_independence(g), f"{ng.name} alpha")
            c.expect(domination_number(g)[0] == oracles.brute_domination(g), f"{ng.name} gamma")
            c.expect(fam.gamma == gamma_b and list(fam.sets) == sets_b, f"{ng.name} gamma-sets")
            c.expect(xi(g, fam) == oracles.brute_xi(g), f"{ng.name} xi")
            for d in fam.sets:
                dm = to_mask(d)
                short = (dm & ~induced_isolated_mask(g, dm)).bit_count()
                c.expect(short == _xi_by_subsets(g, d), f"{ng.name} xi shortcut {d}")
    assert not c.failures


def test_criterion_10_tailed_triangle():
    with Criterion(10, "tailed-triangle graph golden values", 10) as c:
        g = tailed_triangle_graph()
        c.expect(vertex_cover_number(g)[0] == 3, "beta")
        c.expect(independence_number(g)[0] == 4, "alpha")
        c.expect(chromatic_number(g)[0] == 3, "chi")
        c.expect(clique_number(g)[0] == 3, "omega")
        c.expect(domination_number(g)[0] == 3, "gamma")
        s2, s3 = build_direct(g, 2), build_direct(g, 3)
        c.expect((s2.n, s2.m) == (49, 56), "S(G,2) order/size")
        c.expect((s3.n, s3.m) == (343, 399), "S(G,3) order/size")
    assert not c.failures


@pytest.mark.slow
def test_harness_matrix_matches_direct_checks():
    """The CLI campaign over the same corpus reports a single red cell: stars at r=1, t=3."""
    report = run_campaign(CampaignSpec("connected", 5, t_max=3))
    bad = [(r.graph, r.t, r.param) for r in report.results if r.status in ("mismatch", "untested")]
    assert bad == [("conn2_000", 3, "gamma-stars")]

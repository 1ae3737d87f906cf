import pytest
from hypothesis import given, settings, strategies as st

from sierpgraph.corpus import connected_graphs, trees
from sierpgraph.errors import PreconditionError
from sierpgraph.graph import (
    complete_graph,
    cycle_graph,
    double_star,
    is_tree,
    leaves,
    path_graph,
    star_graph,
)
from sierpgraph.invariants import (
    alpha_formula,
    beta_formula,
    domination_profile,
    domination_upper_bound,
    domination_witness,
    equality_certificate,
    equivalence_check,
    leaf_count_formula,
    lift_coloring,
    lift_cover,
    order_size_formula,
    star_domination_formula,
    support_leaf_lemma_check,
)
from sierpgraph.sierpinski import build_direct
from sierpgraph.solvers import chromatic_number, domination_number, vertex_cover_number
from sierpgraph.validate import is_dominating_set, is_proper_coloring, is_vertex_cover


def test_order_size_examples():
    assert order_size_formula(7, 7, 2) == (49, 56)
    assert order_size_formula(7, 7, 3) == (343, 399)
    assert order_size_formula(2, 1, 3) == (8, 7)
    assert order_size_formula(1, 0, 9) == (1, 0)
    with pytest.raises(PreconditionError):
        order_size_formula(3, 2, 0)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(connected_graphs(4)), st.integers(1, 3))
def test_order_size_matches_construction(ng, t):
    g = ng.graph
    sg = build_direct(g, t)
    assert order_size_formula(g.n, g.m, t) == (sg.n, sg.m)


def test_leaf_formula_examples():
    assert leaf_count_formula(path_graph(2), 4) == 2
    assert leaf_count_formula(star_graph(3), 2) == 9
    assert leaf_count_formula(path_graph(1), 3) == 0
    with pytest.raises(PreconditionError):
        leaf_count_formula(cycle_graph(4), 2)


@pytest.mark.parametrize("ng", trees(6), ids=lambda ng: ng.name)
def test_leaf_formula_on_trees(ng):
    for t in (1, 2, 3):
        sg = build_direct(ng.graph, t)
        assert is_tree(sg)
        assert len(leaves(sg)) == leaf_count_formula(ng.graph, t)


def test_lifted_colouring_and_cover(tt7):
    _, colors = chromatic_number(tt7)
    for t in (1, 2, 3):
        sg = build_direct(tt7, t)
        assert is_proper_coloring(sg, lift_coloring(tt7, colors, t))
    cover = lift_cover(tt7, [2, 3, 5], 2)
    assert len(cover) == 21 == beta_formula(7, 3, 2)
    assert is_vertex_cover(build_direct(tt7, 2), cover)
    assert lift_cover(path_graph(2), [0], 3) == [0, 2, 4, 6]
    with pytest.raises(PreconditionError):
        lift_cover(tt7, [2, 3], 2)
    with pytest.raises(PreconditionError):
        lift_coloring(tt7, [1] * 7, 2)


def test_beta_alpha_formulas():
    assert beta_formula(7, 3, 2) == 21 and alpha_formula(7, 4, 2) == 28
    assert beta_formula(2, 1, 3) == 4 and alpha_formula(2, 1, 3) == 4
    g = build_direct(path_graph(2), 3)
    assert vertex_cover_number(g)[0] == 4


def test_domination_bound_and_witness():
    assert domination_upper_bound(4, 1, 0, 2) == 4
    assert domination_upper_bound(4, 2, 2, 2) == 6
    assert domination_upper_bound(4, 2, 2, 3) == 24
    c4 = cycle_graph(4)
    for t in (2, 3):
        sg = build_direct(c4, t)
        w = domination_witness(c4, [0, 1], [0, 1], t)
        assert len(w) == domination_upper_bound(4, 2, 2, t)
        assert is_dominating_set(sg, w)
        plain = domination_witness(c4, [0, 1], [], t)
        assert len(plain) == 2 * 4 ** (t - 1) and is_dominating_set(sg, plain)
    assert domination_number(build_direct(c4, 2))[0] == 4
    with pytest.raises(PreconditionError):
        domination_witness(c4, [0], [], 2)
    with pytest.raises(PreconditionError):
        domination_witness(c4, [0, 2], [0, 2], 2)
    with pytest.raises(PreconditionError):
        domination_witness(c4, [0, 1], [0, 1], 1)
    with pytest.raises(PreconditionError):
        domination_upper_bound(4, 2, 2, 1)


def test_domination_profile(tt7):
    p = domination_profile(tt7)
    assert (p.gamma, p.beta, p.xi, len(p.gamma_sets)) == (3, 3, 2, 7)
    p = domination_profile(star_graph(3))
    assert p.unique and p.gamma_equals_beta and p.xi == 0


def test_equality_certificate():
    # unique gamma-set, gamma == beta, xi = 2: bound attained at 10
    v = equality_certificate(double_star(2, 2), 2)
    assert v.status == "match" and v.expected == v.observed == 10
    v = equality_certificate(star_graph(3), 2)
    assert v.status == "match" and v.observed == 4
    assert equality_certificate(cycle_graph(4), 2).status == "not-applicable"
    assert equality_certificate(complete_graph(3), 2).status == "not-applicable"
    assert equality_certificate(star_graph(3), 3, exact_limit=10).status == "bound-holds"


def test_equivalence_check():
    v = equivalence_check(star_graph(3), 3)
    assert v.status == "match" and v.observed == 16 and v.details["a"] and v.details["b"]
    v = equivalence_check(cycle_graph(4), 3)
    assert v.status == "match" and not v.details["a"] and not v.details["b"]
    assert equivalence_check(complete_graph(3), 3).status == "not-applicable"
    with pytest.raises(PreconditionError):
        equivalence_check(star_graph(3), 2)


def test_equivalence_for_star_on_one_edge():
    # P2 has two gamma-sets, so the right side is false; gamma(P8) = 3 < 4
    v = equivalence_check(path_graph(2), 3)
    assert v.status == "match" and v.observed == 3 and v.expected == 4


def test_support_leaf_lemma():
    v = support_leaf_lemma_check(star_graph(4))
    assert v.status == "match" and v.observed == 4
    assert support_leaf_lemma_check(double_star(2, 3)).status == "match"
    assert support_leaf_lemma_check(cycle_graph(4)).status == "not-applicable"
    assert support_leaf_lemma_check(path_graph(2)).status == "not-applicable"


def test_lemma_on_corpus():
    for ng in connected_graphs(6):
        assert support_leaf_lemma_check(ng.graph).status in ("match", "not-applicable")


def test_star_formula():
    assert star_domination_formula(3, 2) == 4
    assert star_domination_formula(2, 3) == 9
    assert star_domination_formula(1, 1) == 1

"""Verification campaigns: every closed formula checked against exact solvers.

A campaign is a corpus of base graphs times a range of depths times a list of
parameters. Each (graph, t, parameter) triple becomes one :class:`CheckResult`.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import oracles
from .corpus import NamedGraph, family as corpus_family
from .errors import ResourceLimitError
from .graph import BaseGraph, is_connected, is_tree, leaves
from .invariants import (
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
from .sierpinski import build_direct, build_recursive
from .solvers import (
    SolverBudget,
    chromatic_number,
    clique_number,
    domination_number,
    enumerate_gamma_sets,
    independence_number,
    vertex_cover_number,
    xi,
)
from .validate import (
    is_clique,
    is_dominating_set,
    is_independent_set,
    is_proper_coloring,
    is_vertex_cover,
)

PARAMS = (
    "construction", "order-size", "leaves", "chi", "omega", "beta", "alpha",
    "gamma-bound", "gamma-equality", "gamma-stars", "equivalence", "lemma", "oracle",
)
# parameters that do not depend on t; scheduled once, at the smallest depth
DEPTH_FREE = ("lemma", "oracle")
STATUSES = ("match", "mismatch", "bound-holds", "out-of-scope", "untested")


@dataclass(frozen=True)
class CheckResult:
    graph: str
    t: int
    param: str
    formula: int | None
    oracle: int | None
    witness_valid: bool | None
    status: str
    seconds: float = field(default=0.0, compare=False)
    note: str = ""

    def sort_key(self):
        return (self.graph, self.t, PARAMS.index(self.param))


@dataclass
class CampaignSpec:
    family: str
    max_n: int
    t_min: int = 1
    t_max: int = 2
    params: tuple[str, ...] = PARAMS
    min_n: int = 1
    max_vertices: int = 10**4
    solver_max_vertices: int = 125
    gamma_exact_limit: int = 64
    budget: SolverBudget = field(default_factory=SolverBudget)


@dataclass
class VerificationReport:
    results: list[CheckResult]
    scheduled: int

    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return not any(r.status == "mismatch" for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_text(self, timing: bool = False) -> str:
        head = f"{'graph':<16} {'t':>2} {'param':<15} {'formula':>10} {'oracle':>10} {'witness':>7}  status"
        if timing:
            head += "  seconds"
        lines = [head, "-" * len(head)]
        for r in self.results:
            row = (f"{r.graph:<16} {r.t:>2} {r.param:<15} {_fmt(r.formula):>10} "
                   f"{_fmt(r.oracle):>10} {_fmt(r.witness_valid):>7}  {r.status}")
            if timing:
                row += f"  {r.seconds:.3f}"
            if r.note:
                row += f"  [{r.note}]"
            lines.append(row)
        counts = self.counts()
        lines.append("-" * len(head))
        lines.append(f"scheduled={self.scheduled} " + " ".join(f"{k}={v}" for k, v in counts.items()))
        return "\n".join(lines) + "\n"

    def to_kv(self, timing: bool = False) -> str:
        lines = []
        for r in self.results:
            rec = (f"graph={r.graph} t={r.t} param={r.param} formula={_fmt(r.formula)} "
                   f"oracle={_fmt(r.oracle)} witness={_fmt(r.witness_valid)} status={r.status}")
            if timing:
                rec += f" seconds={r.seconds:.6f}"
            lines.append(rec)
        counts = self.counts()
        lines.append(f"total scheduled={self.scheduled} " + " ".join(f"{k}={v}" for k, v in counts.items()))
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _status(equal: bool, witness_ok: bool = True) -> str:
    return "match" if equal and witness_ok else "mismatch"


# -- individual checks ------------------------------------------------------

def check_construction(g: BaseGraph, t: int) -> tuple:
    a = build_direct(g, t)
    b = build_recursive(g, t)
    same = a.edges == b.edges
    return a.m, b.m, same, _status(same)


def check_order_size(g: BaseGraph, t: int) -> tuple:
    sg = build_direct(g, t)
    order, size = order_size_formula(g.n, g.m, t)
    ok = (sg.n, sg.m) == (order, size)
    return size, sg.m, None, _status(ok), f"order {sg.n} vs {order}"


def check_leaves(g: BaseGraph, t: int) -> tuple:
    if not is_tree(g):
        return None, None, None, "out-of-scope"
    sg = build_direct(g, t)
    formula = leaf_count_formula(g, t)
    scanned = len(leaves(sg))
    still_tree = sg.m == sg.n - 1 and is_connected(sg)
    return formula, scanned, still_tree, _status(formula == scanned, still_tree)


def check_chi(g, t, budget):
    k, colors = chromatic_number(g, budget)
    sg = build_direct(g, t)
    k_s, colors_s = chromatic_number(sg, budget)
    lifted = lift_coloring(g, colors, t)
    wit = is_proper_coloring(sg, lifted) and is_proper_coloring(sg, colors_s)
    return k, k_s, wit, _status(k == k_s, wit)


def check_omega(g, t, budget):
    w, _ = clique_number(g, budget)
    sg = build_direct(g, t)
    w_s, clique = clique_number(sg, budget)
    wit = is_clique(sg, clique) and len(clique) == w_s
    return w, w_s, wit, _status(w == w_s, wit)


def check_beta(g, t, budget):
    b, cover = vertex_cover_number(g, budget)
    sg = build_direct(g, t)
    b_s, cover_s = vertex_cover_number(sg, budget)
    formula = beta_formula(g.n, b, t)
    lifted = lift_cover(g, cover, t)
    wit = (is_vertex_cover(sg, lifted) and len(lifted) == formula
           and is_vertex_cover(sg, cover_s))
    return formula, b_s, wit, _status(formula == b_s, wit)


def check_alpha(g, t, budget):
    a, indep = independence_number(g, budget)
    sg = build_direct(g, t)
    a_s, indep_s = independence_number(sg, budget)
    b_s, _ = vertex_cover_number(sg, budget)
    formula = alpha_formula(g.n, a, t)
    n = g.n
    lifted = [w * n + x for w in range(n ** (t - 1)) for x in indep]
    wit = is_independent_set(sg, lifted) and is_independent_set(sg, indep_s)
    gallai = a_s + b_s == sg.n
    note = "" if gallai else "alpha + beta != order"
    return formula, a_s, wit, _status(formula == a_s and gallai, wit), note


def check_gamma_bound(g, t, budget, exact_limit):
    prof = domination_profile(g, budget)
    bound = domination_upper_bound(g.n, prof.gamma, prof.xi, t)
    sg = build_direct(g, t)
    witness = domination_witness(g, prof.xi_set, prof.xi_subset, t)
    wit = len(witness) == bound and is_dominating_set(sg, witness)
    if sg.n > exact_limit:
        return bound, None, wit, "bound-holds" if wit else "mismatch"
    try:
        gamma_s, dom = domination_number(sg, budget)
    except ResourceLimitError:
        return bound, None, wit, "bound-holds" if wit else "mismatch", "exact solve out of budget"
    wit = wit and is_dominating_set(sg, dom)
    return bound, gamma_s, wit, "bound-holds" if wit and gamma_s <= bound else "mismatch"


def check_gamma_equality(g, t, budget, exact_limit):
    v = equality_certificate(g, t, budget, exact_limit)
    if v.status == "not-applicable":
        return None, None, None, "out-of-scope"
    return v.expected, v.observed, v.status != "mismatch", v.status


def check_gamma_stars(g, t, budget, exact_limit):
    r = g.n - 1
    if g.m != r or not all(g.has_edge(0, i) for i in range(1, g.n)) or r < 1:
        return None, None, None, "out-of-scope", "not a star with centre 0"
    formula = star_domination_formula(r, t)
    sg = build_direct(g, t)
    family = enumerate_gamma_sets(g, budget)
    d = family.sets[0]
    witness = domination_witness(g, d, (), t)
    wit = is_dominating_set(sg, witness) and len(witness) == formula
    if sg.n > exact_limit:
        return formula, None, wit, "bound-holds" if wit else "mismatch"
    gamma_s, _ = domination_number(sg, budget)
    return formula, gamma_s, wit, _status(gamma_s == formula, wit)


def check_equivalence(g, t, budget):
    if t < 3:
        return None, None, None, "out-of-scope", "needs t >= 3"
    v = equivalence_check(g, t, budget)
    if v.status == "not-applicable":
        return None, None, None, "out-of-scope", "gamma != beta"
    d = v.details
    note = f"a={d.get('a')} b={d.get('b')}" if "a" in d else ""
    return v.expected, v.observed, None, v.status, note


def check_lemma(g, budget):
    v = support_leaf_lemma_check(g, budget)
    if v.status == "not-applicable":
        return None, None, None, "out-of-scope"
    return v.expected, v.observed, None, v.status


def check_oracle(g, budget):
    """Solvers against the brute-force oracles on the base graph itself."""
    pairs = [
        (chromatic_number(g, budget)[0], oracles.brute_chromatic(g)),
        (clique_number(g, budget)[0], oracles.brute_clique(g)),
        (vertex_cover_number(g, budget)[0], oracles.brute_vertex_cover(g)),
        (independence_number(g, budget)[0], oracles.brute_independence(g)),
        (domination_number(g, budget)[0], oracles.brute_domination(g)),
    ]
    fam = enumerate_gamma_sets(g, budget)
    gamma_b, sets_b = oracles.brute_gamma_sets(g)
    pairs.append((xi(g, fam), oracles.brute_xi(g)))
    ok = all(a == b for a, b in pairs) and fam.gamma == gamma_b and list(fam.sets) == sets_b
    bad = [i for i, (a, b) in enumerate(pairs) if a != b]
    return len(pairs) + 1, len(pairs) + 1 - len(bad), None, _status(ok), \
        "" if ok else f"disagreeing checks {bad}"


def run_check(ng: NamedGraph, t: int, param: str, spec: CampaignSpec) -> CheckResult:
    g, budget = ng.graph, spec.budget
    start = time.perf_counter()
    try:
        if param == "construction":
            out = check_construction(g, t)
        elif param == "order-size":
            out = check_order_size(g, t)
        elif param == "leaves":
            out = check_leaves(g, t)
        elif param == "chi":
            out = check_chi(g, t, budget)
        elif param == "omega":
            out = check_omega(g, t, budget)
        elif param == "beta":
            out = check_beta(g, t, budget)
        elif param == "alpha":
            out = check_alpha(g, t, budget)
        elif param == "gamma-bound":
            out = check_gamma_bound(g, t, budget, spec.gamma_exact_limit)
        elif param == "gamma-equality":
            out = check_gamma_equality(g, t, budget, spec.gamma_exact_limit)
        elif param == "gamma-stars":
            out = check_gamma_stars(g, t, budget, spec.gamma_exact_limit)
        elif param == "equivalence":
            out = check_equivalence(g, t, budget)
        elif param == "lemma":
            out = check_lemma(g, budget)
        elif param == "oracle":
            out = check_oracle(g, budget)
        else:
            raise ValueError(f"unknown parameter {param!r}")
    except ResourceLimitError as exc:
        out = (None, None, None, "untested", str(exc))
    formula, oracle, wit, status, *rest = out
    return CheckResult(ng.name, t, param, formula, oracle, wit, status,
                       time.perf_counter() - start, rest[0] if rest else "")


_SOLVER_PARAMS = {"chi", "omega", "beta", "alpha", "gamma-bound", "gamma-equality",
                  "gamma-stars", "equivalence"}


def schedule(spec: CampaignSpec, graphs: list[NamedGraph] | None = None) -> list[tuple[NamedGraph, int, str]]:
    """The (graph, t, parameter) triples a campaign will run, in canonical order."""
    if graphs is None:
        graphs = corpus_family(spec.family, spec.max_n, spec.min_n)
    jobs = []
    for ng in graphs:
        n = ng.graph.n
        for param in spec.params:
            if param in DEPTH_FREE:
                jobs.append((ng, spec.t_min, param))
                continue
            for t in range(spec.t_min, spec.t_max + 1):
                size = n**t
                if size > spec.max_vertices:
                    continue
                if param in _SOLVER_PARAMS and size > spec.solver_max_vertices:
                    continue
                if param.startswith("gamma") and t < 2:
                    continue
                if param == "equivalence" and t < 3:
                    continue
                if param == "leaves" and not is_tree(ng.graph):
                    continue
                jobs.append((ng, t, param))
    return jobs


def _run_job(job):
    ng, t, param, spec = job
    return run_check(ng, t, param, spec)


def run_campaign(spec: CampaignSpec, graphs: list[NamedGraph] | None = None,
                 workers: int = 1) -> VerificationReport:
    jobs = schedule(spec, graphs)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_job, [(ng, t, p, spec) for ng, t, p in jobs]))
    else:
        results = [run_check(ng, t, p, spec) for ng, t, p in jobs]
    results.sort(key=CheckResult.sort_key)
    return VerificationReport(results, len(jobs))

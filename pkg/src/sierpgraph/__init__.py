"""Generalized Sierpinski graphs S(G, t), exact invariant solvers and formula checks."""

from .errors import GraphFormatError, PreconditionError, ResourceLimitError
from .graph import (
    BaseGraph,
    complete_graph,
    cycle_graph,
    double_star,
    export_dot,
    tailed_triangle_graph,
    induced_isolated_count,
    is_connected,
    is_tree,
    leaves,
    parse_edge_list,
    path_graph,
    star_graph,
    supports,
)
from .sierpinski import (
    ImplicitSierpinski,
    SierpinskiGraph,
    build_direct,
    build_recursive,
    copy_extreme,
    edge_rule,
    extreme_vertices,
)
from .solvers import (
    GammaSetFamily,
    SolverBudget,
    chromatic_number,
    clique_number,
    domination_number,
    enumerate_gamma_sets,
    has_unique_gamma_set,
    independence_number,
    vertex_cover_number,
    xi,
)

__version__ = "0.1.0"

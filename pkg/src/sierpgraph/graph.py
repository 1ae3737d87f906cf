"""Simple undirected graphs on vertices 0..n-1 backed by integer bit-sets.

Every vertex ``v`` owns an ``int`` whose bit ``u`` is set when ``u`` is a
neighbour of ``v``. Vertex subsets are passed around either as bit masks
(internally) or as ``frozenset`` objects (public API).
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import TextIO

from .errors import GraphFormatError


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


class BaseGraph:
    """Immutable simple graph.

    ``edges`` is stored as a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphFormatError("graph must have at least one vertex")
        adj = [0] * n
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise GraphFormatError(f"duplicate edge {e}")
            canon.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (BaseGraph, (self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Iterable[int]) -> tuple[BaseGraph, list[int]]:
        """Induced subgraph, relabelled to 0..k-1; also returns the old labels."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        keep = to_mask(old)
        edges = [(index[u], index[v]) for u, v in self.edges
                 if keep >> u & 1 and keep >> v & 1]
        return BaseGraph(len(old), edges), old

    def complement(self) -> BaseGraph:
        full = self.all_mask
        return BaseGraph(self.n, [(u, v) for u in range(self.n)
                                  for v in bits(full & ~self.adj[u] & ~((2 << u) - 1))])

    def __eq__(self, other):
        if not isinstance(other, BaseGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


# -- named families ---------------------------------------------------------

def complete_graph(n: int) -> BaseGraph:
    return BaseGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> BaseGraph:
    return BaseGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> BaseGraph:
    if n < 3:
        raise GraphFormatError("a simple cycle needs at least 3 vertices")
    return BaseGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(r: int) -> BaseGraph:
    """K_{1,r} with centre 0 and leaves 1..r."""
    return BaseGraph(r + 1, [(0, i) for i in range(1, r + 1)])


def double_star(a: int, b: int) -> BaseGraph:
    """Two adjacent centres 0 and 1 carrying ``a`` and ``b`` pendant leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return BaseGraph(2 + a + b, edges)


def tailed_triangle_graph() -> BaseGraph:
    """Triangle 2-3-4 with pendants 0-2, 1-3 and the tail 4-5-6."""
    return BaseGraph(7, [(0, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6)])


# -- structural queries -----------------------------------------------------

def leaves(g: BaseGraph) -> frozenset[int]:
    """Vertices of degree exactly one."""
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def supports(g: BaseGraph) -> dict[int, int]:
    """Map each support vertex to the number of leaves adjacent to it.

    For ``P2`` both endpoints are simultaneously leaves and supports.
    """
    leaf_mask = to_mask(leaves(g))
    out = {}
    for v in range(g.n):
        k = (g.adj[v] & leaf_mask).bit_count()
        if k:
            out[v] = k
    return out


def induced_isolated_mask(g: BaseGraph, s: int) -> int:
    """Bit mask of the members of ``s`` having no neighbour inside ``s``."""
    iso = 0
    for v in bits(s):
        if not g.adj[v] & s:
            iso |= 1 << v
    return iso


def induced_isolated_count(g: BaseGraph, s: Iterable[int]) -> int:
    return induced_isolated_mask(g, to_mask(s)).bit_count()


def components(g: BaseGraph, within: int | None = None) -> list[int]:
    """Connected components (as masks) of the subgraph induced by ``within``."""
    left = g.all_mask if within is None else within
    comps = []
    while left:
        seed = left & -left
        comp = frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & left & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def is_connected(g: BaseGraph) -> bool:
    return len(components(g)) == 1


def is_tree(g: BaseGraph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


# -- I/O --------------------------------------------------------------------

def parse_edge_list(text: str | bytes) -> BaseGraph:
    """Parse the ``n m`` header + ``u v`` lines format.

    Lines starting with ``#`` and blank lines are ignored.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    header = rows[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise GraphFormatError(f"malformed header {rows[0]!r}")
    n, m = int(header[0]), int(header[1])
    if n < 1:
        raise GraphFormatError("graph must have at least one vertex")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        tok = ln.split()
        if len(tok) != 2 or not all(t.isdigit() for t in tok):
            raise GraphFormatError(f"malformed edge line {ln!r}")
        edges.append((int(tok[0]), int(tok[1])))
    return BaseGraph(n, edges)


def read_edge_list(fh: TextIO) -> BaseGraph:
    return parse_edge_list(fh.read())


def format_edge_list(g: BaseGraph, header_comment: str | None = None) -> str:
    lines = []
    if header_comment:
        lines.append(f"# {header_comment}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def export_dot(g: BaseGraph, labels: list[str] | None = None, name: str = "G") -> str:
    """Undirected DOT text; ``labels`` overrides the default integer labels."""
    out = [f"graph {name} {{"]
    for v in range(g.n):
        lab = str(v) if labels is None else labels[v]
        out.append(f'  {v} [label="{lab}"];')
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"

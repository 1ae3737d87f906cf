"""Construction of generalized Sierpinski graphs S(G, t).

A vertex of S(G, t) is a word ``u1 u2 ... ut`` over the vertex set of the
base graph. Words are stored by their big-endian base-n integer code
``sum(u_i * n**(t-i))`` so that ``code // n`` drops the last letter and
``code % n`` reads it.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import PreconditionError, ResourceLimitError
from .graph import BaseGraph, bits, export_dot, format_edge_list

DEFAULT_VERTEX_BUDGET = 10**6

Word = tuple[int, ...]


def encode(word: Sequence[int], n: int) -> int:
    code = 0
    for letter in word:
        code = code * n + letter
    return code


def decode(code: int, n: int, t: int) -> Word:
    out = [0] * t
    for i in range(t - 1, -1, -1):
        code, out[i] = divmod(code, n)
    return tuple(out)


def word_label(word: Sequence[int], one_indexed: bool = False) -> str:
    shift = 1 if one_indexed else 0
    # multi-digit letters are dot-separated so labels stay unambiguous
    sep = "" if all(x + shift < 10 for x in word) else "."
    return sep.join(str(x + shift) for x in word)


def repunit(n: int, k: int) -> int:
    """Code of the word ``1 1 ... 1`` (k letters) in base n."""
    return (n**k - 1) // (n - 1) if n > 1 else k


def _check_budget(n: int, t: int, vertex_budget: int | None) -> None:
    if t < 1:
        raise PreconditionError("depth t must be >= 1")
    limit = DEFAULT_VERTEX_BUDGET if vertex_budget is None else vertex_budget
    if n**t > limit:
        raise ResourceLimitError(f"S(G,{t}) has {n**t} vertices, budget is {limit}")


def edge_rule(base: BaseGraph, u: Sequence[int], v: Sequence[int]) -> bool:
    """Decide adjacency of two words directly from the defining rule."""
    if len(u) != len(v):
        raise PreconditionError("words must have equal length")
    t = len(u)
    i = 0
    while i < t and u[i] == v[i]:
        i += 1
    if i == t:
        return False
    x, y = u[i], v[i]
    if not base.has_edge(x, y):
        return False
    return all(u[j] == y and v[j] == x for j in range(i + 1, t))


class SierpinskiGraph(BaseGraph):
    """Materialized S(G, t); a ``BaseGraph`` on n**t vertices plus its origin."""

    __slots__ = ("base", "t")

    def __init__(self, base: BaseGraph, t: int, edges: Iterable[tuple[int, int]]):
        super().__init__(base.n**t, edges)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "t", t)

    def __reduce__(self):
        return (SierpinskiGraph, (self.base, self.t, self.edges))

    def word(self, code: int) -> Word:
        return decode(code, self.base.n, self.t)

    def code(self, word: Sequence[int]) -> int:
        if len(word) != self.t:
            raise PreconditionError(f"word {word!r} does not have length {self.t}")
        return encode(word, self.base.n)

    def labels(self, one_indexed: bool = False) -> list[str]:
        return [word_label(self.word(c), one_indexed) for c in range(self.n)]

    def copy_vertices(self, prefix: Sequence[int]) -> list[int]:
        """Codes of V_w = {w x : x in V} for a prefix w of length t-1."""
        head = encode(prefix, self.base.n) * self.base.n
        return [head + x for x in range(self.base.n)]

    def __repr__(self):
        return f"SierpinskiGraph(base={self.base!r}, t={self.t}, n={self.n}, m={self.m})"


def build_direct(base: BaseGraph, t: int, vertex_budget: int | None = None) -> SierpinskiGraph:
    """Enumerate edges as (prefix w, base edge {x, y}, suffix length k).

    Each edge is ``w x y^k -- w y x^k``; no pairwise scan of words is needed.
    """
    n = base.n
    _check_budget(n, t, vertex_budget)
    edges = []
    for plen in range(t):
        k = t - plen - 1
        scale = n ** (k + 1)
        ones = repunit(n, k)
        for p in range(n**plen):
            head = p * scale
            for x, y in base.edges:
                a = head + x * n**k + y * ones
                b = head + y * n**k + x * ones
                edges.append((a, b) if a < b else (b, a))
    return SierpinskiGraph(base, t, edges)


def build_recursive(base: BaseGraph, t: int, vertex_budget: int | None = None) -> SierpinskiGraph:
    """n relabelled copies of S(G, t-1) joined by the bridges ``x y..y -- y x..x``."""
    n = base.n
    _check_budget(n, t, vertex_budget)
    edges = list(base.edges)
    for depth in range(2, t + 1):
        block = n ** (depth - 1)
        ones = repunit(n, depth - 1)
        nxt = []
        for x in range(n):
            off = x * block
            nxt.extend((a + off, b + off) for a, b in edges)
        for x, y in base.edges:
            a = x * block + y * ones
            b = y * block + x * ones
            nxt.append((a, b) if a < b else (b, a))
        edges = nxt
    return SierpinskiGraph(base, t, edges)


def extreme_vertices(sg: SierpinskiGraph) -> list[Word]:
    n, t = sg.base.n, sg.t
    return [(x,) * t for x in range(n)]


def copy_extreme(sg: SierpinskiGraph, w: Sequence[int]) -> Word:
    """The extreme vertex of the copy <V_w>: w followed by the last letter of w."""
    if sg.t < 2 or len(w) != sg.t - 1:
        raise PreconditionError("copy_extreme needs t >= 2 and a prefix of length t-1")
    return tuple(w) + (w[-1],)


def linking_vertices(sg: SierpinskiGraph) -> list[int]:
    """Codes of the bridge endpoints ``x y..y`` with {x, y} an edge of the base."""
    n, t = sg.base.n, sg.t
    if t < 2:
        return []
    block = n ** (t - 1)
    ones = repunit(n, t - 1)
    out = []
    for x, y in sg.base.edges:
        out.append(x * block + y * ones)
        out.append(y * block + x * ones)
    return sorted(out)


def sierpinski_edge_list(sg: SierpinskiGraph) -> str:
    return format_edge_list(sg, f"sierpinski base_n={sg.base.n} t={sg.t}")


def sierpinski_dot(sg: SierpinskiGraph, one_indexed: bool = False) -> str:
    return export_dot(sg, sg.labels(one_indexed), name="S")


class ImplicitSierpinski:
    """Adjacency of S(G, t) answered on demand, without materializing edges.

    A word ``u`` has the in-copy neighbours ``u1..u(t-1) z`` for z adjacent to
    ``ut`` and at most one cross-copy neighbour: if ``u = w x c..c`` where the
    run of ``c`` is maximal and {x, c} is an edge, the neighbour is ``w c x..x``.
    """

    def __init__(self, base: BaseGraph, t: int):
        if t < 1:
            raise PreconditionError("depth t must be >= 1")
        self.base = base
        self.t = t
        self.order = base.n**t

    def neighbors(self, code: int) -> list[int]:
        n, t = self.base.n, self.t
        head, last = divmod(code, n)
        out = [head * n + z for z in bits(self.base.adj[last])]
        # strip the maximal run of ``last`` from the end
        rest, run = head, 1
        while run < t and rest % n == last:
            rest //= n
            run += 1
        if run < t:
            rest, x = divmod(rest, n)
            if self.base.has_edge(x, last):
                tail = n**run
                out.append((rest * n + last) * tail + x * repunit(n, run))
        return sorted(out)

    def degree(self, code: int) -> int:
        return len(self.neighbors(code))

    def adjacent(self, u: int, v: int) -> bool:
        n, t = self.base.n, self.t
        return edge_rule(self.base, decode(u, n, t), decode(v, n, t))

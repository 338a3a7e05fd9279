"""Simple undirected graphs, standard families, derived graphs and joins.

Vertices are ``0..n-1`` and the edge set is kept as a sorted tuple of
``(i, j)`` pairs with ``i < j``.  Two equal graphs therefore serialize to
identical edge lists, and every derived construction (line graph, Q-graph,
total graph, joins) is deterministic.

Derived graphs index the inserted vertex of edge ``k`` (canonical order) as
``n + k``.  Joins use the block order ``V(G1), I(G1), V(G2)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidInputError, InvalidParameterError, ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InvalidParameterError(f"vertex count must be a non-negative integer, got {self.n!r}")
        canon = set()
        for e in self.edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise InvalidInputError(f"self-loop at vertex {i}")
            if i > j:
                i, j = j, i
            if i < 0 or j >= self.n:
                raise InvalidInputError(f"edge ({i}, {j}) out of range for n={self.n}")
            canon.add((i, j))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1
        return a

    def neighbors(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return nbrs


def degrees(g: Graph) -> list[int]:
    deg = [0] * g.n
    for i, j in g.edges:
        deg[i] += 1
        deg[j] += 1
    return deg


def regularity(g: Graph) -> Optional[int]:
    """Common vertex degree, or ``None`` when degrees differ.

    The graph with no vertices counts as 0-regular.
    """
    deg = degrees(g)
    if not deg:
        return 0
    return deg[0] if all(d == deg[0] for d in deg) else None


def incidence_matrix(g: Graph) -> np.ndarray:
    """Vertex-edge incidence matrix, shape ``(n, m)``; column k is edge k."""
    r = np.zeros((g.n, g.m), dtype=np.int64)
    for k, (i, j) in enumerate(g.edges):
        r[i, k] = 1
        r[j, k] = 1
    return r


def incident_edge_pairs(g: Graph) -> list[Edge]:
    """Pairs ``(k, l)``, ``k < l``, of edge indices that share an endpoint."""
    at_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for k, (i, j) in enumerate(g.edges):
        at_vertex[i].append(k)
        at_vertex[j].append(k)
    pairs = set()
    for inc in at_vertex:
        pairs.update(itertools.combinations(inc, 2))
    return sorted(pairs)


def line_graph(g: Graph) -> Graph:
    return Graph(g.m, incident_edge_pairs(g))


def _subdivided(g: Graph, keep_original: bool) -> list[Edge]:
    n = g.n
    edges: list[Edge] = list(g.edges) if keep_original else []
    for k, (i, j) in enumerate(g.edges):
        edges.append((i, n + k))
        edges.append((j, n + k))
    edges.extend((n + k, n + l) for k, l in incident_edge_pairs(g))
    return edges


def q_graph(g: Graph) -> Graph:
    """Subdivide every edge and join inserted vertices of incident edges."""
    return Graph(g.n + g.m, _subdivided(g, keep_original=False))


def total_graph(g: Graph) -> Graph:
    """Like :func:`q_graph` but the original edges are kept."""
    return Graph(g.n + g.m, _subdivided(g, keep_original=True))


class JoinKind(enum.Enum):
    QVERTEX = "qvertex"
    QEDGE = "qedge"
    TVERTEX = "tvertex"
    TEDGE = "tedge"

    @property
    def total(self) -> bool:
        """True for the joins built on the total graph."""
        return self in (JoinKind.TVERTEX, JoinKind.TEDGE)

    @property
    def edge_join(self) -> bool:
        """True when ``G2`` attaches to the inserted vertices."""
        return self in (JoinKind.QEDGE, JoinKind.TEDGE)

    @classmethod
    def parse(cls, text: "str | JoinKind") -> "JoinKind":
        if isinstance(text, JoinKind):
            return text
        key = text.strip().lower().replace("-", "").replace("_", "")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ParseError(f"unknown join kind {text!r}; expected one of {[k.value for k in cls]}")


def join(kind: JoinKind, g1: Graph, g2: Graph) -> Graph:
    """The Q/T vertex/edge join of ``g1`` and ``g2``.

    Vertex order is ``V(g1)``, then the inserted vertices ``I(g1)`` in
    canonical edge order, then ``V(g2)``.
    """
    if g1.m == 0:
        raise InvalidInputError("the first factor of a join must have at least one edge")
    base = total_graph(g1) if kind.total else q_graph(g1)
    off = base.n
    edges = list(base.edges)
    edges.extend((off + i, off + j) for i, j in g2.edges)
    attach = range(g1.n, g1.n + g1.m) if kind.edge_join else range(g1.n)
    edges.extend((u, off + v) for u in attach for v in range(g2.n))
    return Graph(off + g2.n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[Edge] = []
    off = 0
    for g in graphs:
        edges.extend((off + i, off + j) for i, j in g.edges)
        off += g.n
    return Graph(off, edges)


def complete_bipartite_parts(g: Graph) -> Optional[tuple[int, int]]:
    """Return ``(a, b)`` with ``a <= b`` if ``g`` is ``K_{a,b}`` (a, b >= 1)."""
    if g.n < 2 or g.m == 0:
        return None
    nbrs = g.neighbors()
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if color[v] < 0:
                color[v] = 1 - color[u]
                stack.append(v)
            elif color[v] == color[u]:
                return None
    if -1 in color:
        return None
    a = color.count(0)
    b = g.n - a
    if g.m != a * b:
        return None
    return (min(a, b), max(a, b))


# -- standard families ---------------------------------------------------------

def _positive(name: str, *vals: int) -> None:
    for v in vals:
        if not isinstance(v, (int, np.integer)) or v <= 0:
            raise InvalidParameterError(f"{name} needs positive integer parameters, got {vals}")


def path(n: int) -> Graph:
    _positive("path", n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _positive("cycle", n)
    if n < 3:
        raise InvalidParameterError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _positive("complete", n)
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _positive("complete_bipartite", a, b)
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty(n: int) -> Graph:
    _positive("empty", n)
    return Graph(n)


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Circulant graph on ``Z_n`` with connection set ``{±j}``."""
    _positive("circulant", n)
    edges = set()
    for j in jumps:
        j %= n
        if j == 0:
            raise InvalidParameterError("circulant jumps must be nonzero mod n")
        edges.update((i, (i + j) % n) for i in range(n))
    return Graph(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def shrikhande() -> Graph:
    """Cayley graph of ``Z4 x Z4`` with connection set ``±{(1,0),(0,1),(1,1)}``."""
    def idx(x, y):
        return 4 * (x % 4) + (y % 4)
    edges = set()
    for x in range(4):
        for y in range(4):
            for dx, dy in ((1, 0), (0, 1), (1, 1)):
                edges.add((idx(x, y), idx(x + dx, y + dy)))
    return Graph(16, edges)


def rook(k: int) -> Graph:
    """``k x k`` rook's graph, i.e. the line graph of ``K_{k,k}``."""
    _positive("rook", k)
    edges = []
    for r in range(k):
        for c in range(k):
            v = k * r + c
            edges.extend((v, k * r + c2) for c2 in range(c + 1, k))
            edges.extend((v, k * r2 + c) for r2 in range(r + 1, k))
    return Graph(k * k, edges)


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "empty": (empty, 1),
    "rook": (rook, 1),
    "petersen": (petersen, 0),
    "shrikhande": (shrikhande, 0),
}
_ALIASES = {"cbipartite": "complete_bipartite", "bipartite": "complete_bipartite", "kab": "complete_bipartite"}


def build_family(family: str, *params: int) -> Graph:
    name = _ALIASES.get(family, family)
    if name not in _FAMILIES:
        raise InvalidParameterError(f"unknown graph family {family!r}")
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise InvalidParameterError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_family(descriptor: str) -> Graph:
    """Build a graph from a descriptor such as ``complete:4`` or ``cbipartite:2,3``."""
    name, _, rest = descriptor.strip().partition(":")
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
    except ValueError as exc:
        raise ParseError(f"bad family parameters in {descriptor!r}") from exc
    return build_family(name.strip().lower(), *params)


# -- edge-list text format -----------------------------------------------------

def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ParseError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token in edge list: {exc}") from exc
    if len(header) != 2:
        raise ParseError("edge list header must be 'n m'")
    n, m = header
    if any(len(p) != 2 for p in pairs):
        raise ParseError("every edge line must hold exactly two indices")
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges but {len(pairs)} were given")
    if len(set(tuple(sorted(p)) for p in pairs)) != m:
        raise ParseError("duplicate edge in edge list")
    try:
        return Graph(n, pairs)
    except (InvalidInputError, InvalidParameterError) as exc:
        raise ParseError(str(exc)) from exc


def read_edge_list(path_: str | Path) -> Graph:
    return parse_edge_list(Path(path_).read_text())


def write_edge_list(g: Graph, path_: str | Path) -> None:
    Path(path_).write_text(to_edge_list(g))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex permutation ``v -> perm[v]``."""
    return Graph(g.n, [(perm[i], perm[j]) for i, j in g.edges])

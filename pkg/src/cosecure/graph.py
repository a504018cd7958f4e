"""Immutable simple graphs, bipartitions, components and edge-list I/O.

Vertices are dense integers ``0..n-1``. Adjacency is kept both as sorted
tuples (for deterministic iteration) and as integer bitmasks (for the
exhaustive solvers, which test domination with a handful of ``|`` ops).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or edge-list documents.

    ``line`` is the 1-based line number in the source text, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int
    masks: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise GraphError("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        masks = tuple(_mask(a) for a in adj)
        return cls(n, adj, m, masks)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def isolated(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled in increasing order of the kept ids.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges), keep

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def mask_of(vertices: Iterable[int]) -> int:
    return _mask(vertices)


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


# -- standard families ------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with sides ``0..p-1`` and ``p..p+q-1``."""
    return Graph.from_edges(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def star_graph(leaves: int) -> Graph:
    """Center 0, leaves ``1..leaves``."""
    return complete_bipartite(1, leaves)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


# -- bipartition and components ---------------------------------------------

X, Y = 0, 1


@dataclass(frozen=True)
class Bipartition:
    """Two-sided labelling; ``side[v]`` is ``X`` (0) or ``Y`` (1)."""

    side: tuple[int, ...]

    @property
    def xs(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == X]

    @property
    def ys(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == Y]

    def validate(self, g: Graph) -> None:
        if len(self.side) != g.n:
            raise GraphError("bipartition size does not match graph")
        for u, v in g.edges():
            if self.side[u] == self.side[v]:
                raise GraphError(f"edge ({u}, {v}) is monochromatic")

    @classmethod
    def from_sides(cls, n: int, xs: Iterable[int]) -> "Bipartition":
        xs = set(xs)
        return cls(tuple(X if v in xs else Y for v in range(n)))


class NotBipartite(Exception):
    """Carries an odd cycle (closed walk order, first vertex not repeated)."""

    def __init__(self, cycle: list[int]):
        super().__init__(f"odd cycle {cycle}")
        self.cycle = cycle


def bipartition_of(g: Graph) -> Bipartition:
    """Two-colour ``g`` by BFS; the least vertex of each component goes to X.

    Raises :class:`NotBipartite` with an odd cycle as witness.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = X
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    raise NotBipartite(_odd_cycle(parent, u, w))
    return Bipartition(tuple(side))


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    # u and w are adjacent with equal BFS depth parity; join their tree paths
    pu = [u]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    pw = [w]
    while parent[pw[-1]] != -1:
        pw.append(parent[pw[-1]])
    on_pw = set(pw)
    meet = next(v for v in pu if v in on_pw)
    left = pu[: pu.index(meet) + 1]
    right = pw[: pw.index(meet)]
    return left[::-1] + right


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by least member."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


# -- edge-list text format --------------------------------------------------

def from_edge_list(text: str) -> Graph:
    """Parse an edge-list document.

    ``#`` starts a comment line. The first content line is ``n m``, each
    following line one edge ``u v``. Errors name the offending line.
    """
    header = None
    n = m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) != 2:
            raise GraphError(f"expected two integers, got {len(nums)}", lineno)
        if header is None:
            n, m = nums
            if n < 0 or m < 0:
                raise GraphError("negative header value", lineno)
            header = lineno
            continue
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphError("missing 'n m' header")
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}", header)
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return from_edge_list(fh.read())

"""Structural checks for gadget witnesses.

Tree/star/comb convexity of bipartite graphs, doubly perfect elimination
orderings, and an exhaustive chordless-cycle search for small bipartite
graphs. Trees are given as edge lists.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Sequence

from .graph import Bipartition, Graph, NotBipartite, bipartition_of

CHORDAL_BIPARTITE_GUARD = 30


def _tree_adjacency(edges: Iterable[Sequence[int]], vertices: Iterable[int] | None = None) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = defaultdict(set)
    count = 0
    for u, v in edges:
        if u == v or v in adj[u]:
            raise ValueError(f"tree edge ({u}, {v}) is a loop or repeated")
        adj[u].add(v)
        adj[v].add(u)
        count += 1
    for v in vertices or ():
        adj.setdefault(v, set())
    if adj and count != len(adj) - 1:
        raise ValueError(f"{count} edges on {len(adj)} vertices cannot form a tree")
    if adj and len(_reach(adj, next(iter(adj)), set(adj))) != len(adj):
        raise ValueError("tree is disconnected")
    return adj


def _reach(adj: dict[int, set[int]], start: int, allowed: set[int]) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_tree_convex(g: Graph, bp: Bipartition, tree: Iterable[Sequence[int]]) -> tuple[bool, int | None]:
    """Does every Y-neighbourhood induce a connected subtree of ``tree``?

    ``tree`` must be a spanning tree on the X side. Returns ``(True, None)``
    or ``(False, y)`` for the first offending Y-vertex.
    """
    bp.validate(g)
    xs = set(bp.xs)
    adj = _tree_adjacency(tree, xs)
    if set(adj) != xs:
        raise ValueError("tree does not span exactly the X side")
    for y in bp.ys:
        nbrs = set(g.adj[y])
        if nbrs and _reach(adj, min(nbrs), nbrs) != nbrs:
            return False, y
    return True, None


def is_star(tree: Iterable[Sequence[int]]) -> tuple[bool, int | None]:
    """Star test; returns the center (the smaller end for a single edge)."""
    adj = _tree_adjacency(tree)
    if not adj:
        return False, None
    for v in sorted(adj):
        if len(adj[v]) == len(adj) - 1:
            return True, v
    return False, None


def is_comb(tree: Iterable[Sequence[int]], backbone: Sequence[int], teeth: Sequence[int]) -> bool:
    """Comb test: backbone induces a path, every backbone vertex carries
    exactly one leaf tooth, and backbone + teeth partition the tree."""
    adj = _tree_adjacency(tree)
    spine, tooth = set(backbone), set(teeth)
    if spine & tooth or spine | tooth != set(adj) or len(spine) != len(backbone):
        return False
    if len(tooth) != len(spine):
        return False
    spine_deg = {v: len(adj[v] & spine) for v in spine}
    if len(spine) > 1 and (max(spine_deg.values()) > 2 or min(spine_deg.values()) < 1):
        return False
    if len(_reach(adj, next(iter(spine)), spine)) != len(spine):
        return False
    for t in tooth:
        if len(adj[t]) != 1 or not adj[t] <= spine:
            return False
    return all(len(adj[v] & tooth) == 1 for v in spine)


def verify_dpeo(g: Graph, order: Sequence[int]) -> tuple[bool, int | None]:
    """Check a doubly perfect elimination ordering.

    Each vertex must be simplicial with a maximum neighbour in the subgraph
    induced by itself and the later vertices. Returns ``(True, None)`` or
    ``(False, position)`` with a 1-based position.
    """
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    alive = (1 << g.n) - 1
    for pos, u in enumerate(order, start=1):
        closed_u = g.closed_mask(u) & alive
        for w in _bits(closed_u & ~(1 << u)):
            if closed_u & ~g.closed_mask(w):
                return False, pos
        if not any(
            all(g.closed_mask(z) & alive & ~(g.closed_mask(y) & alive) == 0 for z in _bits(closed_u))
            for y in _bits(closed_u)
        ):
            return False, pos
        alive &= ~(1 << u)
    return True, None


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def chordless_long_cycle(g: Graph) -> list[int] | None:
    """A chordless cycle on at least 6 vertices, or None.

    Grows induced paths from each start vertex through larger ids only, so
    each cycle is found from its least vertex.
    """
    for s in range(g.n):
        found = _grow(g, [s])
        if found:
            return found
    return None


def _grow(g: Graph, path: list[int]) -> list[int] | None:
    s, last = path[0], path[-1]
    inner = 0
    for v in path[1:-1]:
        inner |= g.masks[v]
    for w in g.adj[last]:
        if w <= s or w in path or inner >> w & 1:
            continue
        if len(path) > 1 and g.has_edge(w, s):
            if len(path) + 1 >= 6:
                return path + [w]
            continue  # short cycle; any extension would carry the chord w-s
        found = _grow(g, path + [w])
        if found:
            return found
    return None


def is_chordal_bipartite_small(g: Graph, guard: int = CHORDAL_BIPARTITE_GUARD) -> bool:
    if g.n > guard:
        raise ValueError(f"{g.n} vertices exceed the exhaustive guard {guard}")
    try:
        bipartition_of(g)
    except NotBipartite as exc:
        raise ValueError("graph is not bipartite") from exc
    return chordless_long_cycle(g) is None

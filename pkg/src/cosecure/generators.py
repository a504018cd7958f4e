"""Instance generators: exhaustive small graphs and seeded random families."""
from __future__ import annotations

from itertools import product
from typing import Iterator

import networkx as nx
import numpy as np

from .chain import ChainPartition, chain_from_sizes
from .graph import Graph, is_connected
from .oracle import SetCoverInstance

ATLAS_MAX_N = 7


def connected_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """Every connected graph on ``min_n..max_n`` vertices, one per isomorphism class."""
    if max_n > ATLAS_MAX_N:
        raise ValueError(f"graph atlas only covers n <= {ATLAS_MAX_N}")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(h):
            yield Graph.from_edges(n, h.edges())


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways of writing ``total`` as ``parts`` positive integers."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def chain_size_vectors(max_n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All class-size vectors ``(xs, ys)`` with ``sum(xs) + sum(ys) <= max_n``."""
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            for nx_ in range(k, n - k + 1):
                for xs, ys in product(compositions(nx_, k), compositions(n - nx_, k)):
                    yield xs, ys


def _split(rng: np.random.Generator, total: int, parts: int) -> tuple[int, ...]:
    cuts = np.sort(rng.choice(np.arange(1, total), size=parts - 1, replace=False))
    return tuple(int(d) for d in np.diff(np.concatenate(([0], cuts, [total]))))


def random_chain_sizes(rng: np.random.Generator, max_n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = int(rng.integers(2, max_n + 1))
    k = int(rng.integers(1, n // 2 + 1))
    n1 = int(rng.integers(k, n - k + 1))
    return _split(rng, n1, k), _split(rng, n - n1, k)


def relabel(g: Graph, perm) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph.from_edges(g.n, [(int(perm[u]), int(perm[v])) for u, v in g.edges()])


def random_chain(rng: np.random.Generator, max_n: int, shuffle: bool = True) -> tuple[Graph, ChainPartition]:
    """Random connected chain graph; ``shuffle`` scrambles the vertex ids.

    The returned partition refers to the unshuffled ids.
    """
    xs, ys = random_chain_sizes(rng, max_n)
    g, part = chain_from_sizes(xs, ys)
    if shuffle:
        g = relabel(g, rng.permutation(g.n))
    return g, part


def random_connected_bipartite(rng: np.random.Generator, max_n1: int, max_n2: int, p: float = 0.5) -> Graph:
    """Connected bipartite graph with X = ``0..n1-1`` and Y after it."""
    n1 = int(rng.integers(1, max_n1 + 1))
    n2 = int(rng.integers(1, max_n2 + 1))
    while True:
        hits = rng.random((n1, n2)) < p
        edges = [(i, n1 + j) for i, j in zip(*np.nonzero(hits))]
        g = Graph.from_edges(n1 + n2, edges)
        if is_connected(g):
            return g


def random_set_cover(rng: np.random.Generator, max_p: int, max_q: int) -> SetCoverInstance:
    """Nonempty random subsets; resampled until they cover the universe."""
    p = int(rng.integers(1, max_p + 1))
    q = int(rng.integers(1, max_q + 1))
    while True:
        rows = rng.random((q, p)) < 0.5
        if rows.any(axis=1).all() and rows.any(axis=0).all():
            return SetCoverInstance(p, [[int(a) + 1 for a in np.nonzero(r)[0]] for r in rows])

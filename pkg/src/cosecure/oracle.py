"""Exhaustive minimum dominating / cosecure dominating set and set cover.

All solvers enumerate candidates by increasing cardinality and, within one
cardinality, in lexicographic order, so the reported witness is the
lexicographically least optimum. The graph search is an include-first DFS
over vertex ids with two prunes:

* a vertex whose closed neighbourhood lies entirely below the current id
  must already be dominated;
* the remaining budget times the largest closed neighbourhood still
  available must cover the undominated vertices.

The cosecure search adds one exact prune: once every vertex within
distance two of a chosen vertex is decided, its replacement condition is
final and is checked on the spot.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .domsets import CosecureCertificate, certify_cosecure
from .graph import Graph, components, members

DEFAULT_GUARD = 24


class GuardExceeded(RuntimeError):
    pass


class IsolatedVertexError(ValueError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is isolated; no cosecure dominating set exists")
        self.vertex = vertex


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: tuple[int, ...]
    certificate: CosecureCertificate | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        out = {"value": self.value, "witness": list(self.witness)}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        return out


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe ``1..p`` and a list of subsets of it."""

    p: int
    subsets: tuple[frozenset[int], ...]

    def __init__(self, p: int, subsets: Sequence[Sequence[int]]):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "subsets", tuple(frozenset(s) for s in subsets))
        self.validate()

    @property
    def q(self) -> int:
        return len(self.subsets)

    def validate(self) -> None:
        if self.p < 1:
            raise ValueError("universe must be nonempty")
        covered: set[int] = set()
        for i, s in enumerate(self.subsets):
            bad = [a for a in s if not 1 <= a <= self.p]
            if bad:
                raise ValueError(f"subset {i} has elements outside 1..{self.p}: {bad}")
            covered |= s
        missing = set(range(1, self.p + 1)) - covered
        if missing:
            raise ValueError(f"elements {sorted(missing)} are in no subset")


def parse_set_cover(text: str) -> SetCoverInstance:
    """Header ``p q``, then one line of elements per subset. ``#`` comments."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError("missing 'p q' header")
    p, q = (int(t) for t in rows[0])
    subsets = [[int(t) for t in r] for r in rows[1:]]
    if len(subsets) != q:
        raise ValueError(f"header declares {q} subsets, found {len(subsets)}")
    return SetCoverInstance(p, subsets)


def format_set_cover(inst: SetCoverInstance) -> str:
    lines = [f"{inst.p} {inst.q}"]
    lines += [" ".join(str(a) for a in sorted(s)) for s in inst.subsets]
    return "\n".join(lines) + "\n"


# -- search kernel ----------------------------------------------------------

class _Search:
    def __init__(self, g: Graph):
        n = g.n
        self.n = n
        self.full = (1 << n) - 1
        self.closed = [g.masks[v] | (1 << v) for v in range(n)]
        self.open = list(g.masks)
        self.closed_lists = [(v, *g.adj[v]) for v in range(n)]
        # must[i]: vertices whose closed neighbourhood has max id <= i
        self.must = [0] * n
        for w in range(n):
            self.must[max(self.closed_lists[w])] |= 1 << w
        for i in range(1, n):
            self.must[i] |= self.must[i - 1]
        # ready[i]: vertices whose distance-2 ball has max id exactly i
        self.ready = [0] * n
        for v in range(n):
            ball = max(max(self.closed_lists[w]) for w in self.closed_lists[v])
            self.ready[ball] |= 1 << v
        self.maxcov = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            self.maxcov[i] = max(self.maxcov[i + 1], len(self.closed_lists[i]))

    def dominating(self, r: int, forced_in: int = 0, forced_out: int = 0,
                   cosecure: bool = False) -> Iterator[int]:
        """Yield every dominating set of size exactly ``r`` (as a bitmask),
        in lexicographic order, respecting the forced masks.

        With ``cosecure=True`` branches where a settled member has no
        replacement are cut; survivors still need :meth:`is_cosecure`.
        """
        n, full, closed, must, maxcov = self.n, self.full, self.closed, self.must, self.maxcov
        ready = self.ready if cosecure else [0] * n
        settled = self._replaceable
        if forced_in.bit_count() > r:
            return

        def rec(i: int, chosen: int, count: int, dom: int) -> Iterator[int]:
            if count == r:
                if dom == full:
                    yield chosen
                return
            left = r - count
            if n - i < left:
                return
            missing = (full & ~dom).bit_count()
            if missing > left * maxcov[i]:
                return
            bit = 1 << i
            if not forced_out & bit:
                nd = dom | closed[i]
                nc = chosen | bit
                if nd & must[i] == must[i] and settled(nc, ready[i] & nc):
                    yield from rec(i + 1, nc, count + 1, nd)
            if not forced_in & bit and dom & must[i] == must[i] and settled(chosen, ready[i] & chosen):
                yield from rec(i + 1, chosen, count, dom)

        yield from rec(0, 0, 0, 0)

    def is_cosecure(self, s: int) -> bool:
        if s == self.full:
            return False
        return self._replaceable(s, s)

    def _replaceable(self, s: int, vs: int) -> bool:
        """Does every member in ``vs`` have a valid replacement w.r.t. ``s``?"""
        closed, open_ = self.closed, self.open
        for v in members(vs):
            bit = 1 << v
            orphans = 0
            for w in self.closed_lists[v]:
                if closed[w] & s == bit:
                    orphans |= 1 << w
            cand = open_[v] & ~s
            while cand:
                low = cand & -cand
                u = low.bit_length() - 1
                if orphans & ~closed[u] == 0:
                    break
                cand ^= low
            else:
                return False
        return True


def _guard(g: Graph, guard: int | None) -> None:
    if guard is not None and g.n > guard:
        raise GuardExceeded(f"graph has {g.n} vertices, exhaustive guard is {guard}")


def pendant_forcing(g: Graph) -> tuple[int, int]:
    """Masks (must-include, must-exclude) from supports with >= 2 pendants."""
    forced_in = forced_out = 0
    for v in range(g.n):
        leaves = [w for w in g.adj[v] if len(g.adj[w]) == 1]
        if len(leaves) >= 2:
            forced_out |= 1 << v
            for w in leaves:
                forced_in |= 1 << w
    return forced_in, forced_out


# -- public solvers ---------------------------------------------------------

def min_dominating(g: Graph, guard: int | None = DEFAULT_GUARD) -> OracleResult:
    _guard(g, guard)
    if g.n == 0:
        return OracleResult(0, ())
    search = _Search(g)
    for r in range(1, g.n + 1):
        for s in search.dominating(r):
            return OracleResult(r, tuple(members(s)))
    raise AssertionError("V is always dominating")


def _min_cosecure_connected(g: Graph, prune: bool) -> int:
    search = _Search(g)
    fin, fout = pendant_forcing(g) if prune else (0, 0)
    for r in range(1, g.n):
        for s in search.dominating(r, fin, fout, cosecure=True):
            if search.is_cosecure(s):
                return s
    raise AssertionError("connected graph on >= 2 vertices always has a CSDS")


def min_cosecure(g: Graph, guard: int | None = DEFAULT_GUARD, prune: bool = False) -> OracleResult:
    """Minimum cosecure dominating set, solved per connected component.

    With ``prune=True`` the pendant forcing (pendants of multi-pendant
    supports in, their supports out) restricts the search.
    """
    _guard(g, guard)
    iso = g.isolated()
    if iso:
        raise IsolatedVertexError(iso[0])
    witness: list[int] = []
    for comp in components(g):
        sub, labels = g.induced(comp)
        s = _min_cosecure_connected(sub, prune)
        witness.extend(labels[v] for v in members(s))
    witness.sort()
    cert = certify_cosecure(g, witness)
    assert isinstance(cert, CosecureCertificate), cert
    return OracleResult(len(witness), tuple(witness), cert)


def all_min_cosecure(g: Graph, guard: int | None = DEFAULT_GUARD) -> tuple[int, list[tuple[int, ...]]]:
    """Every minimum cosecure dominating set of a connected graph, in lex order."""
    _guard(g, guard)
    iso = g.isolated()
    if iso:
        raise IsolatedVertexError(iso[0])
    search = _Search(g)
    for r in range(1, g.n):
        found = [tuple(members(s)) for s in search.dominating(r, cosecure=True) if search.is_cosecure(s)]
        if found:
            return r, found
    raise ValueError("graph has no cosecure dominating set (is it connected?)")


def min_set_cover(inst: SetCoverInstance) -> OracleResult:
    """Fewest subsets covering ``1..p``; witness is a tuple of subset indices."""
    universe = frozenset(range(1, inst.p + 1))
    for r in range(1, inst.q + 1):
        for combo in combinations(range(inst.q), r):
            if frozenset().union(*(inst.subsets[i] for i in combo)) == universe:
                return OracleResult(r, combo)
    raise AssertionError("instance invariant guarantees a cover")

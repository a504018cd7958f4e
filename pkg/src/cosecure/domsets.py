"""Dominating / cosecure dominating set verification with certificates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, mask_of

NOT_DOMINATING = "not-dominating"
NO_REPLACEMENT = "no-replacement"
FULL_VERTEX_SET = "full-vertex-set"
ISOLATED_VERTEX = "isolated-vertex"


@dataclass(frozen=True)
class CosecureCertificate:
    """A cosecure dominating set together with one replacement per member.

    ``replacement[v] = u`` means ``u`` is an outside neighbour of ``v`` and
    swapping ``v`` out for ``u`` keeps the set dominating.
    """

    members: tuple[int, ...]
    replacement: dict[int, int]

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "set": list(self.members),
            "replacement": [[v, self.replacement[v]] for v in self.members],
            "valid": True,
        }


@dataclass(frozen=True)
class FailureWitness:
    kind: str
    vertex: int | None = None

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex}


def _normalise(g: Graph, S: Iterable[int]) -> tuple[int, ...]:
    members = tuple(sorted(set(S)))
    if members and not (0 <= members[0] and members[-1] < g.n):
        raise ValueError(f"vertex set {members} not within 0..{g.n - 1}")
    return members


def dominated_mask(g: Graph, S: Iterable[int]) -> int:
    out = 0
    for v in S:
        out |= g.masks[v] | (1 << v)
    return out


def is_dominating(g: Graph, S: Iterable[int]) -> tuple[bool, int | None]:
    """Return ``(True, None)`` or ``(False, least undominated vertex)``."""
    members = _normalise(g, S)
    mark = [False] * g.n
    for v in members:
        mark[v] = True
        for w in g.adj[v]:
            mark[w] = True
    for v in range(g.n):
        if not mark[v]:
            return False, v
    return True, None


def certify_cosecure(g: Graph, S: Iterable[int]) -> CosecureCertificate | FailureWitness:
    """Check that ``S`` is a cosecure dominating set of ``g``.

    On success returns a certificate whose replacement for each member is its
    least-id valid replacement; otherwise the first failure found, in the
    order isolated vertex, ``S = V``, domination, replacements by member id.
    """
    members = _normalise(g, S)
    iso = g.isolated()
    if iso:
        return FailureWitness(ISOLATED_VERTEX, iso[0])
    if len(members) == g.n:
        return FailureWitness(FULL_VERTEX_SET)
    ok, missing = is_dominating(g, members)
    if not ok:
        return FailureWitness(NOT_DOMINATING, missing)
    full = (1 << g.n) - 1
    smask = mask_of(members)
    closed = [g.masks[v] | (1 << v) for v in range(g.n)]
    # how many members of S dominate each vertex
    count = [0] * g.n
    for v in members:
        for w in g.adj[v]:
            count[w] += 1
        count[v] += 1
    replacement = {}
    for v in members:
        # vertices that lose their last dominator when v leaves
        orphans = 0
        for w in (v, *g.adj[v]):
            if count[w] == 1:
                orphans |= 1 << w
        found = None
        for u in g.adj[v]:
            if smask >> u & 1:
                continue
            if orphans & ~closed[u] & full == 0:
                found = u
                break
        if found is None:
            return FailureWitness(NO_REPLACEMENT, v)
        replacement[v] = found
    return CosecureCertificate(members, replacement)


def is_cosecure(g: Graph, S: Iterable[int]) -> bool:
    return isinstance(certify_cosecure(g, S), CosecureCertificate)


def check_certificate(g: Graph, cert: CosecureCertificate) -> bool:
    """Independently re-check every claim a certificate makes."""
    full = (1 << g.n) - 1
    smask = mask_of(cert.members)
    if dominated_mask(g, cert.members) != full or smask == full:
        return False
    for v in cert.members:
        u = cert.replacement.get(v)
        if u is None or smask >> u & 1 or not g.has_edge(u, v):
            return False
        swapped = [w for w in cert.members if w != v] + [u]
        if dominated_mask(g, swapped) != full:
            return False
    return True


def pendant_supports(g: Graph) -> dict[int, list[int]]:
    """Map each support vertex to the sorted list of its pendant neighbours."""
    out: dict[int, list[int]] = {}
    for v in range(g.n):
        if len(g.adj[v]) == 1:
            out.setdefault(g.adj[v][0], []).append(v)
    return dict(sorted(out.items()))

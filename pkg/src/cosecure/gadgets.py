"""Gadget constructions carrying domination / set cover into cosecure domination.

Each constructor returns a :class:`ReductionArtifact`. Base vertices keep
their ids; auxiliary vertices follow in a fixed listing order. ``offset``
is the shift between the base optimum and the gadget optimum:

=============  =============================  ==========================
kind           base optimum                   gadget optimum
=============  =============================  ==========================
pendant-path   gamma(G)                       gamma_cs(G') = base + n
star-convex    gamma(G)                       gamma_cs(G') = base + 6
comb-convex    gamma(G)                       gamma_cs(G') = base + 2(n_1 + 4)
set-cover      minimum cover                  gamma_cs(G') = base + 4
gy4            gamma(G)                       gamma(G') = base + n
=============  =============================  ==========================

For gy4 the cosecure number does not depend on the base at all; it is
three per base vertex (:func:`gy4_csdn`). The gadget keeps the base
vertices, so it has ``5n`` vertices and ``3n`` is three quarters of the
attached star vertices, not of the whole gadget.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import Bipartition, Graph, bipartition_of
from .oracle import SetCoverInstance

PENDANT_PATH = "pendant-path"
STAR_CONVEX = "star-convex"
COMB_CONVEX = "comb-convex"
SET_COVER = "set-cover"
GY4 = "gy4"
KINDS = (PENDANT_PATH, STAR_CONVEX, COMB_CONVEX, SET_COVER, GY4)


@dataclass(frozen=True)
class ReductionArtifact:
    gadget: Graph
    kind: str
    embed: dict[int, int]
    roles: tuple[str, ...]
    offset: int
    witness: dict[str, Any] = field(default_factory=dict)
    labels: tuple[str, ...] = ()
    bipartition: Bipartition | None = None

    def metadata(self) -> dict:
        out = {
            "kind": self.kind,
            "n": self.gadget.n,
            "m": self.gadget.m,
            "offset": self.offset,
            "embed": [[b, g] for b, g in sorted(self.embed.items())],
            "roles": list(self.roles),
            "labels": list(self.labels),
            "witness": self.witness,
        }
        if self.bipartition is not None:
            out["x_side"] = list(self.bipartition.xs)
        return out


class _Builder:
    """Collects vertices with labels/roles and edges by label."""

    def __init__(self):
        self.ids: dict[str, int] = {}
        self.roles: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, label: str, role: str) -> int:
        if label in self.ids:
            raise KeyError(f"duplicate vertex label {label!r}")
        self.ids[label] = len(self.roles)
        self.roles.append(role)
        return self.ids[label]

    def join(self, a: str, b: str) -> None:
        self.edges.append((self.ids[a], self.ids[b]))

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.roles), self.edges)

    @property
    def labels(self) -> tuple[str, ...]:
        out = [""] * len(self.roles)
        for label, i in self.ids.items():
            out[i] = label
        return tuple(out)


def _add_base(b: _Builder, g: Graph, names: list[str], role: str = "original") -> None:
    for v in range(g.n):
        b.add(names[v], role)
    for u, v in g.edges():
        b.join(names[u], names[v])


def pendant_path(g: Graph, two_pendants: bool = False) -> ReductionArtifact:
    """Hang a path ``v_i - v_i1 - v_i2`` off every vertex.

    ``two_pendants=True`` builds the variant with edges ``v_i v_i1`` and
    ``v_i v_i2`` instead; it does *not* satisfy the ``+n`` offset (two
    pendants on one support force both into every cosecure set).
    """
    b = _Builder()
    names = [f"v{i}" for i in range(g.n)]
    _add_base(b, g, names)
    for i in range(g.n):
        b.add(f"v{i}.1", "path-mid")
        b.add(f"v{i}.2", "path-end")
        b.join(f"v{i}", f"v{i}.1")
        b.join(f"v{i}" if two_pendants else f"v{i}.1", f"v{i}.2")
    return ReductionArtifact(
        b.graph(), PENDANT_PATH, {v: v for v in range(g.n)}, tuple(b.roles), g.n,
        {"variant": "two-pendants" if two_pendants else "path"}, b.labels,
    )


def _sides(g: Graph, bp: Bipartition | None) -> Bipartition:
    if bp is None:
        return bipartition_of(g)
    bp.validate(g)
    return bp


def star_convex(g: Graph, bp: Bipartition | None = None) -> ReductionArtifact:
    """Star-convex bipartite gadget with offset 6.

    Adds ``x, x', x0', x1', x2'`` to X and ``y, y', y0', y1', y2'`` to Y;
    every X-vertex hangs off ``x`` in the witness star.
    """
    bp = _sides(g, bp)
    xs, ys = bp.xs, bp.ys
    b = _Builder()
    names = [f"X{v}" if bp.side[v] == 0 else f"Y{v}" for v in range(g.n)]
    _add_base(b, g, names)
    b.add("x", "star-apex")
    for lab in ("x'", "x0'", "x1'", "x2'"):
        b.add(lab, "star-leaf")
    for lab in ("y", "y'", "y0'", "y1'", "y2'"):
        b.add(lab, "fixed-y")
    for v in ys:
        b.join("x", names[v])
        b.join("x'", names[v])
    for v in xs:
        b.join("y", names[v])
        b.join("y'", names[v])
    for i in (1, 2):
        b.join("x", f"y{i}'")
        b.join("y", f"x{i}'")
    for u, v in (("x", "y"), ("x", "y'"), ("x'", "y"), ("x'", "y'"), ("x'", "y0'"), ("y'", "x0'")):
        b.join(u, v)
    gadget = b.graph()
    ids = b.ids
    center = ids["x"]
    tree = [(center, v) for v in xs] + [(center, ids[lab]) for lab in ("x'", "x0'", "x1'", "x2'")]
    new_x = xs + [ids[lab] for lab in ("x", "x'", "x0'", "x1'", "x2'")]
    n1, n2 = len(xs), len(ys)
    assert len(new_x) == n1 + 5 and gadget.n - len(new_x) == n2 + 5
    assert gadget.m == g.m + 2 * n1 + 2 * n2 + 10
    return ReductionArtifact(
        gadget, STAR_CONVEX, {v: v for v in range(g.n)}, tuple(b.roles), 6,
        {"star_center": center, "tree": [list(e) for e in tree]}, b.labels,
        Bipartition.from_sides(gadget.n, new_x),
    )


def comb_convex(g: Graph, bp: Bipartition | None = None) -> ReductionArtifact:
    """Comb-convex bipartite gadget with offset ``2(n_1 + 4)``.

    Labels: ``x0_i`` copies each X-vertex onto the backbone; ``a'``, ``b'``
    and ``c'`` are the X-side pendants of ``y1``/``y2`` (written ``a^1``,
    ``b^1`` in some descriptions of the construction); ``a..e`` are the
    Y-side pendants of ``x1, x2, x3``; ``a_i, b_i`` hang off ``x0_i``.
    Teeth: X, ``x3``, ``b'``, ``c'``. Backbone path:
    ``x2 - x1 - x0_1 - ... - x0_{n1} - a'``.
    """
    bp = _sides(g, bp)
    xs, ys = bp.xs, bp.ys
    n1, n2 = len(xs), len(ys)
    if n1 < 1:
        raise ValueError("comb-convex construction needs a nonempty X side")
    b = _Builder()
    names = [f"X{v}" if bp.side[v] == 0 else f"Y{v}" for v in range(g.n)]
    _add_base(b, g, names)
    x0 = [f"x0_{i}" for i in range(n1)]
    for lab in x0:
        b.add(lab, "comb-backbone")
    b.add("x1", "comb-backbone")
    b.add("x2", "comb-backbone")
    b.add("x3", "comb-tooth")
    b.add("a'", "comb-backbone")
    b.add("b'", "comb-tooth")
    b.add("c'", "comb-tooth")
    for lab in ("y1", "y2", "a", "b", "c", "d", "e"):
        b.add(lab, "fixed-y")
    for i in range(n1):
        b.add(f"a_{i}", "fixed-y")
        b.add(f"b_{i}", "fixed-y")
    xn = [names[v] for v in xs]
    yn = [names[v] for v in ys]
    for i in range(n1):
        for j in ("y1", "y2"):
            b.join(xn[i], j)
            b.join(x0[i], j)
    for y in yn:
        for lab in x0:
            b.join(y, lab)
    for xi in ("x1", "x2", "x3"):
        for y in yn:
            b.join(xi, y)
        for j in ("y1", "y2"):
            b.join(xi, j)
    for i in range(n1):
        b.join(x0[i], f"a_{i}")
        b.join(x0[i], f"b_{i}")
    for u, v in (("y1", "a'"), ("y1", "b'"), ("y2", "c'"),
                 ("x1", "a"), ("x1", "b"), ("x2", "c"), ("x2", "d"), ("x3", "e")):
        b.join(u, v)
    gadget = b.graph()
    ids = b.ids
    tree_labels = [(x0[i], x0[i + 1]) for i in range(n1 - 1)]
    tree_labels += [(xn[i], x0[i]) for i in range(n1)]
    tree_labels += [(x0[-1], "a'"), ("a'", "b'"), ("x1", x0[0]), ("x1", "x2"), ("x1", "x3"), ("x2", "c'")]
    tree = [[ids[u], ids[v]] for u, v in tree_labels]
    backbone = [ids[lab] for lab in ["x2", "x1", *x0, "a'"]]
    teeth = [ids[lab] for lab in [*xn, "x3", "b'", "c'"]]
    new_x = xs + [ids[lab] for lab in [*x0, "x1", "x2", "x3", "a'", "b'", "c'"]]
    assert len(new_x) == 2 * n1 + 6 and gadget.n - len(new_x) == 2 * n1 + n2 + 7
    # the listed edge set has n1*n2 edges y_i x0_j, hence the n1*n2 term
    assert gadget.m == g.m + 6 * n1 + n1 * n2 + 3 * n2 + 14
    return ReductionArtifact(
        gadget, COMB_CONVEX, {v: v for v in range(g.n)}, tuple(b.roles), 2 * (n1 + 4),
        {"tree": tree, "backbone": backbone, "teeth": teeth}, b.labels,
        Bipartition.from_sides(gadget.n, new_x),
    )


def set_cover_gadget(inst: SetCoverInstance) -> ReductionArtifact:
    """Doubly chordal gadget for set cover with offset 4.

    Element vertices ``a_1..a_p`` then subset vertices ``s_1..s_q`` (a
    clique), then ``x1, x2, x3, y1, y2, z1, z2``. ``embed`` maps subset
    index ``j`` to the id of ``s_j``.
    """
    inst.validate()
    p, q = inst.p, inst.q
    b = _Builder()
    for i in range(1, p + 1):
        b.add(f"a{i}", "element")
    for j in range(1, q + 1):
        b.add(f"s{j}", "subset")
    for lab, role in (("x1", "fixed-x"), ("x2", "fixed-x"), ("x3", "fixed-x"),
                      ("y1", "fixed-y"), ("y2", "fixed-y"), ("z1", "fixed-z"), ("z2", "fixed-z")):
        b.add(lab, role)
    for i in range(1, q + 1):
        for j in range(i + 1, q + 1):
            b.join(f"s{i}", f"s{j}")
    for j, subset in enumerate(inst.subsets, start=1):
        for a in sorted(subset):
            b.join(f"a{a}", f"s{j}")
    for i in range(1, p + 1):
        b.join(f"a{i}", "x1")
    for j in range(1, q + 1):
        for hub in ("x1", "y1", "z1"):
            b.join(f"s{j}", hub)
    for u, v in (("x1", "x2"), ("x1", "x3"), ("x1", "y1"), ("x1", "z1"),
                 ("y1", "z1"), ("y1", "y2"), ("z1", "z2")):
        b.join(u, v)
    ids = b.ids
    order = ["x2", "x3", "y2", "z2", *(f"a{i}" for i in range(1, p + 1)),
             *(f"s{j}" for j in range(1, q + 1)), "y1", "z1", "x1"]
    gadget = b.graph()
    assert gadget.n == p + q + 7
    return ReductionArtifact(
        gadget, SET_COVER, {j: p + j for j in range(q)}, tuple(b.roles), 4,
        {"dpeo": [ids[lab] for lab in order]}, b.labels,
    )


def gy4_construct(g: Graph) -> ReductionArtifact:
    """Attach a 4-vertex star to every vertex through one of its leaves.

    Per base vertex ``v_i`` the ids follow as ``v_i^1, v_i^2, v_i^3`` (leaves,
    ``v_i^1`` joined to ``v_i``) and ``v_i^4`` (center). The offset refers to
    ordinary domination.
    """
    b = _Builder()
    names = [f"v{i}" for i in range(g.n)]
    _add_base(b, g, names)
    for i in range(g.n):
        for j in (1, 2, 3):
            b.add(f"v{i}^{j}", "star-leaf")
        b.add(f"v{i}^4", "star-apex")
        b.join(f"v{i}", f"v{i}^1")
        for j in (1, 2, 3):
            b.join(f"v{i}^4", f"v{i}^{j}")
    gadget = b.graph()
    assert gadget.n == 5 * g.n and gadget.m == 4 * g.n + g.m
    return ReductionArtifact(
        gadget, GY4, {v: v for v in range(g.n)}, tuple(b.roles), g.n, {}, b.labels,
    )


def gy4_csdn(art: ReductionArtifact) -> int:
    """Cosecure domination number of a GY4 gadget: three per base vertex.

    Equivalently ``3/4`` of the star vertices, ``3/5`` of the gadget order.
    """
    if art.kind != GY4:
        raise ValueError(f"expected a gy4 artifact, got {art.kind!r}")
    return 3 * len(art.embed)


def build(kind: str, base, bp: Bipartition | None = None) -> ReductionArtifact:
    """Dispatch on ``kind``; ``base`` is a Graph, or a SetCoverInstance for set-cover."""
    if kind == SET_COVER:
        if not isinstance(base, SetCoverInstance):
            raise TypeError("set-cover reduction needs a SetCoverInstance")
        return set_cover_gadget(base)
    if not isinstance(base, Graph):
        raise TypeError(f"{kind} reduction needs a Graph")
    if kind == PENDANT_PATH:
        return pendant_path(base)
    if kind == STAR_CONVEX:
        return star_convex(base, bp)
    if kind == COMB_CONVEX:
        return comb_convex(base, bp)
    if kind == GY4:
        return gy4_construct(base)
    raise ValueError(f"unknown reduction kind {kind!r}; expected one of {KINDS}")

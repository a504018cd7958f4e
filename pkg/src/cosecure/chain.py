"""Cosecure domination number of chain graphs in polynomial time.

A connected chain graph is summarised by its proper ordered chain partition
``X_1..X_k`` / ``Y_1..Y_k``: ``X_i`` groups X-vertices with equal
neighbourhoods (smallest first), ``Y_1 = N(X_1)`` and ``Y_i`` collects the
neighbours that first appear at ``X_i``. Every ``X_i`` sees exactly
``Y_1 ∪ ... ∪ Y_i``, so the value depends only on the class sizes. Pendants
can only live in ``X_1`` (when ``|Y_1| = 1``) or ``Y_k`` (when ``|X_k| = 1``).

:func:`csdn_chain` runs a linear dynamic program over the classes.
:func:`strip_recursion` is the case analysis that peels multi-pendant end
classes; it is kept for comparison and its case labels form the report trace.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .domsets import CosecureCertificate, certify_cosecure
from .graph import Bipartition, Graph, bipartition_of, components, is_connected

# case labels, recorded in the recursion trace
COMPLETE = "complete-bipartite"
K2_NO_PENDANT = "k=2/no-pendant"
K2_SPLIT = "k=2/split"
K2_FEW_PENDANT = "k=2/at-most-one-pendant-per-side"
NO_PENDANT = "k>=3/no-pendant"
STRIP_BOTH = "k>=3/strip-X1-and-Yk"
STRIP_X = "k>=3/strip-X1"
STRIP_Y = "k>=3/strip-Yk"
FEW_PENDANT = "k>=3/at-most-one-pendant-per-side"


class NotChainGraph(ValueError):
    """``pair`` holds two X-vertices with incomparable neighbourhoods."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class ChainWitnessError(RuntimeError):
    """The rebuilt witness failed certification (internal error)."""


@dataclass(frozen=True)
class ChainOrdering:
    x_order: tuple[int, ...]
    y_order: tuple[int, ...]


@dataclass(frozen=True)
class ChainPartition:
    x_classes: tuple[tuple[int, ...], ...]
    y_classes: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.x_classes)

    def sizes(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(map(len, self.x_classes)), tuple(map(len, self.y_classes))

    def sub(self, lo: int, hi: int) -> "ChainPartition":
        """Classes ``lo..hi-1`` (0-based); the partition of the induced subgraph."""
        return ChainPartition(self.x_classes[lo:hi], self.y_classes[lo:hi])

    def vertices(self) -> list[int]:
        return sorted(v for c in self.x_classes + self.y_classes for v in c)


@dataclass
class ChainReport:
    k: int
    partition: ChainPartition
    gamma_cs: int
    witness: CosecureCertificate | None = None
    trace: list[str] = field(default_factory=list)
    strip_value: int | None = None
    counts: list[tuple[int, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "classes": {
                "X": [list(c) for c in self.partition.x_classes],
                "Y": [list(c) for c in self.partition.y_classes],
            },
            "gamma_cs": self.gamma_cs,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "trace": list(self.trace),
            "strip_value": self.strip_value,
            "counts": [list(c) for c in self.counts],
        }


# -- recognition ------------------------------------------------------------

def recognize_chain(g: Graph, bp: Bipartition) -> ChainOrdering:
    """Chain ordering of a bipartite graph, or :class:`NotChainGraph`.

    X is sorted by degree ascending and Y by degree descending (ties by id);
    consecutive neighbourhoods must nest.
    """
    bp.validate(g)
    xs = sorted(bp.xs, key=lambda v: (g.degree(v), v))
    ys = sorted(bp.ys, key=lambda v: (-g.degree(v), v))
    for a, b in zip(xs, xs[1:]):
        if g.masks[a] & ~g.masks[b]:
            raise NotChainGraph(
                f"N({a}) and N({b}) are incomparable", (a, b)
            )
    for a, b in zip(ys, ys[1:]):
        if g.masks[b] & ~g.masks[a]:
            # cannot happen once X nests; kept as a guard
            raise NotChainGraph(f"N({b}) is not contained in N({a})")
    return ChainOrdering(tuple(xs), tuple(ys))


def partition_chain(g: Graph, order: ChainOrdering) -> ChainPartition:
    x_classes: list[list[int]] = []
    last = None
    for x in order.x_order:
        if g.masks[x] != last:
            x_classes.append([])
            last = g.masks[x]
        x_classes[-1].append(x)
    y_classes = []
    seen = 0
    for cls in x_classes:
        fresh = g.masks[cls[0]] & ~seen
        seen |= fresh
        ys = [y for y in order.y_order if fresh >> y & 1]
        if not ys:
            raise RuntimeError("empty Y class in chain partition; recognition is inconsistent")
        y_classes.append(ys)
    leftover = [y for y in order.y_order if not seen >> y & 1]
    if leftover:
        raise RuntimeError(f"Y-vertices {leftover} belong to no class (graph disconnected?)")
    return ChainPartition(
        tuple(tuple(sorted(c)) for c in x_classes),
        tuple(tuple(sorted(c)) for c in y_classes),
    )


def chain_partition(g: Graph) -> ChainPartition:
    """Validate ``g`` as a connected chain graph and return its partition."""
    iso = g.isolated()
    if iso:
        raise ValueError(f"vertex {iso[0]} is isolated")
    if not is_connected(g):
        raise ValueError(f"graph has {len(components(g))} components; solve each separately")
    bp = bipartition_of(g)
    return partition_chain(g, recognize_chain(g, bp))


# -- complete bipartite -----------------------------------------------------

def csdn_cb(p: int, q: int) -> int:
    """Cosecure domination number of K_{p,q}, ``1 <= p <= q``."""
    if p < 1 or q < p:
        raise ValueError(f"need 1 <= p <= q, got p={p}, q={q}")
    if p == 1:
        return q
    return min(p, 4)


# -- class-stripping recursion ----------------------------------------------

def _classify(xs: tuple[int, ...], ys: tuple[int, ...]) -> str:
    k = len(xs)
    if k == 1:
        return COMPLETE
    x_pend = xs[0] > 1 and ys[0] == 1     # several pendants in X_1
    y_pend = ys[-1] > 1 and xs[-1] == 1   # several pendants in Y_k
    if k == 2:
        if ys[0] > 1 and xs[1] > 1:
            return K2_NO_PENDANT
        if x_pend or y_pend:
            return K2_SPLIT
        return K2_FEW_PENDANT
    if ys[0] > 1 and xs[-1] > 1:
        return NO_PENDANT
    if x_pend and y_pend:
        return STRIP_BOTH
    if x_pend:
        return STRIP_X
    if y_pend:
        return STRIP_Y
    return FEW_PENDANT


def _check_sizes(xs, ys) -> tuple[tuple[int, ...], tuple[int, ...]]:
    xs, ys = tuple(xs), tuple(ys)
    if len(xs) != len(ys) or not xs or min(xs + ys) < 1:
        raise ValueError("class size vectors must be nonempty, equal length, positive")
    return xs, ys


def strip_recursion(xs, ys, trace: list[str] | None = None) -> int:
    """Value of the pendant-stripping recursion on class sizes.

    Multi-pendant end classes are peeled off and counted in full, the rest is
    solved independently; the other cases are constants. This is exact
    whenever no class is stripped, but it can over-count after a strip: the
    support left behind (``y_11`` or ``x_k1``) is adjacent to a whole side of
    the remainder and may still act as a replacement there. Smallest case:
    ``xs=(1, 1, 1), ys=(2, 2, 2)`` gives 6, the true value is 5.
    Use :func:`csdn_sizes` for the exact value.
    """
    xs, ys = _check_sizes(xs, ys)
    case = _classify(xs, ys)
    if trace is not None:
        trace.append(case)
    nx, ny = sum(xs), sum(ys)
    if case == COMPLETE:
        return csdn_cb(min(nx, ny), max(nx, ny))
    if case == K2_SPLIT:
        return sum(csdn_cb(min(a, b), max(a, b)) for a, b in zip(xs, ys))
    if case == NO_PENDANT:
        return 4
    if case == STRIP_BOTH:
        return xs[0] + ys[-1] + strip_recursion(xs[1:-1], ys[1:-1], trace)
    if case == STRIP_X:
        return xs[0] + strip_recursion(xs[1:], ys[1:], trace)
    if case == STRIP_Y:
        return ys[-1] + strip_recursion(xs[:-1], ys[:-1], trace)
    if case == K2_FEW_PENDANT and 2 in (nx, ny):
        return 2
    # K2_NO_PENDANT, K2_FEW_PENDANT, FEW_PENDANT
    return 3 if 3 in (nx, ny) else 4


def csdn_chain_strip(g: Graph, trace: list[str] | None = None) -> int:
    return strip_recursion(*chain_partition(g).sizes(), trace=trace)


# -- exact dynamic program over classes -------------------------------------
#
# Twins are interchangeable, so a set S is described by a_i = |S ∩ X_i| and
# b_i = |S ∩ Y_i|. With F the first class having b_F > 0 and L the last with
# a_L > 0, S is a cosecure dominating set iff
#
#   domination   a_i = |X_i| for i < F and b_j = |Y_j| for j > L;
#   X-members    every class i with a_i > 0 sees a non-full Y_j, j <= i,
#                except when i = L and a_L = 1: then, with L' the previous
#                class with a > 0, the Y-classes in (L', L] must be full
#                apart from one class missing exactly one vertex, or be all
#                full with some non-full Y_j, j <= L';
#   Y-members    the mirror image, with F, b_F = 1, the next class F' with
#                b > 0 and the X-classes in [F, F').
#
# The scan keeps just enough of this as state; per class only the counts
# {0, 1, 2, size-1, size} can be optimal, since the conditions only look at
# "zero", "exactly one", "full" and "one short".

_PRE, _SEG, _DONE = 0, 1, 2


def _counts(size: int) -> list[int]:
    return sorted({c for c in (0, 1, 2, size - 1, size) if 0 <= c <= size})


def _bump(status: int, deficit: int) -> int:
    """Fold one class deficit into a {all full, one short by 1, other} status."""
    if deficit == 0:
        return status
    if deficit == 1 and status == 0:
        return 1
    return 2


def _step(state: tuple, p: int, q: int, a: int, b: int) -> tuple | None:
    phase, st, ypend, ynf, since, has_l, a1, ok_s, ynf_l = state
    # Y_i: first/next chosen Y class
    entered = False
    if phase == _PRE:
        if b > 0:
            entered = b == 1
            phase = _SEG if entered else _DONE
            ypend = 0 if entered else 1
        elif a != p:
            return None
    elif phase == _SEG:
        if b > 0:
            phase, ypend = _DONE, 1
    elif b > 0:
        ypend = 1
    # X_i on the Y side
    if phase == _SEG:
        st = _bump(st, p - a)
        if st == 2:
            return None
    elif phase == _DONE and a < p:
        ypend = 0
    # X side
    ynf = ynf or b < q
    since = _bump(since, q - b)
    if a > 0:
        if has_l and not ynf_l:
            return None
        ok_s = since == 1 or (since == 0 and has_l and ynf_l)
        has_l, a1, ynf_l, since = True, a == 1, ynf, 0
    return (phase, st, ypend, ynf, since, has_l, a1, ok_s, ynf_l)


def _accepting(state: tuple) -> bool:
    phase, st, ypend, ynf, since, has_l, a1, ok_s, ynf_l = state
    if phase == _SEG and st != 1:
        return False
    if ypend or since != 0 or not has_l and phase == _PRE:
        return False
    if has_l and not (ok_s if a1 else ynf_l):
        return False
    return True


def optimal_counts(xs, ys) -> tuple[int, list[tuple[int, int]]]:
    """Minimum cosecure dominating set size and per-class counts ``(a_i, b_i)``.

    Runs in O(k) time (constant state space, at most 25 choices per class).
    """
    xs, ys = _check_sizes(xs, ys)
    start = (_PRE, 0, 0, False, 0, False, False, False, False)
    layer: dict[tuple, tuple[int, tuple | None, tuple[int, int] | None]] = {start: (0, None, None)}
    layers = [layer]
    for p, q in zip(xs, ys):
        nxt: dict = {}
        for state, (cost, _, _) in layer.items():
            for a in _counts(p):
                for b in _counts(q):
                    new = _step(state, p, q, a, b)
                    if new is None:
                        continue
                    c = cost + a + b
                    if new not in nxt or c < nxt[new][0]:
                        nxt[new] = (c, state, (a, b))
        layer = nxt
        layers.append(layer)
    finals = [(cost, s) for s, (cost, _, _) in layer.items() if _accepting(s)]
    if not finals:
        raise ValueError(f"no cosecure dominating set for classes {xs} / {ys}")
    best, state = min(finals, key=lambda t: t[0])
    counts = []
    for lay in reversed(layers[1:]):
        _, prev, choice = lay[state]
        counts.append(choice)
        state = prev
    return best, counts[::-1]


def csdn_sizes(xs, ys) -> int:
    """Exact cosecure domination number from class sizes."""
    return optimal_counts(xs, ys)[0]


def csdn_chain(g: Graph) -> int:
    """Cosecure domination number of a connected chain graph."""
    return csdn_sizes(*chain_partition(g).sizes())


def chain_witness(g: Graph) -> CosecureCertificate:
    """A minimum cosecure dominating set, rebuilt from the optimal class counts
    (least ids in each class) and certified."""
    part = chain_partition(g)
    value, counts = optimal_counts(*part.sizes())
    chosen = []
    for (a, b), xc, yc in zip(counts, part.x_classes, part.y_classes):
        chosen.extend(xc[:a])
        chosen.extend(yc[:b])
    cert = certify_cosecure(g, chosen)
    if not isinstance(cert, CosecureCertificate):
        raise ChainWitnessError(f"rebuilt witness fails: {cert}")
    if len(cert) != value:
        raise ChainWitnessError("witness size differs from computed value")
    return cert


def analyze_chain(g: Graph) -> ChainReport:
    part = chain_partition(g)
    trace: list[str] = []
    strip = strip_recursion(*part.sizes(), trace=trace)
    value, counts = optimal_counts(*part.sizes())
    return ChainReport(part.k, part, value, chain_witness(g), trace, strip, counts)


# -- construction from class sizes ------------------------------------------

def chain_from_sizes(xs, ys) -> tuple[Graph, ChainPartition]:
    """Connected chain graph with ``|X_i| = xs[i]`` and ``|Y_i| = ys[i]``.

    X-vertices come first (class by class), then Y-vertices.
    """
    xs, ys = _check_sizes(xs, ys)
    x_classes, y_classes = [], []
    start = 0
    for a in xs:
        x_classes.append(tuple(range(start, start + a)))
        start += a
    for b in ys:
        y_classes.append(tuple(range(start, start + b)))
        start += b
    edges = []
    for i, xc in enumerate(x_classes):
        for yc in y_classes[: i + 1]:
            edges.extend((x, y) for x in xc for y in yc)
    g = Graph.from_edges(start, edges)
    return g, ChainPartition(tuple(x_classes), tuple(y_classes))

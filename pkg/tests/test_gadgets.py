import numpy as np
import pytest

from cosecure import gadgets
from cosecure.classcheck import is_chordal_bipartite_small, is_comb, is_star, is_tree_convex, verify_dpeo
from cosecure.generators import connected_graphs, random_connected_bipartite
from cosecure.graph import Graph, NotBipartite, bipartition_of, complete_bipartite, cycle_graph, path_graph
from cosecure.oracle import SetCoverInstance, min_cosecure, min_dominating, min_set_cover

K1 = Graph.from_edges(1, [])
K2 = path_graph(2)
K11 = complete_bipartite(1, 1)


def common_invariants(art):
    g = art.gadget
    assert len(art.roles) == g.n
    assert len(set(art.embed.values())) == len(art.embed)
    assert not g.isolated()
    assert len(art.labels) == g.n and len(set(art.labels)) == g.n


def test_pendant_path_values():
    for base, want in [(K1, 2), (K2, 3), (cycle_graph(4), 6)]:
        art = gadgets.pendant_path(base)
        common_invariants(art)
        assert art.gadget.n == 3 * base.n and art.gadget.m == base.m + 2 * base.n
        assert art.offset == base.n
        assert min_cosecure(art.gadget).value == want == min_dominating(base).value + art.offset


def test_two_pendant_variant_breaks_offset():
    art = gadgets.pendant_path(K2, two_pendants=True)
    assert art.witness["variant"] == "two-pendants"
    # both pendants of every support are forced: 2n, not gamma + n
    assert min_cosecure(art.gadget).value == 4 != min_dominating(K2).value + 2


def test_pendant_path_keeps_bipartite_and_chordal_bipartite():
    for base in connected_graphs(6, min_n=2):
        try:
            bipartition_of(base)
        except NotBipartite:
            continue
        art = gadgets.pendant_path(base)
        bipartition_of(art.gadget)
        if is_chordal_bipartite_small(base):
            assert is_chordal_bipartite_small(art.gadget)


def test_star_convex_k11():
    art = gadgets.star_convex(K11)
    common_invariants(art)
    assert art.gadget.n == 12 and art.offset == 6
    assert min_cosecure(art.gadget).value == 7
    assert is_star(art.witness["tree"]) == (True, art.witness["star_center"])
    assert art.labels[art.witness["star_center"]] == "x"
    assert is_tree_convex(art.gadget, art.bipartition, art.witness["tree"]) == (True, None)
    art.bipartition.validate(art.gadget)


def test_comb_convex_k11():
    art = gadgets.comb_convex(K11)
    common_invariants(art)
    assert art.gadget.n == 18 and art.offset == 10
    assert min_cosecure(art.gadget).value == 11
    w = art.witness
    assert is_comb(w["tree"], w["backbone"], w["teeth"])
    assert is_tree_convex(art.gadget, art.bipartition, w["tree"])[0]


@pytest.mark.parametrize("seed", range(5))
def test_bipartite_gadget_counts(seed):
    g = random_connected_bipartite(np.random.default_rng(seed), 4, 4)
    bp = bipartition_of(g)
    n1, n2 = len(bp.xs), len(bp.ys)
    star = gadgets.star_convex(g)
    assert len(star.bipartition.xs) == n1 + 5 and len(star.bipartition.ys) == n2 + 5
    assert star.gadget.m == g.m + 2 * n1 + 2 * n2 + 10
    comb = gadgets.comb_convex(g)
    assert len(comb.bipartition.xs) == 2 * n1 + 6 and len(comb.bipartition.ys) == 2 * n1 + n2 + 7
    assert comb.gadget.m == g.m + 6 * n1 + n1 * n2 + 3 * n2 + 14
    assert comb.offset == 2 * (n1 + 4)
    for art in (star, comb):
        common_invariants(art)
        art.bipartition.validate(art.gadget)


def test_bipartite_gadgets_reject_odd_cycle():
    with pytest.raises(NotBipartite):
        gadgets.star_convex(cycle_graph(3))


def test_set_cover_gadget_examples():
    inst = SetCoverInstance(2, [[1], [2], [1, 2]])
    art = gadgets.set_cover_gadget(inst)
    common_invariants(art)
    assert art.gadget.n == 2 + 3 + 7
    assert art.embed == {0: 2, 1: 3, 2: 4}
    assert min_set_cover(inst).value == 1
    assert min_cosecure(art.gadget).value == 5
    assert verify_dpeo(art.gadget, art.witness["dpeo"]) == (True, None)
    small = gadgets.set_cover_gadget(SetCoverInstance(2, [[1, 2]]))
    assert small.gadget.n == 10 and small.offset == 4
    assert min_cosecure(small.gadget).value == 5


def test_set_cover_gadget_is_chordal():
    import networkx as nx
    rng = np.random.default_rng(11)
    from cosecure.generators import random_set_cover
    for _ in range(30):
        inst = random_set_cover(rng, 4, 4)
        art = gadgets.set_cover_gadget(inst)
        assert verify_dpeo(art.gadget, art.witness["dpeo"])[0]
        h = nx.Graph(art.gadget.edges())
        h.add_nodes_from(range(art.gadget.n))
        assert nx.is_chordal(h)


def test_gy4_examples():
    art = gadgets.gy4_construct(K2)
    common_invariants(art)
    assert art.gadget.n == 10 and art.offset == 2
    assert min_dominating(art.gadget).value == 3
    assert min_cosecure(art.gadget).value == 6 == gadgets.gy4_csdn(art)
    p3 = gadgets.gy4_construct(path_graph(3))
    assert min_cosecure(p3.gadget).value == 9 == gadgets.gy4_csdn(p3)
    k1 = gadgets.gy4_construct(K1)
    assert gadgets.gy4_csdn(k1) == 3 == min_cosecure(k1.gadget).value


def test_gy4_csdn_rejects_other_kinds():
    with pytest.raises(ValueError):
        gadgets.gy4_csdn(gadgets.pendant_path(K2))


def test_gy4_star_vertex_roles():
    art = gadgets.gy4_construct(K2)
    assert art.roles.count("star-apex") == 2 and art.roles.count("star-leaf") == 6
    # three quarters of the attached star vertices, three fifths of the whole
    assert 4 * gadgets.gy4_csdn(art) == 3 * (art.gadget.n - 2)


def test_build_dispatch_and_errors():
    assert gadgets.build("pendant-path", K2).kind == "pendant-path"
    with pytest.raises(TypeError):
        gadgets.build("set-cover", K2)
    with pytest.raises(TypeError):
        gadgets.build("gy4", SetCoverInstance(1, [[1]]))
    with pytest.raises(ValueError):
        gadgets.build("nope", K2)


def test_metadata_is_deterministic():
    a = gadgets.star_convex(K11).metadata()
    b = gadgets.star_convex(K11).metadata()
    assert a == b
    assert a["offset"] == 6 and a["n"] == 12 and "x_side" in a

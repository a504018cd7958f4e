import pytest
from hypothesis import given, strategies as st

from cosecure.domsets import CosecureCertificate, certify_cosecure, is_dominating
from cosecure.generators import connected_graphs
from cosecure.graph import Graph, complete_bipartite, cycle_graph, disjoint_union, path_graph, star_graph
from cosecure.oracle import (
    GuardExceeded, IsolatedVertexError, SetCoverInstance, _Search, all_min_cosecure, format_set_cover, pendant_forcing,
    min_cosecure, min_dominating, min_set_cover, parse_set_cover,
)
from helpers import all_brute_cosecure, brute_gamma, brute_gamma_cs

from test_graph import graphs


def test_min_dominating_examples():
    r = min_dominating(path_graph(2))
    assert (r.value, r.witness) == (1, (0,))
    r = min_dominating(path_graph(4))
    assert (r.value, r.witness) == (2, (0, 2))
    for p in range(2, 5):
        for q in range(p, 5):
            assert min_dominating(complete_bipartite(p, q)).value == 2


def test_min_cosecure_examples():
    assert min_cosecure(complete_bipartite(2, 3)).value == 2
    assert min_cosecure(path_graph(4)).value == 2
    r = min_cosecure(cycle_graph(5))
    assert (r.value, r.witness) == (2, (0, 2))
    assert r.certificate.replacement == {0: 4, 2: 3}


def test_result_serialisation():
    d = min_cosecure(path_graph(4)).to_dict()
    assert d["value"] == 2 and d["certificate"]["valid"] is True
    assert min_dominating(path_graph(2)).to_dict() == {"value": 1, "witness": [0]}


def test_isolated_vertex_rejected():
    with pytest.raises(IsolatedVertexError) as exc:
        min_cosecure(Graph.from_edges(3, [(0, 1)]))
    assert exc.value.vertex == 2


def test_guard():
    big = Graph.from_edges(25, [(i, i + 1) for i in range(24)])
    with pytest.raises(GuardExceeded):
        min_dominating(big)
    with pytest.raises(GuardExceeded):
        min_cosecure(big)
    assert min_dominating(big, guard=None).value == 9


def test_against_plain_enumeration():
    """Value and lexicographically least witness match an itertools search."""
    for g in connected_graphs(6, min_n=2):
        dom = min_dominating(g)
        cs = min_cosecure(g)
        assert (dom.value, dom.witness) == brute_gamma(g)
        assert (cs.value, cs.witness) == brute_gamma_cs(g)


@given(graphs(max_n=8))
def test_oracle_invariants(g):
    dom = min_dominating(g)
    assert len(dom.witness) == dom.value and is_dominating(g, dom.witness)[0]
    if g.isolated():
        return
    cs = min_cosecure(g)
    assert len(cs.witness) == cs.value
    assert isinstance(certify_cosecure(g, cs.witness), CosecureCertificate)
    assert dom.value <= cs.value
    assert min_cosecure(g, prune=True).value == cs.value


def test_components_sum():
    parts = [path_graph(4), cycle_graph(5), star_graph(3)]
    g = disjoint_union(*parts)
    assert min_cosecure(g).value == sum(min_cosecure(p).value for p in parts) == 2 + 2 + 3


def test_all_min_cosecure_matches_plain_enumeration():
    for g in connected_graphs(5, min_n=2):
        r, sets = all_min_cosecure(g)
        assert sets == all_brute_cosecure(g, r)


def test_pendant_forcing_masks():
    fin, fout = pendant_forcing(star_graph(3))
    assert fin == 0b1110 and fout == 0b0001
    assert pendant_forcing(path_graph(4)) == (0, 0)


def test_complete_bipartite_values():
    expect = {1: None, 2: 2, 3: 3}
    for p in range(1, 6):
        for q in range(p, 6):
            want = q if p == 1 else expect.get(p, 4)
            assert min_cosecure(complete_bipartite(p, q)).value == want


def test_set_cover_examples():
    r = min_set_cover(SetCoverInstance(2, [[1], [2], [1, 2]]))
    assert (r.value, r.witness) == (1, (2,))
    assert min_set_cover(SetCoverInstance(3, [[1, 2], [2, 3]])).value == 2
    assert min_set_cover(SetCoverInstance(1, [[1]])).value == 1


def test_set_cover_validation():
    with pytest.raises(ValueError):
        SetCoverInstance(3, [[1, 2]])
    with pytest.raises(ValueError):
        SetCoverInstance(2, [[1, 3], [2]])
    with pytest.raises(ValueError):
        SetCoverInstance(0, [])


def test_set_cover_text_round_trip():
    inst = SetCoverInstance(3, [[2, 1], [3]])
    text = format_set_cover(inst)
    assert text == "3 2\n1 2\n3\n"
    assert parse_set_cover("# c\n" + text) == inst
    with pytest.raises(ValueError):
        parse_set_cover("3 3\n1 2\n3\n")


@given(st.lists(graphs(max_n=5), min_size=2, max_size=3))
def test_component_sum_equals_unsplit_search(parts):
    parts = [p for p in parts if not p.isolated()]
    if len(parts) < 2:
        return
    g = disjoint_union(*parts)
    # search the union as one graph, without splitting into components
    search = _Search(g)
    whole = next(r for r in range(1, g.n) if any(search.is_cosecure(s) for s in search.dominating(r)))
    assert whole == min_cosecure(g).value == sum(min_cosecure(p).value for p in parts)

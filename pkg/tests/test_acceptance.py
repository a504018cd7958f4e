"""Acceptance criteria 1-10.

Each test records one PASS/FAIL line (printed in the pytest terminal
summary) with the instance count and runtime against its limit.
"""
import time
from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from cosecure import gadgets
from cosecure.chain import chain_from_sizes, chain_witness, csdn_cb, csdn_chain
from cosecure.domsets import CosecureCertificate, certify_cosecure, check_certificate, pendant_supports
from cosecure.generators import chain_size_vectors, connected_graphs, random_chain
from cosecure.graph import Graph, complete_bipartite
from cosecure.oracle import all_min_cosecure, min_cosecure
from cosecure.xcheck import xcheck
from helpers import ACCEPTANCE_LINES, naive_cosecure


def record(number, ok, detail, seconds, limit):
    within = seconds < limit
    verdict = "PASS" if ok and within else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {number}: {verdict} {detail} ({seconds:.1f} s, limit {limit} s)")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail
    assert within, f"runtime {seconds:.1f} s over {limit} s"


def chain_instances():
    """Criterion 2 instances: every size vector with n <= 12, then 1000 seeded shuffled chains with n <= 14."""
    out = [chain_from_sizes(xs, ys)[0] for xs, ys in chain_size_vectors(12)]
    rng = np.random.default_rng(20240601)
    out += [random_chain(rng, 14, shuffle=True)[0] for _ in range(1000)]
    return out


def test_criterion_1_complete_bipartite_formula():
    t = time.perf_counter()
    bad = [(p, q) for p in range(1, 6) for q in range(p, 6)
           if csdn_cb(p, q) != min_cosecure(complete_bipartite(p, q)).value]
    record(1, not bad, f"csdn_cb = oracle on 15 pairs p <= q <= 5, mismatches {bad}", time.perf_counter() - t, 10)


def test_criterion_2_and_3_chain_algorithm_and_witness():
    t = time.perf_counter()
    graphs = chain_instances()
    exhaustive = sum(1 for _ in chain_size_vectors(12))
    mismatches, bad_witness = [], []
    for g in graphs:
        value = csdn_chain(g)
        if value != min_cosecure(g).value:
            mismatches.append(g.edges())
        cert = chain_witness(g)
        res = certify_cosecure(g, cert.members)
        if not isinstance(res, CosecureCertificate) or len(res) != value:
            bad_witness.append(g.edges())
    elapsed = time.perf_counter() - t
    ACCEPTANCE_LINES.append(
        f"criterion 3: {'PASS' if not bad_witness else 'FAIL'} chain_witness certified with size csdn_chain on "
        f"{len(graphs)} instances, failures {len(bad_witness)} ({elapsed:.1f} s, shared with criterion 2)"
    )
    record(2, not mismatches,
           f"csdn_chain = oracle on {exhaustive} exhaustive + 1000 random chain graphs, mismatches {len(mismatches)}",
           elapsed, 300)
    assert not bad_witness


def test_criterion_4_gy4():
    t = time.perf_counter()
    # n = 5 bases give 25-vertex gadgets, one over the default guard
    report = xcheck("gy4", seed=0, guard=None, max_n=5)
    n_of = [sum(1 for _ in connected_graphs(n, min_n=n)) for n in range(1, 6)]
    sizes = [n for n, count in zip(range(1, 6), n_of) for _ in range(count)]
    cs_ok = all(r.extra["gamma_cs"] == 3 * n for r, n in zip(report.rows, sizes))
    dom_ok = all(r.gadget_opt == r.base_opt + n for r, n in zip(report.rows, sizes))
    order_is_5n = all(r.gadget_n == 5 * n for r, n in zip(report.rows, sizes))
    assert order_is_5n
    record(4, cs_ok and dom_ok and report.ok,
           f"[gamma_cs = 3n part] gamma_cs(G^Y) = 3n and gamma(G^Y) = gamma(G) + n on {len(report.rows)} "
           f"connected bases n <= 5", time.perf_counter() - t, 300)


@pytest.mark.xfail(strict=True, reason="the gadget keeps the n base vertices, so |V^Y| = 5n and gamma_cs = 3/5 |V^Y|")
def test_criterion_4_three_quarters_of_order():
    rows = [(art.gadget.n, min_cosecure(art.gadget, guard=None).value)
            for art in map(gadgets.gy4_construct, connected_graphs(5))]
    holds = sum(4 * cs == 3 * n for n, cs in rows)
    ACCEPTANCE_LINES.append(
        f"criterion 4: FAIL [3/4|V^Y| part] gamma_cs = 3/4 |V^Y| holds on {holds} of {len(rows)} gadgets; "
        f"the construction has |V^Y| = 5n, so gamma_cs = 3n = 3/5 |V^Y| (expected failure, recorded as xfail)"
    )
    assert holds == len(rows)


def test_criterion_5_pendant_path():
    t = time.perf_counter()
    report = xcheck("pendant-path", max_n=5)
    record(5, report.ok, f"gamma_cs(G') = gamma(G) + n on {len(report.rows)} connected bases n <= 5, "
           f"violations {len(report.violations)}", time.perf_counter() - t, 300)


def test_criterion_6_star_convex():
    t = time.perf_counter()
    report = xcheck("star-convex", trials=50, seed=6, max_n1=3, max_n2=3)
    convex = all(r.structure_ok for r in report.rows)
    record(6, report.ok and convex and len(report.rows) == 50,
           f"gamma_cs(G') = gamma(G) + 6 and star witness tree-convex on 50 seeded bases, "
           f"violations {len(report.violations)}", time.perf_counter() - t, 600)


def test_criterion_7_comb_convex():
    t = time.perf_counter()
    report = xcheck("comb-convex", trials=20, seed=7, max_n1=2, max_n2=2)
    largest = max(r.gadget_n for r in report.rows)
    record(7, report.ok and len(report.rows) == 20,
           f"gamma_cs(G') = gamma(G) + 2(n1 + 4) and comb witness valid on 20 seeded bases "
           f"(largest gadget {largest} vertices), violations {len(report.violations)}",
           time.perf_counter() - t, 900)


def test_criterion_8_set_cover():
    t = time.perf_counter()
    report = xcheck("set-cover", trials=100, seed=8, max_p=4, max_q=4)
    record(8, report.ok and len(report.rows) == 100,
           f"gamma_cs(gadget) = min cover + 4 and DPEO accepted on 100 seeded instances, "
           f"violations {len(report.violations)}", time.perf_counter() - t, 600)


def test_criterion_9_multi_pendant_supports():
    t = time.perf_counter()
    graphs = optima = 0
    violations = []
    for g in connected_graphs(7, min_n=2):
        multi = {u: leaves for u, leaves in pendant_supports(g).items() if len(leaves) >= 2}
        if not multi:
            continue
        graphs += 1
        _, sets = all_min_cosecure(g)
        for S in sets:
            optima += 1
            assert isinstance(certify_cosecure(g, S), CosecureCertificate)
            for u, leaves in multi.items():
                if u in S or not set(leaves) <= set(S):
                    violations.append((g.edges(), S, u))
    record(9, not violations and graphs > 0,
           f"{optima} optimal sets on {graphs} connected graphs n <= 7 with a multi-pendant support, "
           f"violations {len(violations)}", time.perf_counter() - t, 600)


def test_criterion_10_verifier_equivalence():
    t = time.perf_counter()
    pairs = 0
    disagreements = []
    for h in nx.graph_atlas_g()[1:]:
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        for r in range(g.n + 1):
            for S in combinations(range(g.n), r):
                pairs += 1
                res = certify_cosecure(g, S)
                ours = isinstance(res, CosecureCertificate)
                if ours != naive_cosecure(g, S) or (ours and not check_certificate(g, res)):
                    disagreements.append((g.edges(), S))
    record(10, not disagreements,
           f"certify_cosecure = naive all-replacements check on all {pairs} (graph, S) pairs, every graph n <= 7, "
           f"disagreements {len(disagreements)}", time.perf_counter() - t, 600)

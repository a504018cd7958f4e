"""
Reduction gadgets and their offsets
===================================

Each gadget turns a domination (or set cover) instance into a cosecure
domination instance whose optimum is shifted by a fixed offset.
"""

import numpy as np

from cosecure import gadgets, min_cosecure, min_dominating
from cosecure.generators import random_connected_bipartite
from cosecure.graph import path_graph
from cosecure.oracle import SetCoverInstance, min_set_cover
from cosecure.xcheck import xcheck

###############################################################################
# Pendant paths on P3: one extra vertex per base vertex.

art = gadgets.pendant_path(path_graph(3))
print(art.kind, art.gadget.n, "vertices; gamma + n =", min_dominating(path_graph(3)).value + art.offset,
      "gamma_cs =", min_cosecure(art.gadget).value)

###############################################################################
# Star- and comb-convex bipartite gadgets on a random bipartite base.

base = random_connected_bipartite(np.random.default_rng(3), 2, 2)
for build in (gadgets.star_convex, gadgets.comb_convex):
    art = build(base)
    print(art.kind, art.gadget.n, "vertices, offset", art.offset,
          "->", min_dominating(base).value + art.offset, "=", min_cosecure(art.gadget).value)

###############################################################################
# Set cover: the gadget comes with an elimination ordering.

inst = SetCoverInstance(3, [[1, 2], [2, 3], [3]])
art = gadgets.set_cover_gadget(inst)
print("cover", min_set_cover(inst).value, "+ 4 =", min_cosecure(art.gadget).value)
print("ordering labels:", [art.labels[v] for v in art.witness["dpeo"]])

###############################################################################
# GY4 gadgets: the cosecure value is three per base vertex whatever the base.

art = gadgets.gy4_construct(path_graph(3))
print("gy4 on P3:", art.gadget.n, "vertices, gamma_cs =", min_cosecure(art.gadget).value,
      "predicted", gadgets.gy4_csdn(art))

###############################################################################
# Batch checks give a per-instance report.

for kind, trials in [("pendant-path", None), ("star-convex", 10), ("set-cover", 20)]:
    report = xcheck(kind, trials, seed=0, max_n=4)
    print(kind, len(report.rows), "instances,", len(report.violations), "violations")

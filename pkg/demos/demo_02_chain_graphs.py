"""
Chain graphs by class sizes
===========================

A connected chain graph is fixed by the sizes of its twin classes. The
linear dynamic program agrees with the exhaustive oracle; the
pendant-stripping recursion does not always.
"""

import numpy as np

from cosecure import analyze_chain, csdn_sizes, min_cosecure, strip_recursion
from cosecure.chain import chain_from_sizes
from cosecure.generators import chain_size_vectors, random_chain

###############################################################################
# One graph, fully reported.

g, part = chain_from_sizes((2, 1, 3), (1, 2, 2))
report = analyze_chain(g)
print(report.to_dict())

###############################################################################
# Compare both methods against the oracle on every size vector with n <= 10.

rows = []
for xs, ys in chain_size_vectors(10):
    oracle = min_cosecure(chain_from_sizes(xs, ys)[0]).value
    rows.append((csdn_sizes(xs, ys) - oracle, strip_recursion(xs, ys) - oracle))
diff = np.array(rows)
print("instances:", len(diff))
print("dynamic program mismatches:", np.count_nonzero(diff[:, 0]))
print("stripping recursion over-counts:", np.count_nonzero(diff[:, 1]), "max excess", diff[:, 1].max())

###############################################################################
# The smallest over-count: the support left behind still replaces members
# of the remainder.

xs, ys = (1, 1, 1), (2, 2, 2)
print("strip", strip_recursion(xs, ys), "exact", csdn_sizes(xs, ys))

###############################################################################
# The program is linear in the number of classes, so large chains are cheap.

rng = np.random.default_rng(1)
sizes = tuple(rng.integers(1, 5, 200)), tuple(rng.integers(1, 5, 200))
print("k = 200:", csdn_sizes(*sizes))
g, _ = random_chain(rng, 14)
print("random chain on", g.n, "vertices:", analyze_chain(g).gamma_cs, "=", min_cosecure(g).value)

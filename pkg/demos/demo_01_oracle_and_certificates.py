"""
Exact cosecure domination on small graphs
=========================================

Solve a few graphs exactly, read the replacement certificate, and watch the
verifier reject sets that fail.
"""

from cosecure import certify_cosecure, min_cosecure, min_dominating
from cosecure.graph import complete_bipartite, cycle_graph, path_graph

###############################################################################
# The path on four vertices needs two vertices either way.

p4 = path_graph(4)
print("P4: gamma =", min_dominating(p4).value, " gamma_cs =", min_cosecure(p4).value)

###############################################################################
# A certificate names, for each member, an outside neighbour that can take
# its place without losing domination.

cert = min_cosecure(cycle_graph(5)).certificate
print("C5 witness", cert.members, "replacements", cert.replacement)

###############################################################################
# Failures come with a reason and a vertex.

print(certify_cosecure(path_graph(3), {1}))
print(certify_cosecure(p4, {0}))

###############################################################################
# Complete bipartite graphs: the value only depends on the smaller side.

for p in range(1, 6):
    print(p, [min_cosecure(complete_bipartite(p, q)).value for q in range(p, 6)])

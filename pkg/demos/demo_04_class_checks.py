"""
Structural checks
=================

Tree convexity, star and comb shapes, elimination orderings and chordless
cycles on small graphs.
"""

from cosecure import gadgets, is_chordal_bipartite_small, is_comb, is_tree_convex, verify_dpeo
from cosecure.classcheck import chordless_long_cycle
from cosecure.graph import Graph, bipartition_of, complete_bipartite, cycle_graph

###############################################################################
# C6 is not tree-convex for the X-path 0-2-4: vertex 5 sees both ends.

c6 = cycle_graph(6)
print(is_tree_convex(c6, bipartition_of(c6), [(0, 2), (2, 4)]))
print("chordless cycle:", chordless_long_cycle(c6))

###############################################################################
# A chord through opposite corners leaves only 4-cycles.

print(is_chordal_bipartite_small(Graph.from_edges(6, c6.edges() + [(0, 3)])))

###############################################################################
# The comb gadget carries its own comb.

art = gadgets.comb_convex(complete_bipartite(1, 2))
w = art.witness
print("comb:", is_comb(w["tree"], w["backbone"], w["teeth"]),
      "backbone", [art.labels[v] for v in w["backbone"]])

###############################################################################
# Elimination orderings report the first bad position.

print(verify_dpeo(cycle_graph(4), [0, 1, 2, 3]))

#!/usr/bin/env python3
"""Be-paths and path-bipartite graphs, from the 4-vertex path up to the
16-vertex worked example with its published-list discrepancy.

    python demos/03_be_paths.py
"""

from proxigraph import (
    be_path_witness,
    bpath_pairs,
    enumerate_be_paths,
    is_be_path,
    is_path_bipartite,
    is_path_complete,
    is_quotient_complete_bipartite,
    quotient_graph,
    union_of_be_paths,
)
from proxigraph.instances import PUBLISHED_BPATH_PAIRS, example_3_1, example_3_7

# A be-path lives inside A u B and crosses between the parts exactly once.
graph, parts = example_3_7()  # the path a1 - b1 - a2 - b2, A = {a1, a2}
print("path-bipartite?", is_path_bipartite(graph, parts))

witnesses = enumerate_be_paths(graph, parts)
print("all be-paths:", sorted(w.path for w in witnesses))
print("their union is the whole graph?", union_of_be_paths(graph, parts) == graph)

# (a1, b1) is joinable; (a1, b2) is not: every a1-b2 path crosses twice.
pairs = bpath_pairs(graph, parts)
print("joinable pairs:", sorted(pairs))
print("(a1, b2) joinable?", ("a1", "b2") in pairs)

# The quotient contracts the components of G[A] and G[B]; completeness of
# the quotient is the same thing as path-completeness.
q = quotient_graph(graph, parts)
print("quotient edges:", sorted(q.edges), "of a possible",
      len(q.a_components) * len(q.b_components))
print("path-complete?", is_path_complete(graph, parts),
      "| quotient complete?", is_quotient_complete_bipartite(q))

# The 16-vertex instance: component analysis forces every pair of A x B
# to be joinable, although the originally published list stops at 46.
big, big_parts = example_3_1()
big_pairs = bpath_pairs(big, big_parts)
published = set(PUBLISHED_BPATH_PAIRS)
print("\n16-vertex example: joinable pairs =", len(big_pairs))
print("published list size =", len(published), "| strict subset?", published < big_pairs)
omitted = sorted(big_pairs - published)[:4]
print("sample omitted pairs:", omitted)

witness = be_path_witness(big, big_parts, "x2", "x5")
print("a be-path for the omitted pair (x2, x5):", witness.path)
print("re-validates?", is_be_path(big, witness.path, big_parts) is not None)

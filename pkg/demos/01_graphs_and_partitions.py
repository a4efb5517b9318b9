#!/usr/bin/env python3
"""Tour of the graph layer: building, slicing, components, DOT export.

Run from the repository root after `pip install -e .`:

    python demos/01_graphs_and_partitions.py
"""

from proxigraph import (
    Bipartition,
    build_graph,
    connected_components,
    find_path,
    graph_union,
    induced_bipartite_subgraph,
    induced_subgraph,
    is_connected,
    prune_isolated,
)
from proxigraph.fileio import graph_to_dot

# A small graph: a 4-cycle with a pendant vertex and one spectator.
g = build_graph(
    ["a", "b", "c", "d", "e", "spectator"],
    [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"], ["d", "e"]],
)
print("vertices:", g.sorted_vertices())
print("edges:   ", g.sorted_edges())
print("connected?", is_connected(g))
print("components:", [sorted(block) for block in connected_components(g)])

# Dropping isolated vertices keeps every edge and nothing else.
print("\npruned:", prune_isolated(g).sorted_vertices())

# Induced subgraphs keep the edges inside a vertex subset; the
# induced-bipartite subgraph keeps only the edges crossing a partition.
parts = Bipartition.of(["a", "c", "e"], ["b", "d", "spectator"])
inner_a = induced_subgraph(g, parts.a)
inner_b = induced_subgraph(g, parts.b)
cross = induced_bipartite_subgraph(g, parts)
print("\nedges inside A:", inner_a.sorted_edges())
print("edges inside B:", inner_b.sorted_edges())
print("crossing edges:", cross.sorted_edges())

# The three pieces always reassemble the original graph.
print("reassembled == original?", graph_union([inner_a, inner_b, cross]) == g)

# Shortest paths are deterministic: ties break by label order.
print("\nshortest a->e:", find_path(g, "a", "e"))
print("path to the spectator:", find_path(g, "a", "spectator"))

print("\nDOT export:")
print(graph_to_dot(prune_isolated(g)))

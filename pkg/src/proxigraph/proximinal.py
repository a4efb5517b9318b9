"""Proximinal bipartite graphs: construction, verification, witness metric.

A bipartite graph with fixed parts (A, B) is proximinal for a space when A
and B are disjoint proximinal subsets and the edges are exactly the cross
pairs realizing dist(A, B).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Bipartition, GraphError, SimpleGraph, edge_key
from .spaces import FiniteSemimetricSpace, is_proximinal, set_distance


def _require_partition_of_points(space: FiniteSemimetricSpace, parts: Bipartition) -> None:
    pts = space.point_set()
    if parts.union != pts:
        raise GraphError(
            f"parts must cover the point set exactly; uncovered={sorted(pts - parts.union)},"
            f" extraneous={sorted(parts.union - pts)}"
        )


def is_bipartite_with_parts(graph: SimpleGraph, parts: Bipartition) -> bool:
    """True iff V(G) = A ∪ B and every edge joins A to B."""
    if graph.vertices != parts.union:
        return False
    return all((u in parts.a) != (v in parts.a) for u, v in graph.edges)


def build_proximinal_graph(space: FiniteSemimetricSpace, parts: Bipartition) -> SimpleGraph:
    """Graph on A ∪ B whose edges are the cross pairs at distance dist(A, B)."""
    _require_partition_of_points(space, parts)
    dist = set_distance(space, parts.a, parts.b)
    edges = frozenset(
        edge_key(x, y) for x in parts.a for y in parts.b if space.d(x, y) == dist
    )
    return SimpleGraph(parts.union, edges)


def verify_proximinal_graph(
    graph: SimpleGraph, parts: Bipartition, space: FiniteSemimetricSpace
) -> bool:
    """Check the proximinal-graph property of (graph, parts) against a space."""
    if graph.vertices != space.point_set():
        raise GraphError("graph vertices and space points differ")
    if not is_bipartite_with_parts(graph, parts):
        return False
    if not (is_proximinal(space, parts.a) and is_proximinal(space, parts.b)):
        return False
    dist = set_distance(space, parts.a, parts.b)
    return all(
        graph.has_edge(x, y) == (space.d(x, y) == dist) for x in parts.a for y in parts.b
    )


def witness_proximinal_metric(graph: SimpleGraph, parts: Bipartition) -> FiniteSemimetricSpace:
    """A metric realizing a nonempty bipartite graph as proximinal.

    Adjacent vertices sit at distance 1, all other distinct pairs at 2, so
    dist(A, B) = 1 and the edges are exactly the best proximity pairs.
    """
    if not is_bipartite_with_parts(graph, parts):
        raise GraphError("graph is not bipartite with the given parts")
    if not graph.edges:
        raise GraphError("an empty bipartite graph has no proximinal witness metric")
    pts = tuple(graph.sorted_vertices())
    one, two, zero = Fraction(1), Fraction(2), Fraction(0)
    table = [
        [zero if p == q else (one if graph.has_edge(p, q) else two) for q in pts] for p in pts
    ]
    return FiniteSemimetricSpace(pts, tuple(tuple(row) for row in table))


@dataclass(frozen=True)
class ProximinalGraphCertificate:
    """A graph, its parts, and a space realizing it as proximinal."""

    graph: SimpleGraph
    parts: Bipartition
    space: FiniteSemimetricSpace

    def verify(self) -> bool:
        return verify_proximinal_graph(self.graph, self.parts, self.space)

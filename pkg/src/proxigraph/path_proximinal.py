"""Path-proximinal graphs: threshold construction, verification, witnesses.

A graph is path-proximinal for parts (A, B) and a semimetric d when A and B
are proximinal, the edges are exactly the pairs with d(x, y) <= dist(A, B),
and the graph is path-bipartite of (A, B).  The module also covers the
structural reachability conditions, the characterization through isolated
vertices, the overlap with proximinal graphs, and the degree-one theory of
ultrametric realizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bepaths import find_path_bipartite_partition, is_path_bipartite, is_path_complete
from .graphs import (
    Bipartition,
    GraphError,
    SimpleGraph,
    connected_components,
    edge_key,
    induced_bipartite_subgraph,
    induced_subgraph,
    is_connected,
)
from .proximinal import is_bipartite_with_parts, verify_proximinal_graph
from .spaces import (
    FiniteSemimetricSpace,
    SpaceClass,
    classify,
    is_proximinal,
    proximity_report,
    set_distance,
)


def _require_partition_of_points(space: FiniteSemimetricSpace, parts: Bipartition) -> None:
    pts = space.point_set()
    if parts.union != pts:
        raise GraphError(
            f"parts must cover the point set exactly; uncovered={sorted(pts - parts.union)},"
            f" extraneous={sorted(parts.union - pts)}"
        )


def build_threshold_graph(space: FiniteSemimetricSpace, parts: Bipartition) -> SimpleGraph:
    """Graph on all points with edges where 0 < d(x, y) <= dist(A, B).

    Unlike a proximinal graph, within-part edges are allowed whenever the
    distance stays at or below the part separation.
    """
    _require_partition_of_points(space, parts)
    threshold = set_distance(space, parts.a, parts.b)
    pts = space.points
    edges = frozenset(
        edge_key(pts[i], pts[j])
        for i in range(len(pts))
        for j in range(i + 1, len(pts))
        if space.table[i][j] <= threshold
    )
    return SimpleGraph(space.point_set(), edges)


def verify_path_proximinal(
    graph: SimpleGraph, parts: Bipartition, space: FiniteSemimetricSpace
) -> bool:
    """Full check of the path-proximinal property.

    Recomputes the threshold graph and compares structurally, then checks
    path-bipartiteness and proximinality of both parts.
    """
    if graph.vertices != space.point_set():
        raise GraphError("graph vertices and space points differ")
    if parts.union != graph.vertices:
        return False
    if graph != build_threshold_graph(space, parts):
        return False
    if not is_path_bipartite(graph, parts):
        return False
    return is_proximinal(space, parts.a) and is_proximinal(space, parts.b)


def check_structural_conditions(space: FiniteSemimetricSpace, parts: Bipartition) -> bool:
    """Reachability of the best-proximity core inside each part.

    True iff inside the threshold graph every point of A \\ A0 reaches A0
    through a path lying in the part A, and symmetrically for B.  This is
    equivalent to the threshold graph being path-bipartite of (A, B).
    """
    _require_partition_of_points(space, parts)
    graph = build_threshold_graph(space, parts)
    report = proximity_report(space, parts)
    for part, core in ((parts.a, report.a0), (parts.b, report.b0)):
        for block in connected_components(induced_subgraph(graph, part)):
            if not block & core:
                return False
    return True


def witness_metric_for_path_bipartite(
    graph: SimpleGraph, parts: Bipartition
) -> FiniteSemimetricSpace:
    """A {0,1,2}-valued metric making a path-bipartite graph path-proximinal.

    Adjacent vertices are at distance 1 and all other distinct pairs at 2,
    so dist(A, B) = 1 and the threshold graph reproduces the input edges.
    """
    if not is_path_bipartite(graph, parts):
        raise GraphError("graph is not path-bipartite of the given parts")
    pts = tuple(graph.sorted_vertices())
    zero, one, two = Fraction(0), Fraction(1), Fraction(2)
    table = tuple(
        tuple(zero if p == q else (one if graph.has_edge(p, q) else two) for q in pts)
        for p in pts
    )
    return FiniteSemimetricSpace(pts, table)


@dataclass(frozen=True)
class PathProximinalCertificate:
    """A graph with parts and a space witnessing path-proximinality."""

    graph: SimpleGraph
    parts: Bipartition
    space: FiniteSemimetricSpace

    def verify(self) -> bool:
        return verify_path_proximinal(self.graph, self.parts, self.space)


def is_path_proximinal_graph(graph: SimpleGraph) -> Optional[PathProximinalCertificate]:
    """Certificate that the graph is path-proximinal, or None.

    A certificate exists iff the graph has no isolated vertices; it is
    assembled from the canonical partition and the {0,1,2} witness metric
    and always re-verifies.
    """
    parts = find_path_bipartite_partition(graph)
    if parts is None:
        return None
    space = witness_metric_for_path_bipartite(graph, parts)
    certificate = PathProximinalCertificate(graph, parts, space)
    assert certificate.verify()
    return certificate


def check_prop_3_22(
    graph: SimpleGraph, parts: Bipartition, space: FiniteSemimetricSpace
) -> bool:
    """For a proximinal graph: is every vertex in a best proximity pair?

    True iff A0 = A and B0 = B, which holds exactly when the graph has no
    isolated vertices (and is then also path-proximinal for some metric).
    """
    if not verify_proximinal_graph(graph, parts, space):
        raise GraphError("inputs do not form a proximinal graph certificate")
    report = proximity_report(space, parts)
    return report.a0 == parts.a and report.b0 == parts.b


def check_within_part_separation(space: FiniteSemimetricSpace, parts: Bipartition) -> bool:
    """True iff all distinct same-part pairs are strictly farther than dist(A, B)."""
    _require_partition_of_points(space, parts)
    threshold = set_distance(space, parts.a, parts.b)
    for part in (parts.a, parts.b):
        block = sorted(part)
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                if space.d(block[i], block[j]) <= threshold:
                    return False
    return True


def all_degrees_one(graph: SimpleGraph) -> bool:
    """True iff every vertex has exactly one neighbor (a perfect matching)."""
    if not graph.vertices:
        return False
    return all(len(graph.adjacency[v]) == 1 for v in graph.vertices)


def witness_ultrametric(graph: SimpleGraph) -> Optional[PathProximinalCertificate]:
    """Ultrametric certificate for a graph where every degree equals one.

    Parts are chosen deterministically (per edge: smaller label to A), the
    space puts matched pairs at distance 1 and everything else at 2.  No
    vertex has two distance-1 neighbors, so the strong triangle inequality
    holds.  Returns None when some degree differs from one, since no
    ultrametric certificate can exist then.
    """
    if not all_degrees_one(graph):
        return None
    a = frozenset(e[0] for e in graph.edges)
    parts = Bipartition(a, graph.vertices - a)
    pts = tuple(graph.sorted_vertices())
    zero, one, two = Fraction(0), Fraction(1), Fraction(2)
    table = tuple(
        tuple(zero if p == q else (one if graph.has_edge(p, q) else two) for q in pts)
        for p in pts
    )
    space = FiniteSemimetricSpace(pts, table)
    certificate = PathProximinalCertificate(graph, parts, space)
    assert classify(space) is SpaceClass.ULTRAMETRIC
    assert certificate.verify()
    return certificate


def check_corollary_3_12(graph: SimpleGraph) -> bool:
    """True iff every connected component has exactly two vertices."""
    if not graph.vertices:
        return False
    return all(len(block) == 2 for block in connected_components(graph))


def check_corollary_3_11(
    graph: SimpleGraph, parts: Bipartition, space: FiniteSemimetricSpace
) -> tuple[bool, bool, bool, bool]:
    """Evaluate the four equivalent statements for ultrametric certificates.

    Preconditions: the space is ultrametric, (graph, parts, space) verifies
    path-proximinal, and the graph is bipartite with parts (A, B).  Returns
    (connected, complete, cross-complete, path-complete), each evaluated
    independently.
    """
    if classify(space) is not SpaceClass.ULTRAMETRIC:
        raise GraphError("precondition violated: space is not ultrametric")
    if not verify_path_proximinal(graph, parts, space):
        raise GraphError("precondition violated: not a path-proximinal certificate")
    if not is_bipartite_with_parts(graph, parts):
        raise GraphError("precondition violated: graph is not bipartite with the given parts")
    n = len(graph.vertices)
    connected = is_connected(graph)
    complete = len(graph.edges) == n * (n - 1) // 2
    cross = induced_bipartite_subgraph(graph, parts)
    cross_complete = len(cross.edges) == len(parts.a) * len(parts.b)
    path_complete = is_path_complete(graph, parts)
    return connected, complete, cross_complete, path_complete

#!/usr/bin/env python3
"""Witness spaces: realizing graphs as proximinal or path-proximinal.

    python demos/04_witness_constructions.py
"""

from proxigraph import (
    Bipartition,
    build_graph,
    build_proximinal_graph,
    build_threshold_graph,
    check_within_part_separation,
    classify,
    is_path_proximinal_graph,
    set_distance,
    verify_path_proximinal,
    verify_proximinal_graph,
    witness_metric_for_path_bipartite,
    witness_proximinal_metric,
    witness_ultrametric,
)
from proxigraph.instances import TruncationParams, example_3_2, example_3_12_truncation

# A proximinal graph keeps only the cross pairs at minimum distance.
space, parts = example_3_2()
proximal = build_proximinal_graph(space, parts)
print("proximinal graph edges:", len(proximal.edges))
print("verifies?", verify_proximinal_graph(proximal, parts, space))

# The threshold graph keeps everything at or below dist(A, B), so
# within-part edges appear; this is the path-proximinal shape.
threshold = build_threshold_graph(space, parts)
print("\nthreshold graph edges:", len(threshold.edges))
print("path-proximinal?", verify_path_proximinal(threshold, parts, space))
print("within-part separation?", check_within_part_separation(space, parts))

# Any graph without isolated vertices admits a {0,1,2} witness metric.
wheel = build_graph(
    ["hub", "r1", "r2", "r3"],
    [["hub", "r1"], ["hub", "r2"], ["hub", "r3"], ["r1", "r2"]],
)
certificate = is_path_proximinal_graph(wheel)
print("\nwheel certificate parts:", sorted(certificate.parts.a), "|", sorted(certificate.parts.b))
print("witness class:", classify(certificate.space).value)
print("certificate verifies?", certificate.verify())

# Path-bipartite graphs take a witness for a chosen partition too.
hub_parts = Bipartition.of(["hub"], ["r1", "r2", "r3"])
hub_space = witness_metric_for_path_bipartite(wheel, hub_parts)
print("dist(A, B) in the witness:", set_distance(hub_space, hub_parts.a, hub_parts.b))

# Ultrametric witnesses exist exactly for perfect matchings.
matching = build_graph(["a", "b", "c", "d"], [["a", "b"], ["c", "d"]])
ultra_cert = witness_ultrametric(matching)
print("\nmatching ultrametric witness:", classify(ultra_cert.space).value)
print("parts:", sorted(ultra_cert.parts.a), "|", sorted(ultra_cert.parts.b))
print("star has no ultrametric witness:",
      witness_ultrametric(build_graph(["s", "t", "u"], [["s", "t"], ["s", "u"]])))

# Proximinal-graph witnesses put edges at 1 and everything else at 2.
k2 = build_graph(["a", "b"], [["a", "b"]])
k2_parts = Bipartition.of(["a"], ["b"])
print("\nK2 witness distance:", witness_proximinal_metric(k2, k2_parts).d("a", "b"))

# The complex-lattice truncation is path-complete and path-proximinal.
lattice_space, lattice_parts = example_3_12_truncation(TruncationParams(2, 2, 2))
lattice_graph = build_threshold_graph(lattice_space, lattice_parts)
print("\nlattice truncation: dist =", set_distance(lattice_space, lattice_parts.a, lattice_parts.b),
      "| path-proximinal?", verify_path_proximinal(lattice_graph, lattice_parts, lattice_space))

#!/usr/bin/env python3
"""Finite semimetric spaces: exact distances, classification, proximity.

    python demos/02_semimetric_spaces.py
"""

from proxigraph import (
    Bipartition,
    best_approximations,
    build_space,
    check_theorem_2_1,
    classify,
    diameter,
    hypercube_space,
    proximity_report,
)

# Distances are exact rationals, so threshold comparisons never wobble.
space = build_space(
    ["p", "q", "r"],
    [[0, "1/2", "3/2"], ["1/2", 0, 1], ["3/2", 1, 0]],
)
print("d(p, r) =", space.d("p", "r"))
print("class:", classify(space).value)

# The 4-bit Hamming cube is a metric space but not ultrametric:
# 0000 and 1100 sit at distance 2 while both are 1 away from 0100.
cube = hypercube_space(4)
print("\nhypercube class:", classify(cube).value)
print("diameter:", diameter(cube, cube.points))
print("nearest weight-1 points to 0000:",
      sorted(best_approximations(cube, "0000", ["1000", "0100", "0010", "0001"])))

# Distance between two sets is the minimum over cross pairs, and the
# proximity report collects every pair attaining it.
evens = [p for p in cube.points if p.count("1") % 2 == 0]
odds = [p for p in cube.points if p.count("1") % 2 == 1]
parts = Bipartition.of(evens, odds)
report = proximity_report(cube, parts)
print("\ndist(evens, odds) =", report.distance)
print("pairs attaining it:", len(report.pairs))
print("every even point participates?", report.a0 == parts.a)

# In ultrametric spaces, the bound diam(B) <= dist(A, B) is equivalent to
# best-proximity saturation of the parts. Both sides evaluate independently.
ultra = build_space(
    ["a1", "a2", "b1", "b2"],
    [[0, 2, 2, 2], [2, 0, 2, 2], [2, 2, 0, 1], [2, 2, 1, 0]],
)
print("\nultrametric check:", classify(ultra).value)
flat = Bipartition.of(["a1", "a2"], ["b1", "b2"])
print("diameter bound vs saturation:", check_theorem_2_1(ultra, flat))

skewed = build_space(
    ["a1", "a2", "b1", "b2"],
    [[0, 3, 1, 3], [3, 0, 3, 3], [1, 3, 0, 3], [3, 3, 3, 0]],
)
print("a lopsided instance:", check_theorem_2_1(skewed, flat))

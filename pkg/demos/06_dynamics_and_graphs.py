"""The combinatorial layer: partial actions, finite dynamics, graphs.

Partial-action freeness at a point matches effectiveness of the
transformation groupoid (both strengths).  For a single map on a
finite set, the non-effective locus has two independent
characterizations that must agree (degenerately, everything).  For
sink-free graphs, saturated hereditary vertex sets play the role of
the invariant-set lattice, and the obstruction vertex set vanishes
exactly when every cycle has an exit.
"""

import random

from glab import (
    DirectedGraph,
    FiniteDynSystem,
    PartialAction,
    cyclic_group,
    from_partial_action,
)
from glab.generators import random_graph, random_partial_action
from glab.formats import instance_from_dict

# A partial action: Z/2Z swaps a and b but is only defined at c on the
# nontrivial element's domain {c}.
z2 = cyclic_group(2)
pa = PartialAction(
    z2,
    ("a", "b", "c"),
    {"r0": {x: x for x in "abc"}, "r1": {"a": "b", "b": "a", "c": "c"}},
)
g = from_partial_action(pa)
print("partial-action groupoid:", g)
for x in pa.space:
    unit = (x, "r0", x)
    print(
        f"  at {x}: topologically free = {pa.is_topologically_free_at(x)}, "
        f"effective in the groupoid = {g.is_effective_at(unit)}"
    )

# Random partial actions keep the correspondence, point by point.
rng = random.Random(2024)
action = random_partial_action(rng, cyclic_group(4), 6)
h = from_partial_action(action)
agree = all(
    action.is_strongly_topologically_free_at(x)
    == h.is_jointly_effective_at((x, "r0", x))
    for x in action.space
)
print("random partial action agrees at every point:", agree)

# Finite single-map dynamics: periodic loci are honest fixed-point
# sets of iterates, and both sides of the non-effective locus agree.
system = FiniteDynSystem((0, 1, 2, 3), {0: 1, 1: 2, 2: 3, 3: 1})
print("\ndynamics on 4 points (0 -> 1 -> 2 -> 3 -> 1):")
for p in range(1, 5):
    print(f"  fixed by T^{p}:", sorted(system.periodic_locus(p)))
print("  periodic points:", sorted(system.periodic_points()))
print("  non-effective locus (both sides):", sorted(system.noneffective_locus()))
print("  invariant sets:", [sorted(s) for s in system.invariant_sets()])

# Graphs: one loop has no exit (the circle algebra pattern); adding a
# second loop restores the exit condition.
loop = DirectedGraph(("v",), [("loop", "v", "v")])
print("\nsingle loop: condition (L):", loop.condition_L(),
      "obstruction:", sorted(loop.obstruction_vertex_set()))
two = DirectedGraph(("v",), [("l1", "v", "v"), ("l2", "v", "v")])
print("two loops:  condition (L):", two.condition_L(),
      "obstruction:", sorted(two.obstruction_vertex_set()))

graph = instance_from_dict(random_graph(random.Random(7), 8)).obj
lattice = graph.hereditary_saturated_sets()
print(f"\nrandom sink-free graph on 8 vertices: {len(graph.edges)} edges, "
      f"{len(lattice)} saturated hereditary sets")
print("  obstruction vertex set:", sorted(graph.obstruction_vertex_set()) or "(empty)")
print("  condition (L):", graph.condition_L())

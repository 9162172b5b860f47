"""Building finite groupoids and exploring their set-level dynamics.

A finite groupoid is a set of arrows with source/range maps into a unit
space, an involutive inverse, and a partial composition.  This script
builds the running examples used throughout the package and pokes at
orbits, invariant sets, reductions, and isotropy.
"""

from glab import (
    cyclic_group,
    from_group_action,
    global_action,
    group_bundle,
    pair_groupoid,
    disjoint_union,
)

# The pair groupoid on three points: one arrow (x, y) from y to x.
pairs = pair_groupoid((1, 2, 3))
print("pair groupoid:", pairs)
print("  validation:", pairs.validate())
print("  orbits:", [sorted(map(str, o)) for o in pairs.orbits()])

# Z/2Z acting on {a, b, c} by swapping a and b.  The groupoid has six
# arrows (x, g, y): three units, the swap arrows between a and b, and a
# nontrivial isotropy arrow at the fixed point c.
z2 = cyclic_group(2)
action = global_action(
    z2,
    ("a", "b", "c"),
    {"r0": {x: x for x in "abc"}, "r1": {"a": "b", "b": "a", "c": "c"}},
)
swap = from_group_action(action, name="swap-and-fix")
print("\nswap-and-fix:", swap)
print("  orbits:", [sorted(p[0] for p in o) for o in swap.orbits()])
print("  invariant unit sets:")
for members in swap.invariant_subsets():
    print("   ", sorted(p[0] for p in members) or "(empty)")

# Effectiveness: a unit is effective when its isotropy group is trivial
# (for finite = discrete groupoids the interior of the isotropy is the
# isotropy itself).
effective = swap.effective_units()
print("  effective units:", sorted(p[0] for p in effective))
fixed = next(u for u in swap.unit_list if u[0] == "c")
print("  isotropy at c has order", len(swap.isotropy(fixed).elements))

# Reduction to an invariant set is again a groupoid; restricting the
# swap groupoid to the fixed point leaves a copy of Z/2Z.
reduction = swap.restrict(next(o for o in swap.orbits() if len(o) == 1))
print("  reduction to {c}:", reduction, "->", reduction.validate())

# Group bundles are pure isotropy; a bundle over one unit is a group.
bundle = group_bundle({"u": z2})
print("\nZ/2Z as a bundle:", bundle)
print("  effective units:", sorted(bundle.effective_units()) or "(none)")

# Disjoint unions tag elements by part.
union = disjoint_union([pairs, bundle])
print("\ndisjoint union:", union)
print("  orbit count:", len(union.orbits()))

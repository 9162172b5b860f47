"""The obstruction ideal and the orbit-space (collapse) representation.

The non-effective units (nontrivial isotropy) form an invariant set;
the dynamical ideal over it, the obstruction ideal, swallows every
ideal that misses the diagonal.  The kernel of the representation that
collapses each source fiber onto its orbit is such an ideal, and its
support exhausts the obstruction ideal's support, witnessing
minimality.  A perturbation witness shows why nontrivial isotropy is
the only obstruction: any function on a bisection avoiding the
isotropy at x is squeezed to zero by a diagonal bump at x.
"""

from glab import (
    collapse_kernel,
    cyclic_group,
    delta,
    exel_witness,
    from_group_action,
    global_action,
    group_bundle,
    obstruction_ideal,
    pair_groupoid,
    wedderburn,
)

z2 = cyclic_group(2)
action = global_action(
    z2,
    ("a", "b", "c"),
    {"r0": {x: x for x in "abc"}, "r1": {"a": "b", "b": "a", "c": "c"}},
)
swap = from_group_action(action, name="swap-and-fix")

j_ob = obstruction_ideal(swap)
print("swap-and-fix:")
print("  non-effective units:", sorted(p[0] for p in j_ob.diagonal_units()))
print("  obstruction ideal blocks:", sorted(j_ob.blocks),
      "(the two characters over the fixed point)")

kernel = collapse_kernel(swap)
print("  collapse kernel blocks:", sorted(kernel.blocks))
print("  purely non-dynamical:", kernel.is_purely_nondynamical())
print("  support matches the obstruction ideal:",
      kernel.support() == j_ob.support())

decomposition = wedderburn(swap)
pnd = [i for i in decomposition.all_ideals() if i.is_purely_nondynamical()]
print("  every purely non-dynamical ideal sits inside J^ob:",
      all(i <= j_ob for i in pnd))

# Two extremes: a principal groupoid has zero obstruction ideal, a
# group bundle is obstructed everywhere.
pairs = pair_groupoid((1, 2, 3))
print("\npair groupoid: obstruction ideal is zero:",
      obstruction_ideal(pairs).is_zero)
bundle = group_bundle({"u": z2})
print("Z/2Z bundle: obstruction ideal is everything:",
      obstruction_ideal(bundle) == wedderburn(bundle).full_ideal())
print("  its collapse kernel is the sign character:",
      sorted(collapse_kernel(bundle).blocks))

# The perturbation witness at an effective unit.
arrow = next(el for el in swap.elements if el[0] == "b" and el[2] == "a")
x = next(u for u in swap.unit_list if u[0] == "a")
f = delta(swap, arrow)
h = exel_witness(swap, x, [arrow], f)
print("\nperturbation witness at a: h(a) =", h.coefficient(x).real,
      " norm(h f h) =", (h * f * h).norm())

"""Decomposing the groupoid algebra into simple matrix blocks.

The algebra of a finite groupoid is a finite-dimensional C*-algebra,
hence a direct sum of matrix algebras.  The decomposition is computed
from a generic self-adjoint central element (seeded, reproducible):
its spectral projections are the minimal central idempotents, block
dimensions come from ranks, and the squares of the dimensions must sum
to the number of groupoid elements.
"""

import numpy as np

from glab import (
    cyclic_group,
    from_group_action,
    global_action,
    group_bundle,
    pair_groupoid,
    wedderburn,
)

z2 = cyclic_group(2)

bundle = group_bundle({"u": z2})
decomposition = wedderburn(bundle)
print("Z/2Z bundle decomposes into blocks of dimensions", decomposition.dimensions)
for block in decomposition.blocks:
    print("  idempotent coefficients:", np.round(block.idempotent.coeffs.real, 3))

pairs = pair_groupoid((1, 2))
print("\npair groupoid on 2 points:", wedderburn(pairs).dimensions,
      "(a single 2x2 matrix algebra)")

action = global_action(
    z2,
    ("a", "b", "c"),
    {"r0": {x: x for x in "abc"}, "r1": {"a": "b", "b": "a", "c": "c"}},
)
swap = from_group_action(action, name="swap-and-fix")
decomposition = wedderburn(swap)
print("\nswap-and-fix blocks:", decomposition.dimensions)
print("  sum of squares:", sum(n * n for n in decomposition.dimensions),
      "= |G| =", len(swap))
for block in decomposition.blocks:
    print(f"  block {block.index}: dim {block.dimension}, orbit",
          sorted(p[0] for p in block.orbit),
          "support size", len(block.support))

# Matrix units identify each block with a full matrix algebra; they
# satisfy e_jk e_lm = [k = l] e_jm and sum to the block idempotent.
m2 = next(b for b in decomposition.blocks if b.dimension == 2)
units = m2.matrix_units()
check = (units[0][1] * units[1][0]).allclose(units[0][0], eps=1e-7)
print("\nmatrix units of the 2x2 block satisfy e01*e10 = e00:", check)

# The same seed always yields the same decomposition.
again = wedderburn(swap)
print("decomposition is cached and reproducible:", again is decomposition,
      "(seed", hex(decomposition.seed) + ")")

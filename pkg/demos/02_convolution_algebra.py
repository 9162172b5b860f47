"""The convolution algebra and its regular representation.

Functions on a finite groupoid multiply by convolution (sum over
factorizations); the direct sum of regular representations over all
units realizes this algebra faithfully as block-diagonal matrices, one
block per source fiber.
"""

import numpy as np

from glab import (
    cyclic_group,
    delta,
    expectation_E,
    full_representation,
    group_bundle,
    jmap,
    pair_groupoid,
    random_element,
    unit_element,
)

bundle = group_bundle({"u": cyclic_group(2)})
u, g = bundle.elements
du, dg = delta(bundle, u), delta(bundle, g)

print("Z/2Z group algebra:")
print("  delta_u * delta_g = delta_g:", (du * dg).allclose(dg))
print("  delta_g * delta_g = delta_u:", (dg * dg).allclose(du))

rep = full_representation(bundle)
print("  pi_u(delta_g) =\n", np.real(rep.fiber_matrix(dg, u)))
print("  norm of delta_g:", dg.norm())

# The pair groupoid's arrows convolve like matrix units.
pairs = pair_groupoid((1, 2))
e12, e21 = delta(pairs, (1, 2)), delta(pairs, (2, 1))
print("\npair groupoid on {1, 2}:")
print("  e12 * e21 = e11:", (e12 * e21).allclose(delta(pairs, (1, 1))))

# The representation is a *-homomorphism, and the coefficient of an
# element can be read back from its matrix (column of the source unit).
rng = np.random.default_rng(0)
f1, f2 = random_element(pairs, rng), random_element(pairs, rng)
rep = full_representation(pairs)
hom_error = np.max(np.abs(rep.matrix(f1 * f2) - rep.matrix(f1) @ rep.matrix(f2)))
print("  multiplicativity error on random pair:", f"{hom_error:.2e}")
print("  adjoint matches conjugate transpose:",
      np.allclose(rep.matrix(f1.adjoint()), rep.matrix(f1).conj().T))

# Conditional expectation onto the diagonal: restriction to the units.
a = 0.5 * (du + dg)
print("\nexpectation of (delta_u + delta_g)/2:", jmap(expectation_E(a)))
print("unit of the algebra is the indicator of the unit space:",
      (unit_element(bundle) * dg).allclose(dg))

"""Every two-sided ideal, its sandwich sets, and the triple bijection.

Ideals of a finite-dimensional C*-algebra are exactly the sums of
blocks.  Each ideal I is squeezed between two dynamical ideals: the
largest one inside comes from the units where the diagonal part of I
lives, the smallest one outside from the source image of its support.
Ideals then biject with triples (U, V, J): nested invariant unit sets
plus an ideal of the reduction to V minus U that misses the diagonal
and has full support.
"""

from glab import (
    cyclic_group,
    enumerate_triples,
    from_group_action,
    global_action,
    sandwich,
    theta,
    theta_inverse,
    verify,
    wedderburn,
)

z2 = cyclic_group(2)
action = global_action(
    z2,
    ("a", "b", "c"),
    {"r0": {x: x for x in "abc"}, "r1": {"a": "b", "b": "a", "c": "c"}},
)
swap = from_group_action(action, name="swap-and-fix")
decomposition = wedderburn(swap)

print("swap-and-fix ideal inventory (blocks:", decomposition.dimensions, ")")
for ideal in decomposition.all_ideals():
    lower, upper = sandwich(ideal)
    tags = []
    if ideal.is_dynamical():
        tags.append("dynamical")
    if ideal.is_purely_nondynamical():
        tags.append("purely non-dynamical")
    print(
        f"  blocks {sorted(ideal.blocks) or '-'}: "
        f"U = {sorted(p[0] for p in lower)}, V = {sorted(p[0] for p in upper)}"
        + (f"  [{', '.join(tags)}]" if tags else "")
    )

triples = enumerate_triples(decomposition)
print(f"\n{len(triples)} triples parameterize {2 ** decomposition.block_count} ideals")
for t in triples:
    image = theta(decomposition, t)
    back = theta_inverse(image)
    assert back == t
    print(
        f"  (U = {sorted(p[0] for p in t.lower)}, "
        f"V = {sorted(p[0] for p in t.upper)}, "
        f"J blocks = {sorted(t.quotient_ideal.blocks)})"
        f" -> ideal blocks {sorted(image.blocks)}"
    )

report = verify(swap)
print("\nfull theorem suite:", "all pass" if report.all_passed else "FAILURES")
print("counts:", report.counts)

"""Independent brute-force oracles.

Everything here recomputes expected values from first principles with
deliberately different code paths than the library: orbits by breadth
first search, convolution by the literal double sum, block dimensions
by counting conjugacy classes of the isotropy group and solving the
sum-of-squares constraint, and ideal/triple counts by per-orbit
combinatorics.
"""

from __future__ import annotations

import itertools
from math import prod


def bfs_orbits(g):
    """Orbit partition of the unit space by arrow reachability."""
    units = list(g.unit_list)
    neighbours = {u: set() for u in units}
    for el in g.elements:
        neighbours[g.source(el)].add(g.range(el))
        neighbours[g.range(el)].add(g.source(el))
    seen = set()
    orbits = []
    for u in units:
        if u in seen:
            continue
        frontier = [u]
        orbit = set()
        while frontier:
            x = frontier.pop()
            if x in orbit:
                continue
            orbit.add(x)
            frontier.extend(neighbours[x] - orbit)
        seen |= orbit
        orbits.append(frozenset(orbit))
    return orbits


def isotropy_table(g, x):
    """Multiplication table of the isotropy group at x, as index lists."""
    members = [el for el in g.elements if g.source(el) == x and g.range(el) == x]
    index = {el: i for i, el in enumerate(members)}
    return [[index[g.compose(a, b)] for b in members] for a in members]


def conjugacy_class_count(table) -> int:
    n = len(table)
    e = next(i for i in range(n) if all(table[i][j] == j for j in range(n)))
    inverse = [next(j for j in range(n) if table[i][j] == e) for i in range(n)]
    classes = set()
    for i in range(n):
        cls = frozenset(table[table[j][i]][inverse[j]] for j in range(n))
        classes.add(cls)
    return len(classes)


def irreducible_degrees(order: int, n_classes: int):
    """The multiset of irreducible degrees: the unique multiset of
    n_classes positive divisors of the order whose squares sum to it.

    Raises if the instance admits more than one solution (outside the
    desk-scale group families this oracle covers).
    """
    divisors = [d for d in range(1, order + 1) if order % d == 0]
    solutions = set()

    def search(remaining, count, smallest, chosen):
        if count == 0:
            if remaining == 0:
                solutions.add(tuple(chosen))
            return
        for d in divisors:
            if d < smallest or d * d > remaining:
                continue
            search(remaining - d * d, count - 1, d, chosen + [d])

    search(order, n_classes, 1, [])
    if len(solutions) != 1:
        raise ValueError(
            f"degree multiset not unique for order {order}, {n_classes} classes"
        )
    return list(solutions.pop())


def expected_block_dimensions(g):
    """Block dimensions of the groupoid algebra, from orbit sizes and
    isotropy character counts only."""
    dims = []
    for orbit in bfs_orbits(g):
        x = sorted(orbit, key=repr)[0]
        table = isotropy_table(g, x)
        degrees = irreducible_degrees(len(table), conjugacy_class_count(table))
        dims.extend(len(orbit) * d for d in degrees)
    return sorted(dims)


def expected_counts(g):
    """(ideals, dynamical, purely_non_dynamical, triples) by per-orbit
    block counting."""
    per_orbit = []
    for orbit in bfs_orbits(g):
        x = sorted(orbit, key=repr)[0]
        table = isotropy_table(g, x)
        per_orbit.append(len(irreducible_degrees(len(table),
                                                 conjugacy_class_count(table))))
    ideals = prod(2 ** k for k in per_orbit)
    dynamical = 2 ** len(per_orbit)
    pnd = prod(2 ** k - 1 for k in per_orbit) - 1 if per_orbit else 0
    triples = prod(2 + (2 ** k - 2) for k in per_orbit)
    return {
        "ideals": ideals,
        "dynamical": dynamical,
        "purely_non_dynamical": max(pnd, 0),
        "triples": triples,
    }


def convolve_literal(g, f1, f2):
    """The convolution formula as a literal double loop over range fibers."""
    out = {}
    for gamma in g.elements:
        acc = 0j
        for alpha in g.elements:
            if g.range(alpha) != g.range(gamma):
                continue
            rest = g.compose(g.inverse(alpha), gamma)
            acc += f1.coefficient(alpha) * f2.coefficient(rest)
        out[gamma] = acc
    return out


def all_subsets(items):
    items = list(items)
    for k in range(len(items) + 1):
        yield from map(frozenset, itertools.combinations(items, k))

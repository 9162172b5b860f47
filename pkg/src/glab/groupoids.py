"""Finite groupoids: tables, constructors, validation, and set-level dynamics.

A finite Hausdorff groupoid is discrete, so every subset is open, every
bisection-based notion specializes to plain set combinatorics, and the
interior of the isotropy is the isotropy itself.  All operations below
are stated in that discrete specialization.

Element identifiers are opaque hashable objects; constructors fix
canonical naming (triples ``(x, g, y)`` for action groupoids, pairs for
pair groupoids, ``(x, g)`` for bundles, ``(part, element)`` for
disjoint unions) so that reports are reproducible.
"""

from __future__ import annotations

import itertools
import random as _random
from dataclasses import dataclass

from .errors import CapExceededError
from .groups import CayleyGroup, PartialAction

ASSOCIATIVITY_BUDGET = 2_000_000
INVARIANT_SET_CAP = 1 << 20


class GroupoidError(ValueError):
    pass


class ConstructionError(GroupoidError):
    """A constructor was fed an inconsistent specification."""


@dataclass
class ValidationReport:
    ok: bool
    failure: str | None = None
    associativity: str = "full"

    def __repr__(self):
        status = "ok" if self.ok else f"violation: {self.failure}"
        return f"ValidationReport({status}, associativity={self.associativity})"


@dataclass
class IsotropyGroup:
    """The group of arrows from a unit to itself."""

    base: object
    elements: tuple
    groupoid: "FiniteGroupoid"

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def as_cayley(self) -> CayleyGroup:
        g = self.groupoid
        table = {
            a: {b: g.compose(a, b) for b in self.elements} for a in self.elements
        }
        return CayleyGroup(self.elements, table, name=f"isotropy@{self.base!r}")


class FiniteGroupoid:
    """A finite groupoid with explicit source/range/inverse and a
    composition strategy (a table for raw input, a formula for
    constructor-built instances)."""

    def __init__(self, elements, units, source, range_, inverse, compose,
                 name: str = "groupoid"):
        self.elements = tuple(elements)
        self.units = frozenset(units)
        self.name = name
        self._source = dict(source)
        self._range = dict(range_)
        self._inverse = dict(inverse)
        if callable(compose):
            self._mul_fn = compose
            self._mul_table = None
        else:
            self._mul_table = dict(compose)
            self._mul_fn = None
        self._index = {el: i for i, el in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise GroupoidError("duplicate elements")
        self._caches: dict = {}

    # -- basic structure ------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __contains__(self, el):
        return el in self._index

    def index(self, el) -> int:
        return self._index[el]

    def source(self, el):
        return self._source[el]

    def range(self, el):
        return self._range[el]

    def inverse(self, el):
        return self._inverse[el]

    def is_unit(self, el) -> bool:
        return el in self.units

    def is_composable(self, a, b) -> bool:
        return self._source[a] == self._range[b]

    def compose(self, a, b):
        if not self.is_composable(a, b):
            raise GroupoidError(f"{a!r} and {b!r} are not composable")
        if self._mul_fn is not None:
            c = self._mul_fn(a, b)
        else:
            c = self._mul_table.get((a, b))
        if c is None:
            raise GroupoidError(f"composition table is missing {a!r}*{b!r}")
        return c

    @property
    def unit_list(self) -> tuple:
        """Units in element order (canonical everywhere)."""
        out = self._caches.get("unit_list")
        if out is None:
            out = tuple(el for el in self.elements if el in self.units)
            self._caches["unit_list"] = out
        return out

    def source_fiber(self, x) -> tuple:
        """All arrows with source x."""
        fibers = self._caches.get("source_fibers")
        if fibers is None:
            fibers = {u: [] for u in self.units}
            for el in self.elements:
                fibers[self._source[el]].append(el)
            fibers = {u: tuple(v) for u, v in fibers.items()}
            self._caches["source_fibers"] = fibers
        return fibers[x]

    def range_fiber(self, x) -> tuple:
        fibers = self._caches.get("range_fibers")
        if fibers is None:
            fibers = {u: [] for u in self.units}
            for el in self.elements:
                fibers[self._range[el]].append(el)
            fibers = {u: tuple(v) for u, v in fibers.items()}
            self._caches["range_fibers"] = fibers
        return fibers[x]

    def composable_pairs(self):
        """Yield all composable pairs (a, b)."""
        for b in self.elements:
            for a in self.source_fiber(self._range[b]):
                yield a, b

    # -- validation ------------------------------------------------------

    def validate(self, assoc_budget: int = ASSOCIATIVITY_BUDGET) -> ValidationReport:
        """Check every groupoid axiom; report the first violation.

        Associativity is checked on all composable triples when their
        number is within ``assoc_budget``, and on a seeded sample of
        that size otherwise (the report says which).
        """

        def fail(msg):
            return ValidationReport(False, msg)

        els = set(self.elements)
        if not self.units <= els:
            return fail(f"units are not elements: {sorted(map(repr, self.units - els))}")
        for m, label in ((self._source, "source"), (self._range, "range"),
                         (self._inverse, "inverse")):
            for el in self.elements:
                if el not in m:
                    return fail(f"{label} undefined on {el!r}")
                if m[el] not in els:
                    return fail(f"{label}({el!r}) = {m[el]!r} is not an element")
        for el in self.elements:
            if self._source[el] not in self.units:
                return fail(f"source({el!r}) is not a unit")
            if self._range[el] not in self.units:
                return fail(f"range({el!r}) is not a unit")
        for u in self.units:
            if self._source[u] != u or self._range[u] != u:
                return fail(f"unit {u!r} is not fixed by source/range")
            if self._inverse[u] != u:
                return fail(f"unit {u!r} is not fixed by inverse")
        for el in self.elements:
            if self._inverse[self._inverse[el]] != el:
                return fail(f"inverse is not involutive at {el!r}")
            if self._source[self._inverse[el]] != self._range[el]:
                return fail(f"source(inverse({el!r})) != range({el!r})")
        if self._mul_table is not None:
            keys = set(self._mul_table)
            expected = set(self.composable_pairs())
            missing = expected - keys
            if missing:
                a, b = next(iter(missing))
                return fail(f"composition undefined on composable pair ({a!r}, {b!r})")
            extra = keys - expected
            if extra:
                a, b = next(iter(extra))
                return fail(f"composition defined on non-composable pair ({a!r}, {b!r})")
        for a, b in self.composable_pairs():
            try:
                ab = self.compose(a, b)
            except GroupoidError as exc:
                return fail(str(exc))
            if ab not in els:
                return fail(f"{a!r}*{b!r} = {ab!r} is not an element")
            if self._source[ab] != self._source[b]:
                return fail(f"source({a!r}*{b!r}) != source({b!r})")
            if self._range[ab] != self._range[a]:
                return fail(f"range({a!r}*{b!r}) != range({a!r})")
        for el in self.elements:
            if self.compose(el, self._source[el]) != el:
                return fail(f"{el!r}*source({el!r}) != {el!r}")
            if self.compose(self._range[el], el) != el:
                return fail(f"range({el!r})*{el!r} != {el!r}")
            if self.compose(el, self._inverse[el]) != self._range[el]:
                return fail(f"{el!r}*inverse({el!r}) != range({el!r})")
            if self.compose(self._inverse[el], el) != self._source[el]:
                return fail(f"inverse({el!r})*{el!r} != source({el!r})")

        n_triples = sum(
            len(self.range_fiber(self._source[b])) for _, b in self.composable_pairs()
        )
        if n_triples <= assoc_budget:
            mode = "full"
            triples = (
                (a, b, c)
                for a, b in self.composable_pairs()
                for c in self.range_fiber(self._source[b])
            )
        else:
            mode = f"sampled({assoc_budget})"
            rng = _random.Random(0xC0FFEE)
            pairs = list(self.composable_pairs())

            def sampled():
                for _ in range(assoc_budget):
                    a, b = rng.choice(pairs)
                    candidates = self.range_fiber(self._source[b])
                    yield a, b, rng.choice(candidates)

            triples = sampled()
        for a, b, c in triples:
            if self.compose(self.compose(a, b), c) != self.compose(a, self.compose(b, c)):
                return fail(f"associativity fails at ({a!r}, {b!r}, {c!r})")
        return ValidationReport(True, associativity=mode)

    # -- orbits and invariant sets ----------------------------------------

    def orbits(self) -> tuple:
        """Partition of the unit space: x ~ y iff an arrow joins them."""
        out = self._caches.get("orbits")
        if out is not None:
            return out
        parent = {u: u for u in self.units}

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for el in self.elements:
            a, b = find(self._source[el]), find(self._range[el])
            if a != b:
                parent[a] = b
        classes: dict = {}
        for u in self.unit_list:
            classes.setdefault(find(u), []).append(u)
        order = {u: i for i, u in enumerate(self.unit_list)}
        out = tuple(
            frozenset(members)
            for members in sorted(classes.values(), key=lambda ms: min(order[m] for m in ms))
        )
        self._caches["orbits"] = out
        return out

    def orbit_of(self, x) -> frozenset:
        for orb in self.orbits():
            if x in orb:
                return orb
        raise GroupoidError(f"{x!r} is not a unit")

    def is_invariant_unit_set(self, members) -> bool:
        members = frozenset(members)
        if not members <= self.units:
            raise GroupoidError("not a subset of the unit space")
        return all(orb <= members or not (orb & members) for orb in self.orbits())

    def invariant_subsets(self, cap: int = INVARIANT_SET_CAP) -> list:
        """All invariant unit sets (= unions of orbits), as a lattice.

        Canonically ordered by (size, unit order); closed under union
        and intersection by construction.
        """
        orbits = self.orbits()
        if 2 ** len(orbits) > cap:
            raise CapExceededError(
                f"{2 ** len(orbits)} invariant subsets exceed the cap {cap}"
            )
        order = {u: i for i, u in enumerate(self.unit_list)}
        subsets = []
        for k in range(len(orbits) + 1):
            for combo in itertools.combinations(range(len(orbits)), k):
                members = frozenset().union(*(orbits[i] for i in combo)) if combo else frozenset()
                subsets.append(members)
        subsets.sort(key=lambda s: (len(s), sorted(order[u] for u in s)))
        return subsets

    # -- reduction ---------------------------------------------------------

    def restrict(self, members, validate: bool = True) -> "FiniteGroupoid":
        """The reduction to a unit set: arrows with source and range inside.

        Defined for any unit set, invariant or not.  The reduction of a
        valid groupoid is closed under all operations, so internal
        callers skip re-validation.
        """
        members = frozenset(members)
        if not members <= self.units:
            raise GroupoidError("restriction set must consist of units")
        keep = [
            el for el in self.elements
            if self._source[el] in members and self._range[el] in members
        ]
        keep_set = set(keep)
        if self._mul_table is not None:
            compose = {
                (a, b): c for (a, b), c in self._mul_table.items() if a in keep_set
                and b in keep_set
            }
        else:
            compose = self._mul_fn
        sub = FiniteGroupoid(
            keep,
            members & self.units,
            {el: self._source[el] for el in keep},
            {el: self._range[el] for el in keep},
            {el: self._inverse[el] for el in keep},
            compose,
            name=f"{self.name}|{{{len(members)} units}}",
        )
        if validate:
            report = sub.validate()
            if not report.ok:
                raise GroupoidError(f"restriction is not a groupoid: {report.failure}")
        return sub

    # -- isotropy and effectiveness -----------------------------------------

    def isotropy(self, x) -> IsotropyGroup:
        if x not in self.units:
            raise GroupoidError(f"{x!r} is not a unit")
        members = tuple(
            el for el in self.source_fiber(x) if self._range[el] == x
        )
        return IsotropyGroup(x, members, self)

    def isotropy_elements(self) -> tuple:
        """All arrows with equal source and range (the isotropy bundle)."""
        return tuple(el for el in self.elements if self._source[el] == self._range[el])

    def is_effective_at(self, x) -> bool:
        """Trivial isotropy at x (discrete case: interior = isotropy)."""
        return self.isotropy(x).is_trivial

    def effective_units(self) -> frozenset:
        """Units with trivial isotropy; the complement is invariant."""
        eff = frozenset(x for x in self.units if self.is_effective_at(x))
        if not self.is_invariant_unit_set(self.units - eff):
            raise GroupoidError("internal error: non-effective set is not invariant")
        return eff

    def is_effective(self) -> bool:
        return self.effective_units() == self.units

    def is_jointly_effective_at(self, x, search_limit: int = 12) -> bool:
        """Joint effectiveness at x.

        Every singleton bisection {gamma} with gamma nontrivial isotropy
        at x has source set {x} and fixes x, so joint effectiveness at x
        reduces to trivial isotropy.  For instances with at most
        ``search_limit`` non-unit arrows the reduction is cross-checked
        by an exhaustive search over bisection families.
        """
        result = self.is_effective_at(x)
        searched = self._joint_effectiveness_search(x, search_limit)
        if searched is not None and searched != result:
            raise GroupoidError(
                f"internal error: bisection search disagrees at {x!r}"
            )
        return result

    def _joint_effectiveness_search(self, x, max_nonunits: int = 12,
                                    budget: int = 200_000):
        """Exhaustive bisection-family search; None when out of budget."""
        nonunits = [el for el in self.elements if el not in self.units]
        if len(nonunits) > max_nonunits:
            return None
        isotropy = [
            el for el in nonunits
            if self._source[el] == x and self._range[el] == x
        ]
        if not isotropy:
            return True

        def is_bisection(subset):
            return (
                len({self._source[el] for el in subset}) == len(subset)
                and len({self._range[el] for el in subset}) == len(subset)
            )

        bisections = [
            frozenset(candidate)
            for k in range(1, len(nonunits) + 1)
            for candidate in itertools.combinations(nonunits, k)
            if is_bisection(candidate)
        ]
        containing = {
            gamma: [b for b in bisections if gamma in b] for gamma in isotropy
        }

        def family_has_witness(family):
            common = frozenset.intersection(
                *[frozenset(self._source[el] for el in b) for b in family]
            )
            for y in common:
                moved = True
                for b in family:
                    arrow = next(el for el in b if self._source[el] == y)
                    if self._range[arrow] == y:
                        moved = False
                        break
                if moved:
                    return True
            return False

        spent = 0
        for size in (1, 2):
            for gammas in itertools.combinations(isotropy, min(size, len(isotropy))):
                for family in itertools.product(*(containing[g] for g in gammas)):
                    spent += 1
                    if spent > budget:
                        return None
                    if not family_has_witness(family):
                        return False
            if len(isotropy) < 2:
                break
        return True

    def __repr__(self):
        return f"FiniteGroupoid({self.name}: {len(self.elements)} elements, {len(self.units)} units)"


# -- constructors ------------------------------------------------------------


def from_tables(elements, units, source, range_, inverse, compose,
                name: str = "tables") -> FiniteGroupoid:
    """Build from raw tables; ``compose`` maps composable pairs to products."""
    if not isinstance(compose, dict):
        compose = {(a, b): c for a, b, c in compose}
    g = FiniteGroupoid(elements, units, source, range_, inverse, compose, name=name)
    report = g.validate()
    if not report.ok:
        raise ConstructionError(report.failure)
    return g


def pair_groupoid(points, name: str | None = None) -> FiniteGroupoid:
    """The principal groupoid with one arrow (x, y) from y to x."""
    points = tuple(points)
    elements = [(x, y) for x in points for y in points]
    g = FiniteGroupoid(
        elements,
        [(x, x) for x in points],
        {(x, y): (y, y) for x, y in elements},
        {(x, y): (x, x) for x, y in elements},
        {(x, y): (y, x) for x, y in elements},
        lambda a, b: (a[0], b[1]),
        name=name or f"pair({len(points)})",
    )
    report = g.validate()
    if not report.ok:
        raise ConstructionError(report.failure)
    return g


def group_bundle(fibers, name: str | None = None) -> FiniteGroupoid:
    """A bundle of groups: ``fibers`` maps each unit label to a CayleyGroup."""
    fibers = dict(fibers)
    elements = [(x, g) for x, grp in fibers.items() for g in grp.elements]
    units = [(x, grp.identity) for x, grp in fibers.items()]

    def compose(a, b):
        x = a[0]
        return (x, fibers[x].mul(a[1], b[1]))

    g = FiniteGroupoid(
        elements,
        units,
        {(x, h): (x, fibers[x].identity) for x, h in elements},
        {(x, h): (x, fibers[x].identity) for x, h in elements},
        {(x, h): (x, fibers[x].inverse(h)) for x, h in elements},
        compose,
        name=name or f"bundle({len(fibers)} units)",
    )
    report = g.validate()
    if not report.ok:
        raise ConstructionError(report.failure)
    return g


def from_partial_action(action: PartialAction, name: str | None = None) -> FiniteGroupoid:
    """The transformation groupoid of a partial action.

    Elements are triples (x, g, y) with the map for g sending y to x;
    (x, g, y)(y, h, z) = (x, g*h, z) and (x, g, y)^-1 = (y, g^-1, x).
    """
    try:
        action.validate()
    except Exception as exc:
        raise ConstructionError(str(exc)) from exc
    group = action.group
    e = group.identity
    elements = []
    for g in group.elements:
        m = action.maps[g]
        for y in action.space:
            if y in m:
                elements.append((m[y], g, y))

    def compose(a, b):
        return (a[0], group.mul(a[1], b[1]), b[2])

    g = FiniteGroupoid(
        elements,
        [(x, e, x) for x in action.space],
        {el: (el[2], e, el[2]) for el in elements},
        {el: (el[0], e, el[0]) for el in elements},
        {el: (el[2], group.inverse(el[1]), el[0]) for el in elements},
        compose,
        name=name or f"{group.name} partial action on {len(action.space)} points",
    )
    report = g.validate()
    if not report.ok:
        raise ConstructionError(report.failure)
    return g


def from_group_action(action: PartialAction, name: str | None = None) -> FiniteGroupoid:
    """The transformation groupoid of a globally defined action."""
    if not action.is_global:
        raise ConstructionError("action is not globally defined; use from_partial_action")
    return from_partial_action(
        action,
        name=name or f"{action.group.name} action on {len(action.space)} points",
    )


def disjoint_union(parts, name: str | None = None) -> FiniteGroupoid:
    """Disjoint union; elements are tagged (part_index, element)."""
    parts = list(parts)
    elements = [(k, el) for k, part in enumerate(parts) for el in part.elements]
    units = [(k, u) for k, part in enumerate(parts) for u in part.unit_list]

    def compose(a, b):
        k = a[0]
        return (k, parts[k].compose(a[1], b[1]))

    g = FiniteGroupoid(
        elements,
        units,
        {(k, el): (k, parts[k].source(el)) for k, el in elements},
        {(k, el): (k, parts[k].range(el)) for k, el in elements},
        {(k, el): (k, parts[k].inverse(el)) for k, el in elements},
        compose,
        name=name or f"union({', '.join(p.name for p in parts)})",
    )
    report = g.validate()
    if not report.ok:
        raise ConstructionError(report.failure)
    return g


def empty_groupoid() -> FiniteGroupoid:
    """The empty groupoid (its algebra is the zero algebra)."""
    return FiniteGroupoid((), (), {}, {}, {}, {}, name="empty")


def unit_space_groupoid(points) -> FiniteGroupoid:
    """A space of units with no other arrows (all-trivial bundle)."""
    points = tuple(points)
    return FiniteGroupoid(
        points,
        points,
        {x: x for x in points},
        {x: x for x in points},
        {x: x for x in points},
        lambda a, b: a,
        name=f"units({len(points)})",
    )

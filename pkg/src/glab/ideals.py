"""The ideal-structure theorems as executable operations and verifiers.

Every ideal of the block algebra is sandwiched between two dynamical
ideals read off its diagonal intersection and its support; ideals are
in bijection with triples (U, V, J) where U <= V are invariant unit
sets and J is a nonzero ideal of the reduction to V minus U that has
trivial diagonal intersection and full support; and all ideals with
trivial diagonal intersection live inside the obstruction ideal over
the non-effective units, with the orbit-space (collapse)
representation kernel witnessing minimality.

Verifiers are exhaustive, not sampled: the statements are universally
quantified and finite instances admit complete checks within the
block-count cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import (
    MAX_BLOCKS,
    AlgebraElement,
    BlockDecomposition,
    DecompositionError,
    Ideal,
    delta,
    wedderburn,
)
from .errors import CapExceededError
from .groupoids import FiniteGroupoid, GroupoidError
from .linalg import TolerancePolicy

CONVENTIONS = (
    "finite Hausdorff spaces are discrete: interiors, bisections and "
    "neighbourhoods are taken in the discrete topology",
    "triples with V = U carry the zero ideal of the zero algebra; the "
    "nonzero-and-full-support requirements are read as vacuous over the "
    "empty reduction",
    "graph paths compose left-to-right (dst(e_i) = src(e_(i+1))), the "
    "shift deletes the first edge, and the cycle condition is stated "
    "via exits under this convention",
)


class InvalidTripleError(ValueError):
    """A candidate (U, V, J) violates the triple conditions."""


def _decomposition_of(obj, tol=None, seed=None) -> BlockDecomposition:
    if isinstance(obj, BlockDecomposition):
        return obj
    if isinstance(obj, FiniteGroupoid):
        return wedderburn(obj, tol, seed)
    raise TypeError(f"expected a groupoid or decomposition, got {type(obj).__name__}")


# -- sandwich sets -------------------------------------------------------------


def sandwich(ideal: Ideal):
    """The invariant unit sets (U, V) with I_U <= I <= I_V extremal.

    U is the open support of the diagonal intersection; V is the source
    image of the support.  Extremality against neighbouring orbits is
    asserted here; the verifier scans the whole dynamical lattice.
    """
    decomp = ideal.decomposition
    g = decomp.groupoid
    lower = ideal.diagonal_units()
    upper = frozenset(g.source(el) for el in ideal.support())
    for members in (lower, upper):
        if not g.is_invariant_unit_set(members):
            raise DecompositionError("sandwich set is not invariant")
    i_lower = decomp.dynamical_ideal_of(lower)
    i_upper = decomp.dynamical_ideal_of(upper)
    if not (i_lower <= ideal and ideal <= i_upper):
        raise DecompositionError("sandwich bounds fail")
    for orbit, blocks in decomp.orbit_blocks().items():
        inside = frozenset(blocks) <= ideal.blocks
        touched = bool(frozenset(blocks) & ideal.blocks)
        if inside and not orbit <= lower:
            raise DecompositionError("diagonal support is not maximal")
        if touched and not orbit <= upper:
            raise DecompositionError("support image is not minimal")
    return lower, upper


# -- triples -------------------------------------------------------------------


@dataclass(frozen=True)
class SandwichTriple:
    """(U, V, J): nested invariant unit sets and an ideal of the
    subquotient algebra over V minus U (trivial diagonal intersection,
    full support; the zero ideal of the zero algebra when V = U)."""

    lower: frozenset
    upper: frozenset
    quotient_ideal: Ideal

    @property
    def between(self) -> frozenset:
        return self.upper - self.lower

    def __repr__(self):
        return (
            f"SandwichTriple(U={sorted(map(repr, self.lower))}, "
            f"V={sorted(map(repr, self.upper))}, J={self.quotient_ideal!r})"
        )


def _check_triple(decomp: BlockDecomposition, triple: SandwichTriple):
    g = decomp.groupoid
    if not triple.lower <= triple.upper:
        raise InvalidTripleError("U is not contained in V")
    for members in (triple.lower, triple.upper):
        if not g.is_invariant_unit_set(members):
            raise InvalidTripleError("U and V must be invariant unit sets")
    sub, mapping = decomp.restriction_decomposition(triple.between)
    j = triple.quotient_ideal
    if j.decomposition is not sub:
        raise InvalidTripleError(
            "quotient ideal does not live over the canonical subquotient"
        )
    if not triple.between:
        if not j.is_zero:
            raise InvalidTripleError("V = U requires the zero ideal")
        return sub, mapping
    if j.is_zero:
        raise InvalidTripleError("quotient ideal is zero on a nonzero subquotient")
    if j.diagonal_units():
        raise InvalidTripleError("quotient ideal has nontrivial diagonal intersection")
    if j.support() != frozenset(sub.groupoid.elements):
        raise InvalidTripleError("quotient ideal does not have full support")
    return sub, mapping


def make_triple(decomp_or_groupoid, lower, upper, quotient_blocks=(),
                tol=None, seed=None) -> SandwichTriple:
    """Assemble a triple from unit sets and subquotient block indices."""
    decomp = _decomposition_of(decomp_or_groupoid, tol, seed)
    lower, upper = frozenset(lower), frozenset(upper)
    sub, _ = decomp.restriction_decomposition(upper - lower)
    triple = SandwichTriple(lower, upper, sub.ideal(quotient_blocks))
    _check_triple(decomp, triple)
    return triple


def theta(decomp_or_groupoid, triple: SandwichTriple, tol=None, seed=None) -> Ideal:
    """The ideal associated to a triple: everything over U together with
    the blocks matching J across the subquotient correspondence."""
    decomp = _decomposition_of(decomp_or_groupoid, tol, seed)
    sub, mapping = _check_triple(decomp, triple)
    blocks = set(decomp.dynamical_ideal_of(triple.lower).blocks)
    blocks.update(mapping[j] for j in triple.quotient_ideal.blocks)
    return decomp.ideal(blocks)


def theta_inverse(ideal: Ideal) -> SandwichTriple:
    """The triple of an ideal: its sandwich sets and the induced
    subquotient ideal (which is checked to be purely non-dynamical with
    full support, as the theory demands)."""
    decomp = ideal.decomposition
    lower, upper = sandwich(ideal)
    sub, mapping = decomp.restriction_decomposition(upper - lower)
    inverse = {parent: child for child, parent in mapping.items()}
    lower_blocks = decomp.dynamical_ideal_of(lower).blocks
    quotient = sub.ideal(
        inverse[i] for i in ideal.blocks if i not in lower_blocks
    )
    triple = SandwichTriple(lower, upper, quotient)
    _check_triple(decomp, triple)
    return triple


def enumerate_triples(decomp_or_groupoid, tol=None, seed=None,
                      max_blocks: int = MAX_BLOCKS) -> list:
    """All valid triples over all invariant pairs U <= V, including the
    conventional (U, U, 0) triples."""
    decomp = _decomposition_of(decomp_or_groupoid, tol, seed)
    if decomp.block_count > max_blocks:
        raise CapExceededError(
            f"{decomp.block_count} blocks exceed the triple-enumeration cap {max_blocks}"
        )
    g = decomp.groupoid
    orbits = g.orbits()
    invariant = g.invariant_subsets()
    orbit_blocks = decomp.orbit_blocks()
    triples = []
    for between in invariant:
        if not between:
            sub, _ = decomp.restriction_decomposition(between)
            quotients = [sub.zero_ideal()]
        else:
            # A quotient ideal must take a proper nonempty block subset on
            # every orbit of the reduction (full support, no diagonal), so
            # candidates are a product of per-orbit choices; a single-block
            # orbit admits none.
            per_orbit = [
                [
                    combo
                    for size in range(1, len(orbit_blocks[orb]))
                    for combo in itertools.combinations(orbit_blocks[orb], size)
                ]
                for orb in orbits
                if orb <= between
            ]
            if any(not choices for choices in per_orbit):
                continue
            sub, mapping = decomp.restriction_decomposition(between)
            to_sub = {parent: child for child, parent in mapping.items()}
            quotients = [
                sub.ideal(to_sub[i] for combo in picks for i in combo)
                for picks in itertools.product(*per_orbit)
            ]
        outside = [orb for orb in orbits if not orb & between]
        for mask in range(1 << len(outside)):
            lower = frozenset().union(
                *(outside[i] for i in range(len(outside)) if mask >> i & 1)
            ) if mask else frozenset()
            for j in quotients:
                triples.append(SandwichTriple(lower, lower | between, j))
    return triples


# -- obstruction ideal and the collapse representation --------------------------


def obstruction_ideal(decomp_or_groupoid, tol=None, seed=None) -> Ideal:
    """The dynamical ideal over the non-effective units."""
    decomp = _decomposition_of(decomp_or_groupoid, tol, seed)
    g = decomp.groupoid
    noneffective = g.units - g.effective_units()
    ideal = decomp.dynamical_ideal_of(noneffective)
    expected = frozenset(
        el for el in g.elements
        if g.source(el) in noneffective and g.range(el) in noneffective
    )
    if ideal.support() != expected:
        raise DecompositionError(
            "obstruction ideal support differs from the non-effective reduction"
        )
    return ideal


def _collapse_plan(g: FiniteGroupoid):
    plan = g._caches.get("collapse_plan")
    if plan is not None:
        return plan
    orbits = g.orbits()
    order = {u: i for i, u in enumerate(g.unit_list)}
    data = []
    for orbit in orbits:
        members = sorted(orbit, key=lambda u: order[u])
        pos = {u: i for i, u in enumerate(members)}
        rows, cols, els = [], [], []
        for el in g.elements:
            if g.source(el) in pos:
                rows.append(pos[g.range(el)])
                cols.append(pos[g.source(el)])
                els.append(g.index(el))
        data.append((len(members),
                     np.asarray(rows, dtype=np.intp),
                     np.asarray(cols, dtype=np.intp),
                     np.asarray(els, dtype=np.intp)))
    g._caches["collapse_plan"] = data
    return data


def collapse_matrices(g: FiniteGroupoid, a: AlgebraElement) -> list:
    """The action of ``a`` on the orbit spaces, one matrix per orbit:
    a basis vector at a unit is sent through every arrow out of it."""
    out = []
    for size, rows, cols, els in _collapse_plan(g):
        m = np.zeros((size, size), dtype=np.complex128)
        np.add.at(m, (rows, cols), a.coeffs[els])
        out.append(m)
    return out


def collapse_kernel(decomp_or_groupoid, tol=None, seed=None) -> Ideal:
    """The kernel of the orbit-space representation, as a block subset.

    The kernel always misses the diagonal; when the obstruction ideal
    is nonzero the kernel is purely non-dynamical with exactly the same
    support (and it is zero exactly when the obstruction ideal is).
    """
    decomp = _decomposition_of(decomp_or_groupoid, tol, seed)
    g = decomp.groupoid
    killed = set()
    for blk in decomp.blocks:
        norms = [linalg.operator_norm(m) for m in collapse_matrices(g, blk.idempotent)]
        if max(norms, default=0.0) < 0.5:
            killed.add(blk.index)
    kernel = decomp.ideal(killed)
    if kernel.diagonal_units():
        raise DecompositionError("collapse kernel meets the diagonal")
    j_ob = obstruction_ideal(decomp)
    if j_ob.is_zero:
        if not kernel.is_zero:
            raise DecompositionError("collapse kernel is nonzero on an effective groupoid")
    elif kernel.support() != j_ob.support():
        raise DecompositionError(
            "collapse kernel support differs from the obstruction ideal support"
        )
    return kernel


# -- the perturbation witness ----------------------------------------------------


def exel_witness(g: FiniteGroupoid, x, bisection, f: AlgebraElement,
                 tol: TolerancePolicy | None = None) -> AlgebraElement:
    """A diagonal h with 0 <= h <= 1, h(x) = 1 and h f h = 0, for f
    supported on a bisection avoiding the isotropy at x.

    In the discrete case the indicator of {x} always works: the unique
    arrow of the bisection out of x (if any) moves x.
    """
    tol = tol or linalg.DEFAULT_TOLERANCE
    if x not in g.units:
        raise GroupoidError(f"{x!r} is not a unit")
    members = frozenset(bisection)
    sources = [g.source(el) for el in members]
    ranges = [g.range(el) for el in members]
    if len(set(sources)) != len(members) or len(set(ranges)) != len(members):
        raise GroupoidError("the given set is not a bisection")
    for el in members:
        if g.source(el) == x and g.range(el) == x:
            raise GroupoidError(f"bisection meets the isotropy at {x!r} (arrow {el!r})")
    off = [el for el in f.support(tol.zero_eps) if el not in members]
    if off:
        raise GroupoidError(f"function does not vanish off the bisection: {off[0]!r}")
    h = delta(g, x)
    squeezed = h * f * h
    if squeezed.norm(tol) > tol.zero_eps:
        raise DecompositionError("perturbation witness failed to vanish")
    return h


# -- the verifier suite -----------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)


@dataclass
class VerificationReport:
    groupoid_name: str
    element_count: int
    unit_count: int
    orbit_count: int
    block_dimensions: tuple
    seed: int
    zero_eps: float
    eig_residual: float
    counts: dict
    checks: list
    conventions: tuple = CONVENTIONS
    numerics: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "instance": {
                "name": self.groupoid_name,
                "elements": self.element_count,
                "units": self.unit_count,
                "orbits": self.orbit_count,
                "block_dimensions": list(self.block_dimensions),
            },
            "parameters": {
                "seed": self.seed,
                "zero_eps": self.zero_eps,
                "eig_residual": self.eig_residual,
            },
            "counts": dict(self.counts),
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "details": c.details,
                    "witnesses": c.witnesses,
                }
                for c in self.checks
            ],
            "numerics": dict(self.numerics),
            "conventions": list(self.conventions),
            "all_passed": self.all_passed,
        }


class _LatticeData:
    """Vectorized bitmask tables for exhaustive ideal scans.

    Ideals are bitmasks over blocks, invariant unit sets are bitmasks
    over orbits; the tables give, for every ideal mask, the orbits it
    fills (the U side) and touches (the V side), and for every orbit
    mask the dynamical ideal over it.
    """

    def __init__(self, decomp: BlockDecomposition):
        g = decomp.groupoid
        self.decomp = decomp
        self.orbits = g.orbits()
        self.n_orbits = len(self.orbits)
        self.b = decomp.block_count
        orbit_index = {orbit: o for o, orbit in enumerate(self.orbits)}
        self.block_orbit = [orbit_index[blk.orbit] for blk in decomp.blocks]
        self.orbit_block_mask = [0] * self.n_orbits
        for i, o in enumerate(self.block_orbit):
            self.orbit_block_mask[o] |= 1 << i
        self.ideal_masks = np.arange(1 << self.b, dtype=np.int64)
        self.unit_masks = np.arange(1 << self.n_orbits, dtype=np.int64)
        self.inside = np.zeros(1 << self.b, dtype=np.int64)
        self.touched = np.zeros(1 << self.b, dtype=np.int64)
        self.dynamical_of = np.zeros(1 << self.n_orbits, dtype=np.int64)
        for o, bm in enumerate(self.orbit_block_mask):
            self.inside |= ((self.ideal_masks & bm) == bm).astype(np.int64) << o
            self.touched |= ((self.ideal_masks & bm) != 0).astype(np.int64) << o
            self.dynamical_of |= np.where(self.unit_masks >> o & 1 == 1, bm, 0)

    def ideal_mask(self, ideal: Ideal) -> int:
        mask = 0
        for i in ideal.blocks:
            mask |= 1 << i
        return mask

    def orbit_set(self, w: int) -> frozenset:
        out = frozenset()
        for o in range(self.n_orbits):
            if w >> o & 1:
                out |= self.orbits[o]
        return out


_FULL_SCAN_BUDGET = 1 << 26


def _check_sandwich(data: _LatticeData) -> CheckResult:
    b, n_orbits = data.b, data.n_orbits
    witnesses = []
    masks = data.ideal_masks
    i_lower = data.dynamical_of[data.inside]
    i_upper = data.dynamical_of[data.touched]
    bad = ((i_lower & masks) != i_lower) | ((masks & i_upper) != masks)
    for m in np.flatnonzero(bad)[:5]:
        witnesses.append(f"ideal {m:#x}: sandwich bounds fail")
    full_scan = (1 << b) * (1 << n_orbits) <= _FULL_SCAN_BUDGET
    if full_scan:
        for w in range(1 << n_orbits):
            iw = int(data.dynamical_of[w])
            larger = ((iw & masks) == iw) & ((w & data.inside) != w)
            smaller = ((masks & iw) == masks) & ((data.touched & w) != data.touched)
            for m in np.flatnonzero(larger)[:2]:
                witnesses.append(f"ideal {m:#x}: larger dynamical ideal {w:#x} inside")
            for m in np.flatnonzero(smaller)[:2]:
                witnesses.append(f"ideal {m:#x}: smaller dynamical ideal {w:#x} outside")
    else:
        for o in range(n_orbits):
            bm = data.orbit_block_mask[o]
            viol = (((masks & bm) == bm) & (data.inside >> o & 1 == 0)) | (
                ((masks & bm) != 0) & (data.touched >> o & 1 == 0)
            )
            for m in np.flatnonzero(viol)[:2]:
                witnesses.append(f"ideal {m:#x}: extremality fails at orbit {o}")
    return CheckResult(
        "sandwich",
        not witnesses,
        {"ideals": 1 << b, "scan": "full lattice" if full_scan else "orbitwise"},
        witnesses[:5],
    )


def _check_bijection(data: _LatticeData, triples) -> CheckResult:
    decomp = data.decomp
    witnesses = []
    ideals = decomp.all_ideals()
    seen = {}
    for t in triples:
        image = theta(decomp, t)
        if image in seen:
            witnesses.append(f"theta not injective at {t!r}")
        seen[image] = t
        back = theta_inverse(image)
        if back != t:
            witnesses.append(f"round trip fails for triple {t!r}")
    for ideal in ideals:
        t = theta_inverse(ideal)
        if theta(decomp, t) != ideal:
            witnesses.append(f"round trip fails for ideal {ideal!r}")
    if len(seen) != len(ideals) or len(triples) != len(ideals):
        witnesses.append(
            f"counts differ: {len(triples)} triples vs {len(ideals)} ideals"
        )
    return CheckResult(
        "bijection",
        not witnesses,
        {"triples": len(triples), "ideals": len(ideals)},
        witnesses[:5],
    )


def _check_obstruction(data: _LatticeData) -> CheckResult:
    decomp = data.decomp
    witnesses = []
    j_ob = obstruction_ideal(decomp)
    j_mask = data.ideal_mask(j_ob)
    masks = data.ideal_masks
    pnd = (masks != 0) & (data.inside == 0)
    escapes = pnd & ((masks & j_mask) != masks)
    for m in np.flatnonzero(escapes)[:3]:
        witnesses.append(
            f"purely non-dynamical ideal {m:#x} escapes the obstruction ideal"
        )
    pnd_union = int(np.bitwise_or.reduce(masks[pnd])) if pnd.any() else 0
    kernel = collapse_kernel(decomp)
    if j_ob.is_zero:
        if not kernel.is_zero:
            witnesses.append("collapse kernel nonzero although every unit is effective")
    else:
        if not kernel.is_purely_nondynamical():
            witnesses.append("collapse kernel is not purely non-dynamical")
        if kernel.support() != j_ob.support():
            witnesses.append("collapse kernel support mismatch")
    not_minimal = ((pnd_union & data.dynamical_of) == pnd_union) & (
        (j_mask & data.dynamical_of) != j_mask
    )
    for w in np.flatnonzero(not_minimal)[:3]:
        witnesses.append(f"dynamical ideal {w:#x} contains all pnd ideals but not J^ob")
    return CheckResult(
        "obstruction",
        not witnesses,
        {
            "obstruction_blocks": sorted(j_ob.blocks),
            "kernel_blocks": sorted(kernel.blocks),
        },
        witnesses[:5],
    )


def _check_lattice_iso(data: _LatticeData) -> CheckResult:
    decomp = data.decomp
    g = decomp.groupoid
    witnesses = []
    n_orbits = data.n_orbits
    unit_masks = data.unit_masks
    ideal_of = data.dynamical_of
    if len(np.unique(ideal_of)) != len(unit_masks):
        witnesses.append("unit-set-to-ideal map is not injective")
    for w in range(1 << n_orbits):
        members = data.orbit_set(w)
        ideal = decomp.ideal(
            i for i in range(data.b) if int(ideal_of[w]) >> i & 1
        )
        if ideal.diagonal_units() != members:
            witnesses.append(f"diagonal of I_U differs from C(U) at {w:#x}")
        expected = frozenset(
            el for el in g.elements
            if g.source(el) in members and g.range(el) in members
        )
        if ideal.support() != expected:
            witnesses.append(f"support of I_U differs from the reduction at {w:#x}")
    pair_budget = (1 << n_orbits) * (1 << n_orbits) <= _FULL_SCAN_BUDGET
    w1_range = range(1 << n_orbits) if pair_budget else [0, (1 << n_orbits) - 1]
    for w1 in w1_range:
        i1 = int(ideal_of[w1])
        if ((i1 & ideal_of) != ideal_of[w1 & unit_masks]).any():
            witnesses.append(f"intersection identity fails against {w1:#x}")
        if ((i1 | ideal_of) != ideal_of[w1 | unit_masks]).any():
            witnesses.append(f"sum identity fails against {w1:#x}")
        if (((w1 & unit_masks) == w1) != ((i1 & ideal_of) == i1)).any():
            witnesses.append(f"order preservation fails against {w1:#x}")
    return CheckResult(
        "lattice",
        not witnesses,
        {"invariant_sets": 1 << n_orbits,
         "pair_scan": "all pairs" if pair_budget else "extremal rows"},
        witnesses[:5],
    )


def _check_support_invariance(data: _LatticeData) -> CheckResult:
    decomp = data.decomp
    g = decomp.groupoid
    from .algebra import _plan

    plan = _plan(g)
    witnesses = []
    seen = 0
    for v in np.unique(data.touched):
        # ideals with the same touched-orbit set share their support, so
        # one representative (all blocks over those orbits) covers them all
        seen += 1
        full_mask = int(data.dynamical_of[v])
        ideal = decomp.ideal(i for i in range(data.b) if full_mask >> i & 1)
        in_s = np.zeros(len(g), dtype=bool)
        for el in ideal.support():
            in_s[g.index(el)] = True
        if not np.array_equal(in_s, in_s[plan.inv]):
            witnesses.append(f"support over orbits {int(v):#x} not closed under inversion")
        both = in_s[plan.ia] & in_s[plan.ib]
        if both.any() and not in_s[plan.iab[both]].all():
            witnesses.append(f"support over orbits {int(v):#x} not closed under composition")
    return CheckResult(
        "support", not witnesses, {"distinct_supports": seen}, witnesses[:5]
    )


def _check_effective_uniqueness(data: _LatticeData) -> CheckResult:
    decomp = data.decomp
    g = decomp.groupoid
    effective = g.effective_units() == g.units
    witnesses = []
    if effective:
        bad = (data.ideal_masks != 0) & (data.inside == 0)
        for m in np.flatnonzero(bad)[:3]:
            witnesses.append(
                f"nonzero ideal {m:#x} misses the diagonal on an effective groupoid"
            )
    return CheckResult(
        "effective", not witnesses, {"effective": effective}, witnesses[:5]
    )


def verify(g_or_decomp, tol: TolerancePolicy | None = None, seed: int | None = None,
           max_blocks: int = MAX_BLOCKS) -> VerificationReport:
    """Run the full theorem suite and report one verdict per theorem."""
    decomp = _decomposition_of(g_or_decomp, tol, seed)
    if decomp.block_count > max_blocks:
        raise CapExceededError(
            f"{decomp.block_count} blocks exceed the verification cap {max_blocks}"
        )
    g = decomp.groupoid
    data = _LatticeData(decomp)
    triples = enumerate_triples(decomp, max_blocks=max_blocks)
    checks = [
        _check_sandwich(data),
        _check_bijection(data, triples),
        _check_obstruction(data),
        _check_lattice_iso(data),
        _check_support_invariance(data),
        _check_effective_uniqueness(data),
    ]
    dynamical = int(np.sum(data.dynamical_of[data.inside] == data.ideal_masks))
    pnd = int(np.sum((data.ideal_masks != 0) & (data.inside == 0)))
    counts = {
        "ideals": 1 << data.b,
        "dynamical": dynamical,
        "purely_non_dynamical": pnd,
        "triples": len(triples),
    }
    return VerificationReport(
        groupoid_name=g.name,
        element_count=len(g),
        unit_count=len(g.units),
        orbit_count=data.n_orbits,
        block_dimensions=decomp.dimensions,
        seed=decomp.seed,
        zero_eps=decomp.tol.zero_eps,
        eig_residual=decomp.tol.eig_residual,
        counts=counts,
        checks=checks,
        numerics=dict(decomp.numerics),
    )

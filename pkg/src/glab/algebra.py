"""The reduced C*-algebra of a finite groupoid, realized concretely.

For a finite groupoid the convolution algebra of all complex functions
on the groupoid IS the reduced C*-algebra: the direct sum of the
regular representations over all units is faithful, so the algebra is
a block-diagonal matrix *-algebra of total dimension |G|.  This module
computes that realization, its decomposition into simple matrix
blocks (minimal central idempotents, block dimensions, matrix units),
and the lattice of two-sided ideals, which are exactly the sums of
blocks.

Ideals are canonically represented by their block subsets; all
subspace-level questions (diagonal intersection, support) are answered
through the decomposition, so ideal identity is exact and free of
tolerance drift.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import CapExceededError
from .groupoids import FiniteGroupoid, GroupoidError
from .linalg import DEFAULT_TOLERANCE, TolerancePolicy

DEFAULT_SEED = 0xC0FFEE
MAX_BLOCKS = 20
_RETRIES = 8
_CHECK_EPS = 1e-7


class AlgebraError(ValueError):
    pass


class DecompositionError(AlgebraError):
    """Numerically degenerate decomposition (never seen on valid input)."""


# -- convolution plan ---------------------------------------------------------


class _Plan:
    """Cached index arrays for convolution and the regular representation."""

    def __init__(self, g: FiniteGroupoid):
        n = len(g)
        ia, ib, iab = [], [], []
        for a, b in g.composable_pairs():
            ia.append(g.index(a))
            ib.append(g.index(b))
            iab.append(g.index(g.compose(a, b)))
        self.n = n
        self.ia = np.asarray(ia, dtype=np.intp)
        self.ib = np.asarray(ib, dtype=np.intp)
        self.iab = np.asarray(iab, dtype=np.intp)
        self.inv = np.asarray([g.index(g.inverse(el)) for el in g.elements], dtype=np.intp)
        self.source_idx = np.asarray([g.index(g.source(el)) for el in g.elements], dtype=np.intp)
        self.unit_mask = np.zeros(n, dtype=bool)
        for u in g.unit_list:
            self.unit_mask[g.index(u)] = True
        order = np.argsort(self.ia, kind="stable")
        self._left = (self.ia[order], self.ib[order], self.iab[order])
        order = np.argsort(self.ib, kind="stable")
        self._right = (self.ib[order], self.ia[order], self.iab[order])

    def left_action(self, h: int):
        """(source positions, target positions) for f -> delta_h * f."""
        keys, cols, tgts = self._left
        lo = np.searchsorted(keys, h, side="left")
        hi = np.searchsorted(keys, h, side="right")
        return cols[lo:hi], tgts[lo:hi]

    def right_action(self, h: int):
        """(source positions, target positions) for f -> f * delta_h."""
        keys, cols, tgts = self._right
        lo = np.searchsorted(keys, h, side="left")
        hi = np.searchsorted(keys, h, side="right")
        return cols[lo:hi], tgts[lo:hi]


def _plan(g: FiniteGroupoid) -> _Plan:
    plan = g._caches.get("algebra_plan")
    if plan is None:
        plan = _Plan(g)
        g._caches["algebra_plan"] = plan
    return plan


# -- algebra elements ---------------------------------------------------------


class AlgebraElement:
    """A complex function on the groupoid, multiplied by convolution."""

    __slots__ = ("groupoid", "coeffs")

    def __init__(self, groupoid: FiniteGroupoid, coeffs):
        self.groupoid = groupoid
        c = np.asarray(coeffs, dtype=np.complex128)
        if c.shape != (len(groupoid),):
            raise AlgebraError(
                f"coefficient vector of length {c.shape} for |G| = {len(groupoid)}"
            )
        self.coeffs = c

    @classmethod
    def zero(cls, groupoid):
        return cls(groupoid, np.zeros(len(groupoid), dtype=np.complex128))

    @classmethod
    def delta(cls, groupoid, el):
        c = np.zeros(len(groupoid), dtype=np.complex128)
        c[groupoid.index(el)] = 1.0
        return cls(groupoid, c)

    def _check_same(self, other):
        if self.groupoid is not other.groupoid:
            raise AlgebraError("elements live over different groupoids")

    def __add__(self, other):
        self._check_same(other)
        return AlgebraElement(self.groupoid, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check_same(other)
        return AlgebraElement(self.groupoid, self.coeffs - other.coeffs)

    def __neg__(self):
        return AlgebraElement(self.groupoid, -self.coeffs)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, float, complex)):
            return AlgebraElement(self.groupoid, scalar * self.coeffs)
        return NotImplemented

    def __mul__(self, other):
        """Convolution: (f*g)(gamma) = sum over factorizations gamma = a b."""
        if isinstance(other, (int, float, complex)):
            return AlgebraElement(self.groupoid, other * self.coeffs)
        self._check_same(other)
        plan = _plan(self.groupoid)
        out = np.zeros(plan.n, dtype=np.complex128)
        np.add.at(out, plan.iab, self.coeffs[plan.ia] * other.coeffs[plan.ib])
        return AlgebraElement(self.groupoid, out)

    def adjoint(self):
        """Involution: f*(gamma) = conj(f(gamma^-1))."""
        plan = _plan(self.groupoid)
        return AlgebraElement(self.groupoid, np.conj(self.coeffs[plan.inv]))

    def expectation(self):
        """Conditional expectation onto the diagonal: zero all non-unit terms."""
        plan = _plan(self.groupoid)
        return AlgebraElement(self.groupoid, self.coeffs * plan.unit_mask)

    def jmap(self) -> dict:
        """The element read as a function on the groupoid (all coefficients)."""
        return {el: complex(self.coeffs[i]) for i, el in enumerate(self.groupoid.elements)}

    def coefficient(self, el) -> complex:
        return complex(self.coeffs[self.groupoid.index(el)])

    def norm(self, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> float:
        """The reduced C*-norm: operator norm in the regular representation."""
        return linalg.operator_norm(full_representation(self.groupoid).matrix(self), tol)

    def support(self, eps: float = DEFAULT_TOLERANCE.zero_eps) -> frozenset:
        return frozenset(
            el for i, el in enumerate(self.groupoid.elements) if abs(self.coeffs[i]) > eps
        )

    def allclose(self, other, eps: float = 1e-8) -> bool:
        self._check_same(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs), initial=0.0) <= eps)

    def __repr__(self):
        terms = []
        for i, el in enumerate(self.groupoid.elements):
            c = self.coeffs[i]
            if abs(c) > 1e-12:
                terms.append(f"{c:.3g}*d[{el!r}]")
            if len(terms) > 4:
                terms.append("...")
                break
        return "AlgebraElement(" + (" + ".join(terms) if terms else "0") + ")"


def delta(groupoid, el) -> AlgebraElement:
    return AlgebraElement.delta(groupoid, el)


def unit_element(groupoid) -> AlgebraElement:
    """The multiplicative unit: the indicator of the unit space."""
    plan = _plan(groupoid)
    return AlgebraElement(groupoid, plan.unit_mask.astype(np.complex128))


def diagonal_element(groupoid, values: dict) -> AlgebraElement:
    """A diagonal function from a unit -> value mapping."""
    c = np.zeros(len(groupoid), dtype=np.complex128)
    for u, v in values.items():
        if u not in groupoid.units:
            raise AlgebraError(f"{u!r} is not a unit")
        c[groupoid.index(u)] = v
    return AlgebraElement(groupoid, c)


def convolve(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    return f * g


def involute(f: AlgebraElement) -> AlgebraElement:
    return f.adjoint()


def expectation_E(f: AlgebraElement) -> AlgebraElement:
    return f.expectation()


def jmap(f: AlgebraElement) -> dict:
    return f.jmap()


def random_element(groupoid, rng, selfadjoint: bool = False) -> AlgebraElement:
    c = rng.standard_normal(len(groupoid)) + 1j * rng.standard_normal(len(groupoid))
    a = AlgebraElement(groupoid, c)
    if selfadjoint:
        a = 0.5 * (a + a.adjoint())
    return a


# -- the regular representation ----------------------------------------------


class Representation:
    """The direct sum over units x of the regular representation on l2(G_x).

    The total basis is the set of groupoid elements itself (grouped by
    source fiber), so matrices are |G| x |G| and the coefficient of a
    at gamma can be read back as the matrix entry (gamma, source(gamma)).
    """

    def __init__(self, groupoid: FiniteGroupoid):
        self.groupoid = groupoid
        self._plan = _plan(groupoid)

    def matrix(self, f) -> np.ndarray:
        coeffs = f.coeffs if isinstance(f, AlgebraElement) else np.asarray(f, dtype=np.complex128)
        plan = self._plan
        m = np.zeros((plan.n, plan.n), dtype=np.complex128)
        m[plan.iab, plan.ib] = coeffs[plan.ia]
        return m

    def coefficients(self, matrix) -> np.ndarray:
        """Inverse of ``matrix`` on the image algebra, via the entry read-back."""
        plan = self._plan
        return np.asarray(matrix)[np.arange(plan.n), plan.source_idx].copy()

    def fiber_elements(self, x) -> tuple:
        return self.groupoid.source_fiber(x)

    def fiber_matrix(self, f, x) -> np.ndarray:
        """The block of the representation acting on l2(G_x)."""
        idx = [self.groupoid.index(el) for el in self.groupoid.source_fiber(x)]
        return self.matrix(f)[np.ix_(idx, idx)]


def full_representation(groupoid: FiniteGroupoid) -> Representation:
    rep = groupoid._caches.get("representation")
    if rep is None:
        rep = Representation(groupoid)
        groupoid._caches["representation"] = rep
    return rep


# -- Wedderburn decomposition --------------------------------------------------


@dataclass
class Block:
    """One simple matrix summand of the algebra."""

    index: int
    dimension: int
    idempotent: AlgebraElement
    orbit: frozenset
    support: frozenset
    coeff_basis: np.ndarray = field(repr=False)
    _decomposition: "BlockDecomposition" = field(repr=False, default=None)
    _matrix_units: list = field(repr=False, default=None)

    def matrix_units(self):
        """A d x d family of matrix units spanning the block (lazy)."""
        if self._matrix_units is None:
            self._matrix_units = self._decomposition._matrix_units_for(self)
        return self._matrix_units


class BlockDecomposition:
    """Minimal central idempotents and simple-block data for C*_r(G)."""

    def __init__(self, groupoid, tol, seed, blocks, numerics):
        self.groupoid = groupoid
        self.tol = tol
        self.seed = seed
        self.blocks = tuple(blocks)
        self.numerics = numerics
        for blk in self.blocks:
            blk._decomposition = self
        self._subquotients: dict = {}
        self._support_cache: dict = {}
        self._diagonal_cache: dict = {}

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def dimensions(self) -> tuple:
        return tuple(b.dimension for b in self.blocks)

    def unit(self) -> AlgebraElement:
        return unit_element(self.groupoid)

    def orbit_blocks(self) -> dict:
        """Map each orbit to the tuple of indices of blocks sitting over it."""
        out: dict = {}
        for blk in self.blocks:
            out.setdefault(blk.orbit, []).append(blk.index)
        return {orbit: tuple(ids) for orbit, ids in out.items()}

    # -- ideals ---------------------------------------------------------

    def ideal(self, block_indices) -> "Ideal":
        blocks = frozenset(block_indices)
        if not blocks <= set(range(self.block_count)):
            raise AlgebraError(f"unknown block indices {sorted(blocks)}")
        return Ideal(self, blocks)

    def zero_ideal(self) -> "Ideal":
        return Ideal(self, frozenset())

    def full_ideal(self) -> "Ideal":
        return Ideal(self, frozenset(range(self.block_count)))

    def all_ideals(self, max_blocks: int = MAX_BLOCKS) -> list:
        """All 2^b block subsets, ordered by their bitmask."""
        b = self.block_count
        if b > max_blocks:
            raise CapExceededError(
                f"{b} blocks would enumerate 2^{b} ideals (cap {max_blocks})"
            )
        return [
            Ideal(self, frozenset(i for i in range(b) if mask >> i & 1))
            for mask in range(1 << b)
        ]

    def dynamical_ideal_of(self, members) -> "Ideal":
        """The ideal generated by the diagonal functions on an invariant unit set."""
        members = frozenset(members)
        if not self.groupoid.is_invariant_unit_set(members):
            raise GroupoidError(f"unit set is not invariant: {sorted(map(repr, members))}")
        return Ideal(
            self,
            frozenset(b.index for b in self.blocks if b.orbit <= members),
        )

    def ideal_generated_by(self, a: AlgebraElement) -> "Ideal":
        """The two-sided ideal generated by one element (a block subset)."""
        scale = max(1.0, float(np.linalg.norm(a.coeffs)))
        blocks = set()
        for blk in self.blocks:
            comp = blk.idempotent * a
            if np.max(np.abs(comp.coeffs), initial=0.0) > self.tol.zero_eps * scale:
                blocks.add(blk.index)
        return Ideal(self, frozenset(blocks))

    # -- subquotients ------------------------------------------------------

    def restriction_decomposition(self, members):
        """Decomposition of the reduction to an invariant unit set, plus the
        block correspondence (sub-block index -> parent block index).

        The reduction to an invariant set is the direct sum of the
        per-orbit algebras it contains, so its minimal central
        idempotents are exactly the parent ones restricted to the
        reduction (minimal central idempotents are unique); the
        decomposition is assembled accordingly rather than recomputed,
        and registered as the reduction's cached decomposition.
        """
        members = frozenset(members)
        key = members
        cached = self._subquotients.get(key)
        if cached is not None:
            return cached
        if not self.groupoid.is_invariant_unit_set(members):
            raise GroupoidError("reduction set must be invariant for the subquotient")
        if members == self.groupoid.units:
            result = (self, {i: i for i in range(self.block_count)})
            self._subquotients[key] = result
            return result
        sub_groupoid = self.groupoid.restrict(members, validate=False)
        keep = np.asarray(
            [self.groupoid.index(el) for el in sub_groupoid.elements], dtype=np.intp
        )
        mapping = {}
        blocks = []
        for parent in self.blocks:
            if not parent.orbit <= members:
                continue
            index = len(blocks)
            mapping[index] = parent.index
            blocks.append(Block(
                index=index,
                dimension=parent.dimension,
                idempotent=AlgebraElement(sub_groupoid, parent.idempotent.coeffs[keep]),
                orbit=parent.orbit,
                support=parent.support,
                coeff_basis=parent.coeff_basis[keep],
            ))
        sub = BlockDecomposition(
            sub_groupoid, self.tol, self.seed, blocks, dict(self.numerics)
        )
        cache_key = ("wedderburn", self.tol.zero_eps, self.tol.eig_residual, self.seed)
        sub_groupoid._caches[cache_key] = sub
        result = (sub, mapping)
        self._subquotients[key] = result
        return result

    # -- matrix units ------------------------------------------------------

    def _matrix_units_for(self, block: Block):
        g = self.groupoid
        rep = full_representation(g)
        rng = np.random.default_rng((self.seed, block.index, 0xB10C))
        d = block.dimension
        e_mat = rep.matrix(block.idempotent)
        if d == 1:
            return [[AlgebraElement(g, block.idempotent.coeffs.copy())]]
        u, s, _ = np.linalg.svd(e_mat)
        r = int(np.sum(s > 0.5))
        v = u[:, :r]
        mult = r // d
        projections = None
        for _ in range(_RETRIES):
            a = random_element(g, rng, selfadjoint=True)
            y = block.idempotent * a * block.idempotent
            y_r = v.conj().T @ rep.matrix(y) @ v
            eigenvalues, vectors = linalg.hermitian_eigen(y_r, self.tol)
            clusters = _cluster(eigenvalues, d)
            if clusters is None or any(hi - lo != mult for lo, hi in clusters):
                continue
            projections = [
                v @ vectors[:, lo:hi] @ vectors[:, lo:hi].conj().T @ v.conj().T
                for lo, hi in clusters
            ]
            break
        if projections is None:
            raise DecompositionError("matrix-unit eigenvalue clustering failed")
        row = [projections[0]]
        for j in range(1, d):
            ok = False
            for _ in range(_RETRIES):
                a = random_element(g, rng)
                vj = projections[0] @ rep.matrix(block.idempotent * a) @ projections[j]
                c = float(np.real(np.trace(vj.conj().T @ vj))) / mult
                if c > 1e-9:
                    row.append(vj / np.sqrt(c))
                    ok = True
                    break
            if not ok:
                raise DecompositionError("failed to link minimal projections")
        units = [[None] * d for _ in range(d)]
        for j in range(d):
            for k in range(d):
                m = row[j].conj().T @ row[k]
                units[j][k] = AlgebraElement(g, rep.coefficients(m))
        ident = sum((units[j][j].coeffs for j in range(d)), np.zeros(len(g), np.complex128))
        if np.max(np.abs(ident - block.idempotent.coeffs)) > _CHECK_EPS:
            raise DecompositionError("matrix units do not sum to the block idempotent")
        return units

    def __repr__(self):
        dims = "x".join(str(d) for d in self.dimensions) or "0"
        return f"BlockDecomposition({self.groupoid.name}: blocks {dims})"


def _cluster(eigenvalues, expected=None, gap_eps: float = 1e-6):
    """Split sorted eigenvalues at gaps; None if the count mismatches."""
    n = len(eigenvalues)
    if n == 0:
        return []
    scale = max(1.0, float(np.max(np.abs(eigenvalues))))
    bounds = [0]
    for i in range(1, n):
        if eigenvalues[i] - eigenvalues[i - 1] > gap_eps * scale:
            bounds.append(i)
    bounds.append(n)
    clusters = [(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]
    if expected is not None and len(clusters) != expected:
        return None
    return clusters


def _center_basis(g: FiniteGroupoid, tol: TolerancePolicy) -> np.ndarray:
    """Orthonormal basis (columns) of the center, by intersecting the
    kernels of all commutators with basis functions."""
    plan = _plan(g)
    n = plan.n
    basis = np.eye(n, dtype=np.complex128)
    for h in range(n):
        lcols, ltgts = plan.left_action(h)
        rcols, rtgts = plan.right_action(h)
        m = np.zeros((n, basis.shape[1]), dtype=np.complex128)
        m[ltgts] += basis[lcols]
        m[rtgts] -= basis[rcols]
        if basis.shape[1] == 0:
            break
        _, s, vh = np.linalg.svd(m, full_matrices=True)
        cutoff = tol.zero_eps * max(1.0, float(s[0]) if s.size else 0.0)
        r = int(np.sum(s > cutoff))
        basis = basis @ vh[r:].conj().T
    return basis


def wedderburn(g: FiniteGroupoid, tol: TolerancePolicy | None = None,
               seed: int | None = None) -> BlockDecomposition:
    """Decompose C*_r(G) into simple matrix blocks.

    Finds the center by solving the commutation system, draws a generic
    self-adjoint central element from a seeded stream (retrying on
    eigenvalue collisions), and reads the minimal central idempotents
    off its spectral projections.  The result is cached per groupoid
    and (tol, seed) pair.
    """
    tol = tol or DEFAULT_TOLERANCE
    seed = DEFAULT_SEED if seed is None else seed
    key = ("wedderburn", tol.zero_eps, tol.eig_residual, seed)
    cached = g._caches.get(key)
    if cached is not None:
        return cached

    n = len(g)
    numerics = {"eig_residual": 0.0, "dim_rounding": 0.0, "retries": 0}
    if n == 0:
        decomp = BlockDecomposition(g, tol, seed, (), numerics)
        g._caches[key] = decomp
        return decomp

    rep = full_representation(g)
    plan = _plan(g)
    center = _center_basis(g, tol)
    b = center.shape[1]
    if b == 0:
        raise DecompositionError("empty center on a nonzero algebra")

    rng = np.random.default_rng(seed)
    clusters = eigenvectors = None
    for attempt in range(_RETRIES):
        t = rng.standard_normal(b) + 1j * rng.standard_normal(b)
        w = center @ t
        w = (w + np.conj(w[plan.inv])) / 2.0
        if np.linalg.norm(w) < 1e-12:
            numerics["retries"] += 1
            continue
        m = rep.matrix(w)
        eigenvalues, eigenvectors = linalg.hermitian_eigen(m, tol)
        numerics["eig_residual"] = max(
            numerics["eig_residual"], linalg.eigen_residual(m, eigenvalues, eigenvectors)
        )
        clusters = _cluster(eigenvalues, expected=b)
        if clusters is not None:
            break
        numerics["retries"] += 1
    if clusters is None:
        raise DecompositionError(
            f"central element eigenvalues kept colliding after {_RETRIES} draws"
        )

    unit_positions = np.flatnonzero(plan.unit_mask)
    order = {u: i for i, u in enumerate(g.unit_list)}
    orbits = g.orbits()
    raw_blocks = []
    for lo, hi in clusters:
        vectors = eigenvectors[:, lo:hi]
        projection = vectors @ vectors.conj().T
        coeffs = rep.coefficients(projection)
        if np.max(np.abs(rep.matrix(coeffs) - projection)) > _CHECK_EPS:
            raise DecompositionError("spectral projection is not in the algebra image")
        u, s, _ = np.linalg.svd(projection)
        rank = int(np.sum(s > 0.5))
        dim = float(np.sqrt(rank))
        rounding = abs(dim - round(dim))
        numerics["dim_rounding"] = max(numerics["dim_rounding"], rounding)
        if rounding > 1e-6:
            raise DecompositionError(f"block rank {rank} is not a perfect square")
        dim = int(round(dim))

        col_norms = np.linalg.norm(projection, axis=0)
        nz = col_norms > tol.zero_eps
        normalized = np.abs(projection[:, nz]) / col_norms[nz]
        support_mask = normalized.max(axis=1, initial=0.0) > tol.zero_eps
        support = frozenset(g.elements[i] for i in np.flatnonzero(support_mask))

        e_norm = np.abs(coeffs) / max(float(np.linalg.norm(coeffs)), 1e-300)
        orbit = frozenset(
            g.elements[i] for i in unit_positions if e_norm[i] > tol.zero_eps
        )
        if orbit not in orbits:
            raise DecompositionError(
                f"block diagonal footprint {sorted(map(repr, orbit))} is not an orbit"
            )
        raw_blocks.append((orbit, dim, AlgebraElement(g, coeffs), support, u[:, :rank]))

    if sum(dim * dim for _, dim, _, _, _ in raw_blocks) != n:
        raise DecompositionError("block dimensions do not account for dim C*_r(G)")

    raw_blocks.sort(key=lambda blk: (min(order[u] for u in blk[0]), blk[1]))
    blocks = [
        Block(index=i, dimension=dim, idempotent=e, orbit=orbit, support=support,
              coeff_basis=basis)
        for i, (orbit, dim, e, support, basis) in enumerate(raw_blocks)
    ]

    total = sum((blk.idempotent.coeffs for blk in blocks),
                np.zeros(n, dtype=np.complex128))
    if np.max(np.abs(total - plan.unit_mask)) > _CHECK_EPS:
        raise DecompositionError("central idempotents do not sum to the unit")
    for lo, hi in clusters:
        for lo2, hi2 in clusters:
            if lo2 <= lo:
                continue
            overlap = eigenvectors[:, lo:hi].conj().T @ eigenvectors[:, lo2:hi2]
            if np.max(np.abs(overlap), initial=0.0) > _CHECK_EPS:
                raise DecompositionError("central idempotents are not orthogonal")

    decomp = BlockDecomposition(g, tol, seed, blocks, numerics)
    g._caches[key] = decomp
    return decomp


# -- ideals --------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal, canonically a subset of Wedderburn blocks."""

    decomposition: BlockDecomposition
    blocks: frozenset

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.decomposition is other.decomposition and self.blocks == other.blocks

    def __hash__(self):
        return hash((id(self.decomposition), self.blocks))

    @property
    def is_zero(self) -> bool:
        return not self.blocks

    @property
    def dimension(self) -> int:
        return sum(
            self.decomposition.blocks[i].dimension ** 2 for i in self.blocks
        )

    def support(self) -> frozenset:
        """All arrows where some element of the ideal is nonzero."""
        cached = self.decomposition._support_cache.get(self.blocks)
        if cached is None:
            cached = frozenset().union(
                *(self.decomposition.blocks[i].support for i in self.blocks)
            ) if self.blocks else frozenset()
            self.decomposition._support_cache[self.blocks] = cached
        return cached

    def diagonal_units(self) -> frozenset:
        """Units x with delta_x in the ideal: those none of whose blocks
        are missing (read off the block/orbit incidence)."""
        cached = self.decomposition._diagonal_cache.get(self.blocks)
        if cached is None:
            outside: frozenset = frozenset()
            for blk in self.decomposition.blocks:
                if blk.index not in self.blocks:
                    outside |= blk.orbit
            cached = self.decomposition.groupoid.units - outside
            self.decomposition._diagonal_cache[self.blocks] = cached
        return cached

    def diagonal_part(self) -> list:
        """Basis of the intersection with the diagonal subalgebra,
        computed numerically by testing each unit indicator for
        membership in the span of the ideal's blocks."""
        g = self.decomposition.groupoid
        tol = self.decomposition.tol
        basis_rows = [
            self.decomposition.blocks[i].coeff_basis[:, k]
            for i in sorted(self.blocks)
            for k in range(self.decomposition.blocks[i].coeff_basis.shape[1])
        ]
        out = []
        for u in g.unit_list:
            v = np.zeros(len(g), dtype=np.complex128)
            v[g.index(u)] = 1.0
            if linalg.subspace_membership(basis_rows, v, tol):
                out.append(AlgebraElement(g, v))
        return out

    def is_dynamical(self) -> bool:
        """Generated by its diagonal intersection."""
        return self == self.decomposition.dynamical_ideal_of(self.diagonal_units())

    def is_purely_nondynamical(self) -> bool:
        """Nonzero with trivial diagonal intersection."""
        return bool(self.blocks) and not self.diagonal_units()

    def contains_element(self, a: AlgebraElement) -> bool:
        return self.decomposition.ideal_generated_by(a).blocks <= self.blocks

    def __and__(self, other):
        self._check(other)
        return Ideal(self.decomposition, self.blocks & other.blocks)

    def __or__(self, other):
        self._check(other)
        return Ideal(self.decomposition, self.blocks | other.blocks)

    def __le__(self, other):
        self._check(other)
        return self.blocks <= other.blocks

    def _check(self, other):
        if self.decomposition is not other.decomposition:
            raise AlgebraError("ideals live in different decompositions")

    def __repr__(self):
        return f"Ideal(blocks={sorted(self.blocks)})"


def all_ideals(g: FiniteGroupoid, tol: TolerancePolicy | None = None,
               seed: int | None = None, max_blocks: int = MAX_BLOCKS) -> list:
    return wedderburn(g, tol, seed).all_ideals(max_blocks)


def dynamical_ideal_of(g: FiniteGroupoid, members, tol: TolerancePolicy | None = None,
                       seed: int | None = None) -> Ideal:
    return wedderburn(g, tol, seed).dynamical_ideal_of(members)

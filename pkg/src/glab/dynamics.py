"""Combinatorial dynamics: finite single-map systems and directed graphs.

For a map T on a finite set the periodic loci are literal fixed-point
sets of iterates (every subset of a finite discrete space is open), and
the non-effective locus of the associated semidirect-product dynamics
is computed twice, from two independent characterizations: forward
orbits meeting the periodic locus, and eventual periodicity.  On a
finite space both sides are everything whenever the space is nonempty;
the content of the computation is the agreement of the two sides, and
reports say so.

For directed graphs (row-finite, no sinks in v1) the lattice of
saturated hereditary vertex sets plays the role of the invariant-set
lattice, and the obstruction vertex set is the least saturated
hereditary set swallowing every cycle without an exit; it vanishes
exactly when every cycle has an exit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError

LATTICE_CAP = 1 << 20
CYCLE_CAP = 100_000


class DynamicsError(ValueError):
    pass


class UnsupportedGraphError(DynamicsError):
    """Graph shape outside the supported fragment (e.g. a sink)."""


# -- finite dynamical systems ---------------------------------------------------


class FiniteDynSystem:
    """A total map T on a finite set."""

    def __init__(self, space, mapping):
        self.space = tuple(space)
        self._space_set = frozenset(self.space)
        if len(self._space_set) != len(self.space):
            raise DynamicsError("duplicate points in space")
        self.mapping = dict(mapping)
        for x in self.space:
            if x not in self.mapping:
                raise DynamicsError(f"map undefined at {x!r}")
            if self.mapping[x] not in self._space_set:
                raise DynamicsError(f"map leaves the space at {x!r}")
        extra = set(self.mapping) - self._space_set
        if extra:
            raise DynamicsError(f"map defined off the space: {sorted(map(repr, extra))}")

    def __len__(self):
        return len(self.space)

    def apply(self, x, times: int = 1):
        for _ in range(times):
            x = self.mapping[x]
        return x

    def periodic_locus(self, p: int) -> frozenset:
        """Points fixed by the p-th iterate (p >= 1)."""
        if p < 1:
            raise DynamicsError("period must be at least 1")
        return frozenset(x for x in self.space if self.apply(x, p) == x)

    def periodic_points(self) -> frozenset:
        """Union of all periodic loci; stabilizes by p = |X|."""
        out = frozenset()
        for p in range(1, len(self.space) + 1):
            out |= self.periodic_locus(p)
        return out

    def forward_orbit(self, x) -> frozenset:
        seen = []
        seen_set = set()
        while x not in seen_set:
            seen.append(x)
            seen_set.add(x)
            x = self.mapping[x]
        return frozenset(seen)

    def noneffective_locus(self) -> frozenset:
        """Points whose forward orbit meets the periodic locus.

        On a finite space every forward orbit falls into a cycle, so
        this is all of X whenever X is nonempty; the degenerate answer
        is intentional and reports flag it.  Agreement with the
        independently computed eventually-periodic locus is asserted.
        """
        periodic = self.periodic_points()
        orbit_side = frozenset(
            x for x in self.space if self.forward_orbit(x) & periodic
        )
        isotropy_side = self.eventually_periodic_locus()
        if orbit_side != isotropy_side:
            raise DynamicsError(
                "the two characterizations of the non-effective locus disagree"
            )
        return orbit_side

    def eventually_periodic_locus(self) -> frozenset:
        """Points x with T^m x = T^n x for some m > n (nontrivial isotropy
        in the semidirect-product dynamics); computed by iterate collision."""
        out = []
        for x in self.space:
            slow = fast = x
            while True:
                slow = self.mapping[slow]
                fast = self.mapping[self.mapping[fast]]
                if slow == fast:
                    out.append(x)
                    break
        return frozenset(out)

    def orbit_equivalence_classes(self) -> tuple:
        """Classes of the smallest equivalence relation with x ~ T(x)."""
        parent = {x: x for x in self.space}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in self.space:
            a, b = find(x), find(self.mapping[x])
            if a != b:
                parent[a] = b
        classes: dict = {}
        for x in self.space:
            classes.setdefault(find(x), []).append(x)
        order = {x: i for i, x in enumerate(self.space)}
        return tuple(
            frozenset(v)
            for v in sorted(classes.values(), key=lambda vs: min(order[v] for v in vs))
        )

    def invariant_sets(self, cap: int = LATTICE_CAP) -> list:
        """All subsets closed under the map forwards and backwards
        (unions of orbit-equivalence classes), as a lattice."""
        classes = self.orbit_equivalence_classes()
        if 2 ** len(classes) > cap:
            raise CapExceededError(
                f"{2 ** len(classes)} invariant sets exceed the cap {cap}"
            )
        order = {x: i for i, x in enumerate(self.space)}
        out = []
        for mask in range(1 << len(classes)):
            members = frozenset().union(
                *(classes[i] for i in range(len(classes)) if mask >> i & 1)
            ) if mask else frozenset()
            out.append(members)
        out.sort(key=lambda s: (len(s), sorted(order[x] for x in s)))
        return out

    def is_invariant(self, members) -> bool:
        members = frozenset(members)
        forward = all(self.mapping[x] in members for x in members)
        backward = all(
            x in members for x in self.space if self.mapping[x] in members
        )
        return forward and backward

    def __repr__(self):
        return f"FiniteDynSystem({len(self.space)} points)"


# -- directed graphs --------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    ident: object
    src: object
    dst: object


class DirectedGraph:
    """A finite directed graph with parallel edges and loops allowed."""

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        vertex_set = frozenset(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise DynamicsError("duplicate vertices")
        out: list = []
        idents = set()
        for e in edges:
            if isinstance(e, Edge):
                edge = e
            elif isinstance(e, dict):
                edge = Edge(e.get("id", len(out)), e["src"], e["dst"])
            else:
                ident, src, dst = (len(out), *e) if len(e) == 2 else e
                edge = Edge(ident, src, dst)
            if edge.src not in vertex_set or edge.dst not in vertex_set:
                raise DynamicsError(f"edge {edge.ident!r} has a missing endpoint")
            if edge.ident in idents:
                raise DynamicsError(f"duplicate edge id {edge.ident!r}")
            idents.add(edge.ident)
            out.append(edge)
        self.edges = tuple(out)
        self._out = {v: tuple(e for e in self.edges if e.src == v) for v in self.vertices}

    def out_edges(self, v) -> tuple:
        return self._out[v]

    def sinks(self) -> tuple:
        return tuple(v for v in self.vertices if not self._out[v])

    def _reject_sinks(self, operation: str):
        sinks = self.sinks()
        if sinks:
            raise UnsupportedGraphError(
                f"{operation} requires a sink-free graph; vertex {sinks[0]!r} has no "
                f"outgoing edge"
            )

    # -- cycles ------------------------------------------------------------

    def simple_cycles(self, cap: int = CYCLE_CAP) -> list:
        """All cycles through pairwise-distinct vertices, as edge tuples.

        Rotations are identified by rooting each cycle at its smallest
        edge (edge order as given).
        """
        edge_order = {e.ident: i for i, e in enumerate(self.edges)}
        cycles = set()

        def extend(path, visited, start):
            if len(cycles) > cap:
                raise CapExceededError(f"more than {cap} simple cycles")
            tip = path[-1].dst
            for e in self._out[tip]:
                if e.dst == start:
                    cycle = tuple(path) + (e,)
                    k = min(range(len(cycle)), key=lambda i: edge_order[cycle[i].ident])
                    cycles.add(cycle[k:] + cycle[:k])
                elif e.dst not in visited:
                    extend(path + [e], visited | {e.dst}, start)

        for v in self.vertices:
            for e in self._out[v]:
                if e.dst == v:
                    cycles.add((e,))
                elif e.dst != v:
                    extend([e], {v, e.dst}, v)
        return sorted(cycles, key=lambda c: [edge_order[e.ident] for e in c])

    def cycle_has_exit(self, cycle) -> bool:
        """Some vertex on the cycle has an outgoing edge other than the
        cycle's own next edge at that vertex."""
        cycle = tuple(cycle)
        next_edge = {e.src: e.ident for e in cycle}
        for e in cycle:
            for out in self._out[e.src]:
                if out.ident != next_edge[e.src]:
                    return True
        return False

    def condition_L(self, cap: int = CYCLE_CAP) -> bool:
        """Every cycle has an exit."""
        return not self.exitless_cycle_vertices(cap)

    def exitless_cycle_vertices(self, cap: int = CYCLE_CAP) -> frozenset:
        """Vertices on cycles without exits.

        A cycle has no exit iff each of its vertices has out-degree 1,
        so these are found by following the unique edges inside the
        out-degree-one part (no cycle enumeration required).
        """
        unique = {v: es[0] for v, es in self._out.items() if len(es) == 1}
        out = set()
        for v in unique:
            if v in out:
                continue
            seen = {}
            cur, steps = v, 0
            while cur in unique and cur not in seen:
                seen[cur] = steps
                cur = unique[cur].dst
                steps += 1
            if cur in seen:
                cycle = [x for x, k in seen.items() if k >= seen[cur]]
                out.update(cycle)
        return frozenset(out)

    # -- hereditary and saturated vertex sets -----------------------------------

    def is_hereditary(self, members) -> bool:
        members = frozenset(members)
        return all(e.dst in members for v in members for e in self._out[v])

    def is_saturated(self, members) -> bool:
        members = frozenset(members)
        for v in self.vertices:
            if v in members or not self._out[v]:
                continue
            if all(e.dst in members for e in self._out[v]):
                return False
        return True

    def saturated_hereditary_closure(self, members) -> frozenset:
        """Least saturated hereditary superset."""
        self._reject_sinks("saturated hereditary closure")
        current = set(members)
        changed = True
        while changed:
            changed = False
            for v in list(current):
                for e in self._out[v]:
                    if e.dst not in current:
                        current.add(e.dst)
                        changed = True
            for v in self.vertices:
                if v not in current and all(e.dst in current for e in self._out[v]):
                    current.add(v)
                    changed = True
        return frozenset(current)

    def hereditary_saturated_sets(self, cap: int = LATTICE_CAP) -> list:
        """The full lattice of saturated hereditary vertex sets.

        Generated output-sensitively: close upward from the empty set by
        adding single vertices and closing, until no new sets appear.
        Meet is intersection; join is the closure of the union.
        """
        self._reject_sinks("the gauge-invariant ideal lattice")
        order = {v: i for i, v in enumerate(self.vertices)}
        found = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            base = frontier.pop()
            for v in self.vertices:
                if v in base:
                    continue
                new = self.saturated_hereditary_closure(base | {v})
                if new not in found:
                    if len(found) >= cap:
                        raise CapExceededError(
                            f"saturated hereditary lattice exceeds the cap {cap}"
                        )
                    found.add(new)
                    frontier.append(new)
        return sorted(found, key=lambda s: (len(s), sorted(order[v] for v in s)))

    def obstruction_vertex_set(self) -> frozenset:
        """Least saturated hereditary set containing all exit-less-cycle
        vertices; empty exactly when every cycle has an exit."""
        self._reject_sinks("the obstruction vertex set")
        core = self.exitless_cycle_vertices()
        if not core:
            return frozenset()
        return self.saturated_hereditary_closure(core)

    def __repr__(self):
        return f"DirectedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

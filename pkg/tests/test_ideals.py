import random

import numpy as np
import pytest

from glab import algebra as al
from glab import groupoids as gp
from glab import ideals as il
from glab.errors import CapExceededError
from glab.generators import random_groupoid
from _oracles import expected_counts


def units_by_point(g, *points):
    return frozenset(u for u in g.unit_list if u[0] in points)


class TestSandwich:
    def test_single_character_block(self, z2_bundle):
        d = al.wedderburn(z2_bundle)
        lower, upper = il.sandwich(d.ideal([0]))
        assert lower == frozenset()
        assert upper == z2_bundle.units

    def test_dynamical_ideals_sit_on_their_set(self, swap_and_fix):
        d = al.wedderburn(swap_and_fix)
        for members in swap_and_fix.invariant_subsets():
            lower, upper = il.sandwich(d.dynamical_ideal_of(members))
            assert lower == members and upper == members

    def test_mixed_ideal(self, swap_and_fix):
        d = al.wedderburn(swap_and_fix)
        m2 = next(b.index for b in d.blocks if b.dimension == 2)
        char = next(b.index for b in d.blocks if b.dimension == 1)
        lower, upper = il.sandwich(d.ideal([m2, char]))
        assert lower == units_by_point(swap_and_fix, "a", "b")
        assert upper == swap_and_fix.units

    def test_bounds_hold_for_all_ideals(self, swap_and_fix):
        d = al.wedderburn(swap_and_fix)
        for ideal in d.all_ideals():
            lower, upper = il.sandwich(ideal)
            assert d.dynamical_ideal_of(lower) <= ideal
            assert ideal <= d.dynamical_ideal_of(upper)
            for members in swap_and_fix.invariant_subsets():
                dyn = d.dynamical_ideal_of(members)
                if dyn <= ideal:
                    assert members <= lower
                if ideal <= dyn:
                    assert upper <= members


class TestObstruction:
    def test_swap_and_fix(self, swap_and_fix):
        j = il.obstruction_ideal(swap_and_fix)
        assert sorted(
            al.wedderburn(swap_and_fix).blocks[i].dimension for i in j.blocks
        ) == [1, 1]
        assert j.diagonal_units() == units_by_point(swap_and_fix, "c")

    def test_pair_zero(self, pair3):
        assert il.obstruction_ideal(pair3).is_zero

    def test_bundle_full(self, z2_bundle):
        j = il.obstruction_ideal(z2_bundle)
        assert j == al.wedderburn(z2_bundle).full_ideal()


class TestCollapseKernel:
    def test_z2_kernel_is_sign_block(self, z2_bundle):
        kernel = il.collapse_kernel(z2_bundle)
        assert len(kernel.blocks) == 1
        d = al.wedderburn(z2_bundle)
        block = d.blocks[next(iter(kernel.blocks))]
        # the surviving block is the trivial character, the killed one the sign
        assert np.allclose(np.abs(block.idempotent.coeffs), [0.5, 0.5])
        signs = block.idempotent.coeffs.real
        assert signs[0] * signs[1] < 0
        assert kernel.support() == il.obstruction_ideal(z2_bundle).support()

    def test_swap_and_fix(self, swap_and_fix):
        kernel = il.collapse_kernel(swap_and_fix)
        assert len(kernel.blocks) == 1
        assert kernel.is_purely_nondynamical()
        assert kernel.support() == frozenset(
            el for el in swap_and_fix.elements if el[0] == "c" or el[2] == "c"
        )

    def test_pair_faithful(self, pair3):
        assert il.collapse_kernel(pair3).is_zero

    def test_matrices_respect_convolution(self, swap_and_fix):
        rng = np.random.default_rng(21)
        f1 = al.random_element(swap_and_fix, rng)
        f2 = al.random_element(swap_and_fix, rng)
        lhs = il.collapse_matrices(swap_and_fix, f1 * f2)
        f1m = il.collapse_matrices(swap_and_fix, f1)
        f2m = il.collapse_matrices(swap_and_fix, f2)
        for got, a, b in zip(lhs, f1m, f2m):
            assert np.max(np.abs(got - a @ b)) <= 1e-9


class TestTriples:
    def test_z2_inventory(self, z2_bundle):
        triples = il.enumerate_triples(z2_bundle)
        assert len(triples) == 4
        degenerate = [t for t in triples if t.lower == t.upper]
        proper = [t for t in triples if t.lower != t.upper]
        assert len(degenerate) == 2 and len(proper) == 2
        for t in proper:
            assert t.lower == frozenset() and t.upper == z2_bundle.units
            assert len(t.quotient_ideal.blocks) == 1

    def test_swap_and_fix_inventory(self, swap_and_fix):
        triples = il.enumerate_triples(swap_and_fix)
        assert len(triples) == 8
        ab = units_by_point(swap_and_fix, "a", "b")
        c = units_by_point(swap_and_fix, "c")
        shapes = sorted(
            (sorted(p[0] for p in t.lower), sorted(p[0] for p in t.upper))
            for t in triples
        )
        assert shapes.count((["a", "b"], ["a", "b", "c"])) == 2
        assert shapes.count(([], ["c"])) == 2
        degenerate = [t for t in triples if t.lower == t.upper]
        assert {frozenset(t.lower) for t in degenerate} == {
            frozenset(), ab, c, swap_and_fix.units
        }

    def test_round_trips(self, swap_and_fix, z2_bundle, pair3):
        for g in (swap_and_fix, z2_bundle, pair3):
            d = al.wedderburn(g)
            triples = il.enumerate_triples(d)
            images = set()
            for t in triples:
                ideal = il.theta(d, t)
                images.add(ideal)
                assert il.theta_inverse(ideal) == t
            assert len(images) == len(d.all_ideals())
            for ideal in d.all_ideals():
                assert il.theta(d, il.theta_inverse(ideal)) == ideal

    def test_dynamical_edge_case(self, swap_and_fix):
        d = al.wedderburn(swap_and_fix)
        members = units_by_point(swap_and_fix, "a", "b")
        ideal = d.dynamical_ideal_of(members)
        triple = il.theta_inverse(ideal)
        assert triple.lower == triple.upper == members
        assert triple.quotient_ideal.is_zero
        assert il.theta(d, triple) == ideal

    def test_invalid_triple_with_diagonal(self, swap_and_fix):
        d = al.wedderburn(swap_and_fix)
        c = units_by_point(swap_and_fix, "c")
        sub, _ = d.restriction_decomposition(c)
        with pytest.raises(il.InvalidTripleError, match="diagonal"):
            il.theta(d, il.SandwichTriple(frozenset(), c, sub.full_ideal()))

    def test_invalid_triple_without_full_support(self, swap_and_fix, z2_bundle):
        union = gp.disjoint_union([z2_bundle, z2_bundle])
        d = al.wedderburn(union)
        sub, mapping = d.restriction_decomposition(union.units)
        one_orbit_block = next(iter(mapping))
        with pytest.raises(il.InvalidTripleError, match="full support"):
            il.theta(
                d, il.SandwichTriple(frozenset(), union.units, sub.ideal([one_orbit_block]))
            )

    def test_invalid_triple_zero_on_nonzero(self, z2_bundle):
        d = al.wedderburn(z2_bundle)
        sub, _ = d.restriction_decomposition(z2_bundle.units)
        with pytest.raises(il.InvalidTripleError, match="zero"):
            il.theta(d, il.SandwichTriple(frozenset(), z2_bundle.units, sub.zero_ideal()))

    def test_make_triple(self, z2_bundle):
        triple = il.make_triple(z2_bundle, frozenset(), z2_bundle.units, [0])
        assert il.theta(al.wedderburn(z2_bundle), triple).blocks == frozenset({0})


class TestExelWitness:
    def test_pair_arrow(self, pair2):
        f = al.delta(pair2, (2, 1))
        h = il.exel_witness(pair2, (1, 1), [(2, 1)], f)
        assert h.coefficient((1, 1)) == pytest.approx(1.0)
        assert (h * f * h).norm() <= 1e-9

    def test_point_outside_source(self, pair2):
        f = al.delta(pair2, (1, 2))
        h = il.exel_witness(pair2, (1, 1), [(1, 2)], f)
        assert (h * f * h).norm() <= 1e-9

    def test_swap_arrow(self, swap_and_fix):
        arrow = next(
            el for el in swap_and_fix.elements if el[0] == "b" and el[2] == "a"
        )
        x = next(u for u in swap_and_fix.unit_list if u[0] == "a")
        f = al.delta(swap_and_fix, arrow)
        h = il.exel_witness(swap_and_fix, x, [arrow], f)
        assert h.coefficient(x) == pytest.approx(1.0)
        assert (h * f * h).norm() <= 1e-9

    def test_witness_is_positive_contraction(self, swap_and_fix):
        arrow = next(
            el for el in swap_and_fix.elements if el[0] == "b" and el[2] == "a"
        )
        x = next(u for u in swap_and_fix.unit_list if u[0] == "a")
        h = il.exel_witness(swap_and_fix, x, [arrow], al.delta(swap_and_fix, arrow))
        assert h.adjoint().allclose(h)
        m = al.full_representation(swap_and_fix).matrix(h)
        eigenvalues = np.linalg.eigvalsh(m)
        assert eigenvalues.min() >= -1e-12 and eigenvalues.max() <= 1 + 1e-12

    def test_rejects_isotropy_overlap(self, swap_and_fix):
        iso = next(
            el for el in swap_and_fix.elements
            if el[0] == el[2] == "c" and el[1] != "r0"
        )
        x = next(u for u in swap_and_fix.unit_list if u[0] == "c")
        with pytest.raises(gp.GroupoidError, match="isotropy"):
            il.exel_witness(swap_and_fix, x, [iso], al.delta(swap_and_fix, iso))

    def test_rejects_non_bisection(self, swap_and_fix):
        a_to_b = next(el for el in swap_and_fix.elements if el[0] == "b" and el[2] == "a")
        a_iso = next(el for el in swap_and_fix.elements if el[0] == "a" and el[2] == "a" and el[1] == "r0")
        with pytest.raises(gp.GroupoidError, match="bisection"):
            il.exel_witness(
                swap_and_fix,
                next(u for u in swap_and_fix.unit_list if u[0] == "a"),
                [a_to_b, a_iso],
                al.delta(swap_and_fix, a_to_b),
            )

    def test_rejects_function_off_bisection(self, pair2):
        f = al.delta(pair2, (1, 2)) + al.delta(pair2, (2, 1))
        with pytest.raises(gp.GroupoidError, match="vanish"):
            il.exel_witness(pair2, (1, 1), [(2, 1)], f)


class TestVerify:
    def test_worked_instances(self, z2_bundle, swap_and_fix, pair3):
        for g in (z2_bundle, swap_and_fix, pair3):
            report = il.verify(g)
            assert report.all_passed
            assert report.counts == expected_counts(g)
            assert {c.name for c in report.checks} == {
                "sandwich", "bijection", "obstruction", "lattice", "support",
                "effective",
            }

    def test_empty_groupoid(self):
        report = il.verify(gp.empty_groupoid())
        assert report.all_passed
        assert report.counts["ideals"] == 1

    def test_effective_uniqueness_on_pairs(self, pair3):
        report = il.verify(pair3)
        assert report.check("effective").details["effective"] is True

    def test_report_dict_roundtrips(self, swap_and_fix):
        report = il.verify(swap_and_fix)
        d = report.to_dict()
        assert d["all_passed"] is True
        assert d["counts"]["ideals"] == 8
        assert len(d["conventions"]) == 3
        assert d["parameters"]["seed"] == al.DEFAULT_SEED

    def test_cap(self):
        g = gp.unit_space_groupoid(tuple(range(21)))
        with pytest.raises(CapExceededError):
            il.verify(g)

    def test_random_sample(self):
        rng = random.Random(7)
        done = 0
        while done < 8:
            g = random_groupoid(rng, 32)
            if al.wedderburn(g).block_count > 10:
                continue
            report = il.verify(g)
            assert report.all_passed, [
                (c.name, c.witnesses) for c in report.checks if not c.passed
            ]
            done += 1


class TestAgainstBruteForceSubspaces:
    """Cross-validate the block-subset ideal calculus against honest
    subspace computations on the worked instances."""

    def test_every_ideal_subspace_closed(self, swap_and_fix):
        d = al.wedderburn(swap_and_fix)
        rep = al.full_representation(swap_and_fix)
        rng = np.random.default_rng(23)
        for ideal in d.all_ideals():
            basis = [
                d.blocks[i].coeff_basis[:, k]
                for i in sorted(ideal.blocks)
                for k in range(d.blocks[i].coeff_basis.shape[1])
            ]
            for _ in range(5):
                if not basis:
                    break
                coeffs = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
                member = al.AlgebraElement(
                    swap_and_fix, sum(c * b for c, b in zip(coeffs, basis))
                )
                a = al.random_element(swap_and_fix, rng)
                product = member * a
                generated = d.ideal_generated_by(product)
                assert generated.blocks <= ideal.blocks

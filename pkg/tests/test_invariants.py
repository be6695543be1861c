"""Filling invariants: Euler characteristic, planar forms, signatures,
boundary homology, Chern data, and the e + sigma comparator."""

import pytest

from steincalc.document import tau_boundary_document
from steincalc.errors import BaselineUnavailableError, IncomparableSigmaError, UnsupportedInputError
from steincalc.invariants import (
    SigmaLedger,
    arc_relation_vector,
    esig_check,
    euler_characteristic,
    filling_invariants,
    h1_boundary,
    chern_pd,
    planar_intersection_form,
    sigma,
)
from steincalc.surfaces import Curve, Surface, convex_curve, standard_arc
from steincalc.words import SubstitutionRecord, Twist, Word, word_of


def boundary_multitwist(g, b):
    doc = tau_boundary_document(g, b)
    return doc.words["tau_del"]


class TestEuler:
    def test_empty_word_on_annulus(self):
        assert euler_characteristic(Word(Surface(0, 2), ())) == 0

    def test_boundary_multitwist_four_holes(self):
        assert euler_characteristic(boundary_multitwist(0, 4)) == 2

    def test_lantern_right_side(self):
        s = Surface(0, 4)
        w = word_of(s, [
            convex_curve(s, "a12", {2, 3}),
            convex_curve(s, "a23", {3, 4}),
            convex_curve(s, "a13", {2, 4}),
        ])
        assert euler_characteristic(w) == 1


class TestPlanarForm:
    @pytest.mark.parametrize("b", range(2, 11))
    def test_boundary_multitwist_form(self, b):
        form = planar_intersection_form(boundary_multitwist(0, b))
        assert form.b2 == 1
        assert form.sigma == -1
        assert form.invariant_factors == (b,)

    def test_lantern_right_side_trivial_kernel(self):
        s = Surface(0, 4)
        w = word_of(s, [
            convex_curve(s, "a12", {2, 3}),
            convex_curve(s, "a23", {3, 4}),
            convex_curve(s, "a13", {2, 4}),
        ])
        form = planar_intersection_form(w)
        assert form.b2 == 0 and form.sigma == 0

    def test_empty_word(self):
        form = planar_intersection_form(Word(Surface(0, 3), ()))
        assert form.b2 == 0 and form.sigma == 0

    def test_sigma_bounded_by_b2(self):
        import random

        rng = random.Random(3)
        s = Surface(0, 5)
        pool = [convex_curve(s, f"c{i}", holes) for i, holes in enumerate(
            [{2}, {3}, {4}, {5}, {2, 3}, {3, 4}, {4, 5}, {2, 3, 4}, {2, 3, 4, 5}]
        )]
        for _ in range(30):
            w = word_of(s, [rng.choice(pool) for _ in range(rng.randint(0, 12))])
            form = planar_intersection_form(w)
            assert abs(form.sigma) <= form.b2

    def test_missing_hole_set_rejected(self):
        s = Surface(0, 3)
        bare = Curve("bare", s.d_class(2))
        with pytest.raises(UnsupportedInputError):
            planar_intersection_form(word_of(s, [bare]))

    def test_orientation_invariance(self):
        # the outer-parallel curve stores the negated class; swapping it for
        # the unflagged curve with the same hole set negates one column of
        # the boundary map and must not change any reported invariant
        s = Surface(0, 4)
        flagged = convex_curve(s, "out", {2, 3, 4}, outer=True)
        unflagged = convex_curve(s, "ring", {2, 3, 4})
        rest = [convex_curve(s, "d2", {2}), convex_curve(s, "d3", {3}), convex_curve(s, "d4", {4})]
        form1 = planar_intersection_form(word_of(s, [flagged] + rest))
        form2 = planar_intersection_form(word_of(s, [unflagged] + rest))
        assert form1.sigma == form2.sigma == -1
        assert form1.invariant_factors == form2.invariant_factors == (4,)
        assert form1.b2 == form2.b2 == 1

    def test_column_permutation_invariance(self):
        s = Surface(0, 5)
        curves = [
            convex_curve(s, "x", {2, 3}),
            convex_curve(s, "y", {3, 4}),
            convex_curve(s, "z", {2, 3, 4}),
            convex_curve(s, "w", {5}),
        ]
        base = planar_intersection_form(word_of(s, curves))
        import itertools

        for perm in itertools.permutations(curves):
            form = planar_intersection_form(word_of(s, list(perm)))
            assert form.sigma == base.sigma
            assert form.invariant_factors == base.invariant_factors
            assert form.b2 == base.b2


class TestSigma:
    def test_exact_on_planar(self):
        value = sigma(boundary_multitwist(0, 6))
        assert value.mode == "exact" and value.value == -1

    def test_relative_with_ledger(self):
        w = boundary_multitwist(1, 1)
        ledger = SigmaLedger("tau_del", -1, (
            SubstitutionRecord("chain-2", -7, 11, (), ()),
        ))
        value = sigma(w, ledger)
        assert value.mode == "relative"
        assert value.value == -8
        assert value.offset == -7

    def test_unknown_delta_gives_unknown(self):
        w = boundary_multitwist(2, 1)
        ledger = SigmaLedger("tau_del", -1, (
            SubstitutionRecord("chain-4", None, 39, (), ()),
        ))
        assert sigma(w, ledger).mode == "unknown"

    def test_no_baseline_raises(self):
        with pytest.raises(BaselineUnavailableError):
            sigma(boundary_multitwist(1, 2))

    def test_no_substitutions_returns_baseline(self):
        value = sigma(boundary_multitwist(1, 2), SigmaLedger("tau_del", -1))
        assert value.value == -1 and value.offset == 0


class TestH1Boundary:
    @pytest.mark.parametrize("g", range(0, 4))
    @pytest.mark.parametrize("b", range(2, 13))
    def test_boundary_multitwist_family(self, g, b):
        h1 = h1_boundary(boundary_multitwist(g, b))
        assert h1.invariant_factors == (b,)
        assert h1.free_rank == 2 * g

    def test_empty_word_gives_free_group(self):
        h1 = h1_boundary(Word(Surface(2, 3), ()))
        assert h1.invariant_factors == ()
        assert h1.free_rank == 6

    @pytest.mark.parametrize("k", [1, 2, 5, 12])
    def test_lens_space_family(self, k):
        s = Surface(0, 2)
        d2 = convex_curve(s, "d2", {2})
        h1 = h1_boundary(word_of(s, [d2] * k))
        if k == 1:
            assert h1.invariant_factors == () and h1.free_rank == 0
        else:
            assert h1.invariant_factors == (k,) and h1.free_rank == 0

    def test_null_class_twist_is_invisible(self):
        s = Surface(1, 2)
        base = boundary_multitwist(1, 2)
        null = Curve("null", s.zero_class())
        extended = Word(s, base.twists + (Twist(null, 1),))
        assert h1_boundary(extended).invariant_factors == h1_boundary(base).invariant_factors
        assert h1_boundary(extended).free_rank == h1_boundary(base).free_rank

    def test_monodromy_action_relations_are_included(self):
        # a single twist about a nonseparating curve on the closed-up torus side
        s = Surface(1, 1)
        a = Curve("a", s.a_class(1))
        h1 = h1_boundary(word_of(s, [a]))
        # relation: (phi - id) b = -a kills a; result Z
        assert h1.invariant_factors == ()
        assert h1.free_rank == 1

    def test_arc_relation_vector_boundary_multitwist(self):
        w = boundary_multitwist(0, 4)
        vec = arc_relation_vector(w, standard_arc(w.surface, 2))
        assert vec == (2, 1, 1)  # d_2 + (d_2 + d_3 + d_4)

    def test_arc_override_merges_with_standard_family(self):
        from steincalc.invariants import arc_family
        from steincalc.surfaces import Arc

        s = Surface(0, 3)
        override = Arc(s, 2, (1, 1))  # arc crossing both inner holes
        family = arc_family(s, [override])
        assert family[0] == override
        assert family[1] == standard_arc(s, 3)
        # overriding with the standard vector changes nothing
        same = h1_boundary(boundary_multitwist(0, 3), arcs=arc_family(s, [standard_arc(s, 2)]))
        assert same.invariant_factors == (3,)


class TestChern:
    def test_two_holes_positive_genus_vanishes(self):
        for g in (1, 2, 3, 4):
            c1 = chern_pd(boundary_multitwist(g, 2))
            assert c1.is_zero

    def test_genus_one_vanishes(self):
        for b in range(2, 9):
            c1 = chern_pd(boundary_multitwist(1, b))
            assert c1.is_zero

    def test_higher_genus_torsion_class(self):
        for g in (2, 3, 4):
            for b in range(3, 9):
                w = boundary_multitwist(g, b)
                h1 = h1_boundary(w)
                c1 = chern_pd(w, h1=h1)
                expected_zero = (2 * g - 2) % b == 0
                assert c1.is_zero == expected_zero, (g, b)
                assert c1.order is not None and b % c1.order == 0
                # the class equals (2g-2) d_2 in the quotient
                target = [0] * w.surface.rank
                target[2 * g] = 2 * g - 2
                assert h1.is_zero([x - y for x, y in zip(c1.vector, target)])

    def test_rotations_required_off_the_multitwist(self):
        s = Surface(1, 1)
        a = Curve("a", s.a_class(1))
        with pytest.raises(UnsupportedInputError):
            chern_pd(word_of(s, [a]))

    def test_explicit_rotations_and_meridians(self):
        s = Surface(0, 2)
        d2 = convex_curve(s, "d2", {2})
        w = word_of(s, [d2, d2])
        c1 = chern_pd(w, rotations=[1, 1], mu_map=[[1], [1]])
        assert c1.vector == (2,)
        assert c1.is_zero  # H1 = Z/2


class TestEsigCheck:
    def test_lantern_pair_is_equal(self):
        inv1 = filling_invariants(boundary_multitwist(0, 4))
        s = Surface(0, 4)
        right = word_of(s, [
            convex_curve(s, "a12", {2, 3}),
            convex_curve(s, "a23", {3, 4}),
            convex_curve(s, "a13", {2, 4}),
        ])
        inv2 = filling_invariants(right)
        report = esig_check(inv1, inv2)
        assert report.equal and report.esig1 == 1

    def test_ten_twist_baseline_pair_agrees(self):
        # (e, sigma) = (9, -8) against (1, 0): the pairs differ but the sums
        # agree (1 = 1), hence congruent mod 4 as well.
        w1 = boundary_multitwist(1, 1)
        inv1 = filling_invariants(w1, ledger=SigmaLedger("base", -8 + 9 - euler_characteristic(w1)))
        inv2 = filling_invariants(w1, ledger=SigmaLedger("base", 1 - euler_characteristic(w1)))
        report = esig_check(inv1, inv2)
        assert report.esig1 == 1 and report.esig2 == 1
        assert report.equal and report.congruent_mod4

    def test_congruent_but_not_equal(self):
        w1 = boundary_multitwist(1, 1)
        inv1 = filling_invariants(w1, ledger=SigmaLedger("base", 1 - euler_characteristic(w1)))
        inv2 = filling_invariants(w1, ledger=SigmaLedger("base", 5 - euler_characteristic(w1)))
        report = esig_check(inv1, inv2)
        assert report.esig1 == 1 and report.esig2 == 5
        assert not report.equal and report.congruent_mod4

    def test_identical_inputs(self):
        inv = filling_invariants(boundary_multitwist(0, 5))
        report = esig_check(inv, inv)
        assert report.equal

    def test_incomparable_modes(self):
        inv1 = filling_invariants(boundary_multitwist(0, 4))
        inv2 = filling_invariants(boundary_multitwist(1, 2), ledger=SigmaLedger("tau_del", -1))
        with pytest.raises(IncomparableSigmaError):
            esig_check(inv1, inv2)

    def test_alarm_needs_assertion(self):
        inv1 = filling_invariants(boundary_multitwist(0, 4))
        s = Surface(0, 4)
        other = filling_invariants(word_of(s, [convex_curve(s, "d2", {2})]))
        relaxed = esig_check(inv1, other)
        assert not relaxed.alarm
        asserted = esig_check(inv1, other, same_monodromy_asserted=True)
        assert asserted.alarm


class TestFillingInvariants:
    def test_planar_report(self):
        inv = filling_invariants(boundary_multitwist(0, 4))
        assert inv.euler == 2
        assert inv.sigma.value == -1
        assert inv.b2 == 1
        assert inv.q_invariant_factors == (4,)
        assert inv.h1.report() == [[4], 0]
        assert inv.esig == 1 and inv.esig_mod4 == 1

    def test_nonplanar_without_baseline(self):
        inv = filling_invariants(boundary_multitwist(2, 3))
        assert inv.sigma.mode == "unknown"
        assert inv.esig is None
        assert inv.h1.report() == [[3], 4]

"""Relator database: ledger values, configurations, composition, bounding table."""

import pytest

from steincalc.relators import (
    bounding_case,
    braid_relator,
    builtin_entries,
    chain,
    ChainConfig,
    compose_relators,
    genus_boundary_relator,
    lantern,
    non_standard_relator,
    standard_braid,
    standard_chain_config,
    standard_lantern,
)
from steincalc.surfaces import Curve, Surface, convex_curve
from steincalc.words import verify_relator


class TestLantern:
    def test_ledger_values(self):
        entry = standard_lantern()
        assert entry.relator.sigma_delta == 1
        assert entry.relator.euler_delta == -1
        assert entry.obstruction == 0
        assert entry.relator.allowable

    def test_embedded_in_larger_planar_surface(self):
        s = Surface(0, 5)
        entry = lantern(
            convex_curve(s, "a1", {2}),
            convex_curve(s, "a2", {3}),
            convex_curve(s, "a3", {4}),
            convex_curve(s, "a4", {2, 3, 4}),
            convex_curve(s, "a12", {2, 3}),
            convex_curve(s, "a23", {3, 4}),
            convex_curve(s, "a13", {2, 4}),
        )
        assert entry.relator.sigma_delta == 1
        assert entry.relator.euler_delta == -1
        assert verify_relator(entry.relator).necessary_conditions_hold

    def test_homology_mismatch_rejected(self):
        s = Surface(0, 5)
        with pytest.raises(ValueError):
            lantern(
                convex_curve(s, "a1", {5}),  # wrong hole: sum mismatch
                convex_curve(s, "a2", {3}),
                convex_curve(s, "a3", {4}),
                convex_curve(s, "a4", {2, 3, 4}),
                convex_curve(s, "a12", {2, 3}),
                convex_curve(s, "a23", {3, 4}),
                convex_curve(s, "a13", {2, 4}),
            )


class TestChain:
    @pytest.mark.parametrize("n,expected_euler", [(1, 0), (2, 11), (3, 10), (4, 39), (5, 28), (6, 83)])
    def test_exponent_formula(self, n, expected_euler):
        entry = chain(n)
        assert entry.relator.euler_delta == expected_euler

    def test_two_chain_values(self):
        entry = chain(2)
        assert entry.relator.sigma_delta == -7
        assert entry.obstruction == 4
        assert not entry.relator.allowable  # the boundary curve bounds, class zero
        assert entry.obstruction_asserted

    def test_three_chain_values(self):
        entry = chain(3)
        assert entry.relator.sigma_delta == -6
        assert entry.obstruction == 4
        assert entry.relator.allowable  # both boundary classes are nonzero here

    def test_longer_chains_have_no_sigma_delta(self):
        for n in (4, 5, 6):
            entry = chain(n)
            assert entry.relator.sigma_delta is None
            assert entry.obstruction is None

    @pytest.mark.parametrize("n", range(1, 7))
    def test_homology_identity(self, n):
        report = verify_relator(chain(n).relator)
        assert report.check("homology_identity").passed

    def test_malformed_config_rejected(self):
        s = Surface(1, 1)
        with pytest.raises(ValueError):
            ChainConfig(
                surface=s,
                curves=(Curve("x", s.a_class(1)), Curve("y", s.a_class(1))),  # pair 0, want 1
                boundary=(Curve("delta", s.zero_class()),),
            )

    def test_wrong_boundary_count_rejected(self):
        config = standard_chain_config(2)
        with pytest.raises(ValueError):
            ChainConfig(surface=config.surface, curves=config.curves, boundary=())


class TestBraid:
    def test_ledger_values(self):
        entry = standard_braid()
        assert entry.relator.sigma_delta == 0
        assert entry.relator.euler_delta == 0
        assert verify_relator(entry.relator).necessary_conditions_hold

    def test_wrong_image_rejected(self):
        s = Surface(1, 1)
        alpha, beta = Curve("a", s.a_class(1)), Curve("b", s.b_class(1))
        with pytest.raises(ValueError):
            braid_relator(alpha, beta, Curve("g", s.b_class(1)))


class TestNonStandard:
    def test_ledger_matches_two_chain(self):
        entry = non_standard_relator()
        assert entry.relator.sigma_delta == -7
        assert entry.relator.euler_delta == 11
        assert entry.obstruction == 4
        assert len(entry.relator.right) - len(entry.relator.left) == 11

    def test_homology_identity_on_rank_four(self):
        entry = non_standard_relator()
        assert entry.relator.left.surface.rank == 4
        assert verify_relator(entry.relator).check("homology_identity").passed

    def test_decomposition_sums(self):
        entry = non_standard_relator()
        lantern_entry = standard_lantern()
        parts = {"lantern": lantern_entry.relator, "chain-2": chain(2).relator}
        sigma = sum(m * parts[name].sigma_delta for name, m in entry.decomposition)
        euler = sum(m * parts[name].euler_delta for name, m in entry.decomposition)
        assert sigma == entry.relator.sigma_delta == -7
        assert euler == entry.relator.euler_delta == 11

    def test_allowable(self):
        assert non_standard_relator().relator.allowable


class TestCompose:
    def test_three_chain_from_lantern_and_two_chain(self):
        composed = compose_relators([standard_lantern(), chain(2)])
        assert composed.relator.sigma_delta == -6
        assert composed.relator.euler_delta == 10
        assert composed.obstruction == 4

    def test_two_lanterns(self):
        composed = compose_relators([standard_lantern(), standard_lantern()])
        assert composed.relator.sigma_delta == 2
        assert composed.relator.euler_delta == -2
        assert composed.obstruction == 0

    def test_empty_composition(self):
        composed = compose_relators([])
        assert composed.relator.sigma_delta == 0
        assert composed.relator.euler_delta == 0

    def test_unknown_part_poisons_sigma(self):
        composed = compose_relators([standard_lantern(), chain(4)])
        assert composed.relator.sigma_delta is None
        assert composed.relator.euler_delta == -1 + 39

    def test_ledger_associativity(self):
        a, b, c = standard_lantern(), chain(2), chain(3)
        left = compose_relators([compose_relators([a, b]), c])
        right = compose_relators([a, compose_relators([b, c])])
        flat = compose_relators([a, b, c])
        for entry in (left, right):
            assert entry.relator.sigma_delta == flat.relator.sigma_delta
            assert entry.relator.euler_delta == flat.relator.euler_delta
            assert entry.obstruction == flat.obstruction

    def test_inverse_negates_ledger(self):
        inv = standard_lantern().relator.inverse()
        assert inv.sigma_delta == -1
        assert inv.euler_delta == 1


class TestGenusBoundary:
    def test_genus_one_known_range(self):
        for b in range(2, 10):
            entry = genus_boundary_relator(1, b)
            assert entry is not None
            assert entry.obstruction == 4
            assert entry.relator.sigma_delta is None and entry.relator.euler_delta is None
            assert len(entry.left_word) == b

    def test_genus_one_beyond_nine_absent(self):
        assert genus_boundary_relator(1, 10) is None
        assert "no such relator" in bounding_case(1, 10).note

    def test_genus_two_flagged_nonzero(self):
        entry = genus_boundary_relator(2, 5)
        assert entry is not None
        assert entry.obstruction is None
        assert entry.obstruction_nonzero

    def test_genus_two_unknown_zone(self):
        assert genus_boundary_relator(2, 10) is None
        assert bounding_case(2, 10).verdict == "unknown"

    def test_case_table(self):
        assert bounding_case(0, 3).verdict == "none"
        assert bounding_case(3, 1).verdict == "obstructs"
        assert bounding_case(3, 2).verdict == "obstructs"
        assert bounding_case(3, 3).verdict == "unknown"
        assert bounding_case(2, 13).verdict == "no-relator"


class TestBuiltins:
    def test_every_builtin_passes_necessary_conditions(self):
        for entry in builtin_entries():
            report = verify_relator(entry.relator)
            assert report.necessary_conditions_hold, entry.name

    def test_known_obstructions_vanish_mod_four(self):
        for entry in builtin_entries():
            if entry.obstruction is not None:
                assert entry.obstruction % 4 == 0, entry.name

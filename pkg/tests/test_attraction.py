"""
Tests for cylinder covers of minimal centers of attraction.

Test Philosophy:
- Periodic points give covers readable by hand: (01)^∞ visits 010 and 101
  each half of the time, every other word never
- The indicator z of the R-blocks separates the two Følner sequences:
      along F (R-blocks) the orbit sits in 1-runs  -> cover {111}
      along H (G-blocks) it sits in 0-runs         -> cover {000}
- Long scans of the mirror point carry the `slow` marker

Run with: pytest tests/test_attraction.py -v
"""

import pytest
from fractions import Fraction

from orbitdensity.attraction.cover import (
    coa_cover,
    cover_in_orbit,
    cover_of_words,
    cover_shift_consistent,
    covers_equal,
    neighborhood_thickness,
    refinement_violations,
    s_generic_probe,
)
from orbitdensity.folner.sequences import (
    example53_F,
    example53_H,
    example53_support,
    standard_folner,
    translate,
)
from orbitdensity.shift.points import (
    make_example51_point,
    make_indicator,
    make_periodic,
    mutate_finitely,
    shift_point,
)


# ========================== FIXTURES ==========================

@pytest.fixture
def alternating():
    """(01)^∞: x_g = g mod 2"""
    return make_periodic("01")


@pytest.fixture
def z():
    return make_indicator(example53_support())


@pytest.fixture(scope="module")
def mirror_cover():
    """k = 2 cover of the mirror point along [-n, n] to N = 5040 at tol 1/20: {00000, 11111}"""
    return coa_cover(make_example51_point(), standard_folner(), 2, 5040, Fraction(1, 20))


@pytest.fixture
def alternating_cover(alternating):
    """k = 1 cover of (01)^∞ along [-n, n]: 010 and 101, each with ratio near 1/2"""
    return coa_cover(alternating, standard_folner(), 1, 100, "0.3")


# ========================== COVERS ==========================

class TestCover:
    def test_periodic_cover(self, alternating_cover):
        assert alternating_cover.kept_words == ("010", "101")
        assert len(alternating_cover.scores) == 8
        assert alternating_cover.entry("000") is None
        assert alternating_cover.entry("010").lower > Fraction(3, 10)

    def test_scores_cover_every_binary_word(self, alternating_cover):
        assert [str(e.word) for e in alternating_cover.scores][:3] == ["000", "001", "010"]
        zero = next(e for e in alternating_cover.scores if str(e.word) == "000")
        assert zero.upper == 0 and zero.lower == 0

    def test_union_sojourn_is_full(self, alternating_cover):
        assert alternating_cover.union_sojourn.density == 1

    def test_record(self, alternating_cover):
        record = alternating_cover.to_record()
        assert record["k"] == 1
        assert record["tol"] == "3/10"
        assert [e["word"] for e in record["kept"]] == ["010", "101"]

    @pytest.mark.parametrize("k, tol", [(-1, "0.1"), (1, "0"), (1, "1")])
    def test_rejects_bad_arguments(self, alternating, k, tol):
        with pytest.raises(ValueError):
            coa_cover(alternating, standard_folner(), k, 10, tol)

    def test_thread_count_does_not_change_result(self, z):
        one = coa_cover(z, example53_F(), 2, 60, "0.3", threads=1)
        four = coa_cover(z, example53_F(), 2, 60, "0.3", threads=4)
        assert one == four


class TestTwoFolnerSequences:
    @pytest.mark.parametrize("k, ones, zeros", [(1, "111", "000"), (2, "11111", "00000")])
    def test_covers_differ(self, z, k, ones, zeros):
        along_f = coa_cover(z, example53_F(), k, 60, Fraction(3, 10))
        along_h = coa_cover(z, example53_H(), k, 60, Fraction(3, 10))
        assert along_f.kept_words == (ones,)
        assert along_h.kept_words == (zeros,)
        assert not covers_equal(along_f, along_h)

    def test_neighborhood_thickness(self, z):
        """Interiors of R_13, R_21, R_30 have lengths 12, 20, 29"""
        cover = coa_cover(z, example53_F(), 1, 60, Fraction(3, 10))
        assert neighborhood_thickness(z, cover, [200, 500, 1000]) == [(200, 12), (500, 20), (1000, 29)]


# ========================== STRUCTURAL CHECKS ==========================

class TestChecks:
    def test_shift_consistency(self, alternating, alternating_cover):
        assert cover_shift_consistent(alternating_cover, alternating, 100) == []

    def test_shift_consistency_reports_orphans(self, alternating, alternating_cover):
        """Without 101 the only follower of 010 is gone"""
        assert cover_shift_consistent(alternating_cover.without("101"), alternating, 100) == ["010"]

    def test_in_orbit(self, alternating, alternating_cover):
        assert cover_in_orbit(alternating_cover, alternating, 100)
        assert not cover_in_orbit(cover_of_words(["111"], 1), alternating, 100)

    def test_refinement(self, alternating):
        fine = coa_cover(alternating, standard_folner(), 2, 100, "0.3")
        coarse = coa_cover(alternating, standard_folner(), 1, 100, "0.3")
        assert fine.kept_words == ("01010", "10101")
        assert refinement_violations(fine, coarse) == []
        assert refinement_violations(fine, coarse.without("101")) == ["01010"]

    def test_refinement_needs_consecutive_resolutions(self, alternating_cover):
        with pytest.raises(ValueError):
            refinement_violations(alternating_cover, alternating_cover)

    def test_covers_equal_needs_same_resolution(self, alternating_cover):
        with pytest.raises(ValueError):
            covers_equal(alternating_cover, cover_of_words(["01010"], 2))

    def test_cover_of_words_checks_lengths(self):
        with pytest.raises(ValueError):
            cover_of_words(["01"], 1)

    def test_periodic_point_is_generic(self, alternating):
        """Central word 101 is kept"""
        assert s_generic_probe(alternating, standard_folner(), 1, 100, "0.3")

    @pytest.mark.parametrize("g", [-7, 3, 12])
    def test_translated_cover_identity(self, z, g):
        """σ^g z along F - g visits each cylinder exactly when z does along F"""
        F = example53_F()
        base = coa_cover(z, F, 1, 40, "0.3")
        moved = coa_cover(shift_point(z, g), translate(F, -g), 1, 40, "0.3")
        assert moved.scores == base.scores
        assert moved.kept_words == base.kept_words

    def test_finite_mutation_keeps_cover(self, z):
        """Headline blocks R_15 .. R_30 start at 240, far from the patched coordinates"""
        F = example53_F()
        mutated = mutate_finitely(z, [(-5, 1), (0, 0), (4, 1), (9, 1)])
        assert coa_cover(mutated, F, 1, 60, "0.3").scores == coa_cover(z, F, 1, 60, "0.3").scores

    def test_tight_tolerance_is_not_shift_stable_for_z(self, z):
        """At tol 1/20 and N = 60 the boundary words of the R-blocks still clear the bar"""
        F = example53_F()
        base = coa_cover(z, F, 1, 60, Fraction(1, 20))
        assert base.kept_words == ("011", "110", "111")
        assert coa_cover(shift_point(z, 1), F, 1, 60, Fraction(1, 20)).kept_words == ("100", "110", "111")
        assert coa_cover(shift_point(z, -2), F, 1, 60, Fraction(1, 20)).kept_words == ("000", "001", "011", "111")

    @pytest.mark.parametrize("g", [-3, -1, 2, 3])
    def test_point_shift_keeps_cover(self, z, g):
        """Boundary words of a shifted R-block score at most 1/16 on the headline window"""
        F = example53_F()
        assert coa_cover(shift_point(z, g), F, 1, 60, "0.3").kept_words == ("111",)


# ========================== MIRROR POINT ==========================

@pytest.mark.slow
class TestMirrorPoint:
    def test_cover_is_two_fixed_points(self):
        x = make_example51_point()
        cover = coa_cover(x, standard_folner(), 2, 5040, Fraction(1, 20))
        assert cover.kept_words == ("00000", "11111")
        assert cover.union_sojourn.headline_lower >= Fraction(9, 10)
        assert cover_shift_consistent(cover, x, 5040) == []

    @pytest.mark.parametrize("g", [-3, -2, -1, 1, 2, 3])
    def test_point_shift_keeps_cover(self, mirror_cover, g):
        x = make_example51_point()
        moved = coa_cover(shift_point(x, g), standard_folner(), 2, 5040, Fraction(1, 20))
        assert covers_equal(moved, mirror_cover)

    def test_finite_mutation_keeps_cover(self, mirror_cover):
        mutated = mutate_finitely(make_example51_point(), [(-5, 1), (0, 0), (4, 1), (9, 1)])
        assert covers_equal(coa_cover(mutated, standard_folner(), 2, 5040, Fraction(1, 20)), mirror_cover)

    def test_point_outside_its_own_center(self):
        """Central word 001 has density 0 along [-n, n]"""
        assert not s_generic_probe(make_example51_point(), standard_folner(), 1, 720, Fraction(1, 10))

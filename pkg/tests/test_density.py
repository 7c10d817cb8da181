"""
Tests for Følner ratios, density reports and sojourn times.

Test Philosophy:
- Ratios are exact fractions counted by hand on small blocks
- Along F_n = [-n, n] the evens give (n+1)/(2n+1) for even n and n/(2n+1)
  for odd n, so the headline window [100, 200] has
      upper = 101/201 (n = 100), lower = 99/199 (n = 199)
- Density laws checked with hypothesis

Run with: pytest tests/test_density.py -v
"""

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from orbitdensity.density.report import (
    DensityReport,
    achieving_subsequence,
    build_report,
    count_ratio,
    density_report,
    ratios_frame,
)
from orbitdensity.density.visits import region_visit_set, sojourn, visit_set
from orbitdensity.folner.sequences import (
    example53_F,
    example53_support,
    standard_folner,
    translate,
)
from orbitdensity.sets.expressions import Complement, FiniteSet, Progression, integers, naturals
from orbitdensity.shift.points import Cylinder, Word, make_indicator, make_periodic


# ========================== FIXTURES ==========================

@pytest.fixture
def standard():
    return standard_folner()


@pytest.fixture
def evens():
    return Progression(2)


@pytest.fixture
def z():
    """Indicator of the R-blocks and their mirrors"""
    return make_indicator(example53_support())


# ========================== RATIOS ==========================

class TestRatios:
    def test_count_ratio(self, evens, standard):
        """F_4 = [-4, 4] holds 5 evens out of 9"""
        assert count_ratio(evens, standard, 4) == Fraction(5, 9)

    def test_report_headline(self, evens, standard):
        report = density_report(evens, standard, 200)
        assert report.headline_window == (100, 200)
        assert report.headline_upper == Fraction(101, 201)
        assert report.headline_lower == Fraction(99, 199)
        assert report.density is None
        assert report.ratio(1) == Fraction(1, 3)

    def test_envelope_grid(self, evens, standard):
        report = density_report(evens, standard, 200)
        assert [m for m, _, _ in report.envelope] == [0, 50, 100, 150]
        assert report.envelope[0][1] == 1

    def test_full_set_has_density_one(self, standard):
        report = density_report(integers(), standard, 20)
        assert report.density == 1
        assert all(r == 1 for _, r in report.ratios)

    def test_headline_fraction(self, evens, standard):
        """Last quarter of [0, 200] starts at 150"""
        report = density_report(evens, standard, 200, Fraction(1, 4))
        assert report.headline_window == (150, 200)
        assert report.headline_upper == Fraction(151, 301)

    def test_rejects_bad_arguments(self, evens, standard):
        with pytest.raises(ValueError):
            density_report(evens, standard, 0)
        with pytest.raises(ValueError):
            density_report(evens, standard, 10, Fraction(0))
        with pytest.raises(ValueError):
            build_report([Fraction(1)])

    def test_record_round_trip(self, evens, standard):
        report = density_report(evens, standard, 40)
        record = report.to_record()
        assert record["headline_upper"] == "21/41"
        assert DensityReport.from_record(record) == report

    def test_ratios_frame(self, evens, standard):
        df = ratios_frame(density_report(evens, standard, 10))
        assert df.columns == ["n", "ratio", "ratio_approx"]
        assert df.row(1) == (1, "1/3", "0.333333")

    def test_mirrored_blocks(self):
        """F_3 = -R_1 = [-3, -2]: no naturals; F_4 = R_2 = [6, 8]: all"""
        report = density_report(naturals(), example53_F(), 5)
        assert [r for _, r in report.ratios] == [1, 1, 1, 0, 1, 0]


# ========================== ACHIEVING SUBSEQUENCES ==========================

class TestAchievingSubsequence:
    def test_evens_within_tolerance(self, evens, standard):
        """upper = 26/51 on [25, 50]; threshold 209/510 drops only n = 1"""
        assert achieving_subsequence(evens, standard, 50, Fraction(1, 10)) == [0] + list(range(2, 51))

    def test_naturals_along_r_sequence(self):
        """Ratio 1 on every R_k and on -R_0 = {0}, ratio 0 on -R_k for k >= 1"""
        assert achieving_subsequence(naturals(), example53_F(), 41, 0) == [0, 1] + list(range(2, 41, 2))

    def test_negative_eps_raises(self, evens, standard):
        with pytest.raises(ValueError):
            achieving_subsequence(evens, standard, 10, Fraction(-1, 10))


# ========================== VISITS & SOJOURN ==========================

class TestVisits:
    def test_visit_set(self):
        """(01)^∞ carries 010 around g exactly for odd g"""
        x = make_periodic("01")
        visits = visit_set(x, Cylinder(Word.parse("010"), -1))
        assert [g for g in range(-3, 4) if g in visits] == [-3, -1, 1, 3]
        assert visits.mask(-3, 3).tolist() == [True, False, True, False, True, False, True]

    def test_region_needs_cylinders(self, z):
        with pytest.raises(ValueError):
            region_visit_set(z, [])

    def test_sojourn_of_z_along_r_sequence(self, z):
        """Every F_n lies inside the support of z"""
        report = sojourn(z, [Cylinder(Word((1,)), 0)], example53_F(), 40)
        assert all(r == 1 for _, r in report.ratios)
        assert report.density == 1

    def test_sojourn_in_two_cylinders(self, standard):
        x = make_periodic("01")
        region = [Cylinder(Word.parse("0"), 0), Cylinder(Word.parse("1"), 0)]
        assert sojourn(x, region, standard, 30).density == 1


# ========================== DENSITY LAWS ==========================

residues = st.builds(Progression, st.integers(1, 6), st.integers(0, 5))
finite = st.builds(FiniteSet, st.lists(st.integers(-40, 40), max_size=10))
small_sets = st.one_of(residues, finite)


@settings(max_examples=40, deadline=None)
@given(small_sets, st.integers(-20, 20))
def test_translation_invariance(A, g):
    """|(A + g) ∩ (F_n + g)| = |A ∩ F_n|"""
    F = standard_folner()
    assert density_report(A + g, translate(F, g), 30).ratios == density_report(A, F, 30).ratios


@settings(max_examples=40, deadline=None)
@given(small_sets)
def test_complement_duality(A):
    F = standard_folner()
    report, dual = density_report(A, F, 30), density_report(Complement(A), F, 30)
    assert dual.headline_upper == 1 - report.headline_lower
    assert dual.headline_lower == 1 - report.headline_upper


@settings(max_examples=40, deadline=None)
@given(small_sets, small_sets)
def test_upper_density_is_subadditive(A, B):
    F = standard_folner()
    union = density_report(A | B, F, 30).headline_upper
    assert union <= density_report(A, F, 30).headline_upper + density_report(B, F, 30).headline_upper

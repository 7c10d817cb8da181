"""
Tests for integer set expressions and the finite-horizon classifiers.

Test Philosophy:
- Membership and masks are checked on windows small enough to list by hand
- The three decade-block sets are checked against their block boundaries:
      A_1 = [10, 19]      B_1 = [20, 20]      C_1 = [21, 99]
      A_2 = [100, 119]    B_2 = [120, 121]    C_2 = [122, 999]
      A_3 = [1000, 1029]  B_3 = [1030, 1032]  C_3 = [1033, 9999]
- Boolean-algebra laws checked with hypothesis

Run with: pytest tests/test_sets.py -v
"""

import pytest
import numpy as np
from hypothesis import given, settings, strategies as st

from orbitdensity.sets.expressions import (
    Complement,
    FiniteSet,
    Formula,
    Intersection,
    IntervalFamily,
    Negate,
    PredicateSet,
    Progression,
    Translate,
    Union,
    empty_set,
    first_element,
    integers,
    member,
    naturals,
    symmetrize,
)
from orbitdensity.sets.classify import (
    classify_triple,
    horizon_ladder,
    max_gap,
    max_run,
    pw_syndetic_witness,
    thickly_syndetic_gaps,
)
from orbitdensity.sets.examples import example52_sets, example52_symmetrized
from orbitdensity.folner.sequences import example53_support


# ========================== FIXTURES ==========================

@pytest.fixture
def decade_sets():
    """(A, B, C): decade blocks plus 10N, 10N - 1 and 10N - 2 respectively"""
    return example52_sets()


@pytest.fixture
def r_blocks():
    """R_k = [k(k+1), k(k+1)+k]: {0}, [2,4], [6,9], [12,16], ..."""
    return IntervalFamily("n*(n + 1)", "n*(n + 1) + n", first_index=0)


def listed(S, lo, hi):
    return [lo + int(i) for i in np.flatnonzero(S.mask(lo, hi))]


# ========================== FORMULAS ==========================

class TestFormula:
    def test_evaluates(self):
        assert Formula("10**n + 10*n - 1")(2) == 119
        assert Formula("pow(2, n) - 1")(5) == 31
        assert Formula("-n")(3) == -3

    @pytest.mark.parametrize("text", ["n / 2", "os.system", "n if n else 1", "1 +", "2.5 * n"])
    def test_rejects_unsupported_terms(self, text):
        with pytest.raises(ValueError):
            Formula(text)

    def test_negative_exponent_raises(self):
        with pytest.raises(ValueError):
            Formula("2**n")(-1)


# ========================== LEAVES ==========================

class TestLeaves:
    def test_finite(self):
        S = FiniteSet([3, -1, 3])
        assert listed(S, -5, 5) == [-1, 3]
        assert S.to_spec() == {"type": "finite", "elems": [-1, 3]}
        assert S.render() == "{-1,3}"

    def test_progression(self):
        S = Progression(10, 9)
        assert listed(S, -15, 30) == [-11, -1, 9, 19, 29]
        assert member(S, -21)
        assert S.render() == "10Z+9"

    def test_progression_normalises_residue(self):
        assert Progression(10, -1).to_spec() == {"type": "progression", "m": 10, "r": 9}
        with pytest.raises(ValueError):
            Progression(0)

    def test_interval_family(self, r_blocks):
        assert listed(r_blocks, -3, 16) == [0, 2, 3, 4, 6, 7, 8, 9, 12, 13, 14, 15, 16]
        assert r_blocks.blocks(5, 12) == [(6, 9), (12, 16)]
        assert 930 in r_blocks and 960 in r_blocks and 961 not in r_blocks

    def test_interval_family_rejects_overlap_and_empty_blocks(self):
        with pytest.raises(ValueError):
            IntervalFamily("n", "n + 1").mask(0, 10)
        with pytest.raises(ValueError):
            IntervalFamily("n + 1", "n").member(5)

    def test_overlapping_prefix_skipped_by_first_index(self):
        """n^2 + [0, 2]: block 1 = [1, 3] overlaps block 0 = [0, 2]; from n = 2 on: [4, 6], [9, 11], [16, 18]"""
        with pytest.raises(ValueError, match="Block 1"):
            IntervalFamily("n*n", "n*n + 2").mask(0, 20)
        later = IntervalFamily("n*n", "n*n + 2", first_index=2)
        assert listed(later, 0, 20) == [4, 5, 6, 9, 10, 11, 16, 17, 18]

    def test_naturals(self):
        assert listed(naturals(), -3, 3) == [0, 1, 2, 3]
        assert listed(naturals(1), -3, 3) == [1, 2, 3]
        assert 10**12 in naturals()
        assert -1 not in naturals()

    def test_predicate_set_has_no_document(self):
        S = PredicateSet(lambda i: i % 7 == 0, "7Z")
        assert listed(S, 0, 20) == [0, 7, 14]
        with pytest.raises(ValueError):
            S.to_spec()


# ========================== COMBINATORS ==========================

class TestCombinators:
    def test_union_intersection_complement(self):
        evens, threes = Progression(2), Progression(3)
        assert listed(evens | threes, 0, 9) == [0, 2, 3, 4, 6, 8, 9]
        assert listed(evens & threes, 0, 12) == [0, 6, 12]
        assert listed(~evens, 0, 5) == [1, 3, 5]

    def test_intersection_needs_operands(self):
        with pytest.raises(ValueError):
            Intersection(())

    def test_translate(self):
        """(5Z + 2) meets [0, 9] in 2 and 7"""
        S = Progression(5) + 2
        assert isinstance(S, Translate)
        assert listed(S, 0, 9) == [2, 7]
        assert S.to_spec() == {"type": "translate", "of": {"type": "progression", "m": 5, "r": 0}, "g": 2}

    def test_negate(self):
        S = Negate(FiniteSet([1, 3]))
        assert listed(S, -3, 0) == [-3, -1]
        assert -3 in S and 3 not in S

    def test_symmetrize(self):
        assert listed(symmetrize(FiniteSet([2, 5])), -6, 6) == [-5, -2, 2, 5]

    def test_empty_and_integers(self):
        assert listed(empty_set(), -3, 3) == []
        assert listed(integers(), -1, 1) == [-1, 0, 1]

    def test_first_element(self):
        assert first_element(Progression(7, 3), 4, 20) == 10
        assert first_element(empty_set(), 0, 100) is None

    def test_complement_renders(self):
        assert Complement(Progression(2)).render() == "∁2Z+0"


# ========================== CLASSIFIERS ==========================

class TestClassifiers:
    def test_max_gap_and_run(self):
        assert max_gap(Progression(3), -100, 100) == 3
        assert max_gap(FiniteSet([0]), -5, 5) is None
        assert max_run(FiniteSet([0]), -5, 5) == 1
        assert max_run(empty_set(), 0, 10) == 0

    def test_support_runs_grow(self):
        """R_13 = [182, 195], R_21 = [462, 483], R_30 = [930, 960]"""
        support = example53_support()
        assert [max_run(support, 0, H) for H in (200, 500, 1000)] == [14, 22, 31]

    def test_pw_syndetic_witness(self):
        """3Z on [0, 9]: members 0, 3, 6, 9, never 3 non-members in a row"""
        assert pw_syndetic_witness(Progression(3), 3, 10, 0, 100) == (0, 9)
        assert pw_syndetic_witness(Progression(3), 2, 10, 0, 100) is None

    def test_pw_syndetic_skips_empty_start(self):
        """Elements 5..14: the first window of length 4 with no 2-gap starts at 4"""
        S = FiniteSet(range(5, 15))
        assert pw_syndetic_witness(S, 2, 4, 0, 30) == (4, 7)

    def test_pw_syndetic_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            pw_syndetic_witness(Progression(2), 0, 4, 0, 10)

    def test_syndetic_implies_piecewise_syndetic(self):
        S = Progression(4, 1)
        b = max_gap(S, 1, 401)
        assert pw_syndetic_witness(S, b, 50, 1, 401) is not None

    def test_thickly_syndetic_gaps(self):
        """Runs of length 3 in 10Z + {0,1,2}: starts every 10"""
        S = Union((Progression(10, 0), Progression(10, 1), Progression(10, 2)))
        assert thickly_syndetic_gaps(S, 3, 0, 100) == 10
        assert thickly_syndetic_gaps(Progression(2), 3, 0, 100) is None

    def test_horizon_ladder_columns(self):
        df = horizon_ladder(Progression(2), 0, [10, 100])
        assert df.columns == ["hi", "max_gap", "max_run", "pw_start", "pw_end"]
        assert df["max_gap"].to_list() == [2, 2]


# ========================== DECADE BLOCK SETS ==========================

class TestDecadeSets:
    def test_membership_near_first_decade(self, decade_sets):
        A, B, C = decade_sets
        assert listed(A, 1, 25) == list(range(10, 21))
        assert listed(B, 1, 25) == [9, 19, 20]
        assert listed(C, 1, 25) == [8, 18, 21, 22, 23, 24, 25]

    def test_pairwise_first_elements(self, decade_sets):
        evidence = classify_triple(*decade_sets, 1, 10_000)
        assert evidence.pairwise == {"A∩B": 19, "B∩C": 29, "A∩C": 18}
        assert evidence.pairwise_nonempty
        assert evidence.triple_empty

    def test_triple_intersection_empty(self, decade_sets):
        A, B, C = decade_sets
        assert not (A & B & C).mask(1, 100_000).any()

    def test_symmetrized_triple_empty(self):
        A, B, C = example52_symmetrized()
        assert classify_triple(A, B, C, -100_000, 100_000).triple_empty

    def test_gaps_bounded(self, decade_sets):
        assert all(max_gap(S, 1, 100_000) <= 10 for S in decade_sets)

    def test_run_ladders(self, decade_sets):
        """A: A_2 + {120}, A_3 + {1030}, A_4 + {10040};  C: C_2, C_3, C_4"""
        A, _, C = decade_sets
        his = [1_000, 10_000, 100_000]
        assert horizon_ladder(A, 1, his)["max_run"].to_list() == [21, 31, 41]
        assert horizon_ladder(C, 1, his)["max_run"].to_list() == [878, 8967, 89956]
        assert max_run(A, 1, 10_000) == 31


# ========================== BOOLEAN-ALGEBRA LAWS ==========================

leaves = st.one_of(
    st.builds(FiniteSet, st.lists(st.integers(-30, 30), max_size=8)),
    st.builds(Progression, st.integers(1, 7), st.integers(0, 6)),
)
sets = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.builds(lambda a, b: a | b, inner, inner),
        st.builds(lambda a, b: a & b, inner, inner),
        st.builds(Complement, inner),
        st.builds(Negate, inner),
        st.builds(Translate, inner, st.integers(-10, 10)),
    ),
    max_leaves=5,
)
LO, HI = -40, 40


@settings(max_examples=80, deadline=None)
@given(sets)
def test_mask_agrees_with_membership(S):
    assert S.mask(LO, HI).tolist() == [S.member(i) for i in range(LO, HI + 1)]


@settings(max_examples=60, deadline=None)
@given(sets, sets)
def test_de_morgan(S, T):
    assert np.array_equal((~(S | T)).mask(LO, HI), (~S & ~T).mask(LO, HI))


@settings(max_examples=60, deadline=None)
@given(sets, sets, sets)
def test_distributive(S, T, U):
    assert np.array_equal((S & (T | U)).mask(LO, HI), ((S & T) | (S & U)).mask(LO, HI))


@settings(max_examples=60, deadline=None)
@given(sets, st.integers(-15, 15))
def test_translation_shifts_masks(S, g):
    assert np.array_equal((S + g).mask(LO, HI), S.mask(LO - g, HI - g))


@settings(max_examples=60, deadline=None)
@given(sets)
def test_negation_is_an_involution(S):
    assert np.array_equal(Negate(Negate(S)).mask(LO, HI), S.mask(LO, HI))

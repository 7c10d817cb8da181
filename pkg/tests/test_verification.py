"""
Tests for the scripted verification of the worked constructions.

Test Philosophy:
- Every claim must be able to FAIL: a claim's result comes from a computed check
- Evidence carries the values a reader needs to re-check the claim:
      |A_n| = (n+1)!     -> 2, 6, 24, 120, 720, 5040, 40320
      defect rows        -> h, then the defect at n = 10, 20, 40, 80
- The mirror point runs a k = 2 cover to N = 5040 and carries the `slow` marker

Run with: pytest tests/test_verification.py -v
"""

import pytest

from orbitdensity.verification import (
    EXAMPLES,
    ExampleResult,
    verify_example51,
    verify_example52,
    verify_example53,
)


# ========================== FIXTURES ==========================

@pytest.fixture(scope="module")
def decade_sets_result():
    """A, B, C scanned on [1, 10^4]: triple empty, first element of A ∩ B is 19"""
    return verify_example52(horizon=10_000)


@pytest.fixture(scope="module")
def r_blocks_result():
    return verify_example53()


def claim(result, prefix):
    return next(c for c in result.claims if c.name.startswith(prefix))


# ========================== RESULTS ==========================

class TestExampleResult:
    def test_one_failed_claim_fails_the_example(self):
        result = ExampleResult("x")
        result.add("holds", True)
        result.add("breaks", False, why="counted")
        assert not result.passed
        assert result.to_record()["result"] == "FAIL"
        assert result.claims_frame()["result"].to_list() == ["PASS", "FAIL"]

    def test_registry(self):
        assert sorted(EXAMPLES) == ["5.1", "5.2", "5.3"]


# ========================== DECADE SETS ==========================

class TestDecadeSets:
    def test_passes(self, decade_sets_result):
        assert decade_sets_result.passed

    def test_window_is_evidence_not_a_claim(self, decade_sets_result):
        """The A ∩ B window rides on the pairwise claim, whose result is computed"""
        names = [c.name for c in decade_sets_result.claims]
        assert not any("piecewise" in name for name in names)
        pairwise = claim(decade_sets_result, "pairwise intersections are nonempty")
        assert "ab_window" in pairwise.evidence
        assert pairwise.passed == all(v is not None for v in pairwise.evidence["pairwise"].values())

    def test_first_element_of_a_and_b(self, decade_sets_result):
        assert claim(decade_sets_result, "min(A ∩ B) = 19").evidence["first"] == 19


# ========================== R-BLOCKS ==========================

class TestRBlocks:
    def test_passes(self, r_blocks_result):
        assert r_blocks_result.passed

    @pytest.mark.parametrize("label", ["F", "H"])
    def test_defect_table(self, r_blocks_result, label):
        """Rows h = -5 .. 5; h = 0 never moves a block"""
        rows = claim(r_blocks_result, f"Følner defect of {label}").evidence["table"]
        assert [row[0] for row in rows] == list(range(-5, 6))
        assert all(len(row) == 5 for row in rows)
        assert rows[5][1:] == ["0/1", "0/1", "0/1", "0/1"]


# ========================== MIRROR POINT ==========================

@pytest.mark.slow
class TestMirrorPoint:
    def test_passes_with_factorial_lengths(self):
        result = verify_example51(threads=2)
        lengths = claim(result, "|A_n| = (n+1)!")
        assert lengths.passed
        assert lengths.evidence["lengths"] == {1: 2, 2: 6, 3: 24, 4: 120, 5: 720, 6: 5040, 7: 40320}
        assert result.passed

"""
orbitdensity - Walkthrough Demo

This script walks through the library on the three worked constructions:
1. Følner density of a residue class
2. Gap/run classification of the decade sets
3. Centers of attraction of one point along two Følner sequences
4. Li-Yorke evidence for the same point
5. Scripted verification of every construction

Run: python demo_pipeline.py   (after `pip install -e .`)
"""

import logging

from orbitdensity.attraction.cover import coa_cover, covers_equal
from orbitdensity.chaos.pairs import li_yorke_verdict
from orbitdensity.data.io_utils import approx_decimal, format_fraction
from orbitdensity.density.report import density_report, ratios_frame
from orbitdensity.folner.sequences import example53_F, example53_H, example53_support, standard_folner
from orbitdensity.sets.classify import classify_triple, horizon_ladder
from orbitdensity.sets.examples import example52_sets
from orbitdensity.sets.expressions import Progression
from orbitdensity.shift.points import make_indicator, make_periodic
from orbitdensity.verification import EXAMPLES


def print_section(title):
    """Pretty print section headers"""
    print(f"\n{'='*60}")
    print(f"  {title}")
    print(f"{'='*60}\n")


def demo_walkthrough():
    print_section("orbitdensity - Følner Densities on the Full Shift")

    # =================================================================
    # STEP 1: Density of the evens
    # =================================================================
    print_section("STEP 1: Density of 2Z along [-n, n]")

    report = density_report(Progression(2), standard_folner(), 200)
    lo, hi = report.headline_window
    print(f"Headline window: n in [{lo}, {hi}]")
    print(f"   upper: {format_fraction(report.headline_upper):>10} ~ {approx_decimal(report.headline_upper)}")
    print(f"   lower: {format_fraction(report.headline_lower):>10} ~ {approx_decimal(report.headline_lower)}")
    print("\nFirst ratios:")
    print(ratios_frame(report).head(6))

    # =================================================================
    # STEP 2: Decade sets
    # =================================================================
    print_section("STEP 2: Decade sets A, B, C")

    A, B, C = example52_sets()
    evidence = classify_triple(A, B, C, 1, 100_000)
    for pair, first in evidence.pairwise.items():
        print(f"   first element of {pair}: {first}")
    print(f"   A∩B∩C empty on [1, 100000]: {evidence.triple_empty}")
    print("\nRun ladder of A (thick but not syndetic):")
    print(horizon_ladder(A, 1, [100, 1_000, 10_000]))

    # =================================================================
    # STEP 3: Two Følner sequences, two centers
    # =================================================================
    print_section("STEP 3: Centers of attraction of z along F and H")

    z = make_indicator(example53_support())
    along_f = coa_cover(z, example53_F(), 1, 60, "3/10")
    along_h = coa_cover(z, example53_H(), 1, 60, "3/10")
    print(f"   cover along F: {list(along_f.kept_words)}")
    print(f"   cover along H: {list(along_h.kept_words)}")
    print(f"   covers equal:  {covers_equal(along_f, along_h)}")

    # =================================================================
    # STEP 4: Li-Yorke pair
    # =================================================================
    print_section("STEP 4: Li-Yorke evidence for (z, 1^∞)")

    verdict = li_yorke_verdict(z, make_periodic("1"), 10_000, 6, "1/32", [10, 100, 1000])
    print(f"   proximal:  {verdict.proximal} (min {verdict.proximal_min})")
    print(f"   separated: {verdict.separated}")
    print(f"   Li-Yorke:  {verdict.liyorke}")

    # =================================================================
    # STEP 5: Scripted verification
    # =================================================================
    print_section("STEP 5: Verification of the constructions")

    results = {"5.1": EXAMPLES["5.1"](threads=4)}
    results.update({key: EXAMPLES[key]() for key in ("5.2", "5.3")})
    for key, result in results.items():
        print(f"\nExample {key}: {'PASS' if result.passed else 'FAIL'}")
        print(result.claims_frame().select(["claim", "result"]))

    print_section(" Walkthrough Complete!")
    return results


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(message)s")
    try:
        demo_walkthrough()
    except Exception as e:
        print(f"\n Error running walkthrough: {e}")
        import traceback
        traceback.print_exc()

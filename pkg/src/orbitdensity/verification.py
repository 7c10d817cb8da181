"""
End-to-end verification of the three worked constructions.

    "5.1"  the mirror point x built from the words A_n: its center of
           attraction along the standard intervals is {0^∞, 1^∞}, and x
           itself is not in it
    "5.2"  sets A, B, C with empty triple intersection, each syndetic,
           A and C thick
    "5.3"  the indicator z of the R-blocks: two Følner sequences F, H with
           C_F(z) = {1^∞} and C_H(z) = {0^∞}

Each check is a named claim with PASS/FAIL and the evidence behind it.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import polars as pl

from orbitdensity.attraction.cover import (
    coa_cover,
    cover_in_orbit,
    cover_shift_consistent,
    covers_equal,
)
from orbitdensity.chaos.pairs import li_yorke_verdict
from orbitdensity.data.io_utils import format_fraction
from orbitdensity.density.visits import sojourn
from orbitdensity.folner.sequences import (
    defect,
    example53_F,
    example53_H,
    example53_support,
    is_interval,
    standard_folner,
)
from orbitdensity.sets.classify import (
    classify_triple,
    horizon_ladder,
    max_gap,
    pw_syndetic_witness,
)
from orbitdensity.sets.examples import example52_sets, example52_symmetrized
from orbitdensity.sets.expressions import Intersection
from orbitdensity.shift.points import (
    Cylinder,
    Word,
    make_example51_point,
    make_indicator,
    make_periodic,
    window,
    word_A,
)

logger = logging.getLogger(__name__)


@dataclass
class Claim:
    name: str
    passed: bool
    evidence: dict[str, Any] = field(default_factory=dict)

    def to_record(self) -> dict[str, Any]:
        return {"claim": self.name, "result": "PASS" if self.passed else "FAIL", "evidence": self.evidence}


@dataclass
class ExampleResult:
    example: str
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, name: str, passed: bool, **evidence: Any) -> None:
        self.claims.append(Claim(name, bool(passed), evidence))
        logger.info(f"[{self.example}] {'PASS' if passed else 'FAIL'} {name}")

    def to_record(self) -> dict[str, Any]:
        return {
            "example": self.example,
            "result": "PASS" if self.passed else "FAIL",
            "claims": [c.to_record() for c in self.claims],
        }

    def claims_frame(self) -> pl.DataFrame:
        return pl.DataFrame(
            {
                "claim": [c.name for c in self.claims],
                "result": ["PASS" if c.passed else "FAIL" for c in self.claims],
                "evidence": [json.dumps(c.evidence, sort_keys=True, ensure_ascii=False) for c in self.claims],
            },
            schema={"claim": pl.Utf8, "result": pl.Utf8, "evidence": pl.Utf8},
        )


# ========================== 5.1 ==========================

def verify_example51(threads: int = 1) -> ExampleResult:
    result = ExampleResult("5.1")
    x = make_example51_point()
    F = standard_folner()

    lengths = {n: len(word_A(n)) for n in range(1, 8)}
    factorials = {n: math.factorial(n + 1) for n in range(1, 8)}
    result.add("|A_n| = (n+1)! for n <= 7", lengths == factorials, lengths=lengths)

    nested = {}
    for n in range(1, 7):
        a = word_A(n)
        nested[n] = window(x, -len(a), 2 * len(a)) == a.reverse() + a
    result.add("x reads reverse(A_n) A_n around 0 for n <= 6", all(nested.values()), levels=nested)

    cover = coa_cover(x, F, 2, 5040, Fraction(1, 20), threads=threads)
    result.add(
        "cover at k=2, N=5040, tol=1/20 is {00000, 11111}",
        set(cover.kept_words) == {"00000", "11111"},
        kept=[e.to_record() for e in cover.entries],
    )
    union_lower = cover.union_sojourn.headline_lower
    result.add(
        "union sojourn of the kept cylinders has lower estimate >= 9/10",
        union_lower >= Fraction(9, 10),
        lower=format_fraction(union_lower),
    )

    violations = cover_shift_consistent(cover, x, 5040)
    result.add("kept words are closed under the follower relation", not violations, violations=violations)
    result.add("kept words occur in the orbit of x", cover_in_orbit(cover, x, 5040))

    small = coa_cover(x, F, 1, 720, Fraction(1, 10), threads=threads)
    central = str(window(x, -1, 3))
    result.add(
        "x is not in its own center (central word dropped at k=1, N=720, tol=1/10)",
        central not in small.kept_words,
        central=central,
        kept=list(small.kept_words),
    )

    verdict = li_yorke_verdict(x, make_periodic("0"), 10_000, 6, Fraction(1, 32), [10, 100, 1000])
    result.add("(x, 0^∞) is a Li-Yorke pair at horizon 10^4", verdict.liyorke, verdict=verdict.to_record())
    return result


# ========================== 5.2 ==========================

def verify_example52(horizon: int = 100_000) -> ExampleResult:
    result = ExampleResult("5.2")
    A, B, C = example52_sets()

    triple = classify_triple(A, B, C, 1, horizon)
    result.add(f"A ∩ B ∩ C ∩ [1, {horizon}] is empty", triple.triple_empty, **triple.to_record())
    # the A ∩ B window is evidence only; piecewise syndeticity is not asserted
    ab_window = pw_syndetic_witness(Intersection((A, B)), 10, 20, 1, horizon)
    result.add(
        "pairwise intersections are nonempty",
        triple.pairwise_nonempty,
        pairwise=triple.pairwise,
        ab_window=list(ab_window) if ab_window else None,
    )
    result.add("min(A ∩ B) = 19", triple.pairwise["A∩B"] == 19, first=triple.pairwise["A∩B"])

    gaps = {name: max_gap(S, 1, horizon) for name, S in zip("ABC", (A, B, C))}
    result.add("max gap <= 10 for A, B and C", all(g is not None and g <= 10 for g in gaps.values()), gaps=gaps)

    ladder_his = [1_000, 10_000, 100_000]
    ladders = {}
    for name, S in (("A", A), ("C", C)):
        runs = horizon_ladder(S, 1, ladder_his)["max_run"].to_list()
        ladders[name] = runs
    growing = all(r[0] < r[1] < r[2] for r in ladders.values())
    result.add("max run grows along horizons 10^3, 10^4, 10^5 for A and C", growing, runs=ladders)

    A_star, B_star, C_star = example52_symmetrized()
    star = classify_triple(A_star, B_star, C_star, -horizon, horizon)
    result.add(f"A* ∩ B* ∩ C* ∩ [-{horizon}, {horizon}] is empty", star.triple_empty, first=star.triple)
    return result


# ========================== 5.3 ==========================

def verify_example53() -> ExampleResult:
    result = ExampleResult("5.3")
    z = make_indicator(example53_support())
    F, H = example53_F(), example53_H()

    covers = {}
    for k, ones, zeros in ((1, "111", "000"), (2, "11111", "00000")):
        cf = coa_cover(z, F, k, 60, Fraction(3, 10))
        ch = coa_cover(z, H, k, 60, Fraction(3, 10))
        covers[k] = (cf, ch)
        result.add(f"cover along F at k={k} is {{{ones}}}", cf.kept_words == (ones,), kept=list(cf.kept_words))
        result.add(f"cover along H at k={k} is {{{zeros}}}", ch.kept_words == (zeros,), kept=list(ch.kept_words))
    result.add("the two covers differ", not covers_equal(*covers[1]))

    report = sojourn(z, [Cylinder(Word((1,)), 0)], F, 40)
    result.add(
        "sojourn of [1]_0 along F is exactly 1 at every index",
        all(r == 1 for _, r in report.ratios),
        headline=format_fraction(report.headline_lower),
    )

    for label, seq in (("F", F), ("H", H)):
        ok, rows = _defect_decay(seq)
        result.add(f"Følner defect of {label} decays within 2|h|/|{label}_n|", ok, table=rows)

    verdict = li_yorke_verdict(z, make_periodic("1"), 10_000, 6, Fraction(1, 32), [10, 100, 1000])
    result.add("(z, 1^∞) is a Li-Yorke pair at horizon 10^4", verdict.liyorke, proximal_min=str(verdict.proximal_min))
    return result


def _defect_decay(seq, top: int = 80) -> tuple[bool, list[list[Any]]]:
    """Every n <= top is checked against the bound; the table shows n = 10, 20, 40, 80."""
    shown = [10, 20, 40, 80]
    ok = True
    rows = []
    for h in range(-5, 6):
        values = [defect(seq, h, n) for n in range(top + 1)]
        bounded = all(
            v <= Fraction(2 * abs(h), int(seq[n].size)) for n, v in enumerate(values) if is_interval(seq, n)
        )
        sampled = [values[n] for n in shown]
        decreasing = all(a >= b for a, b in zip(sampled, sampled[1:]))
        ok = ok and decreasing and bounded
        rows.append([h] + [format_fraction(v) for v in sampled])
    return ok, rows


EXAMPLES: dict[str, Callable[..., ExampleResult]] = {
    "5.1": verify_example51,
    "5.2": verify_example52,
    "5.3": verify_example53,
}

"""
Density Along a Følner Sequence
-------------------------------

r_n = |A ∩ F_n| / |F_n| is computed exactly for n = 0..N. Upper and lower
density are the limsup and liminf of r_n; at a finite horizon they are
estimated by the maximum and minimum of r_n over the headline window
[ceil((1 - f) * N), N], with f the headline fraction (default 1/2).

A tail envelope (m, max r_n, min r_n over n in [m, N]) on the grid
m = ceil(j * N / 4), j = 0..3, shows how the estimates settle.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

import numpy as np
import polars as pl

from orbitdensity.data.io_utils import approx_decimal, format_fraction, parse_fraction, to_fraction
from orbitdensity.folner.sequences import FolnerSequence
from orbitdensity.sets.expressions import IntegerSet

logger = logging.getLogger(__name__)

DEFAULT_HEADLINE_FRACTION = Fraction(1, 2)


@dataclass(frozen=True)
class DensityReport:
    """
    Exact ratios r_0..r_N with headline density estimates.

    Attributes
    ----------
    ratios : tuple[tuple[int, Fraction], ...]
        (n, r_n) for n = 0..N.
    headline_upper, headline_lower : Fraction
        Max and min of r_n over ``headline_window``.
    headline_window : tuple[int, int]
        (m*, N).
    envelope : tuple[tuple[int, Fraction, Fraction], ...]
        (m, max r_n, min r_n) over n in [m, N].
    """

    ratios: tuple[tuple[int, Fraction], ...]
    headline_upper: Fraction
    headline_lower: Fraction
    headline_window: tuple[int, int]
    envelope: tuple[tuple[int, Fraction, Fraction], ...]
    folner_label: str = ""
    set_description: str = ""

    @property
    def horizon(self) -> int:
        return self.headline_window[1]

    @property
    def density(self) -> Optional[Fraction]:
        """Common headline value when upper and lower estimates coincide."""
        if self.headline_upper == self.headline_lower:
            return self.headline_upper
        return None

    def ratio(self, n: int) -> Fraction:
        return self.ratios[n][1]

    def to_record(self) -> dict[str, Any]:
        return {
            "folner": self.folner_label,
            "set": self.set_description,
            "ratios": [[n, format_fraction(r)] for n, r in self.ratios],
            "headline_upper": format_fraction(self.headline_upper),
            "headline_lower": format_fraction(self.headline_lower),
            "headline_window": list(self.headline_window),
            "envelope": [[m, format_fraction(hi), format_fraction(lo)] for m, hi, lo in self.envelope],
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> "DensityReport":
        return cls(
            ratios=tuple((int(n), parse_fraction(r)) for n, r in record["ratios"]),
            headline_upper=parse_fraction(record["headline_upper"]),
            headline_lower=parse_fraction(record["headline_lower"]),
            headline_window=(int(record["headline_window"][0]), int(record["headline_window"][1])),
            envelope=tuple(
                (int(m), parse_fraction(hi), parse_fraction(lo)) for m, hi, lo in record["envelope"]
            ),
            folner_label=record.get("folner", ""),
            set_description=record.get("set", ""),
        )


# ========================== COUNTING ==========================

def count_ratio(A: IntegerSet, F: FolnerSequence, n: int) -> Fraction:
    """
    |A ∩ F_n| / |F_n|.

    Examples
    --------
    >>> count_ratio(Progression(2), standard_folner(), 4)
    Fraction(5, 9)
    """
    block = F[n]
    lo = int(block[0])
    hits = A.mask(lo, int(block[-1]))[block - lo]
    return Fraction(int(hits.sum()), int(block.size))


Span = tuple[int, int, Optional[np.ndarray]]


def folner_blocks(F: FolnerSequence, N: int) -> tuple[list[Span], int, int]:
    """
    F_0..F_N as spans ``(first, last, members)`` and their hull (lo, hi).

    ``members`` is None for interval blocks, which are described by their
    endpoints alone.
    """
    spans: list[Span] = []
    for n in range(N + 1):
        block = F[n]
        first, last = int(block[0]), int(block[-1])
        members = None if last - first + 1 == block.size else block
        spans.append((first, last, members))
    lo = min(s[0] for s in spans)
    hi = max(s[1] for s in spans)
    return spans, lo, hi


def ratios_along(mask: np.ndarray, lo: int, spans: Sequence[Span]) -> list[Fraction]:
    """
    r_n for every span, given a membership mask whose entry 0 is integer ``lo``.

    Interval spans are counted by prefix sums; other spans by indexing.
    """
    prefix = np.concatenate(([0], np.cumsum(mask, dtype=np.int64)))
    ratios = []
    for first, last, members in spans:
        if members is None:
            count = int(prefix[last - lo + 1] - prefix[first - lo])
            size = last - first + 1
        else:
            count = int(mask[members - lo].sum())
            size = int(members.size)
        ratios.append(Fraction(count, size))
    return ratios


def _check_fraction(headline_fraction: Fraction) -> Fraction:
    f = to_fraction(headline_fraction)
    if not 0 < f <= 1:
        raise ValueError(f"headline_fraction must lie in (0, 1], got {f}")
    return f


def build_report(
    ratios: Sequence[Fraction],
    headline_fraction: Fraction = DEFAULT_HEADLINE_FRACTION,
    folner_label: str = "",
    set_description: str = "",
) -> DensityReport:
    """Assemble headline and envelope from r_0..r_N."""
    f = _check_fraction(headline_fraction)
    N = len(ratios) - 1
    if N < 1:
        raise ValueError(f"Density report needs horizon N >= 1, got {N}")

    # suffix extremes
    tail_max = list(ratios)
    tail_min = list(ratios)
    for n in range(N - 1, -1, -1):
        tail_max[n] = max(ratios[n], tail_max[n + 1])
        tail_min[n] = min(ratios[n], tail_min[n + 1])

    start = math.ceil((1 - f) * N)
    grid = list(dict.fromkeys(math.ceil(Fraction(j * N, 4)) for j in range(4)))
    return DensityReport(
        ratios=tuple(enumerate(ratios)),
        headline_upper=tail_max[start],
        headline_lower=tail_min[start],
        headline_window=(start, N),
        envelope=tuple((m, tail_max[m], tail_min[m]) for m in grid),
        folner_label=folner_label,
        set_description=set_description,
    )


def density_report(
    A: IntegerSet,
    F: FolnerSequence,
    N: int,
    headline_fraction: Fraction = DEFAULT_HEADLINE_FRACTION,
) -> DensityReport:
    """
    Exact ratios of ``A`` along ``F`` up to ``N`` with density estimates.

    Parameters
    ----------
    A : IntegerSet
    F : FolnerSequence
    N : int
        Horizon index, >= 1.
    headline_fraction : Fraction
        Share of the indices, counted back from N, used for the headline.

    Returns
    -------
    DensityReport

    Raises
    ------
    ValueError
        If N < 1 or headline_fraction is outside (0, 1].
    """
    if N < 1:
        raise ValueError(f"density_report needs N >= 1, got {N}")
    _check_fraction(headline_fraction)
    spans, lo, hi = folner_blocks(F, N)
    ratios = ratios_along(A.mask(lo, hi), lo, spans)
    report = build_report(ratios, headline_fraction, F.label, A.render())
    logger.info(
        f"density of {report.set_description} along {F.label} to N={N}: "
        f"upper={report.headline_upper} lower={report.headline_lower}"
    )
    return report


def achieving_subsequence(
    A: IntegerSet,
    F: FolnerSequence,
    N: int,
    eps: Fraction | int = 0,
    headline_fraction: Fraction = DEFAULT_HEADLINE_FRACTION,
) -> list[int]:
    """
    Indices n <= N with r_n >= headline_upper - eps.

    The subsequence F_n over these indices has ratios approaching the upper
    density; it is never empty since the headline maximum is attained.
    """
    eps = to_fraction(eps)
    if eps < 0:
        raise ValueError(f"eps must be >= 0, got {eps}")
    report = density_report(A, F, N, headline_fraction)
    threshold = report.headline_upper - eps
    return [n for n, r in report.ratios if r >= threshold]


def ratios_frame(report: DensityReport) -> pl.DataFrame:
    """Plot-ready table: n, exact ratio, approximate decimal."""
    return pl.DataFrame(
        {
            "n": [n for n, _ in report.ratios],
            "ratio": [format_fraction(r) for _, r in report.ratios],
            "ratio_approx": [approx_decimal(r) for _, r in report.ratios],
        },
        schema={"n": pl.Int64, "ratio": pl.Utf8, "ratio_approx": pl.Utf8},
    )

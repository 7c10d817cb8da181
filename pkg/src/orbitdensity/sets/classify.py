"""
Finite-horizon classifiers for integer sets.

Syndetic, thick, piecewise syndetic and thickly syndetic are tail
properties; every function here reports evidence over an explicit window
[lo, hi] and never an absolute verdict. Growth (or boundedness) across a
ladder of horizons is what the caller reads off.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np
import polars as pl

from orbitdensity.sets.expressions import IntegerSet

logger = logging.getLogger(__name__)


def _runs(mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Start offsets and lengths of the maximal True runs of ``mask``."""
    padded = np.concatenate(([False], mask, [False])).astype(np.int8)
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    return starts, ends - starts


def max_gap(S: IntegerSet, lo: int, hi: int) -> Optional[int]:
    """
    Largest difference between consecutive members of ``S`` in ``[lo, hi]``.

    Returns None when fewer than two members lie in the window.

    Examples
    --------
    >>> max_gap(Progression(3), -100, 100)
    3
    """
    hits = np.flatnonzero(S.mask(lo, hi))
    if hits.size < 2:
        return None
    return int(np.diff(hits).max())


def max_run(S: IntegerSet, lo: int, hi: int) -> int:
    """Length of the longest block of consecutive integers inside ``S ∩ [lo, hi]``."""
    _, lengths = _runs(S.mask(lo, hi))
    return int(lengths.max()) if lengths.size else 0


def pw_syndetic_witness(S: IntegerSet, b: int, L: int, lo: int, hi: int) -> Optional[tuple[int, int]]:
    """
    First window ``[t, t+L-1]`` inside ``[lo, hi]`` on which ``S`` has gaps <= b.

    A window qualifies when ``S`` meets it and no ``b`` consecutive integers
    of the window miss ``S``. The second condition covers both the inner gaps
    and the empty stretches at the two ends of the window.

    Parameters
    ----------
    S : IntegerSet
    b : int
        Gap bound, >= 1.
    L : int
        Window length, >= 1.
    lo, hi : int
        Search range.

    Returns
    -------
    tuple[int, int] or None
        ``(t, t + L - 1)`` for the smallest qualifying ``t``.
    """
    if b < 1 or L < 1:
        raise ValueError(f"pw_syndetic_witness needs b >= 1 and L >= 1, got b={b}, L={L}")
    size = hi - lo + 1
    if size < L:
        return None

    members = S.mask(lo, hi).astype(np.int64)
    member_prefix = np.concatenate(([0], np.cumsum(members)))
    missing_prefix = np.concatenate(([0], np.cumsum(1 - members)))

    # bad[p]: positions p .. p+b-1 all miss S
    if size >= b:
        bad = (missing_prefix[b:] - missing_prefix[:-b]) == b
    else:
        bad = np.zeros(0, dtype=bool)
    bad_prefix = np.concatenate(([0], np.cumsum(bad)))

    t = np.arange(size - L + 1)
    hits_inside = member_prefix[t + L] - member_prefix[t]
    if L >= b:
        last_bad = np.minimum(t + L - b + 1, bad.size)
        bad_inside = bad_prefix[last_bad] - bad_prefix[t]
    else:
        bad_inside = np.zeros(t.size, dtype=np.int64)
    ok = np.flatnonzero((hits_inside > 0) & (bad_inside == 0))
    if ok.size == 0:
        return None
    start = lo + int(ok[0])
    return start, start + L - 1


def thickly_syndetic_gaps(S: IntegerSet, L: int, lo: int, hi: int) -> Optional[int]:
    """
    Largest gap between consecutive starts ``t`` with ``[t, t+L-1] ⊆ S ∩ [lo, hi]``.

    None when fewer than two such starts exist.
    """
    if L < 1:
        raise ValueError(f"thickly_syndetic_gaps needs L >= 1, got {L}")
    size = hi - lo + 1
    if size < L:
        return None
    members = S.mask(lo, hi).astype(np.int64)
    prefix = np.concatenate(([0], np.cumsum(members)))
    starts = np.flatnonzero((prefix[L:] - prefix[:-L]) == L)
    if starts.size < 2:
        return None
    return int(np.diff(starts).max())


def horizon_ladder(
    S: IntegerSet,
    lo: int,
    his: Iterable[int],
    gap_bound: int = 10,
    window: int = 100,
) -> pl.DataFrame:
    """
    Gap, run and piecewise-syndetic evidence for ``S`` over growing horizons.

    Returns
    -------
    pl.DataFrame
        Columns ``hi, max_gap, max_run, pw_start, pw_end``; ``pw_*`` is the
        witness of ``pw_syndetic_witness(S, gap_bound, window, lo, hi)``.
    """
    rows = []
    for hi in his:
        witness = pw_syndetic_witness(S, gap_bound, window, lo, hi)
        rows.append({
            "hi": hi,
            "max_gap": max_gap(S, lo, hi),
            "max_run": max_run(S, lo, hi),
            "pw_start": witness[0] if witness else None,
            "pw_end": witness[1] if witness else None,
        })
        logger.debug(f"ladder {S.render()} hi={hi}: {rows[-1]}")
    return pl.DataFrame(
        rows,
        schema={
            "hi": pl.Int64,
            "max_gap": pl.Int64,
            "max_run": pl.Int64,
            "pw_start": pl.Int64,
            "pw_end": pl.Int64,
        },
    )


@dataclass(frozen=True)
class TripleEvidence:
    """First elements of the pairwise and triple intersections on [lo, hi]."""

    lo: int
    hi: int
    pairwise: dict[str, Optional[int]] = field(default_factory=dict)
    triple: Optional[int] = None

    @property
    def triple_empty(self) -> bool:
        return self.triple is None

    @property
    def pairwise_nonempty(self) -> bool:
        return all(v is not None for v in self.pairwise.values())

    def to_record(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "pairwise_first": dict(self.pairwise),
            "triple_first": self.triple,
            "triple_empty": self.triple_empty,
        }


def classify_triple(A: IntegerSet, B: IntegerSet, C: IntegerSet, lo: int, hi: int) -> TripleEvidence:
    """Pairwise and triple intersection evidence for three sets on [lo, hi]."""
    a, b, c = A.mask(lo, hi), B.mask(lo, hi), C.mask(lo, hi)

    def first(m: np.ndarray) -> Optional[int]:
        hits = np.flatnonzero(m)
        return lo + int(hits[0]) if hits.size else None

    evidence = TripleEvidence(
        lo=lo,
        hi=hi,
        pairwise={"A∩B": first(a & b), "B∩C": first(b & c), "A∩C": first(a & c)},
        triple=first(a & b & c),
    )
    logger.info(f"triple on [{lo}, {hi}]: pairwise={evidence.pairwise} triple={evidence.triple}")
    return evidence


__all__ = [
    "max_gap",
    "max_run",
    "pw_syndetic_witness",
    "thickly_syndetic_gaps",
    "horizon_ladder",
    "TripleEvidence",
    "classify_triple",
]

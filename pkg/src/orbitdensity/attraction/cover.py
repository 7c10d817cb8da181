"""
Centers of Attraction by Cylinder Covers
----------------------------------------

The minimal center of attraction C_F(x) consists of the points y whose
every neighbourhood is visited by the orbit of x with positive upper
density along F. At resolution k the neighbourhoods are the central
cylinders [w]_{-k} with |w| = 2k+1, so C_F(x) is approximated by the words
whose visit set has headline upper density above a tolerance.

Each word's ratios come from one array of window codes over the hull of
F_0..F_N; the per-word scans are independent and may run on a thread pool.
Results are merged in word order, so the cover does not depend on the
number of threads.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from orbitdensity.data.io_utils import format_fraction, to_fraction
from orbitdensity.density.report import (
    DEFAULT_HEADLINE_FRACTION,
    DensityReport,
    build_report,
    folner_blocks,
    ratios_along,
)
from orbitdensity.density.visits import region_visit_set
from orbitdensity.folner.sequences import FolnerSequence
from orbitdensity.sets.classify import max_run
from orbitdensity.shift.points import Cylinder, SymbolicPoint, Word, as_word, window, window_codes

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = Fraction(1, 20)
# all words are tabulated up to this resolution on the binary alphabet
FULL_TABLE_MAX_K = 7


@dataclass(frozen=True)
class CoverEntry:
    word: Word
    upper: Fraction
    lower: Fraction

    def to_record(self) -> dict[str, str]:
        return {
            "word": str(self.word),
            "upper": format_fraction(self.upper),
            "lower": format_fraction(self.lower),
        }


@dataclass(frozen=True)
class CoACover:
    """
    Kept words at resolution ``k`` with their headline density pair.

    Attributes
    ----------
    resolution : int
        k; every kept word has length 2k+1.
    tolerance : Fraction
        A word is kept when its headline upper density exceeds this.
    horizon : int
        Følner index N the scan ran to.
    entries : tuple[CoverEntry, ...]
        Kept words in lexicographic order.
    scores : tuple[CoverEntry, ...]
        Every tabulated word, kept or not, in lexicographic order.
    union_sojourn : DensityReport or None
        Sojourn of the orbit in the union of the kept cylinders.
    """

    resolution: int
    tolerance: Fraction
    horizon: int
    entries: tuple[CoverEntry, ...]
    scores: tuple[CoverEntry, ...] = ()
    union_sojourn: Optional[DensityReport] = None
    point_description: str = ""
    folner_label: str = ""

    @property
    def kept_words(self) -> tuple[str, ...]:
        return tuple(str(e.word) for e in self.entries)

    def cylinders(self) -> list[Cylinder]:
        return [Cylinder(e.word, -self.resolution) for e in self.entries]

    def entry(self, word: Word | str) -> Optional[CoverEntry]:
        text = str(word)
        for e in self.entries:
            if str(e.word) == text:
                return e
        return None

    def without(self, *words: Word | str) -> "CoACover":
        """Copy with the given words dropped (the union sojourn is discarded)."""
        drop = {str(w) for w in words}
        return replace(
            self,
            entries=tuple(e for e in self.entries if str(e.word) not in drop),
            union_sojourn=None,
        )

    def to_record(self) -> dict[str, Any]:
        return {
            "k": self.resolution,
            "tol": format_fraction(self.tolerance),
            "horizon": self.horizon,
            "point": self.point_description,
            "folner": self.folner_label,
            "kept": [e.to_record() for e in self.entries],
            "union_sojourn": self.union_sojourn.to_record() if self.union_sojourn else None,
        }


def _check_cover_args(k: int, N: int, tol: Fraction) -> None:
    if k < 0:
        raise ValueError(f"Resolution k must be >= 0, got {k}")
    if N < 1:
        raise ValueError(f"Horizon N must be >= 1, got {N}")
    if not 0 < tol < 1:
        raise ValueError(f"Tolerance must lie strictly between 0 and 1, got {tol}")


def coa_cover(
    x: SymbolicPoint,
    F: FolnerSequence,
    k: int,
    N: int,
    tol: Fraction | float | str = DEFAULT_TOLERANCE,
    headline_fraction: Fraction = DEFAULT_HEADLINE_FRACTION,
    threads: int = 1,
) -> CoACover:
    """
    Cylinder cover of the minimal F-center of attraction of ``x``.

    Parameters
    ----------
    x : SymbolicPoint
    F : FolnerSequence
    k : int
        Resolution; words have length 2k+1 centred at coordinate 0.
    N : int
        Følner horizon.
    tol : Fraction
        Keep threshold in (0, 1).
    headline_fraction : Fraction
        Passed to the density estimates.
    threads : int
        Worker threads for the per-word scans.

    Returns
    -------
    CoACover

    Examples
    --------
    >>> cover = coa_cover(make_periodic("01"), standard_folner(), 1, 100, "0.3")
    >>> cover.kept_words
    ('010', '101')
    """
    tol = to_fraction(tol)
    _check_cover_args(k, N, tol)
    length = 2 * k + 1
    spans, lo, hi = folner_blocks(F, N)
    codes = window_codes(x, -k, length, lo, hi)
    visited = np.unique(codes)

    def score(code: int) -> CoverEntry:
        report = build_report(ratios_along(codes == code, lo, spans), headline_fraction)
        return CoverEntry(Word.from_code(int(code), length, x.alphabet), report.headline_upper, report.headline_lower)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            visited_entries = list(pool.map(score, visited.tolist()))
    else:
        visited_entries = [score(c) for c in visited.tolist()]

    by_code = {int(c): e for c, e in zip(visited.tolist(), visited_entries)}
    if x.alphabet.size == 2 and k <= FULL_TABLE_MAX_K:
        zero = Fraction(0)
        scores = tuple(
            by_code.get(c) or CoverEntry(Word.from_code(c, length, x.alphabet), zero, zero)
            for c in range(2**length)
        )
    else:
        scores = tuple(visited_entries)

    entries = tuple(e for e in scores if e.upper > tol)
    kept_codes = np.array([e.word.code() for e in entries], dtype=np.int64)
    union = build_report(
        ratios_along(np.isin(codes, kept_codes), lo, spans),
        headline_fraction,
        F.label,
        "union of kept cylinders",
    )
    cover = CoACover(
        resolution=k,
        tolerance=tol,
        horizon=N,
        entries=entries,
        scores=scores,
        union_sojourn=union,
        point_description=x.description,
        folner_label=F.label,
    )
    logger.info(
        f"cover of {x.description} along {F.label} k={k} N={N}: "
        f"{len(entries)} of {len(visited_entries)} visited words kept, union lower={union.headline_lower}"
    )
    return cover


def cover_shift_consistent(c: CoACover, x: SymbolicPoint, N: int) -> list[str]:
    """
    Kept words with no kept follower.

    For a kept word w, a follower is the central window at g+1 of an
    occurrence of w at g, with |g| <= N. A kept word is consistent when at
    least one of its followers is kept; the others are returned.
    """
    length = 2 * c.resolution + 1
    codes = window_codes(x, -c.resolution, length, -N, N + 1)
    here, following = codes[:-1], codes[1:]
    kept = np.array([e.word.code() for e in c.entries], dtype=np.int64)
    violations = []
    for e in c.entries:
        followers = following[here == e.word.code()]
        if followers.size == 0 or not np.isin(followers, kept).any():
            violations.append(str(e.word))
    if violations:
        logger.info(f"shift-consistency violations: {violations}")
    return violations


def cover_in_orbit(c: CoACover, x: SymbolicPoint, N: int, span_factor: int = 1) -> bool:
    """True iff every kept word occurs as a central window of x at some |g| <= N * span_factor."""
    reach = N * span_factor
    codes = np.unique(window_codes(x, -c.resolution, 2 * c.resolution + 1, -reach, reach))
    kept = np.array([e.word.code() for e in c.entries], dtype=np.int64)
    return bool(np.isin(kept, codes).all())


def s_generic_probe(
    x: SymbolicPoint,
    F: FolnerSequence,
    k: int,
    N: int,
    tol: Fraction | float | str = DEFAULT_TOLERANCE,
    headline_fraction: Fraction = DEFAULT_HEADLINE_FRACTION,
    threads: int = 1,
) -> bool:
    """
    Whether the central window of ``x`` is kept in its own cover.

    A False answer shows x lies outside its own center of attraction at
    resolution k, so that center is not generated by x.
    """
    central = str(window(x, -k, 2 * k + 1))
    cover = coa_cover(x, F, k, N, tol, headline_fraction, threads)
    return central in cover.kept_words


def covers_equal(c1: CoACover, c2: CoACover) -> bool:
    if c1.resolution != c2.resolution:
        raise ValueError(f"Covers at different resolutions: {c1.resolution} vs {c2.resolution}")
    return set(c1.kept_words) == set(c2.kept_words)


def refinement_violations(fine: CoACover, coarse: CoACover) -> list[str]:
    """Kept words of ``fine`` whose central subword is not kept by ``coarse``."""
    if fine.resolution != coarse.resolution + 1:
        raise ValueError(
            f"Refinement needs consecutive resolutions, got {coarse.resolution} and {fine.resolution}"
        )
    coarse_words = set(coarse.kept_words)
    return [
        str(e.word)
        for e in fine.entries
        if str(Word(e.word.symbols[1:-1], e.word.alphabet)) not in coarse_words
    ]


def neighborhood_thickness(
    x: SymbolicPoint,
    cover: CoACover,
    horizons: Iterable[int],
) -> list[tuple[int, int]]:
    """(H, longest run of the union visit set inside [0, H]) for each H."""
    visits = region_visit_set(x, cover.cylinders())
    return [(H, max_run(visits, 0, H)) for H in horizons]


def cover_of_words(words: Sequence[Word | str], k: int, tol: Fraction = DEFAULT_TOLERANCE) -> CoACover:
    """A cover holding the given words with placeholder scores; for checks on hand-made covers."""
    entries = tuple(
        sorted(
            (CoverEntry(as_word(w), Fraction(1), Fraction(1)) for w in words),
            key=lambda e: e.word.code(),
        )
    )
    for e in entries:
        if len(e.word) != 2 * k + 1:
            raise ValueError(f"Word {e.word} does not have length {2 * k + 1}")
    return CoACover(resolution=k, tolerance=tol, horizon=0, entries=entries)

"""
Point and tuple probes: sensitivity, almost periodicity, topological
ergodicity along one orbit, and witnesses for tuple sensitivity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal, Optional, Sequence

import numpy as np

from orbitdensity.data.io_utils import to_fraction
from orbitdensity.density.visits import visit_set
from orbitdensity.shift.metric import MetricValue, metric, scan_order
from orbitdensity.shift.points import (
    Cylinder,
    SymbolicPoint,
    Word,
    mutate_finitely,
    shift_point,
    window_codes,
)

logger = logging.getLogger(__name__)

MAX_TARGETS = 5


# ========================== SENSITIVITY ==========================

@dataclass(frozen=True)
class SensitivityWitness:
    """
    ``point`` lies in the radius-2^-k ball around x (``neighbourhood``),
    yet σ^g x and σ^g point are ``separation`` apart.
    """

    point: SymbolicPoint
    patch_index: int
    patch_symbol: int
    g: int
    neighbourhood: MetricValue
    separation: MetricValue

    def to_record(self) -> dict[str, Any]:
        return {
            "y": self.point.to_spec(),
            "patch": [self.patch_index, self.patch_symbol],
            "g": self.g,
            "neighbourhood": self.neighbourhood.to_record(),
            "separation": self.separation.to_record(),
        }


def sensitivity_probe(x: SymbolicPoint, k: int, eps: Fraction | str, horizon: int) -> SensitivityWitness:
    """
    Flip the symbol of ``x`` at j = k+1 and shift by g = j.

    Raises
    ------
    ValueError
        If eps is outside (0, 1] or no index k < j <= horizon exists.
    """
    eps = to_fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError(f"eps must lie in (0, 1], got {eps}")
    if k < 0:
        raise ValueError(f"Resolution k must be >= 0, got {k}")
    j = k + 1
    if j > horizon:
        raise ValueError(f"No admissible patch index: need k < j <= horizon, got k={k}, horizon={horizon}")
    symbol = (x[j] + 1) % x.alphabet.size
    y = mutate_finitely(x, [(j, symbol)])
    separation = metric(shift_point(x, j), shift_point(y, j), 0)
    if separation.value < eps:
        raise ValueError(f"Separation {separation} below eps={eps}")
    return SensitivityWitness(y, j, symbol, j, metric(x, y, k), separation)


# ========================== RECURRENCE ==========================

def almost_periodic_probe(x: SymbolicPoint, k: int, horizon: int) -> dict[str, Optional[int]]:
    """
    Largest return gap of each central word of length 2k+1 seen on
    [-horizon, horizon]; None for a word seen once.
    """
    length = 2 * k + 1
    codes = window_codes(x, -k, length, -horizon, horizon)
    gaps: dict[str, Optional[int]] = {}
    for code in np.unique(codes).tolist():
        positions = np.flatnonzero(codes == code)
        word = str(Word.from_code(int(code), length, x.alphabet))
        gaps[word] = int(np.diff(positions).max()) if positions.size > 1 else None
    return gaps


def ergodicity_probe(x: SymbolicPoint, U: Cylinder, V: Cylinder, horizon: int) -> Optional[int]:
    """
    Largest gap of {g : some |h| <= horizon has σ^h x in U and σ^(g+h) x in V}
    on [-horizon/2, horizon/2].

    Only shifts along the orbit of x are tried, so this under-approximates
    N(U, V).
    """
    half = horizon // 2
    in_u = visit_set(x, U).mask(-horizon, horizon)
    in_v = visit_set(x, V).mask(-horizon - half, horizon + half)
    width = 2 * horizon + 1
    hits = [
        g for g in range(-half, half + 1)
        if np.any(in_u & in_v[g + half : g + half + width])
    ]
    if len(hits) < 2:
        return None
    return int(np.diff(hits).max())


# ========================== TUPLE SENSITIVITY ==========================

@dataclass(frozen=True)
class TupleWitness:
    """
    Points y_i near ``center`` and one shift g with σ^g y_i near target i.

    In "splice" mode ``patches[i]`` rewrites center into y_i; in "orbit"
    mode y_i = σ^{shifts[i]} center.
    """

    mode: str
    g: int
    points: tuple[SymbolicPoint, ...]
    patches: tuple[tuple[tuple[int, int], ...], ...] = ()
    shifts: tuple[int, ...] = ()

    def to_record(self) -> dict[str, Any]:
        return {
            "mode": self.mode,
            "g": self.g,
            "y": [p.to_spec() for p in self.points],
            "patches": [[list(p) for p in ps] for ps in self.patches],
            "shifts": list(self.shifts),
        }


def _splice(center: SymbolicPoint, targets: Sequence[SymbolicPoint], k: int, horizon: int) -> Optional[TupleWitness]:
    target_windows = [t.block(-k, k) for t in targets]
    for g in scan_order(0, horizon).tolist():
        here = center.block(g - k, g + k)
        if all(np.array_equal(here, tw) for tw in target_windows):
            return TupleWitness("splice", g, tuple(center for _ in targets), tuple(() for _ in targets))
        if abs(g) > 2 * k:
            patches = tuple(
                tuple((g + j - k, int(tw[j])) for j in range(2 * k + 1) if here[j] != tw[j])
                for tw in target_windows
            )
            points = tuple(mutate_finitely(center, p) for p in patches)
            return TupleWitness("splice", g, points, patches)
    return None


def _orbit(center: SymbolicPoint, targets: Sequence[SymbolicPoint], k: int, horizon: int) -> Optional[TupleWitness]:
    length = 2 * k + 1
    own = window_codes(center, -k, length, 0, 0)[0]
    near_center = window_codes(center, -k, length, -horizon, horizon) == own
    wide = window_codes(center, -k, length, -2 * horizon, 2 * horizon)
    near_targets = [wide == window_codes(t, -k, length, 0, 0)[0] for t in targets]
    if not near_center.any() or not all(m.any() for m in near_targets):
        return None
    width = 2 * horizon + 1
    for g in scan_order(0, horizon).tolist():
        shifts = []
        for m in near_targets:
            both = np.flatnonzero(near_center & m[g + horizon : g + horizon + width])
            if both.size == 0:
                break
            # smallest |h|, positive first
            h = both - horizon
            shifts.append(int(h[np.lexsort((-h, np.abs(h)))][0]))
        else:
            points = tuple(shift_point(center, h) for h in shifts)
            return TupleWitness("orbit", g, points, shifts=tuple(shifts))
    return None


def tuple_sensitivity_witness(
    center: SymbolicPoint,
    targets: Sequence[SymbolicPoint],
    k: int,
    horizon: int,
    mode: Literal["splice", "orbit"] = "splice",
) -> Optional[TupleWitness]:
    """
    Search points y_i within 2^-k of ``center`` and one g with σ^g y_i
    within 2^-k of ``targets[i]`` for every i.

    "splice" copies each target's central window into center at g (any
    |g| > 2k works on the full shift); "orbit" only uses translates of
    center, so it can fail where splicing succeeds. An identity witness at
    g = 0 or small |g| is taken first when the windows already match.

    Returns None when nothing is found within ``horizon``.
    """
    if not targets:
        raise ValueError("tuple_sensitivity_witness needs at least one target")
    if len(targets) > MAX_TARGETS:
        raise ValueError(f"At most {MAX_TARGETS} targets supported, got {len(targets)}")
    if k < 0:
        raise ValueError(f"Resolution k must be >= 0, got {k}")
    for t in targets:
        if t.alphabet != center.alphabet:
            raise ValueError("Targets and center use different alphabets")
    if mode == "splice":
        witness = _splice(center, targets, k, horizon)
    elif mode == "orbit":
        witness = _orbit(center, targets, k, horizon)
    else:
        raise ValueError(f"Unknown mode {mode!r}; expected 'splice' or 'orbit'")
    logger.info(f"tuple witness ({mode}) for {len(targets)} targets: {'g=' + str(witness.g) if witness else 'none'}")
    return witness

"""
Pair Chaos at a Finite Horizon
------------------------------

Witness searches over the shifts |g| <= horizon, all driven by one vectorised
distance profile (``agreement_exponents``):

    proximal_search      smallest certified d(σ^g x, σ^g y)
    asymptotic_tail      largest certified d(σ^g x, σ^g y) over n < |g| <= horizon
    li_yorke_verdict     proximal evidence plus tails bounded away from 0
    f_chaotic_witness    approach/separation sequences toward y and between
                         the translated pair

Shifts are scanned in the order 0, 1, -1, 2, -2, ...; the first shift in
that order realising a value is its witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional

import numpy as np

from orbitdensity.data.io_utils import format_fraction, to_fraction
from orbitdensity.shift.metric import MetricValue, agreement_exponents, scan_order
from orbitdensity.shift.points import SymbolicPoint

logger = logging.getLogger(__name__)

DEFAULT_SEPARATION = Fraction(1, 2)


def _closeness(codes: np.ndarray, resolution: int) -> np.ndarray:
    """Larger is closer: the exponent, or R+1 for agreement on every probed coordinate."""
    return np.where(codes < 0, resolution + 1, codes)


def _ordered_closeness(
    x: SymbolicPoint,
    y: SymbolicPoint,
    g_lo_abs: int,
    horizon: int,
    resolution: int,
    shift_both: bool = True,
) -> tuple[np.ndarray, np.ndarray]:
    order = scan_order(g_lo_abs, horizon)
    codes = agreement_exponents(x, y, -horizon, horizon, resolution, shift_both)
    return order, _closeness(codes[order + horizon], resolution)


def _value(key: int, resolution: int) -> MetricValue:
    if key > resolution:
        return MetricValue.upper_bound(resolution + 1)
    return MetricValue.exact(int(key))


def _witness_records(pairs: Iterable[tuple[int, MetricValue]]) -> list[dict[str, Any]]:
    return [{"g": g, "distance": v.to_record()} for g, v in pairs]


def _improvements(order: np.ndarray, keys: np.ndarray) -> np.ndarray:
    """Positions in scan order where closeness beats every earlier shift."""
    if keys.size == 0:
        return np.zeros(0, dtype=np.int64)
    best_before = np.concatenate(([-1], np.maximum.accumulate(keys)[:-1]))
    return np.flatnonzero(keys > best_before)


# ========================== PROXIMALITY ==========================

@dataclass(frozen=True)
class ProximalResult:
    minimum: MetricValue
    witnesses: tuple[tuple[int, MetricValue], ...]
    horizon: int
    resolution: int

    def to_record(self) -> dict[str, Any]:
        return {
            "minimum": self.minimum.to_record(),
            "witnesses": _witness_records(self.witnesses),
            "horizon": self.horizon,
            "resolution": self.resolution,
        }


def proximal_search(x: SymbolicPoint, y: SymbolicPoint, horizon: int, R: int) -> ProximalResult:
    """
    Smallest certified d(σ^g x, σ^g y) over |g| <= horizon.

    ``witnesses`` lists every shift that improved on all earlier ones, so
    their distances strictly decrease and the last one realises ``minimum``.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    order, keys = _ordered_closeness(x, y, 0, horizon, R)
    witnesses = tuple((int(order[i]), _value(int(keys[i]), R)) for i in _improvements(order, keys))
    result = ProximalResult(witnesses[-1][1], witnesses, horizon, R)
    logger.debug(f"proximal search to {horizon}: min {result.minimum} after {len(witnesses)} improvements")
    return result


@dataclass(frozen=True)
class TailResult:
    n: int
    value: MetricValue
    g: int

    def to_record(self) -> dict[str, Any]:
        return {"n": self.n, "distance": self.value.to_record(), "g": self.g}


def asymptotic_tail(x: SymbolicPoint, y: SymbolicPoint, n: int, horizon: int, R: int) -> TailResult:
    """
    Largest certified d(σ^g x, σ^g y) over n < |g| <= horizon, with the
    first shift (in scan order) realising it.
    """
    if n < 0 or n >= horizon:
        raise ValueError(f"asymptotic_tail needs 0 <= n < horizon, got n={n}, horizon={horizon}")
    order, keys = _ordered_closeness(x, y, n + 1, horizon, R)
    i = int(np.argmin(keys))
    return TailResult(n, _value(int(keys[i]), R), int(order[i]))


# ========================== LI-YORKE ==========================

@dataclass(frozen=True)
class ChaosVerdict:
    """
    Li-Yorke evidence for a pair.

    ``liyorke`` holds when the proximal minimum is at most
    ``proximal_threshold`` and every tail value is an exact distance of at
    least ``separation``.
    """

    proximal_evidence: tuple[tuple[int, MetricValue], ...]
    proximal_min: MetricValue
    tail_sup: tuple[TailResult, ...]
    liyorke: bool
    horizon: int
    resolution: int
    proximal_threshold: Fraction
    separation: Fraction

    @property
    def proximal(self) -> bool:
        return self.proximal_min.value <= self.proximal_threshold

    @property
    def separated(self) -> bool:
        return all(t.value.is_exact and t.value.value >= self.separation for t in self.tail_sup)

    def to_record(self) -> dict[str, Any]:
        return {
            "liyorke": self.liyorke,
            "proximal": self.proximal,
            "separated": self.separated,
            "proximal_min": self.proximal_min.to_record(),
            "proximal_evidence": _witness_records(self.proximal_evidence),
            "tail_sup": [t.to_record() for t in self.tail_sup],
            "horizon": self.horizon,
            "resolution": self.resolution,
            "proximal_threshold": format_fraction(self.proximal_threshold),
            "separation": format_fraction(self.separation),
        }


def li_yorke_verdict(
    x: SymbolicPoint,
    y: SymbolicPoint,
    horizon: int,
    R: int,
    proximal_threshold: Fraction | str,
    tail_indices: Iterable[int],
    separation: Fraction | str = DEFAULT_SEPARATION,
) -> ChaosVerdict:
    """
    Proximal-but-not-asymptotic evidence for (x, y).

    Examples
    --------
    >>> z = make_indicator(example53_support())
    >>> li_yorke_verdict(z, make_periodic("1"), 10_000, 6, "1/32", [10, 100, 1000]).liyorke
    True
    """
    threshold = to_fraction(proximal_threshold)
    separation = to_fraction(separation)
    if threshold <= 0 or separation <= 0:
        raise ValueError(f"Thresholds must be positive, got {threshold} and {separation}")
    tail_indices = list(tail_indices)
    if not tail_indices:
        raise ValueError("li_yorke_verdict needs at least one tail index")

    prox = proximal_search(x, y, horizon, R)
    tails = tuple(asymptotic_tail(x, y, n, horizon, R) for n in tail_indices)
    proximal = prox.minimum.value <= threshold
    separated = all(t.value.is_exact and t.value.value >= separation for t in tails)
    verdict = ChaosVerdict(
        proximal_evidence=prox.witnesses,
        proximal_min=prox.minimum,
        tail_sup=tails,
        liyorke=proximal and separated,
        horizon=horizon,
        resolution=R,
        proximal_threshold=threshold,
        separation=separation,
    )
    logger.info(
        f"Li-Yorke {x.description} vs {y.description}: proximal={proximal} "
        f"separated={separated} -> {verdict.liyorke}"
    )
    return verdict


# ========================== F-CHAOTIC PAIRS ==========================

@dataclass(frozen=True)
class FChaoticWitness:
    """
    Four witness lists for an F-chaotic pair.

    l_seq : d(σ^g x, y) strictly decreasing (distance 1 excluded)
    r_seq : d(σ^g x, y) at its maximum, |g| strictly increasing
    s_seq, t_seq : the same for d(σ^g x, σ^g y)

    ``r_bound``/``t_bound`` are the infimum of the realised distances of
    r_seq/t_seq (None for an empty list).
    """

    l_seq: tuple[tuple[int, MetricValue], ...]
    r_seq: tuple[tuple[int, MetricValue], ...]
    s_seq: tuple[tuple[int, MetricValue], ...]
    t_seq: tuple[tuple[int, MetricValue], ...]
    horizon: int
    resolution: int
    r_bound: Optional[Fraction] = field(default=None)
    t_bound: Optional[Fraction] = field(default=None)

    @property
    def complete(self) -> bool:
        return all((self.l_seq, self.r_seq, self.s_seq, self.t_seq))

    def to_record(self) -> dict[str, Any]:
        return {
            "l_seq": _witness_records(self.l_seq),
            "r_seq": _witness_records(self.r_seq),
            "s_seq": _witness_records(self.s_seq),
            "t_seq": _witness_records(self.t_seq),
            "r_bound": format_fraction(self.r_bound) if self.r_bound is not None else None,
            "t_bound": format_fraction(self.t_bound) if self.t_bound is not None else None,
            "complete": self.complete,
            "horizon": self.horizon,
            "resolution": self.resolution,
        }


def _approach_chain(order: np.ndarray, keys: np.ndarray, R: int, count: int) -> tuple[tuple[int, MetricValue], ...]:
    chain = [(int(order[i]), _value(int(keys[i]), R)) for i in _improvements(order, keys) if keys[i] >= 1]
    return tuple(chain[-count:])


def _separation_chain(order: np.ndarray, keys: np.ndarray, R: int, count: int) -> tuple[tuple[int, MetricValue], ...]:
    far = int(keys.min())
    if far > R:
        # agreement everywhere probed: no certified separation
        return ()
    chain: list[tuple[int, MetricValue]] = []
    last_abs = -1
    for i in np.flatnonzero(keys == far):
        g = int(order[i])
        if abs(g) > last_abs:
            chain.append((g, MetricValue.exact(far)))
            last_abs = abs(g)
            if len(chain) == count:
                break
    return tuple(chain)


def f_chaotic_witness(
    x: SymbolicPoint,
    y: SymbolicPoint,
    horizon: int,
    R: int,
    count: int = 5,
) -> FChaoticWitness:
    """
    Greedy witness lists for the F-chaotic clauses at a finite horizon.

    An unrealisable clause yields an empty list; no limit is asserted.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    order, toward_y = _ordered_closeness(x, y, 0, horizon, R, shift_both=False)
    _, between = _ordered_closeness(x, y, 0, horizon, R, shift_both=True)

    l_seq = _approach_chain(order, toward_y, R, count)
    r_seq = _separation_chain(order, toward_y, R, count)
    s_seq = _approach_chain(order, between, R, count)
    t_seq = _separation_chain(order, between, R, count)
    witness = FChaoticWitness(
        l_seq=l_seq,
        r_seq=r_seq,
        s_seq=s_seq,
        t_seq=t_seq,
        horizon=horizon,
        resolution=R,
        r_bound=min((v.value for _, v in r_seq), default=None),
        t_bound=min((v.value for _, v in t_seq), default=None),
    )
    logger.info(f"F-chaotic witness {x.description} vs {y.description}: complete={witness.complete}")
    return witness

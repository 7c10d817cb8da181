"""
The 2^-n metric on the full shift, certified at a finite resolution.

d(x, y) = 2^-n with n the least i >= 0 such that x_i != y_i or x_-i != y_-i.
Probing coordinates |i| <= R either finds that n (an exact value) or shows
agreement on all of them, which only bounds d(x, y) by 2^-(R+1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal

import numpy as np

from orbitdensity.shift.points import SymbolicPoint

logger = logging.getLogger(__name__)

EXACT = "exact"
UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class MetricValue:
    """
    A certified distance: ``Exact(2^-n)`` or ``UpperBound(2^-(R+1))``.

    Values compare by ``value``; an UpperBound at resolution R is below every
    Exact value found at that resolution.
    """

    kind: Literal["exact", "upper_bound"]
    exponent: int

    def __post_init__(self):
        if self.kind not in (EXACT, UPPER_BOUND):
            raise ValueError(f"Unknown metric value kind {self.kind!r}")
        if self.exponent < 0:
            raise ValueError(f"Metric exponent must be >= 0, got {self.exponent}")

    @classmethod
    def exact(cls, n: int) -> "MetricValue":
        return cls(EXACT, n)

    @classmethod
    def upper_bound(cls, n: int) -> "MetricValue":
        return cls(UPPER_BOUND, n)

    @property
    def value(self) -> Fraction:
        return Fraction(1, 2**self.exponent)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    def __lt__(self, other: "MetricValue") -> bool:
        return self.value < other.value

    def __le__(self, other: "MetricValue") -> bool:
        return self.value <= other.value

    def __str__(self) -> str:
        label = "Exact" if self.is_exact else "UpperBound"
        return f"{label}(1/{2**self.exponent})"

    def to_record(self) -> dict[str, Any]:
        return {"kind": self.kind, "value": f"1/{2**self.exponent}"}

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> "MetricValue":
        numerator, denominator = (int(part) for part in record["value"].split("/"))
        if numerator != 1 or denominator & (denominator - 1):
            raise ValueError(f"Metric value {record['value']!r} is not a power of 1/2")
        return cls(record["kind"], denominator.bit_length() - 1)

    @classmethod
    def from_exponent_code(cls, code: int, resolution: int) -> "MetricValue":
        """Inverse of the agreement-exponent encoding (-1 = agreement up to R)."""
        if code < 0:
            return cls.upper_bound(resolution + 1)
        return cls.exact(int(code))


def _check_pair(x: SymbolicPoint, y: SymbolicPoint, resolution: int) -> None:
    if x.alphabet != y.alphabet:
        raise ValueError(f"Alphabet mismatch: {x.alphabet.size} vs {y.alphabet.size} symbols")
    if resolution < 0:
        raise ValueError(f"Resolution must be >= 0, got {resolution}")


def metric(x: SymbolicPoint, y: SymbolicPoint, resolution: int) -> MetricValue:
    """
    Certified d(x, y) from coordinates ``-resolution .. resolution``.

    Examples
    --------
    >>> from orbitdensity.shift.points import make_periodic
    >>> metric(make_periodic("0"), make_periodic("1"), 3)
    MetricValue(kind='exact', exponent=0)
    """
    _check_pair(x, y, resolution)
    code = int(agreement_exponents(x, y, 0, 0, resolution)[0])
    return MetricValue.from_exponent_code(code, resolution)


def agreement_exponents(
    x: SymbolicPoint,
    y: SymbolicPoint,
    g_lo: int,
    g_hi: int,
    resolution: int,
    shift_both: bool = True,
) -> np.ndarray:
    """
    Distance profile along a range of shifts.

    Entry ``g - g_lo`` is the least ``n <= resolution`` at which
    ``σ^g x`` and ``σ^g y`` (or ``y`` itself when ``shift_both`` is False)
    disagree at coordinate n or -n, and ``-1`` when they agree on every
    coordinate ``|i| <= resolution``.
    """
    _check_pair(x, y, resolution)
    if g_hi < g_lo:
        raise ValueError(f"Empty shift range: {g_lo} > {g_hi}")
    R = resolution
    count = g_hi - g_lo + 1
    xs = x.block(g_lo - R, g_hi + R)
    ys = y.block(g_lo - R, g_hi + R) if shift_both else y.block(-R, R)

    result = np.full(count, -1, dtype=np.int64)
    for n in range(R, -1, -1):
        # centre g sits at index (g - g_lo) + R of the blocks
        for i in {n, -n}:
            left = xs[R + i : R + i + count]
            right = ys[R + i : R + i + count] if shift_both else ys[R + i]
            result[left != right] = n
    logger.debug(f"agreement profile g in [{g_lo}, {g_hi}] at R={R}: {int((result < 0).sum())} agreements")
    return result


def scan_order(g_lo_abs: int, g_hi_abs: int) -> np.ndarray:
    """
    Shifts with ``g_lo_abs <= |g| <= g_hi_abs`` in the order 0, 1, -1, 2, -2, ...
    """
    if g_hi_abs < g_lo_abs:
        return np.zeros(0, dtype=np.int64)
    magnitudes = np.arange(max(g_lo_abs, 0), g_hi_abs + 1, dtype=np.int64)
    order = np.column_stack([magnitudes, -magnitudes]).ravel()
    if magnitudes.size and magnitudes[0] == 0:
        order = order[1:]
    return order

"""
Følner Sequences in (Z, +)
--------------------------

A Følner sequence is an index n -> finite set F_n of integers with
|(h + F_n) △ F_n| / |F_n| -> 0 for every h. Built-ins:

    standard_folner()   F_n = {-n, ..., n}
    example53_F()       R_0, R'_0, R_1, R'_1, ...   R_k = [k(k+1), k(k+1)+k]
    example53_H()       G_0, G'_0, G_1, G'_1, ...   G_k = [k(k+2)+1, k(k+2)+1+k]

with R'_k = -R_k and G'_k = -G_k. The Følner property is checked numerically
(``defect``, ``defect_table``), never assumed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

import numpy as np
import polars as pl

from orbitdensity.data.io_utils import format_fraction
from orbitdensity.sets.expressions import IntegerSet, IntervalFamily, Negate, Union

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FolnerSequence:
    """
    Indexed family n -> F_n of finite, nonempty sets of integers.

    Attributes
    ----------
    label : str
        Human-readable name used in reports.
    generator : Callable[[int], np.ndarray]
        Pure function returning the members of F_n.
    spec : dict
        Document that rebuilds this sequence (see ``orbitdensity.data.specs``).
    """

    label: str
    generator: Callable[[int], np.ndarray] = field(repr=False)
    spec: dict[str, Any] = field(default_factory=dict, compare=False)

    def __getitem__(self, n: int) -> np.ndarray:
        if n < 0:
            raise ValueError(f"Følner index must be >= 0, got {n}")
        block = np.asarray(self.generator(n), dtype=np.int64)
        if block.size == 0:
            raise ValueError(f"{self.label}: F_{n} is empty")
        if block.size > 1 and not np.all(np.diff(block) > 0):
            block = np.unique(block)
        return block

    def hull(self, N: int) -> tuple[int, int]:
        """Smallest interval containing F_0 .. F_N."""
        lo, hi = None, None
        for n in range(N + 1):
            block = self[n]
            lo = int(block[0]) if lo is None else min(lo, int(block[0]))
            hi = int(block[-1]) if hi is None else max(hi, int(block[-1]))
        return lo, hi


# ========================== BUILT-INS ==========================

def standard_folner() -> FolnerSequence:
    return FolnerSequence("standard", lambda n: np.arange(-n, n + 1, dtype=np.int64), {"type": "standard"})


def _r_block(k: int) -> np.ndarray:
    a = k * (k + 1)
    return np.arange(a, a + k + 1, dtype=np.int64)


def _g_block(k: int) -> np.ndarray:
    b = k * (k + 2) + 1
    return np.arange(b, b + k + 1, dtype=np.int64)


def _interleave(block: Callable[[int], np.ndarray]) -> Callable[[int], np.ndarray]:
    def generator(n: int) -> np.ndarray:
        k, odd = divmod(n, 2)
        b = block(k)
        return -b[::-1] if odd else b

    return generator


def example53_F() -> FolnerSequence:
    """
    F_{2k} = R_k and F_{2k+1} = -R_k.

    Examples
    --------
    >>> example53_F()[4].tolist()
    [6, 7, 8]
    """
    return FolnerSequence("example53_F", _interleave(_r_block), {"type": "example53_F"})


def example53_H() -> FolnerSequence:
    """H_{2k} = G_k and H_{2k+1} = -G_k."""
    return FolnerSequence("example53_H", _interleave(_g_block), {"type": "example53_H"})


def example53_support() -> IntegerSet:
    """
    U_n F_n for example53_F: the R-blocks and their mirrors.

    The R and G blocks tile the nonnegative integers
    (R_k = [k(k+1), k(k+1)+k], G_k = [(k+1)^2, (k+1)^2+k]), so membership
    only needs the position of |i| between consecutive k(k+1).
    """
    r_blocks = IntervalFamily("n*(n + 1)", "n*(n + 1) + n", first_index=0)
    return Union((r_blocks, Negate(r_blocks)))


def custom_folner(blocks: Sequence[Sequence[int]], label: str = "custom") -> FolnerSequence:
    """
    Finite user sequence of intervals ``[[start, end], ...]``.

    Indices past the last block raise ``ValueError``.
    """
    table = [(int(s), int(e)) for s, e in blocks]
    if not table:
        raise ValueError("Custom Følner sequence needs at least one block")
    for s, e in table:
        if s > e:
            raise ValueError(f"Custom Følner block [{s}, {e}] is empty")

    def generator(n: int) -> np.ndarray:
        if n >= len(table):
            raise ValueError(f"{label} has {len(table)} blocks, index {n} requested")
        s, e = table[n]
        return np.arange(s, e + 1, dtype=np.int64)

    return FolnerSequence(label, generator, {"type": "custom", "blocks": [list(b) for b in table]})


def translate(F: FolnerSequence, g: int) -> FolnerSequence:
    """(F + g)_n = {a + g : a in F_n}."""
    g = int(g)
    if g == 0:
        return F
    return FolnerSequence(
        f"{F.label}{g:+d}",
        lambda n: F[n] + g,
        {"type": "translate", "base": F.spec, "g": g},
    )


# ========================== FØLNER CHECKS ==========================

def defect(F: FolnerSequence, h: int, n: int) -> Fraction:
    """
    |(h + F_n) △ F_n| / |F_n|, exactly.

    Examples
    --------
    >>> defect(standard_folner(), 2, 5)
    Fraction(4, 11)
    """
    block = F[n]
    moved = np.setxor1d(block + h, block, assume_unique=True)
    return Fraction(int(moved.size), int(block.size))


def sizes(F: FolnerSequence, N: int) -> list[int]:
    if N < 0:
        raise ValueError(f"sizes needs N >= 0, got {N}")
    return [int(F[n].size) for n in range(N + 1)]


def is_interval(F: FolnerSequence, n: int) -> bool:
    block = F[n]
    return int(block[-1]) - int(block[0]) + 1 == block.size


def defect_table(F: FolnerSequence, hs: Iterable[int], ns: Iterable[int]) -> pl.DataFrame:
    """
    Defect and the interval bound 2|h|/|F_n| over a grid of (h, n).

    Columns: h, n, size, defect, bound, within_bound.
    """
    rows = []
    ns = list(ns)
    for h in hs:
        for n in ns:
            size = int(F[n].size)
            d = defect(F, h, n)
            bound = Fraction(2 * abs(h), size)
            rows.append({
                "h": h,
                "n": n,
                "size": size,
                "defect": format_fraction(d),
                "bound": format_fraction(bound),
                "within_bound": d <= bound,
            })
    logger.debug(f"defect table for {F.label}: {len(rows)} rows")
    return pl.DataFrame(
        rows,
        schema={
            "h": pl.Int64,
            "n": pl.Int64,
            "size": pl.Int64,
            "defect": pl.Utf8,
            "bound": pl.Utf8,
            "within_bound": pl.Boolean,
        },
    )

"""
Visit sets N(x, U) = {g : σ^g x ∈ U} for cylinders U and the sojourn of an
orbit in a union of cylinders.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

import numpy as np

from orbitdensity.density.report import DEFAULT_HEADLINE_FRACTION, DensityReport, density_report
from orbitdensity.folner.sequences import FolnerSequence
from orbitdensity.sets.expressions import IntegerSet, PredicateSet, Union
from orbitdensity.shift.points import Cylinder, SymbolicPoint, window

logger = logging.getLogger(__name__)


def _cylinder_mask(x: SymbolicPoint, cyl: Cylinder, lo: int, hi: int) -> np.ndarray:
    count = hi - lo + 1
    length = len(cyl.word)
    symbols = x.block(lo + cyl.position, hi + cyl.position + length - 1)
    out = np.ones(count, dtype=bool)
    for j, s in enumerate(cyl.word.symbols):
        out &= symbols[j : j + count] == s
    return out


def visit_set(x: SymbolicPoint, cyl: Cylinder) -> IntegerSet:
    """
    {g : window(σ^g x, m, |w|) = w} for the cylinder [w]_m.

    Membership of g reads the |w| symbols x_{g+m} .. x_{g+m+|w|-1}.
    """
    if cyl.word.alphabet != x.alphabet:
        raise ValueError("Cylinder and point use different alphabets")
    length = len(cyl.word)
    return PredicateSet(
        lambda g: window(x, g + cyl.position, length) == cyl.word,
        f"N({x.description}, {cyl})",
        block_mask=lambda lo, hi: _cylinder_mask(x, cyl, lo, hi),
    )


def region_visit_set(x: SymbolicPoint, region: Sequence[Cylinder]) -> IntegerSet:
    if not region:
        raise ValueError("Region must list at least one cylinder")
    return Union(tuple(visit_set(x, cyl) for cyl in region))


def sojourn(
    x: SymbolicPoint,
    region: Sequence[Cylinder],
    F: FolnerSequence,
    N: int,
    headline_fraction: Fraction = DEFAULT_HEADLINE_FRACTION,
) -> DensityReport:
    """
    Density report of the times the orbit of ``x`` spends in the union of
    ``region``; its ``density`` (when defined) estimates P_x(region).
    """
    visits = region_visit_set(x, region)
    report = density_report(visits, F, N, headline_fraction)
    logger.info(f"sojourn of {x.description} in {len(region)} cylinders: lower={report.headline_lower}")
    return report

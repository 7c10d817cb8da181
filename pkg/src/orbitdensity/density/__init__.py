"""
Density module - exact Følner ratios, density estimates and sojourn times.
"""

from .report import (
    DEFAULT_HEADLINE_FRACTION,
    DensityReport,
    count_ratio,
    folner_blocks,
    ratios_along,
    build_report,
    density_report,
    achieving_subsequence,
    ratios_frame,
)
from .visits import visit_set, region_visit_set, sojourn

__all__ = [
    "DEFAULT_HEADLINE_FRACTION",
    "DensityReport",
    "count_ratio",
    "folner_blocks",
    "ratios_along",
    "build_report",
    "density_report",
    "achieving_subsequence",
    "ratios_frame",
    "visit_set",
    "region_visit_set",
    "sojourn",
]

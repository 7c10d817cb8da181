"""
Attraction module - cylinder covers of minimal centers of attraction.
"""

from .cover import (
    DEFAULT_TOLERANCE,
    CoverEntry,
    CoACover,
    coa_cover,
    cover_shift_consistent,
    cover_in_orbit,
    s_generic_probe,
    covers_equal,
    refinement_violations,
    neighborhood_thickness,
    cover_of_words,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "CoverEntry",
    "CoACover",
    "coa_cover",
    "cover_shift_consistent",
    "cover_in_orbit",
    "s_generic_probe",
    "covers_equal",
    "refinement_violations",
    "neighborhood_thickness",
    "cover_of_words",
]

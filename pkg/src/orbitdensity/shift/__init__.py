"""
Shift module - points, words, cylinders and the metric of the full shift.
"""

from .points import (
    Alphabet,
    BINARY,
    Word,
    Cylinder,
    SymbolicPoint,
    PeriodicPoint,
    IndicatorPoint,
    Example51Point,
    WordEnumerationPoint,
    MutatedPoint,
    ShiftedPoint,
    as_word,
    make_periodic,
    make_indicator,
    make_example51_point,
    make_word_enumeration_point,
    mutate_finitely,
    shift_point,
    word_A,
    window,
    window_codes,
    missing_words,
)
from .metric import MetricValue, metric, agreement_exponents, scan_order

__all__ = [
    "Alphabet",
    "BINARY",
    "Word",
    "Cylinder",
    "SymbolicPoint",
    "PeriodicPoint",
    "IndicatorPoint",
    "Example51Point",
    "WordEnumerationPoint",
    "MutatedPoint",
    "ShiftedPoint",
    "as_word",
    "make_periodic",
    "make_indicator",
    "make_example51_point",
    "make_word_enumeration_point",
    "mutate_finitely",
    "shift_point",
    "word_A",
    "window",
    "window_codes",
    "missing_words",
    "MetricValue",
    "metric",
    "agreement_exponents",
    "scan_order",
]

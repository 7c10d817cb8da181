"""
I/O Utilities for orbitdensity
------------------------------

Rendering of exact rationals, canonical JSON documents and TSV tables, and
the project-relative paths used to locate run configurations.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

import polars as pl


# ============================================
# 1. PROJECT & DIRECTORY HELPERS
# ============================================

def get_project_root() -> Path:
    """Root of the repository (the directory holding ``configs/``)."""
    return Path(__file__).resolve().parents[3]


def get_config_dir() -> Path:
    return get_project_root() / "configs"


# ============================================
# 2. EXACT RATIONALS
# ============================================

def to_fraction(value: Fraction | int | float | str) -> Fraction:
    """
    Coerce user input to an exact rational.

    Floats go through their shortest decimal repr, so ``0.3`` becomes 3/10.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Not a rational number: {value!r}") from exc


def format_fraction(value: Fraction) -> str:
    """Always ``p/q``, integers included (``1`` renders as ``1/1``)."""
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return to_fraction(text)


def approx_decimal(value: Fraction, places: int = 6) -> str:
    """Decimal rendering rounded half-even at ``places`` digits, computed exactly."""
    sign = "-" if value < 0 else ""
    value = abs(value)
    scale = 10**places
    quotient, remainder = divmod(value.numerator * scale, value.denominator)
    twice = 2 * remainder
    if twice > value.denominator or (twice == value.denominator and quotient % 2 == 1):
        quotient += 1
    whole, frac = divmod(quotient, scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


# ============================================
# 3. DOCUMENTS AND TABLES
# ============================================

def dumps_record(record: Any) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def frame_to_tsv(df: pl.DataFrame) -> str:
    return df.write_csv(separator="\t")


def write_output(text: str, path: Optional[str | Path] = None) -> Optional[Path]:
    """
    Write ``text`` to ``path``; returns None when ``path`` is None, in which
    case the caller prints to stdout.
    """
    if path is None:
        return None
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    return out

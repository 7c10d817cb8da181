"""
Folner module - averaging sequences in (Z, +) and their defect checks.
"""

from .sequences import (
    FolnerSequence,
    standard_folner,
    example53_F,
    example53_H,
    example53_support,
    custom_folner,
    translate,
    defect,
    sizes,
    is_interval,
    defect_table,
)

__all__ = [
    "FolnerSequence",
    "standard_folner",
    "example53_F",
    "example53_H",
    "example53_support",
    "custom_folner",
    "translate",
    "defect",
    "sizes",
    "is_interval",
    "defect_table",
]

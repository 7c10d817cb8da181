"""
Sets module - decidable integer sets and finite-horizon classifiers.
"""

from .expressions import (
    Formula,
    IntegerSet,
    FiniteSet,
    Progression,
    IntervalFamily,
    PredicateSet,
    Union,
    Intersection,
    Complement,
    Translate,
    Negate,
    member,
    empty_set,
    integers,
    naturals,
    symmetrize,
    first_element,
)
from .classify import (
    max_gap,
    max_run,
    pw_syndetic_witness,
    thickly_syndetic_gaps,
    horizon_ladder,
    TripleEvidence,
    classify_triple,
)
from .examples import example52_blocks, example52_sets, example52_symmetrized

__all__ = [
    "Formula",
    "IntegerSet",
    "FiniteSet",
    "Progression",
    "IntervalFamily",
    "PredicateSet",
    "Union",
    "Intersection",
    "Complement",
    "Translate",
    "Negate",
    "member",
    "empty_set",
    "integers",
    "naturals",
    "symmetrize",
    "first_element",
    "max_gap",
    "max_run",
    "pw_syndetic_witness",
    "thickly_syndetic_gaps",
    "horizon_ladder",
    "TripleEvidence",
    "classify_triple",
    "example52_blocks",
    "example52_sets",
    "example52_symmetrized",
]

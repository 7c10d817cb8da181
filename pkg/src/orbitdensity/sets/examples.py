"""
Three positive-integer sets A, B, C whose triple intersection is empty
while each is syndetic and A, C are thick.

For n >= 1 the decades [10^n, 10^(n+1) - 1] are cut into three blocks

    A_n = [10^n,         10^n + 10n - 1]
    B_n = [10^n + 10n,   10^n + 11n - 1]
    C_n = [10^n + 11n,   10^(n+1) - 1]

and each set adds one residue class mod 10 to keep its gaps below 10:

    A = U A_n ∪ 10N,   B = U B_n ∪ (10N - 1),   C = U C_n ∪ (10N - 2)
"""

from __future__ import annotations

from orbitdensity.sets.expressions import (
    IntegerSet,
    Intersection,
    IntervalFamily,
    Progression,
    Union,
    naturals,
    symmetrize,
)


def example52_blocks() -> tuple[IntervalFamily, IntervalFamily, IntervalFamily]:
    """The block families (U A_n, U B_n, U C_n) without the residue classes."""
    a = IntervalFamily("10**n", "10**n + 10*n - 1", first_index=1)
    b = IntervalFamily("10**n + 10*n", "10**n + 11*n - 1", first_index=1)
    c = IntervalFamily("10**n + 11*n", "10**(n + 1) - 1", first_index=1)
    return a, b, c


def example52_sets() -> tuple[IntegerSet, IntegerSet, IntegerSet]:
    """
    Return (A, B, C).

    Examples
    --------
    >>> A, B, C = example52_sets()
    >>> 19 in A, 19 in B, 19 in C
    (True, True, False)
    """
    positive = naturals(1)
    a_blocks, b_blocks, c_blocks = example52_blocks()
    A = Union((a_blocks, Intersection((Progression(10, 0), positive))))
    B = Union((b_blocks, Intersection((Progression(10, 9), positive))))
    C = Union((c_blocks, Intersection((Progression(10, 8), positive))))
    return A, B, C


def example52_symmetrized() -> tuple[IntegerSet, IntegerSet, IntegerSet]:
    """(A*, B*, C*) with S* = S ∪ (-S)."""
    A, B, C = example52_sets()
    return symmetrize(A), symmetrize(B), symmetrize(C)

"""
Integer Set Expressions
-----------------------

Decidable subsets of the integers built as expression trees:

    FiniteSet, Progression, IntervalFamily      (leaves)
    Union, Intersection, Complement             (boolean algebra)
    Translate, Negate                           (group action, S -> -S)
    PredicateSet                                (black-box membership)

Every node answers two questions:

- ``i in S``            single membership
- ``S.mask(lo, hi)``    boolean numpy array over lo..hi (inclusive)

``mask`` is the vectorised form used by every range scan in the package and
must agree pointwise with ``__contains__``.

Interval endpoints are closed-form formulas in ``n`` evaluated with Python
integers, so ``10**n`` endpoints never overflow.
"""

from __future__ import annotations

import ast
import bisect
import logging
import threading
from abc import ABC, abstractmethod
from typing import Any, Callable, Iterable, Optional

import numpy as np

logger = logging.getLogger(__name__)


# ========================== FORMULAS ==========================

_BINOPS = {ast.Add: "+", ast.Sub: "-", ast.Mult: "*", ast.Pow: "**"}


def _compile_formula(node: ast.AST, text: str) -> Callable[[int], int]:
    """Turn a parsed formula node into a closure n -> int."""
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        value = node.value
        return lambda n: value
    if isinstance(node, ast.Name) and node.id == "n":
        return lambda n: n
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        inner = _compile_formula(node.operand, text)
        return lambda n: -inner(n)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _compile_formula(node.left, text)
        right = _compile_formula(node.right, text)
        if isinstance(node.op, ast.Add):
            return lambda n: left(n) + right(n)
        if isinstance(node.op, ast.Sub):
            return lambda n: left(n) - right(n)
        if isinstance(node.op, ast.Mult):
            return lambda n: left(n) * right(n)
        return _checked_pow(left, right, text)
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "pow"
        and len(node.args) == 2
        and not node.keywords
    ):
        base = _compile_formula(node.args[0], text)
        exponent = _compile_formula(node.args[1], text)
        return _checked_pow(base, exponent, text)
    raise ValueError(f"Unsupported term in formula {text!r}: {ast.dump(node)}")


def _checked_pow(base: Callable[[int], int], exponent: Callable[[int], int], text: str) -> Callable[[int], int]:
    def power(n: int) -> int:
        e = exponent(n)
        if e < 0:
            raise ValueError(f"Negative exponent {e} in formula {text!r} at n={n}")
        return base(n) ** e

    return power


class Formula:
    """
    Closed-form integer expression in ``n``.

    Accepts integer constants, ``n``, ``+``, ``-``, ``*`` and powers written as
    ``b**n`` or ``pow(b, n)``.

    Examples
    --------
    >>> Formula("10**n + 10*n - 1")(2)
    119
    """

    __slots__ = ("text", "_fn")

    def __init__(self, text: str | int):
        text = str(text).strip()
        try:
            tree = ast.parse(text, mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"Cannot parse formula {text!r}: {exc.msg}") from exc
        self.text = text
        self._fn = _compile_formula(tree.body, text)

    def __call__(self, n: int) -> int:
        return self._fn(n)

    def __repr__(self) -> str:
        return f"Formula({self.text!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Formula) and other.text == self.text

    def __hash__(self) -> int:
        return hash(self.text)


# ========================== BASE CLASS ==========================

class IntegerSet(ABC):
    """
    A decidable subset of the integers.

    Subclasses implement ``__contains__``, ``mask``, ``render`` and
    ``to_spec``. The operators ``|``, ``&``, ``~`` and ``+ g`` build
    Union, Intersection, Complement and Translate nodes.
    """

    @abstractmethod
    def __contains__(self, i: int) -> bool: ...

    @abstractmethod
    def mask(self, lo: int, hi: int) -> np.ndarray:
        """Boolean array whose entry ``j`` answers ``lo + j in self``."""

    @abstractmethod
    def render(self) -> str: ...

    @abstractmethod
    def to_spec(self) -> dict[str, Any]: ...

    def member(self, i: int) -> bool:
        return int(i) in self

    def __or__(self, other: IntegerSet) -> IntegerSet:
        return Union((self, other))

    def __and__(self, other: IntegerSet) -> IntegerSet:
        return Intersection((self, other))

    def __invert__(self) -> IntegerSet:
        return Complement(self)

    def __add__(self, g: int) -> IntegerSet:
        return Translate(self, g)

    def __neg__(self) -> IntegerSet:
        return Negate(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}<{self.render()}>"

    def __str__(self) -> str:
        return self.render()


def _check_range(lo: int, hi: int) -> int:
    if hi < lo:
        raise ValueError(f"Empty range: lo={lo} > hi={hi}")
    return hi - lo + 1


# ========================== LEAVES ==========================

class FiniteSet(IntegerSet):
    def __init__(self, elements: Iterable[int]):
        self.elements: frozenset[int] = frozenset(int(e) for e in elements)

    def __contains__(self, i: int) -> bool:
        return i in self.elements

    def mask(self, lo: int, hi: int) -> np.ndarray:
        out = np.zeros(_check_range(lo, hi), dtype=bool)
        for e in self.elements:
            if lo <= e <= hi:
                out[e - lo] = True
        return out

    def render(self) -> str:
        return "{" + ",".join(str(e) for e in sorted(self.elements)) + "}"

    def to_spec(self) -> dict[str, Any]:
        return {"type": "finite", "elems": sorted(self.elements)}


class Progression(IntegerSet):
    """Residue class ``m*Z + r``."""

    def __init__(self, modulus: int, residue: int = 0):
        if modulus < 1:
            raise ValueError(f"Progression modulus must be >= 1, got {modulus}")
        self.modulus = int(modulus)
        self.residue = int(residue) % self.modulus

    def __contains__(self, i: int) -> bool:
        return (i - self.residue) % self.modulus == 0

    def mask(self, lo: int, hi: int) -> np.ndarray:
        _check_range(lo, hi)
        # first member >= lo, then strided assignment
        out = np.zeros(hi - lo + 1, dtype=bool)
        first = lo + ((self.residue - lo) % self.modulus)
        if first <= hi:
            out[first - lo :: self.modulus] = True
        return out

    def render(self) -> str:
        return f"{self.modulus}Z+{self.residue}"

    def to_spec(self) -> dict[str, Any]:
        return {"type": "progression", "m": self.modulus, "r": self.residue}


class IntervalFamily(IntegerSet):
    """
    Union of blocks ``[start(n), end(n)]`` for ``n >= first_index``.

    Blocks must be nonempty, disjoint and strictly increasing from
    ``first_index`` on; a violation raises ``ValueError`` as soon as the
    offending block is generated. Blocks are generated lazily up to the
    largest integer queried and cached.

    Parameters
    ----------
    start, end : Formula | str | int
        Closed-form endpoints in ``n``.
    first_index : int
        First block index.
    """

    def __init__(self, start: Formula | str | int, end: Formula | str | int, first_index: int = 0):
        self.start = start if isinstance(start, Formula) else Formula(start)
        self.end = end if isinstance(end, Formula) else Formula(end)
        self.first_index = int(first_index)
        # (starts, ends), replaced together under the lock
        self._table: tuple[list[int], list[int]] = ([], [])
        self._next = self.first_index
        self._lock = threading.Lock()

    def _extend_to(self, bound: int) -> tuple[list[int], list[int]]:
        """Generate blocks until one starts beyond ``bound``."""
        table = self._table
        if table[0] and table[0][-1] > bound:
            return table
        with self._lock:
            starts, ends = list(self._table[0]), list(self._table[1])
            n = self._next
            while not starts or starts[-1] <= bound:
                s, e = self.start(n), self.end(n)
                if s > e:
                    raise ValueError(f"Block {n} of {self.render()} is empty: start={s} > end={e}")
                if ends and s <= ends[-1]:
                    raise ValueError(
                        f"Block {n} of {self.render()} starts at {s}, "
                        f"not after previous block end {ends[-1]}"
                    )
                starts.append(s)
                ends.append(e)
                n += 1
            self._next = n
            self._table = (starts, ends)
            return self._table

    def blocks(self, lo: int, hi: int) -> list[tuple[int, int]]:
        """Blocks meeting ``[lo, hi]``, unclipped, in increasing order."""
        starts, ends = self._extend_to(hi)
        left = bisect.bisect_left(ends, lo)
        right = bisect.bisect_right(starts, hi)
        return list(zip(starts[left:right], ends[left:right]))

    def __contains__(self, i: int) -> bool:
        starts, ends = self._extend_to(i)
        pos = bisect.bisect_right(starts, i) - 1
        return pos >= 0 and i <= ends[pos]

    def mask(self, lo: int, hi: int) -> np.ndarray:
        out = np.zeros(_check_range(lo, hi), dtype=bool)
        for s, e in self.blocks(lo, hi):
            out[max(s, lo) - lo : min(e, hi) - lo + 1] = True
        return out

    def render(self) -> str:
        return f"U[n>={self.first_index}][{self.start.text}, {self.end.text}]"

    def to_spec(self) -> dict[str, Any]:
        return {
            "type": "intervals",
            "start": self.start.text,
            "end": self.end.text,
            "from": self.first_index,
        }


class PredicateSet(IntegerSet):
    """
    Membership given by a callable; not expressible as a document.

    ``block_mask`` may supply a vectorised range evaluation, otherwise the
    predicate is applied element by element.
    """

    def __init__(
        self,
        predicate: Callable[[int], bool],
        description: str,
        block_mask: Optional[Callable[[int, int], np.ndarray]] = None,
    ):
        self.predicate = predicate
        self.description = description
        self.block_mask = block_mask

    def __contains__(self, i: int) -> bool:
        return bool(self.predicate(i))

    def mask(self, lo: int, hi: int) -> np.ndarray:
        size = _check_range(lo, hi)
        if self.block_mask is not None:
            return np.asarray(self.block_mask(lo, hi), dtype=bool)
        return np.fromiter((self.predicate(i) for i in range(lo, hi + 1)), dtype=bool, count=size)

    def render(self) -> str:
        return self.description

    def to_spec(self) -> dict[str, Any]:
        raise ValueError(f"Predicate set {self.description!r} has no document form")


# ========================== COMBINATORS ==========================

class Union(IntegerSet):
    def __init__(self, parts: Iterable[IntegerSet]):
        self.parts = tuple(parts)

    def __contains__(self, i: int) -> bool:
        return any(i in p for p in self.parts)

    def mask(self, lo: int, hi: int) -> np.ndarray:
        out = np.zeros(_check_range(lo, hi), dtype=bool)
        for p in self.parts:
            out |= p.mask(lo, hi)
        return out

    def render(self) -> str:
        if not self.parts:
            return "{}"
        return "(" + " ∪ ".join(p.render() for p in self.parts) + ")"

    def to_spec(self) -> dict[str, Any]:
        return {"type": "union", "of": [p.to_spec() for p in self.parts]}


class Intersection(IntegerSet):
    def __init__(self, parts: Iterable[IntegerSet]):
        self.parts = tuple(parts)
        if not self.parts:
            raise ValueError("Intersection needs at least one operand")

    def __contains__(self, i: int) -> bool:
        return all(i in p for p in self.parts)

    def mask(self, lo: int, hi: int) -> np.ndarray:
        out = np.ones(_check_range(lo, hi), dtype=bool)
        for p in self.parts:
            out &= p.mask(lo, hi)
        return out

    def render(self) -> str:
        return "(" + " ∩ ".join(p.render() for p in self.parts) + ")"

    def to_spec(self) -> dict[str, Any]:
        return {"type": "intersection", "of": [p.to_spec() for p in self.parts]}


class Complement(IntegerSet):
    def __init__(self, inner: IntegerSet):
        self.inner = inner

    def __contains__(self, i: int) -> bool:
        return i not in self.inner

    def mask(self, lo: int, hi: int) -> np.ndarray:
        return ~self.inner.mask(lo, hi)

    def render(self) -> str:
        return f"∁{self.inner.render()}"

    def to_spec(self) -> dict[str, Any]:
        return {"type": "complement", "of": self.inner.to_spec()}


class Translate(IntegerSet):
    """``S + g = {s + g : s in S}``."""

    def __init__(self, inner: IntegerSet, g: int):
        self.inner = inner
        self.g = int(g)

    def __contains__(self, i: int) -> bool:
        return (i - self.g) in self.inner

    def mask(self, lo: int, hi: int) -> np.ndarray:
        return self.inner.mask(lo - self.g, hi - self.g)

    def render(self) -> str:
        sign = "+" if self.g >= 0 else "-"
        return f"({self.inner.render()} {sign} {abs(self.g)})"

    def to_spec(self) -> dict[str, Any]:
        return {"type": "translate", "of": self.inner.to_spec(), "g": self.g}


class Negate(IntegerSet):
    """``-S = {-s : s in S}``."""

    def __init__(self, inner: IntegerSet):
        self.inner = inner

    def __contains__(self, i: int) -> bool:
        return -i in self.inner

    def mask(self, lo: int, hi: int) -> np.ndarray:
        return self.inner.mask(-hi, -lo)[::-1].copy()

    def render(self) -> str:
        return f"-{self.inner.render()}"

    def to_spec(self) -> dict[str, Any]:
        return {"type": "negate", "of": self.inner.to_spec()}


# ========================== CONSTRUCTORS ==========================

def member(S: IntegerSet, i: int) -> bool:
    return S.member(i)


def empty_set() -> IntegerSet:
    return FiniteSet(())


def integers() -> IntegerSet:
    return Complement(FiniteSet(()))


def naturals(start: int = 0) -> IntegerSet:
    """
    Integers ``>= start`` as doubling blocks ``[2^n - 1 + start, 2^(n+1) - 2 + start]``.

    Membership of ``i`` touches about ``log2(i - start)`` blocks.
    """
    return IntervalFamily(f"2**n - 1 + ({start})", f"2*2**n - 2 + ({start})", first_index=0)


def symmetrize(S: IntegerSet) -> IntegerSet:
    """``S ∪ (-S)``."""
    return Union((S, Negate(S)))


def first_element(S: IntegerSet, lo: int, hi: int) -> Optional[int]:
    """Smallest member of ``S`` in ``[lo, hi]`` or None."""
    hits = np.flatnonzero(S.mask(lo, hi))
    return int(hits[0]) + lo if hits.size else None


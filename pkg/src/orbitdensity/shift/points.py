"""
Points of the Full Shift
------------------------

A point of the full shift over ``{0, ..., size-1}`` is a bi-infinite symbol
stream. Points here are lazy: ``x[i]`` evaluates a single coordinate and
``x.block(lo, hi)`` evaluates a range as a numpy array. Evaluation is pure,
so concurrent readers always see the same symbols.

Constructions:
    make_periodic               w^∞ with a phase
    make_indicator              1_S for an integer set S
    make_example51_point        mirror limit of the factorial-length words A_n
    make_word_enumeration_point all words in length-lex order on the right
    mutate_finitely             finitely many coordinates rewritten
    shift_point                 (σ^g x)_i = x_{i+g}
"""

from __future__ import annotations

import logging
import math
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from orbitdensity.sets.expressions import IntegerSet

logger = logging.getLogger(__name__)

# codes are packed into int64
_MAX_CODE = 2**62
# single-coordinate reads cached per point; the cache is dropped when full
MEMO_LIMIT = 1 << 16


# ========================== ALPHABETS AND WORDS ==========================

@dataclass(frozen=True)
class Alphabet:
    """Symbols ``0 .. size-1``."""

    size: int = 2

    def __post_init__(self):
        if self.size < 2:
            raise ValueError(f"Alphabet size must be >= 2, got {self.size}")

    def symbols(self) -> range:
        return range(self.size)

    def words(self, length: int) -> Iterator["Word"]:
        """All words of the given length in lexicographic order."""
        for symbols in product(self.symbols(), repeat=length):
            yield Word(symbols, self)


BINARY = Alphabet(2)


@dataclass(frozen=True)
class Word:
    """
    A nonempty finite sequence of symbols.

    Words over alphabets with at most 10 symbols render as digit strings
    ("0110"); larger alphabets render dot-separated ("3.11.0").
    """

    symbols: tuple[int, ...]
    alphabet: Alphabet = BINARY

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if not self.symbols:
            raise ValueError("Word must have length >= 1")
        bad = [s for s in self.symbols if not 0 <= s < self.alphabet.size]
        if bad:
            raise ValueError(f"Symbols {bad} outside alphabet of size {self.alphabet.size}")

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet = BINARY) -> "Word":
        text = text.strip()
        if not text:
            raise ValueError("Cannot parse an empty word")
        try:
            if alphabet.size <= 10 and "." not in text:
                symbols = tuple(int(c) for c in text)
            else:
                symbols = tuple(int(c) for c in text.split("."))
        except ValueError as exc:
            raise ValueError(f"Word {text!r} is not a symbol string") from exc
        return cls(symbols, alphabet)

    @classmethod
    def from_code(cls, code: int, length: int, alphabet: Alphabet = BINARY) -> "Word":
        symbols = []
        for _ in range(length):
            code, s = divmod(code, alphabet.size)
            symbols.append(s)
        if code:
            raise ValueError(f"Code too large for a word of length {length}")
        return cls(tuple(reversed(symbols)), alphabet)

    def code(self) -> int:
        """Base-``size`` value, first symbol most significant; orders like the words."""
        value = 0
        for s in self.symbols:
            value = value * self.alphabet.size + s
        return value

    def reverse(self) -> "Word":
        return Word(self.symbols[::-1], self.alphabet)

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise ValueError("Cannot concatenate words over different alphabets")
        return Word(self.symbols + other.symbols, self.alphabet)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __str__(self) -> str:
        if self.alphabet.size <= 10:
            return "".join(str(s) for s in self.symbols)
        return ".".join(str(s) for s in self.symbols)


@dataclass(frozen=True)
class Cylinder:
    """``[w]_m``: points carrying ``word`` on coordinates m .. m+|w|-1."""

    word: Word
    position: int = 0

    def contains(self, x: "SymbolicPoint") -> bool:
        return window(x, self.position, len(self.word)) == self.word

    def __str__(self) -> str:
        return f"[{self.word}]_{self.position}"


def as_word(value: Word | str | Sequence[int], alphabet: Alphabet = BINARY) -> Word:
    if isinstance(value, Word):
        return value
    if isinstance(value, str):
        return Word.parse(value, alphabet)
    return Word(tuple(value), alphabet)


# ========================== POINTS ==========================

class SymbolicPoint(ABC):
    """
    A bi-infinite sequence over ``alphabet``.

    Subclasses implement ``get`` (single coordinate) and ``to_spec``;
    they may override ``block`` with a vectorised range evaluation.
    ``x[i]`` memoizes ``get`` behind a lock.
    """

    def __init__(self, alphabet: Alphabet, description: str):
        self.alphabet = alphabet
        self.description = description
        self._memo: dict[int, int] = {}
        self._memo_lock = threading.Lock()

    @abstractmethod
    def get(self, i: int) -> int: ...

    @abstractmethod
    def to_spec(self) -> dict[str, Any]: ...

    def __getitem__(self, i: int) -> int:
        i = int(i)
        cached = self._memo.get(i)
        if cached is not None:
            return cached
        value = int(self.get(i))
        with self._memo_lock:
            if len(self._memo) >= MEMO_LIMIT:
                self._memo.clear()
            self._memo.setdefault(i, value)
        return value

    def block(self, lo: int, hi: int) -> np.ndarray:
        """Symbols ``x_lo .. x_hi`` as an int64 array."""
        if hi < lo:
            raise ValueError(f"Empty block: lo={lo} > hi={hi}")
        return np.fromiter((self[i] for i in range(lo, hi + 1)), dtype=np.int64, count=hi - lo + 1)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.description})"


class PeriodicPoint(SymbolicPoint):
    def __init__(self, word: Word, phase: int = 0):
        super().__init__(word.alphabet, "periodic")
        self.word = word
        self.phase = int(phase)
        self._symbols = np.array(word.symbols, dtype=np.int64)

    def get(self, i: int) -> int:
        return self.word[(i - self.phase) % len(self.word)]

    def block(self, lo: int, hi: int) -> np.ndarray:
        if hi < lo:
            raise ValueError(f"Empty block: lo={lo} > hi={hi}")
        return self._symbols[(np.arange(lo, hi + 1) - self.phase) % len(self.word)]

    def to_spec(self) -> dict[str, Any]:
        spec: dict[str, Any] = {"type": "periodic", "word": str(self.word), "phase": self.phase}
        if self.alphabet != BINARY:
            spec["alphabet"] = self.alphabet.size
        return spec


class IndicatorPoint(SymbolicPoint):
    def __init__(self, support: IntegerSet):
        super().__init__(BINARY, "indicator")
        self.support = support

    def get(self, i: int) -> int:
        return 1 if i in self.support else 0

    def block(self, lo: int, hi: int) -> np.ndarray:
        return self.support.mask(lo, hi).astype(np.int64)

    def to_spec(self) -> dict[str, Any]:
        return {"type": "indicator", "set": self.support.to_spec()}


def word_A(n: int) -> Word:
    """
    The word A_n: A_1 = 01, then A_n = A_{n-1} followed by n*|A_{n-1}| copies
    of 0 (n even) or 1 (n odd). ``|A_n| = (n+1)!``.

    Examples
    --------
    >>> str(word_A(2))
    '010000'
    """
    if n < 1:
        raise ValueError(f"word_A needs n >= 1, got {n}")
    symbols = [0, 1]
    for j in range(2, n + 1):
        symbols.extend([j % 2] * (j * len(symbols)))
    return Word(tuple(symbols))


class Example51Point(SymbolicPoint):
    """
    x_i = A_∞[i] for i >= 0 and x_{-i} = A_∞[i-1] for i >= 1, where A_∞ is
    the common extension of all A_n. Coordinates -|A_n| .. |A_n|-1 read
    reverse(A_n) followed by A_n.
    """

    def __init__(self):
        super().__init__(BINARY, "example51")

    @staticmethod
    def _limit_symbols(j: np.ndarray) -> np.ndarray:
        # A_∞[j] for j >= 2 is the parity of the n with n! <= j < (n+1)!
        top = int(j.max()) if j.size else 0
        bounds = [2]
        n = 2
        while bounds[-1] <= top:
            n += 1
            bounds.append(math.factorial(n))
        n_of_j = np.searchsorted(np.array(bounds, dtype=np.int64), j, side="right") + 1
        return np.where(j < 2, j, n_of_j % 2).astype(np.int64)

    def get(self, i: int) -> int:
        j = i if i >= 0 else -i - 1
        return int(self._limit_symbols(np.array([j], dtype=np.int64))[0])

    def block(self, lo: int, hi: int) -> np.ndarray:
        if hi < lo:
            raise ValueError(f"Empty block: lo={lo} > hi={hi}")
        i = np.arange(lo, hi + 1, dtype=np.int64)
        return self._limit_symbols(np.where(i >= 0, i, -i - 1))

    def to_spec(self) -> dict[str, Any]:
        return {"type": "example51"}


class WordEnumerationPoint(SymbolicPoint):
    """Nonnegative coordinates list every word in length-lex order; the rest are 0."""

    def __init__(self, alphabet: Alphabet = BINARY):
        super().__init__(alphabet, "word_enumeration")
        self._offsets = [0]  # offsets[L-1] = first coordinate of the length-L section
        self._lock = threading.Lock()

    def _offsets_past(self, top: int) -> np.ndarray:
        with self._lock:
            q = self.alphabet.size
            while self._offsets[-1] <= top:
                length = len(self._offsets)
                self._offsets.append(self._offsets[-1] + length * q**length)
            return np.array(self._offsets, dtype=np.int64)

    def block(self, lo: int, hi: int) -> np.ndarray:
        if hi < lo:
            raise ValueError(f"Empty block: lo={lo} > hi={hi}")
        p = np.arange(lo, hi + 1, dtype=np.int64)
        out = np.zeros(p.size, dtype=np.int64)
        right = p >= 0
        if not right.any():
            return out
        pr = p[right]
        offsets = self._offsets_past(int(pr.max()))
        length = np.searchsorted(offsets, pr, side="right")
        rel = pr - offsets[length - 1]
        index, pos = np.divmod(rel, length)
        q = self.alphabet.size
        out[right] = (index // q ** (length - 1 - pos)) % q
        return out

    def get(self, i: int) -> int:
        return int(self.block(i, i)[0])

    def to_spec(self) -> dict[str, Any]:
        spec: dict[str, Any] = {"type": "word_enumeration"}
        if self.alphabet != BINARY:
            spec["alphabet"] = self.alphabet.size
        return spec


class MutatedPoint(SymbolicPoint):
    def __init__(self, base: SymbolicPoint, patches: dict[int, int]):
        super().__init__(base.alphabet, "mutation")
        self.base = base
        self.patches = dict(sorted(patches.items()))

    def get(self, i: int) -> int:
        if i in self.patches:
            return self.patches[i]
        return self.base[i]

    def block(self, lo: int, hi: int) -> np.ndarray:
        out = self.base.block(lo, hi).copy()
        for i, s in self.patches.items():
            if lo <= i <= hi:
                out[i - lo] = s
        return out

    def to_spec(self) -> dict[str, Any]:
        return {
            "type": "mutation",
            "base": self.base.to_spec(),
            "patches": [[i, s] for i, s in self.patches.items()],
        }


class ShiftedPoint(SymbolicPoint):
    def __init__(self, base: SymbolicPoint, g: int):
        super().__init__(base.alphabet, "shift")
        self.base = base
        self.g = int(g)

    def get(self, i: int) -> int:
        return self.base[i + self.g]

    def block(self, lo: int, hi: int) -> np.ndarray:
        return self.base.block(lo + self.g, hi + self.g)

    def to_spec(self) -> dict[str, Any]:
        return {"type": "shift", "base": self.base.to_spec(), "g": self.g}


# ========================== CONSTRUCTORS ==========================

def make_periodic(word: Word | str, phase: int = 0) -> SymbolicPoint:
    """
    The periodic point with ``x_i = word[(i - phase) mod |word|]``.

    Examples
    --------
    >>> x = make_periodic("01")
    >>> x[0], x[1], x[2]
    (0, 1, 0)
    """
    if isinstance(word, str) and not word.strip():
        raise ValueError("Periodic point needs a nonempty word")
    return PeriodicPoint(as_word(word), phase)


def make_indicator(support: IntegerSet) -> SymbolicPoint:
    return IndicatorPoint(support)


def make_example51_point() -> SymbolicPoint:
    return Example51Point()


def make_word_enumeration_point(alphabet: Alphabet = BINARY) -> SymbolicPoint:
    return WordEnumerationPoint(alphabet)


def mutate_finitely(x: SymbolicPoint, patches: Iterable[tuple[int, int]]) -> SymbolicPoint:
    """
    Rewrite finitely many coordinates of ``x``.

    Raises
    ------
    ValueError
        On a repeated index or a symbol outside the alphabet.
    """
    table: dict[int, int] = {}
    for index, symbol in patches:
        index, symbol = int(index), int(symbol)
        if index in table:
            raise ValueError(f"Duplicate patch index {index}")
        if not 0 <= symbol < x.alphabet.size:
            raise ValueError(f"Patch symbol {symbol} outside alphabet of size {x.alphabet.size}")
        table[index] = symbol
    return MutatedPoint(x, table)


def shift_point(x: SymbolicPoint, g: int) -> SymbolicPoint:
    """``(σ^g x)_i = x_{i+g}``; nested shifts collapse into one."""
    if isinstance(x, ShiftedPoint):
        return ShiftedPoint(x.base, x.g + int(g))
    return ShiftedPoint(x, g)


def window(x: SymbolicPoint, m: int, length: int) -> Word:
    """``x_m .. x_{m+length-1}`` as a Word."""
    if length < 1:
        raise ValueError(f"window length must be >= 1, got {length}")
    return Word(tuple(int(s) for s in x.block(m, m + length - 1)), x.alphabet)


def window_codes(x: SymbolicPoint, offset: int, length: int, lo: int, hi: int) -> np.ndarray:
    """
    Codes of the windows ``x_{g+offset} .. x_{g+offset+length-1}`` for g in lo..hi.

    Entry ``g - lo`` equals ``window(x, g + offset, length).code()``.
    """
    if length < 1:
        raise ValueError(f"window length must be >= 1, got {length}")
    q = x.alphabet.size
    if q**length >= _MAX_CODE:
        raise ValueError(f"Words of length {length} over {q} symbols do not fit int64 codes")
    count = hi - lo + 1
    symbols = x.block(lo + offset, hi + offset + length - 1)
    codes = np.zeros(count, dtype=np.int64)
    for j in range(length):
        codes = codes * q + symbols[j : j + count]
    return codes


def missing_words(x: SymbolicPoint, length: int, lo: int, hi: int) -> list[Word]:
    """Words of ``length`` that do not start anywhere in ``[lo, hi - length + 1]``."""
    q = x.alphabet.size
    if q**length > 2**20:
        raise ValueError(f"Refusing to enumerate {q}**{length} words")
    last = hi - length + 1
    if last < lo:
        return list(x.alphabet.words(length))
    present = set(np.unique(window_codes(x, 0, length, lo, last)).tolist())
    return [Word.from_code(c, length, x.alphabet) for c in range(q**length) if c not in present]

"""
Specification Documents
-----------------------

Points, integer sets and Følner sequences are described on the command line
by small structured documents, given inline as JSON, as a path to a JSON or
YAML file, or as a bare name:

    sets     "example52.A" | "example52.B" | "example52.C" | "example53_support"
             | "naturals" | "integers" | "empty"
             {"type": "finite", "elems": [...]}
             {"type": "progression", "m": 2, "r": 0}
             {"type": "intervals", "start": "10**n", "end": "10**n + 10*n - 1", "from": 1}
             {"type": "union" | "intersection", "of": [...]}
             {"type": "complement" | "negate" | "symmetrize", "of": {...}}
             {"type": "translate", "of": {...}, "g": 3}

    points   "example51" | "word_enumeration" | "z"
             {"type": "periodic", "word": "01", "phase": 0}
             {"type": "indicator", "set": <set>}
             {"type": "mutation", "base": <point>, "patches": [[i, s], ...]}
             {"type": "shift", "base": <point>, "g": 5}

    folner   "standard" | "example53_F" | "example53_H"
             {"type": "translate", "base": <folner>, "g": 2}
             {"type": "custom", "blocks": [[start, end], ...]}

Every ``to_spec()`` in the package produces a document these parsers accept.
Malformed documents raise ``SpecError`` naming the offending field.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

import yaml

from orbitdensity.folner.sequences import (
    FolnerSequence,
    custom_folner,
    example53_F,
    example53_H,
    example53_support,
    standard_folner,
    translate,
)
from orbitdensity.sets.examples import example52_sets
from orbitdensity.sets.expressions import (
    Complement,
    FiniteSet,
    IntegerSet,
    Intersection,
    IntervalFamily,
    Negate,
    Progression,
    Translate,
    Union,
    empty_set,
    integers,
    naturals,
    symmetrize,
)
from orbitdensity.shift.points import (
    Alphabet,
    Cylinder,
    SymbolicPoint,
    Word,
    make_example51_point,
    make_indicator,
    make_periodic,
    make_word_enumeration_point,
    mutate_finitely,
    shift_point,
)


class SpecError(ValueError):
    """A specification document that cannot be turned into an object."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


# ========================== LOADING ==========================

def load_document(source: Any, path: str = "$") -> Any:
    """
    Resolve inline JSON, a JSON/YAML file path, or a bare name.

    Dicts and lists pass through unchanged.
    """
    if not isinstance(source, str):
        return source
    text = source.strip()
    if not text:
        raise SpecError(path, "empty specification")
    if text[0] in "{[":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(path, f"invalid JSON ({exc.msg} at column {exc.colno})") from exc
    candidate = Path(text)
    if candidate.suffix.lower() in {".json", ".yaml", ".yml"}:
        if not candidate.is_file():
            raise SpecError(path, f"specification file {text!r} not found")
        raw = candidate.read_text(encoding="utf-8")
        try:
            if candidate.suffix.lower() == ".json":
                return json.loads(raw)
            return yaml.safe_load(raw)
        except (json.JSONDecodeError, yaml.YAMLError) as exc:
            raise SpecError(path, f"cannot parse {text!r}: {exc}") from exc
    return text


def _field(doc: dict, key: str, path: str) -> Any:
    if key not in doc:
        raise SpecError(f"{path}.{key}", "missing field")
    return doc[key]


def _int_field(doc: dict, key: str, path: str, default: Any = ...) -> int:
    value = doc.get(key, default) if default is not ... else _field(doc, key, path)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"{path}.{key}", f"expected an integer, got {value!r}")
    return value


def _dispatch(doc: Any, path: str, kind: str, named: dict[str, Callable[[], Any]],
              typed: dict[str, Callable[[dict, str], Any]]) -> Any:
    doc = load_document(doc, path)
    if isinstance(doc, str):
        if doc not in named:
            raise SpecError(path, f"unknown {kind} name {doc!r}; known: {sorted(named)}")
        return named[doc]()
    if not isinstance(doc, dict):
        raise SpecError(path, f"expected a {kind} document, got {type(doc).__name__}")
    kind_name = _field(doc, "type", path)
    if kind_name in named and kind_name not in typed:
        return named[kind_name]()
    if kind_name not in typed:
        raise SpecError(f"{path}.type", f"unknown {kind} type {kind_name!r}")
    try:
        return typed[kind_name](doc, path)
    except SpecError:
        raise
    except ValueError as exc:
        raise SpecError(path, str(exc)) from exc


# ========================== SETS ==========================

def _example52(index: int) -> Callable[[], IntegerSet]:
    return lambda: example52_sets()[index]


def _example52_star(index: int) -> Callable[[], IntegerSet]:
    return lambda: symmetrize(example52_sets()[index])


NAMED_SETS: dict[str, Callable[[], IntegerSet]] = {
    "example52.A": _example52(0),
    "example52.B": _example52(1),
    "example52.C": _example52(2),
    "example52.A*": _example52_star(0),
    "example52.B*": _example52_star(1),
    "example52.C*": _example52_star(2),
    "example53_support": example53_support,
    "naturals": naturals,
    "integers": integers,
    "empty": empty_set,
}


def _set_list(doc: dict, path: str) -> list[IntegerSet]:
    parts = _field(doc, "of", path)
    if not isinstance(parts, list) or not parts:
        raise SpecError(f"{path}.of", "expected a nonempty list of sets")
    return [parse_set(p, f"{path}.of[{i}]") for i, p in enumerate(parts)]


def _finite(doc: dict, path: str) -> IntegerSet:
    elems = _field(doc, "elems", path)
    if not isinstance(elems, list) or any(isinstance(e, bool) or not isinstance(e, int) for e in elems):
        raise SpecError(f"{path}.elems", "expected a list of integers")
    return FiniteSet(elems)


def _formula_text(doc: dict, key: str, path: str) -> str:
    value = _field(doc, key, path)
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SpecError(f"{path}.{key}", f"expected a formula string, got {value!r}")
    return str(value)


def _intervals(doc: dict, path: str) -> IntegerSet:
    try:
        return IntervalFamily(
            _formula_text(doc, "start", path),
            _formula_text(doc, "end", path),
            _int_field(doc, "from", path, 0),
        )
    except SpecError:
        raise
    except ValueError as exc:
        raise SpecError(f"{path}.start/end", str(exc)) from exc


_SET_TYPES: dict[str, Callable[[dict, str], IntegerSet]] = {
    "finite": _finite,
    "progression": lambda d, p: Progression(_int_field(d, "m", p), _int_field(d, "r", p, 0)),
    "intervals": _intervals,
    "union": lambda d, p: Union(_set_list(d, p)),
    "intersection": lambda d, p: Intersection(_set_list(d, p)),
    "complement": lambda d, p: Complement(parse_set(_field(d, "of", p), f"{p}.of")),
    "negate": lambda d, p: Negate(parse_set(_field(d, "of", p), f"{p}.of")),
    "symmetrize": lambda d, p: symmetrize(parse_set(_field(d, "of", p), f"{p}.of")),
    "translate": lambda d, p: Translate(parse_set(_field(d, "of", p), f"{p}.of"), _int_field(d, "g", p)),
}


def parse_set(doc: Any, path: str = "$") -> IntegerSet:
    return _dispatch(doc, path, "set", NAMED_SETS, _SET_TYPES)


# ========================== POINTS ==========================

NAMED_POINTS: dict[str, Callable[[], SymbolicPoint]] = {
    "example51": make_example51_point,
    "word_enumeration": make_word_enumeration_point,
    "z": lambda: make_indicator(example53_support()),
}


def _alphabet(doc: dict, path: str) -> Alphabet:
    size = _int_field(doc, "alphabet", path, 2)
    try:
        return Alphabet(size)
    except ValueError as exc:
        raise SpecError(f"{path}.alphabet", str(exc)) from exc


def _periodic(doc: dict, path: str) -> SymbolicPoint:
    word = _field(doc, "word", path)
    if not isinstance(word, str) or not word:
        raise SpecError(f"{path}.word", f"expected a nonempty symbol string, got {word!r}")
    try:
        parsed = Word.parse(word, _alphabet(doc, path))
    except ValueError as exc:
        raise SpecError(f"{path}.word", str(exc)) from exc
    return make_periodic(parsed, _int_field(doc, "phase", path, 0))


def _mutation(doc: dict, path: str) -> SymbolicPoint:
    base = parse_point(_field(doc, "base", path), f"{path}.base")
    patches = _field(doc, "patches", path)
    if not isinstance(patches, list):
        raise SpecError(f"{path}.patches", "expected a list of [index, symbol] pairs")
    pairs = []
    for i, patch in enumerate(patches):
        if (
            not isinstance(patch, list)
            or len(patch) != 2
            or any(isinstance(v, bool) or not isinstance(v, int) for v in patch)
        ):
            raise SpecError(f"{path}.patches[{i}]", f"expected [index, symbol], got {patch!r}")
        pairs.append((patch[0], patch[1]))
    try:
        return mutate_finitely(base, pairs)
    except ValueError as exc:
        raise SpecError(f"{path}.patches", str(exc)) from exc


_POINT_TYPES: dict[str, Callable[[dict, str], SymbolicPoint]] = {
    "periodic": _periodic,
    "indicator": lambda d, p: make_indicator(parse_set(_field(d, "set", p), f"{p}.set")),
    "example51": lambda d, p: make_example51_point(),
    "word_enumeration": lambda d, p: make_word_enumeration_point(_alphabet(d, p)),
    "mutation": _mutation,
    "shift": lambda d, p: shift_point(parse_point(_field(d, "base", p), f"{p}.base"), _int_field(d, "g", p)),
}


def parse_point(doc: Any, path: str = "$") -> SymbolicPoint:
    return _dispatch(doc, path, "point", NAMED_POINTS, _POINT_TYPES)


def parse_cylinder(text: str, alphabet: Alphabet = Alphabet(2), path: str = "$") -> Cylinder:
    """``"word@position"``, position defaulting to 0 (e.g. ``"111@-1"``)."""
    word_text, _, position = text.partition("@")
    try:
        return Cylinder(Word.parse(word_text, alphabet), int(position) if position else 0)
    except ValueError as exc:
        raise SpecError(path, f"bad cylinder {text!r}: {exc}") from exc


# ========================== FØLNER SEQUENCES ==========================

NAMED_FOLNER: dict[str, Callable[[], FolnerSequence]] = {
    "standard": standard_folner,
    "example53_F": example53_F,
    "example53_H": example53_H,
}


def _custom(doc: dict, path: str) -> FolnerSequence:
    blocks = _field(doc, "blocks", path)
    if not isinstance(blocks, list) or not all(
        isinstance(b, list) and len(b) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in b)
        for b in blocks
    ):
        raise SpecError(f"{path}.blocks", "expected a list of [start, end] integer pairs")
    try:
        return custom_folner(blocks, doc.get("label", "custom"))
    except ValueError as exc:
        raise SpecError(f"{path}.blocks", str(exc)) from exc


_FOLNER_TYPES: dict[str, Callable[[dict, str], FolnerSequence]] = {
    "translate": lambda d, p: translate(parse_folner(_field(d, "base", p), f"{p}.base"), _int_field(d, "g", p)),
    "custom": _custom,
}


def parse_folner(doc: Any, path: str = "$") -> FolnerSequence:
    return _dispatch(doc, path, "Følner", NAMED_FOLNER, _FOLNER_TYPES)

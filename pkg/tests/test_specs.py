"""
Tests for specification documents and the report helpers in data/.

Test Philosophy:
- Every object's to_spec() must parse back to an equivalent object
- Malformed documents fail with a SpecError naming the bad field

Run with: pytest tests/test_specs.py -v
"""

import json
import pytest
from fractions import Fraction

from orbitdensity.data.io_utils import (
    approx_decimal,
    dumps_record,
    format_fraction,
    to_fraction,
    write_output,
)
from orbitdensity.data.specs import (
    SpecError,
    load_document,
    parse_cylinder,
    parse_folner,
    parse_point,
    parse_set,
)
from orbitdensity.sets.examples import example52_sets
from orbitdensity.shift.points import Cylinder, Word, window


# ========================== FIXTURES ==========================

@pytest.fixture
def nested_set_doc():
    """(2Z ∪ {1}) shifted by 3: members near 0 are -3, -1, 1, 3, 4, 5"""
    return {
        "type": "translate",
        "g": 3,
        "of": {"type": "union", "of": [{"type": "progression", "m": 2, "r": 0}, {"type": "finite", "elems": [1]}]},
    }


def members(S, lo, hi):
    return [i for i in range(lo, hi + 1) if S.member(i)]


# ========================== SETS ==========================

class TestSets:
    def test_named(self):
        A = parse_set("example52.A")
        assert members(A, 1, 25) == members(example52_sets()[0], 1, 25)
        assert members(parse_set("naturals"), -2, 2) == [0, 1, 2]

    def test_inline_json(self, nested_set_doc):
        S = parse_set(json.dumps(nested_set_doc))
        assert members(S, -4, 5) == [-3, -1, 1, 3, 4, 5]

    def test_round_trip(self, nested_set_doc):
        S = parse_set(nested_set_doc)
        assert parse_set(S.to_spec()).to_spec() == S.to_spec()

    def test_decade_sets_round_trip(self):
        for S in example52_sets():
            assert members(parse_set(S.to_spec()), 1, 200) == members(S, 1, 200)

    def test_intervals(self):
        S = parse_set({"type": "intervals", "start": "n*n", "end": "n*n + 1", "from": 1})
        assert members(S, 0, 10) == [1, 2, 4, 5, 9, 10]

    def test_missing_field_is_named(self):
        with pytest.raises(SpecError) as info:
            parse_set({"type": "progression"})
        assert info.value.path == "$.m"
        assert str(info.value) == "$.m: missing field"

    def test_nested_error_path(self):
        with pytest.raises(SpecError) as info:
            parse_set({"type": "union", "of": [{"type": "bogus"}]})
        assert info.value.path == "$.of[0].type"

    def test_unknown_name(self):
        with pytest.raises(SpecError):
            parse_set("primes")

    def test_bad_formula(self):
        with pytest.raises(SpecError):
            parse_set({"type": "intervals", "start": "n / 2", "end": "n"})

    def test_bad_json(self):
        with pytest.raises(SpecError):
            parse_set('{"type": ')

    def test_spec_error_is_value_error(self):
        with pytest.raises(ValueError):
            parse_set({"type": "progression", "m": 0})


# ========================== POINTS ==========================

class TestPoints:
    def test_periodic(self):
        x = parse_point({"type": "periodic", "word": "01", "phase": 1})
        assert x.block(0, 3).tolist() == [1, 0, 1, 0]

    def test_indicator_of_named_set(self):
        z = parse_point('{"type":"indicator","set":"example53_support"}')
        assert z.block(0, 6).tolist() == [1, 0, 1, 1, 0, 0, 1]

    def test_named_points(self):
        assert str(window(parse_point("word_enumeration"), 0, 6)) == "010001"
        assert parse_point("z").block(-2, 0).tolist() == [1, 0, 1]

    def test_round_trip_of_derived_points(self):
        doc = {
            "type": "shift",
            "g": 4,
            "base": {"type": "mutation", "base": {"type": "example51"}, "patches": [[0, 1], [7, 1]]},
        }
        x = parse_point(doc)
        assert x.to_spec() == doc
        assert x.block(-4, 4).tolist() == parse_point(x.to_spec()).block(-4, 4).tolist()

    def test_bad_symbol_names_word(self):
        with pytest.raises(SpecError) as info:
            parse_point({"type": "periodic", "word": "012"})
        assert info.value.path == "$.word"

    def test_larger_alphabet(self):
        x = parse_point({"type": "periodic", "word": "012", "alphabet": 3})
        assert x.block(0, 3).tolist() == [0, 1, 2, 0]

    def test_bad_patch(self):
        with pytest.raises(SpecError) as info:
            parse_point({"type": "mutation", "base": "z", "patches": [[1]]})
        assert info.value.path == "$.patches[0]"

    def test_cylinder(self):
        assert parse_cylinder("111@-1") == Cylinder(Word.parse("111"), -1)
        assert parse_cylinder("0") == Cylinder(Word.parse("0"), 0)
        with pytest.raises(SpecError):
            parse_cylinder("12@0")


# ========================== FØLNER SEQUENCES ==========================

class TestFolner:
    def test_named(self):
        assert parse_folner("example53_H")[2].tolist() == [4, 5]

    def test_custom_and_translate(self):
        F = parse_folner({"type": "translate", "g": 1, "base": {"type": "custom", "blocks": [[0, 2], [5, 5]]}})
        assert F[0].tolist() == [1, 2, 3]
        assert parse_folner(F.spec)[1].tolist() == [6]

    def test_bad_blocks(self):
        with pytest.raises(SpecError):
            parse_folner({"type": "custom", "blocks": [[0]]})


# ========================== FILES ==========================

class TestFiles:
    def test_yaml_document(self, tmp_path):
        path = tmp_path / "evens.yaml"
        path.write_text("type: progression\nm: 2\nr: 0\n", encoding="utf-8")
        assert load_document(str(path)) == {"type": "progression", "m": 2, "r": 0}
        assert members(parse_set(str(path)), 0, 4) == [0, 2, 4]

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecError):
            load_document(str(tmp_path / "absent.json"))

    def test_write_output(self, tmp_path):
        out = write_output("x\n", tmp_path / "reports" / "r.json")
        assert out.read_text(encoding="utf-8") == "x\n"
        assert write_output("x\n") is None


# ========================== RATIONALS ==========================

class TestRationals:
    def test_to_fraction(self):
        assert to_fraction(0.3) == Fraction(3, 10)
        assert to_fraction("1/32") == Fraction(1, 32)
        assert to_fraction(2) == 2
        with pytest.raises(ValueError):
            to_fraction("a third")
        with pytest.raises(TypeError):
            to_fraction(True)

    def test_format_fraction(self):
        assert format_fraction(Fraction(1)) == "1/1"
        assert format_fraction(Fraction(-2, 4)) == "-1/2"

    def test_approx_decimal_rounds_half_even(self):
        assert approx_decimal(Fraction(1, 3)) == "0.333333"
        assert approx_decimal(Fraction(2, 3)) == "0.666667"
        assert approx_decimal(Fraction(1, 8), 2) == "0.12"
        assert approx_decimal(Fraction(3, 8), 2) == "0.38"
        assert approx_decimal(Fraction(-1, 2), 0) == "-0"

    def test_dumps_record_is_canonical(self):
        assert dumps_record({"b": 1, "a": "∩"}) == '{\n  "a": "∩",\n  "b": 1\n}\n'

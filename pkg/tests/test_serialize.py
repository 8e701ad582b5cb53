"""Canonical formatting tests: float rendering and JSON determinism."""
from __future__ import annotations

import json

import pytest

from fringe_arena.serialize import canonical_json, format_float, write_csv


class TestFormatFloat:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (0.0, "0"),
            (-0.0, "0"),
            (100.0, "100"),
            (0.2, "0.2"),
            (15.0, "15"),
            (0.02, "0.02"),
            (1e-9, "1e-09"),
            (3.0, "3"),
            (9.666666666666668, "9.66666666667"),
            (6.62607015e-34, "6.62607015e-34"),
            (-2.5, "-2.5"),
        ],
    )
    def test_known_values(self, value, expected):
        assert format_float(value) == expected

    def test_round_trips_at_12_digits(self):
        for value in (1 / 3, 2 / 7, 1.2345678901234e5, 9.87654321e-21):
            text = format_float(value)
            assert float(text) == float(format(value, ".12g"))

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            format_float(float("nan"))
        with pytest.raises(ValueError):
            format_float(float("inf"))


class TestCanonicalJson:
    def test_sorted_keys_and_valid_json(self):
        text = canonical_json({"b": 1, "a": [1.5, None, True], "c": {"y": "x"}})
        assert json.loads(text) == {"b": 1, "a": [1.5, None, True], "c": {"y": "x"}}
        assert text.index('"a"') < text.index('"b"') < text.index('"c"')

    def test_identical_inputs_identical_bytes(self):
        doc = {"values": [0.1, 0.2, 100.0], "tag": "x", "nested": {"k": 3.0}}
        assert canonical_json(doc) == canonical_json(dict(reversed(list(doc.items()))))

    def test_unsupported_type_rejected(self):
        with pytest.raises(TypeError):
            canonical_json({"x": object()})

    def test_empty_containers(self):
        assert canonical_json({}) == "{}"
        assert canonical_json([]) == "[]"


class TestWriteCsv:
    def test_header_and_float_cells(self):
        text = write_csv(("a", "b"), [(1.0, "x"), (0.5, "y")])
        assert text == "a,b\n1,x\n0.5,y\n"

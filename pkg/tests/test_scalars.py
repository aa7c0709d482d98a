import json
import math
from fractions import Fraction

import pytest

from aqbernstein.scalars import (
    MixedModeError,
    Tolerance,
    coerce,
    common_mode,
    format_scalar,
    parse_scalar,
    scalar_from_json,
    scalar_mode,
    scalar_to_json,
    scalars_close,
)


class TestParsing:
    def test_fraction_text(self):
        assert parse_scalar("3/7") == Fraction(3, 7)
        assert parse_scalar("-3/7") == Fraction(-3, 7)
        assert parse_scalar(" 2 ") == Fraction(2)

    def test_decimal_is_exact(self):
        assert parse_scalar("0.4") == Fraction(2, 5)
        assert parse_scalar("0.1") == Fraction(1, 10)  # not the float 0.1

    def test_float_mode(self):
        assert parse_scalar("0.4", "float") == 0.4
        assert parse_scalar("1/2", "float") == 0.5

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_scalar("two fifths")


class TestModes:
    def test_mode_tags(self):
        assert scalar_mode(Fraction(1, 2)) == "exact"
        assert scalar_mode(3) == "exact"
        assert scalar_mode(0.5) == "float"

    def test_common_mode_rejects_mixture(self):
        with pytest.raises(MixedModeError):
            common_mode(Fraction(1, 2), 0.5)

    def test_ints_are_neutral(self):
        assert common_mode(1, 2) is None
        assert common_mode(1, 0.5) == "float"
        assert common_mode(1, Fraction(1, 2)) == "exact"

    def test_coerce(self):
        assert coerce(2, "exact") == Fraction(2)
        assert coerce(2, "float") == 2.0
        with pytest.raises(MixedModeError):
            coerce(0.5, "exact")
        with pytest.raises(MixedModeError):
            coerce(Fraction(1, 2), "float")


class TestComparison:
    def test_exact_is_equality(self):
        assert scalars_close(Fraction(1, 3), Fraction(1, 3))
        assert not scalars_close(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**30))

    def test_float_uses_tolerance(self):
        assert scalars_close(1.0, 1.0 + 1e-12)
        assert not scalars_close(1.0, 1.0 + 1e-8)
        loose = Tolerance(rel_tol=1e-6, abs_tol=1e-6)
        assert loose.close(1.0, 1.0 + 1e-7)

    def test_mixed_comparison_rejected(self):
        with pytest.raises(MixedModeError):
            scalars_close(Fraction(1, 2), 0.5)


class TestSerialization:
    def test_exact_roundtrip(self):
        x = Fraction(-(10**40) + 1, 3**30)
        encoded = json.loads(json.dumps(scalar_to_json(x)))
        assert scalar_from_json(encoded) == x

    def test_float_roundtrip(self):
        x = math.pi
        assert scalar_from_json(json.loads(json.dumps(scalar_to_json(x)))) == x

    def test_formats(self):
        assert format_scalar(Fraction(1, 3)) == "1/3"
        assert format_scalar(Fraction(4)) == "4"
        assert format_scalar(-0.0) == "0"
        assert float(format_scalar(math.sqrt(2))) == math.sqrt(2)

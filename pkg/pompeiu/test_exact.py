#!/usr/bin/env python3
"""
Test suite for exact complex rationals

Validates arithmetic, coercion and the num/den text form.
"""

import sys
from fractions import Fraction

import pytest
from sympy import QQ, QQ_I, ZZ_I

from pompeiu.exact import ONE, ZERO, ComplexRational, as_exact, format_exact, is_exact, parse_exact


class TestArithmetic:
    def test_mixed_operands(self):
        z = ComplexRational(Fraction(1, 2), 1)
        assert z + 1 == ComplexRational(Fraction(3, 2), 1)
        assert 1 - z == ComplexRational(Fraction(1, 2), -1)
        assert 2 * z == ComplexRational(1, 2)
        assert z * z == ComplexRational(Fraction(-3, 4), 1)

    def test_division_by_conjugate(self):
        z = ComplexRational(3, 4)
        assert z / z == ONE
        assert (ONE / z) * z == ONE
        with pytest.raises(ZeroDivisionError):
            z / ZERO

    def test_real_values_compare_with_fractions(self):
        assert ComplexRational(Fraction(2, 4)) == Fraction(1, 2)
        assert hash(ComplexRational(5)) == hash(5)
        assert not ZERO
        assert ComplexRational(0, 1)

    def test_power(self):
        i = ComplexRational(0, 1)
        assert i ** 2 == -1
        assert i ** -1 == -i
        assert ComplexRational(2) ** 10 == 1024

    def test_immutable(self):
        with pytest.raises(AttributeError):
            ONE.re = Fraction(2)


class TestGaussianBackend:
    def test_value_is_a_gaussian_rational(self):
        z = ComplexRational(Fraction(1, 2), -3)
        assert z.gaussian == QQ_I(QQ(1, 2), -3)
        assert z.re == Fraction(1, 2) and z.im == -3
        assert isinstance(z.re, Fraction)

    def test_from_gaussian(self):
        assert ComplexRational.from_gaussian(ZZ_I(3, 4)) == ComplexRational(3, 4)
        assert ComplexRational.from_gaussian(QQ_I(5)) == 5

    def test_conjugate_and_norm(self):
        z = ComplexRational(3, Fraction(-4, 5))
        assert z.conjugate() == ComplexRational(3, Fraction(4, 5))
        assert z * z.conjugate() == z.norm_squared() == Fraction(241, 25)
        assert z ** 0 == ONE


class TestCoercion:
    def test_floats_are_rejected(self):
        assert not is_exact(0.5)
        with pytest.raises(TypeError):
            as_exact(0.5)
        with pytest.raises(TypeError):
            as_exact(1j)

    def test_strings_are_parsed(self):
        assert as_exact("3/4") == Fraction(3, 4)
        assert as_exact("-2") == -2


class TestTextForm:
    @pytest.mark.parametrize(
        "value, text",
        [
            (Fraction(3, 4), "3/4"),
            (0, "0/1"),
            (ComplexRational(Fraction(3, 4), Fraction(1, 2)), "3/4+1/2i"),
            (ComplexRational(-1, Fraction(-2, 3)), "-1/1-2/3i"),
        ],
    )
    def test_format(self, value, text):
        assert format_exact(value) == text
        assert parse_exact(text) == as_exact(value)

    def test_bare_imaginary_unit(self):
        assert parse_exact("+i") == ComplexRational(0, 1)
        assert parse_exact("2-i") == ComplexRational(2, -1)

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_exact("1.5")
        with pytest.raises(ValueError):
            parse_exact("")


def main():
    """Main entry point"""
    sys.exit(pytest.main([__file__, "-v"]))


if __name__ == "__main__":
    main()

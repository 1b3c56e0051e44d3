"""Dyadic arithmetic against a big-rational oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exactreal.dyadic import ONE, ZERO, Dyadic, div_directed
from exactreal.errors import ExponentOverflow

dyadics = st.builds(
    Dyadic,
    st.integers(min_value=-(1 << 48), max_value=1 << 48),
    st.integers(min_value=-64, max_value=64),
)


class TestNormalization:
    def test_canonical_form(self):
        d = Dyadic(12, -2)  # 3 * 2**0
        assert d.mantissa == 3 and d.exponent == 0

    def test_zero_is_unique(self):
        assert Dyadic(0, 17) == Dyadic(0, -5) == ZERO
        assert Dyadic(0, 17).exponent == 0

    @given(dyadics)
    def test_idempotent(self, d):
        again = Dyadic(d.mantissa, d.exponent)
        assert again.mantissa == d.mantissa and again.exponent == d.exponent

    def test_structural_equality_is_value_equality(self):
        assert Dyadic(3, -1) == Dyadic(6, -2)
        assert hash(Dyadic(3, -1)) == hash(Dyadic(6, -2))

    def test_exponent_overflow(self):
        with pytest.raises(ExponentOverflow):
            Dyadic(1, 1 << 63)


class TestArithmetic:
    def test_add_examples(self):
        assert Dyadic(1) + Dyadic(1) == Dyadic(1, 1)
        assert Dyadic(1) + Dyadic(-1) == ZERO
        assert Dyadic(3, -1) + Dyadic(1, -2) == Dyadic(7, -2)

    def test_mul_examples(self):
        assert Dyadic(3, -1) * Dyadic(3, -1) == Dyadic(9, -2)
        assert Dyadic(123, 4) * ZERO == ZERO
        assert Dyadic(5, 2) * Dyadic(-3, -4) == Dyadic(-15, -2)

    def test_neg_and_cmp(self):
        assert -ZERO == ZERO
        assert Dyadic(1, -1) < Dyadic(1)
        assert not Dyadic(3, -1) < Dyadic(6, -2)
        assert Dyadic(3, -1) == Dyadic(6, -2)

    @given(dyadics, dyadics)
    def test_add_matches_rationals(self, a, b):
        assert (a + b).to_fraction() == a.to_fraction() + b.to_fraction()

    @given(dyadics, dyadics)
    def test_sub_matches_rationals(self, a, b):
        assert (a - b).to_fraction() == a.to_fraction() - b.to_fraction()

    @given(dyadics, dyadics)
    def test_mul_matches_rationals(self, a, b):
        assert (a * b).to_fraction() == a.to_fraction() * b.to_fraction()

    @given(dyadics, dyadics)
    def test_cmp_matches_rationals(self, a, b):
        assert (a < b) == (a.to_fraction() < b.to_fraction())
        assert (a == b) == (a.to_fraction() == b.to_fraction())

    @given(dyadics, st.integers(min_value=-70, max_value=70))
    def test_scale2(self, d, k):
        assert d.scale2(k).to_fraction() == d.to_fraction() * Fraction(2) ** k

    def test_int_mixing(self):
        assert Dyadic(1, -1) + 1 == Dyadic(3, -1)
        assert 2 * Dyadic(3, -2) == Dyadic(3, -1)
        assert 1 - Dyadic(1, -2) == Dyadic(3, -2)


class TestRounding:
    def test_examples(self):
        # 2.25 rounded to 2 bits of precision
        assert Dyadic(9, -2).round_down(2) == Dyadic(2)
        assert Dyadic(9, -2).round_up(2) == Dyadic(5, -1)
        for p in range(1, 8):
            assert ONE.round_down(p) == ONE
            assert ONE.round_up(p) == ONE

    @given(dyadics, st.integers(min_value=1, max_value=40))
    def test_bracketing(self, d, p):
        assert d.round_down(p) <= d <= d.round_up(p)

    @given(dyadics, st.integers(min_value=1, max_value=40))
    def test_error_below_one_ulp(self, d, p):
        if d.mantissa == 0:
            return
        lead = abs(d.mantissa).bit_length() + d.exponent - 1
        ulp = Fraction(2) ** (lead - p)
        v = d.to_fraction()
        assert v - d.round_down(p).to_fraction() < ulp
        assert d.round_up(p).to_fraction() - v < ulp

    @given(dyadics, st.integers(min_value=-40, max_value=40))
    def test_grid_rounding(self, d, k):
        lo, hi = d.floor_to_grid(k), d.ceil_to_grid(k)
        assert lo <= d <= hi
        grid = Fraction(2) ** -k
        assert lo.to_fraction() % grid == 0
        assert hi.to_fraction() % grid == 0
        assert hi.to_fraction() - lo.to_fraction() <= grid


class TestStringsAndParsing:
    def test_decimal_rendering(self):
        assert str(Dyadic(1, -1)) == "0.5"
        assert str(Dyadic(-9, -2)) == "-2.25"
        assert str(Dyadic(3, 2)) == "12"

    def test_hex_rendering(self):
        assert Dyadic(-9, -2).to_hex_string() == "-0x9p-2"

    def test_parse_exact_decimals(self):
        assert Dyadic.parse("2.25") == Dyadic(9, -2)
        assert Dyadic.parse("-0.5") == Dyadic(-1, -1)
        assert Dyadic.parse("7") == Dyadic(7)

    def test_parse_rejects_non_dyadic(self):
        with pytest.raises(ValueError):
            Dyadic.parse("0.1")
        with pytest.raises(ValueError):
            Dyadic.from_fraction(Fraction(1, 3))

    @given(dyadics)
    def test_decimal_round_trip(self, d):
        assert Dyadic.parse(d.to_decimal_string()) == d


class TestDirectedDivision:
    @given(dyadics, dyadics, st.integers(min_value=4, max_value=60))
    def test_brackets_exact_quotient(self, a, b, bits):
        if b.mantissa == 0:
            return
        exact = a.to_fraction() / b.to_fraction()
        down = div_directed(a, b, bits, up=False)
        up = div_directed(a, b, bits, up=True)
        assert down.to_fraction() <= exact <= up.to_fraction()

    @given(dyadics, dyadics, st.integers(min_value=4, max_value=60))
    def test_relative_error(self, a, b, bits):
        if b.mantissa == 0 or a.mantissa == 0:
            return
        exact = a.to_fraction() / b.to_fraction()
        for up in (False, True):
            got = div_directed(a, b, bits, up).to_fraction()
            assert abs(got - exact) <= abs(exact) * Fraction(2) ** -(bits - 1)

    def test_exact_quotient_is_exact(self):
        assert div_directed(Dyadic(1), Dyadic(2), 10, up=False) == Dyadic(1, -1)
        assert div_directed(Dyadic(1), Dyadic(2), 10, up=True) == Dyadic(1, -1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            div_directed(ONE, ZERO, 10, up=False)

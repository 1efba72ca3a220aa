"""Base fields, values with infinity, and exact element arithmetic."""

from fractions import Fraction

import pytest

from maclane import INF, BaseField, format_value, parse_value
from maclane.base import vmul


class TestInfinity:
    def test_ordering(self):
        assert INF > Fraction(10**9)
        assert INF >= INF
        assert not INF < Fraction(-5)
        assert Fraction(1, 2) < INF
        assert INF == INF
        assert INF != Fraction(0)

    def test_absorbing_addition(self):
        assert INF + Fraction(3) is INF
        assert Fraction(-7, 2) + INF is INF
        assert INF + INF is INF

    def test_negation_rejected(self):
        with pytest.raises(ValueError):
            -INF

    def test_repr(self):
        assert repr(INF) == "inf"


class TestVmul:
    def test_finite(self):
        assert vmul(3, Fraction(1, 2)) == Fraction(3, 2)
        assert vmul(0, Fraction(5)) == 0

    def test_infinite(self):
        assert vmul(2, INF) is INF

    def test_zero_times_inf_rejected(self):
        with pytest.raises(ValueError):
            vmul(0, INF)


class TestValueParsing:
    def test_round_trip(self):
        for s in ("0", "3/2", "-7", "-11/64", "inf"):
            assert format_value(parse_value(s)) == s

    def test_whitespace(self):
        assert parse_value(" 1/2 ") == Fraction(1, 2)

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_value("a/b")


class TestBaseFieldConstruction:
    def test_rationals(self):
        b = BaseField.rationals(5)
        assert b.kind == "Q"
        assert b.p == 5
        assert str(b) == "Q(v_5)"

    def test_rational_functions(self):
        b = BaseField.rational_functions(3)
        assert b.kind == "Fpt"
        assert str(b) == "F_3(t)"

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            BaseField.rationals(6)
        with pytest.raises(ValueError):
            BaseField.rational_functions(1)

    def test_equality_and_hash(self):
        assert BaseField.rationals(2) == BaseField.rationals(2)
        assert BaseField.rationals(2) != BaseField.rationals(3)
        assert BaseField.rationals(2) != BaseField.rational_functions(2)
        assert hash(BaseField.rationals(7)) == hash(BaseField.rationals(7))


class TestPadicValuation:
    def setup_method(self):
        self.b = BaseField.rationals(2)

    def test_integers(self):
        assert self.b.valuation(self.b.from_int(8)) == 3
        assert self.b.valuation(self.b.from_int(12)) == 2
        assert self.b.valuation(self.b.from_int(7)) == 0

    def test_fractions(self):
        assert self.b.valuation(self.b.from_fraction(Fraction(3, 4))) == -2
        assert self.b.valuation(self.b.from_fraction(Fraction(1, 6))) == -1

    def test_zero(self):
        assert self.b.valuation(self.b.zero()) is INF

    def test_residue(self):
        assert self.b.residue(self.b.from_int(7)) == 1
        b3 = BaseField.rationals(3)
        # 5/7 = 5 * 7^(-1) mod 3 = 2 * 1 = 2
        assert b3.residue(b3.from_fraction(Fraction(5, 7))) == 2

    def test_residue_needs_value_zero(self):
        with pytest.raises(ValueError):
            self.b.residue(self.b.from_int(4))

    def test_lift_residue(self):
        assert self.b.lift_residue(5) == self.b.from_int(1)


class TestTadicValuation:
    def setup_method(self):
        self.b = BaseField.rational_functions(3)

    def test_polynomials(self):
        t = self.b.t()
        assert self.b.valuation(t) == 1
        assert self.b.valuation(t * t + t) == 1
        assert self.b.valuation(self.b.from_int(2)) == 0

    def test_rational_functions(self):
        t = self.b.t()
        assert self.b.valuation(self.b.one() / t) == -1
        assert self.b.valuation((t + self.b.one()) / (t * t)) == -2

    def test_zero(self):
        assert self.b.valuation(self.b.zero()) is INF

    def test_residue(self):
        t = self.b.t()
        a = (t + self.b.from_int(2)) / (t + self.b.one())
        assert self.b.residue(a) == 2

    def test_uniformizer(self):
        assert self.b.valuation(self.b.uniformizer()) == 1
        b2 = BaseField.rationals(2)
        assert b2.uniformizer() == b2.from_int(2)


class TestElemArithmetic:
    def test_q_field_ops(self):
        b = BaseField.rationals(5)
        a = b.from_fraction(Fraction(3, 2))
        c = b.from_int(4)
        assert (a + c) - c == a
        assert a * c / c == a
        assert (a * a.inverse()) == b.one()
        assert a ** -2 == (a * a).inverse()

    def test_fpt_field_ops(self):
        b = BaseField.rational_functions(2)
        t = b.t()
        a = (t + b.one()) / t
        assert a * t == t + b.one()
        assert a * a.inverse() == b.one()
        assert (a - a).is_zero()
        assert a ** 3 == a * a * a

    def test_fpt_canonical_form(self):
        # (t^2 + t) / t and t + 1 must compare equal
        b = BaseField.rational_functions(2)
        t = b.t()
        lhs = (t * t + t) / t
        rhs = t + b.one()
        assert lhs == rhs
        assert hash(lhs) == hash(rhs)

    def test_char_p_addition(self):
        b = BaseField.rational_functions(3)
        assert (b.from_int(2) + b.from_int(1)).is_zero()

    def test_division_by_zero(self):
        b = BaseField.rationals(2)
        with pytest.raises(ZeroDivisionError):
            b.one() / b.zero()
        with pytest.raises(ZeroDivisionError):
            b.zero().inverse()

    def test_cross_field_mixing_rejected(self):
        b2 = BaseField.rationals(2)
        b3 = BaseField.rationals(3)
        with pytest.raises(ValueError):
            b2.one() + b3.one()

    def test_str_fpt(self):
        b = BaseField.rational_functions(2)
        t = b.t()
        assert str((t + b.one()) / t) == "(t+1)/t"
        assert str(t * t) == "t^2"

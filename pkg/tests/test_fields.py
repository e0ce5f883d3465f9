from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from extclass.errors import FieldMismatchError, NotInvertibleError, ParseError
from extclass.fields import GF, I, Q, QI, GaussianRational, is_prime

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)


def test_is_prime_small():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_gaussian_arithmetic_matches_complex_rules():
    z = GaussianRational(1, 2)
    w = GaussianRational(Fraction(1, 2), -3)
    assert z * w == GaussianRational(Fraction(1, 2) + 6, -3 + 1)
    assert I * I == -1
    assert z / z == 1
    assert z.conjugate() == GaussianRational(1, -2)
    assert z.norm() == 5


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(st.integers(), st.integers(min_value=1, max_value=10**6))
def test_residue_reduction_of_fractions(num, den):
    F = GF(7)
    q = Fraction(num, den)
    if q.denominator % 7 == 0:
        with pytest.raises(NotInvertibleError):
            F(q)
    else:
        assert F(q) * q.denominator == q.numerator


def test_residue_inverse_and_errors():
    F = GF(5)
    assert F(2).inverse() == 3
    with pytest.raises(NotInvertibleError):
        F(0).inverse()
    with pytest.raises(FieldMismatchError):
        F(1) + GF(7)(1)


def test_imaginary_unit_reduces_only_when_minus_one_is_a_square():
    assert GF(5)(I) == 2
    assert GF(13).sqrt_minus_one() == 5
    with pytest.raises(FieldMismatchError):
        GF(3)(I)


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)), ("-7/2", Fraction(-7, 2)),
])
def test_parse_rational(text, value):
    assert Q.parse(text) == value


@pytest.mark.parametrize("text,value", [
    ("1+2 i", GaussianRational(1, 2)), ("1/2-3 i", GaussianRational(Fraction(1, 2), -3)),
    ("i", GaussianRational(0, 1)), ("-i", GaussianRational(0, -1)), ("3 i", GaussianRational(0, 3)),
    ("5", GaussianRational(5, 0)),
])
def test_parse_gaussian(text, value):
    assert QI.parse(text) == value


def test_parse_residues():
    F = GF(5)
    assert F.parse("3 mod 5") == 3
    assert F.parse("8") == 3
    with pytest.raises(FieldMismatchError):
        F.parse("3 mod 7")


@pytest.mark.parametrize("bad", ["1.5", "", "x", "1//2"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ParseError):
        Q.parse(bad)


@given(gaussians)
def test_gaussian_format_round_trip(z):
    assert QI.parse(QI.format(z)) == z


def test_field_json_round_trip():
    for F in (Q, QI, GF(3)):
        assert type(F).from_json(F.to_json()) == F
    with pytest.raises(ParseError):
        Q.from_json({"Fp": 4})


def test_f2_is_advisory():
    assert GF(2).advisory and not GF(3).advisory

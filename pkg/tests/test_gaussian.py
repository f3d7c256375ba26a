from fractions import Fraction

import pytest
from hypothesis import given

from conftest import nonzero_scalars, scalars
from fourqubit.gaussian import I, ONE, ZERO, GaussianRational, as_gr, format_scalar, parse_scalar


@pytest.mark.parametrize("text,re,im", [
    ("3/4-1/2i", Fraction(3, 4), Fraction(-1, 2)),
    ("2", 2, 0),
    ("i", 0, 1),
    ("-i", 0, -1),
    ("-5/3i", 0, Fraction(-5, 3)),
    ("+1+i", 1, 1),
    (" 1 / 2 ", Fraction(1, 2), 0),
])
def test_parse_scalar(text, re, im):
    z = parse_scalar(text)
    assert (z.re, z.im) == (re, im)


@pytest.mark.parametrize("bad", ["", "1/0", "2i3", "i+1", "1.5", "ii", "1+2", "--1"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_format_examples():
    assert format_scalar(GaussianRational(Fraction(3, 4), Fraction(-1, 2))) == "3/4-1/2i"
    assert str(I) == "i"
    assert str(-I) == "-i"
    assert str(ZERO) == "0"
    assert str(GaussianRational(-2, 1)) == "-2+i"


@given(scalars)
def test_text_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


@given(scalars)
def test_lowest_terms(z):
    a, b, d = z.parts
    assert d > 0
    from math import gcd
    assert gcd(a, b, d) == 1
    assert z.re.denominator > 0 and z.im.denominator > 0


@given(scalars, scalars, scalars)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == ZERO
    assert x * ONE == x


@given(nonzero_scalars, scalars)
def test_division_inverts_multiplication(x, y):
    assert (y * x) / x == y
    assert x * x.inverse() == ONE


@given(scalars)
def test_conjugate_and_norm(z):
    assert z * z.conjugate() == GaussianRational(z.norm())
    assert z.conjugate().conjugate() == z


@given(scalars)
def test_hash_consistent_with_eq(z):
    w = parse_scalar(str(z))
    assert hash(w) == hash(z)


def test_coercion_with_python_numbers():
    assert as_gr(3) + Fraction(1, 2) == GaussianRational(Fraction(7, 2))
    assert 2 - I == GaussianRational(2, -1)
    assert Fraction(1, 3) * (3 * I) == I
    assert I ** 2 == -ONE
    assert (1 + I) ** -1 == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert ZERO == 0 and ONE == 1


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO

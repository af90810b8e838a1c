from fractions import Fraction

import pytest
from hypothesis import given

from quatbridge.scalars import (
    EXACT,
    FLOAT,
    I,
    GaussRational,
    ModeMismatchError,
    NotExactError,
    complex_from_json,
    complex_to_json,
    csqrt,
    format_complex,
    parse_complex,
    to_mode,
    unify,
)

from conftest import gauss


def test_gauss_rational_field_ops():
    z = GaussRational(Fraction(1, 2), 3)
    assert z * I == GaussRational(-3, Fraction(1, 2))
    assert (z / z) == 1
    assert I * I == -1
    assert (1 / I) == -I


@given(gauss, gauss)
def test_exact_division_inverts_multiplication(a, b):
    if b == 0:
        with pytest.raises(ZeroDivisionError):
            a / b
    else:
        assert (a * b) / b == a


def test_mixing_modes_raises():
    with pytest.raises(ModeMismatchError):
        GaussRational(1, 1) + 0.5j
    with pytest.raises(ModeMismatchError):
        unify([GaussRational(1), 1.5])


def test_int_and_fraction_are_mode_neutral():
    assert unify([1, Fraction(1, 3)], FLOAT) == (1 + 0j, 1 / 3 + 0j)
    assert to_mode(Fraction(3, 4), EXACT) == GaussRational(Fraction(3, 4))


@pytest.mark.parametrize("z, root", [(16, 4), (-16, GaussRational(0, 4)), (GaussRational(-7, 24), GaussRational(3, 4)),
                                     (Fraction(9, 4), Fraction(3, 2))])
def test_csqrt_exact(z, root):
    assert csqrt(to_mode(z, EXACT)) == root


def test_csqrt_exact_refuses_irrational():
    with pytest.raises(NotExactError):
        csqrt(to_mode(2, EXACT))


def test_csqrt_float_principal_branch():
    assert csqrt(-1 + 0j) == 1j
    assert csqrt(complex(-1, -0.0)) == 1j


@pytest.mark.parametrize("text, value", [
    ("3", GaussRational(3)),
    ("-5j", GaussRational(0, -5)),
    ("1/2-3/4j", GaussRational(Fraction(1, 2), Fraction(-3, 4))),
    ("0.1", GaussRational(Fraction(1, 10))),
    ("2.5e-1+1j", GaussRational(Fraction(1, 4), 1)),
])
def test_parse_complex_exact(text, value):
    assert parse_complex(text, EXACT) == value


def test_parse_complex_float():
    assert parse_complex("1.5-2j", FLOAT) == 1.5 - 2j
    with pytest.raises(ValueError):
        parse_complex("1..2", EXACT)


@given(gauss)
def test_format_parse_roundtrip(z):
    assert parse_complex(format_complex(z), EXACT) == z


@given(gauss)
def test_json_roundtrip_exact(z):
    assert complex_from_json(complex_to_json(z), EXACT) == z


def test_json_forms():
    assert complex_to_json(GaussRational(Fraction(1, 3), -2)) == ["1/3", -2]
    assert complex_from_json([0.1, 0], EXACT) == GaussRational(Fraction(1, 10))
    assert complex_from_json("2-1j", EXACT) == GaussRational(2, -1)
    assert complex_from_json(4, FLOAT) == 4 + 0j

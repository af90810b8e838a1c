from fractions import Fraction

import sympy as sp
import pytest
from hypothesis import given, settings
from sympy.algebras.quaternion import Quaternion as SymQ

from quatbridge.algebra import (
    Matrix4,
    Quaternion,
    basis_products,
    decompose_matrix,
    format_quaternion,
    lift_left,
    lift_right,
    parse_quaternion,
    qmul,
    qmul_vecform,
    square_of_vector,
)
from quatbridge.dirac import DiracParams, alpha_vector
from quatbridge.scalars import EXACT, FLOAT, GaussRational, ModeMismatchError

from conftest import gauss, quaternions, rationals, vectors

i0, i1, i2, i3 = (Quaternion.unit(k) for k in range(4))


def _to_sympy(q):
    return SymQ(*(sp.Rational(c.real.numerator, c.real.denominator)
                  + sp.I * sp.Rational(c.imag.numerator, c.imag.denominator) for c in q.coords),
                real_field=False)


def _rat(x):
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _from_sympy(s):
    parts = [sp.expand(c).as_real_imag() for c in (s.a, s.b, s.c, s.d)]
    return Quaternion(*(GaussRational(_rat(re), _rat(im)) for re, im in parts))


def test_unit_table():
    assert qmul(i1, i2) == i3
    assert qmul(i2, i1) == -i3
    assert qmul(i2, i3) == i1
    assert qmul(i3, i1) == i2
    for u in (i1, i2, i3):
        assert qmul(u, u) == -i0


def test_noncommutativity_witness():
    assert qmul(i1, i2) != qmul(i2, i1)


def test_structure_constant_example():
    assert qmul(i0 + i1, i2) == i2 + i3


@given(quaternions)
def test_identity_element(b):
    assert qmul(i0, b) == b == qmul(b, i0)


@settings(max_examples=60)
@given(quaternions, quaternions)
def test_qmul_matches_sympy_oracle(a, b):
    assert qmul(a, b) == _from_sympy(_to_sympy(a) * _to_sympy(b))


@settings(max_examples=200)
@given(quaternions, quaternions, quaternions)
def test_associativity(a, b, c):
    assert qmul(qmul(a, b), c) == qmul(a, qmul(b, c))


@given(quaternions, quaternions)
def test_vector_form_agrees(a, b):
    assert qmul_vecform(a, b) == qmul(a, b)


def test_vector_form_pure_vectors():
    assert qmul_vecform(i1, i2) == i3


@given(gauss, quaternions)
def test_scalar_times_quaternion(s, b):
    assert qmul_vecform(Quaternion.scalar(s), b) == b * s


def test_square_of_vector_examples():
    assert square_of_vector(i1) == -1
    assert square_of_vector(Quaternion(0, GaussRational(0, -5), -3, 0)) == 16
    assert square_of_vector(Quaternion()) == 0
    with pytest.raises(ValueError):
        square_of_vector(i0 + i1)


@given(vectors)
def test_square_of_vector_is_product(v):
    sq = qmul(v, v)
    assert sq.vec().is_zero()
    assert sq.a0 == square_of_vector(v)


@given(rationals, rationals)
def test_square_of_alpha_matches_energy_formula(energy, mass):
    p = DiracParams(energy=energy, mass=abs(mass), hbar=3, c=2)
    expected = (energy**2 / 4 - mass**2 * 4) / 9
    assert square_of_vector(alpha_vector(p)) == expected


def test_lift_examples():
    assert lift_left(i0) == Matrix4.identity()
    r1 = lift_right(i1)
    a = tuple(GaussRational(n) for n in (2, 3, 5, 7))
    assert r1.apply(a) == (-3, 2, 7, -5)


@given(quaternions, quaternions)
def test_lifts_act_by_multiplication(q, f):
    assert lift_left(q).apply(f.coords) == qmul(q, f).coords
    assert lift_right(q).apply(f.coords) == qmul(f, q).coords


@given(quaternions, quaternions)
def test_left_and_right_lifts_commute(p, q):
    assert lift_left(p) @ lift_right(q) == lift_right(q) @ lift_left(p)


@given(quaternions, quaternions)
def test_lift_homomorphism(p, q):
    assert lift_left(qmul(p, q)) == lift_left(p) @ lift_left(q)
    assert lift_right(qmul(p, q)) == lift_right(q) @ lift_right(p)


def test_basis_products_decompose_any_matrix():
    m = Matrix4([[GaussRational(r * 4 + c, r - c) for c in range(4)] for r in range(4)])
    coeffs = decompose_matrix(m)
    basis = basis_products()
    rebuilt = Matrix4.zeros()
    for key, c in coeffs.items():
        rebuilt = rebuilt + basis[key] * c
    assert rebuilt == m


def test_matrix_inverse():
    m = lift_left(Quaternion(1, 2, GaussRational(0, 1), 3))
    assert m @ m.inverse() == Matrix4.identity()
    with pytest.raises(ZeroDivisionError):
        Matrix4.zeros().inverse()


def test_mode_mismatch():
    with pytest.raises(ModeMismatchError):
        qmul(i1, Quaternion.unit(2, FLOAT))


def test_quaternion_literal():
    q = parse_quaternion("[0, -5j, -3, 0]")
    assert q == Quaternion(0, GaussRational(0, -5), -3, 0)
    assert parse_quaternion(format_quaternion(q)) == q
    assert parse_quaternion("[1, 1/2+2j, 0, 0]", FLOAT).a1 == 0.5 + 2j


def test_sc_plus_vec_reconstructs():
    q = Quaternion(1, 2, 3, GaussRational(0, 4), mode=EXACT)
    assert q.sc() + q.vec() == q
    assert q.vec().is_vector() and not q.is_vector()

import random

import pytest
from hypothesis import given, settings, strategies as st

from quatbridge.algebra import Matrix4, Quaternion, lift_left, lift_right, qmul
from quatbridge.operators import (
    add,
    compose,
    const_left,
    const_matrix,
    const_right,
    d_alpha,
    d_kappa,
    equals,
    identity,
    laplacian,
    moisil_theodoresco,
    negate,
    partial,
    reflect,
    scalar,
    zero_operator,
)
from quatbridge.scalars import EXACT, FLOAT, GaussRational, ModeMismatchError
from quatbridge.suites import rand_atom

from conftest import quaternions

i0, i1, i2, i3 = (Quaternion.unit(k) for k in range(4))
D = moisil_theodoresco()


def test_reflection_squares_to_identity():
    for k in (1, 2, 3):
        assert reflect(k) @ reflect(k) == identity()


def test_const_left_unit_is_identity():
    assert const_left(i0) == identity()


def test_const_right_single_term():
    op = const_right(i1)
    assert list(op.items()) == [(((0, 0, 0), ()), lift_right(i1))]


def test_reflection_anticommutes_with_own_derivative():
    assert compose(reflect(3), partial(3)) == negate(compose(partial(3), reflect(3)))
    assert compose(reflect(3), partial(1)) == compose(partial(1), reflect(3))


def test_reflection_conjugation():
    assert reflect(3) @ partial(3) @ reflect(3) == -partial(3)
    assert reflect(3) @ partial(1) @ reflect(3) == partial(1)


def test_moisil_square_is_minus_laplacian():
    assert D @ D == -laplacian()
    assert equals(D @ D + laplacian(), zero_operator())


def test_moisil_square_expanded_by_hand():
    # oracle: sum_jk i_j i_k d_j d_k with i_k^2 = -1 and mixed pairs cancelling
    total = zero_operator()
    for j in (1, 2, 3):
        for k in (1, 2, 3):
            total = total + const_left(qmul(Quaternion.unit(j), Quaternion.unit(k))) @ partial(j) @ partial(k)
    assert total == D @ D


def test_moisil_structure():
    assert D.degree_set() == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert D.masks() == {()}
    assert D.coefficient((1, 0, 0)) == lift_left(i1)


def test_d_alpha_and_d_kappa():
    assert d_alpha(Quaternion()) == D
    kappa = GaussRational(4)
    assert d_kappa(kappa, 1) - d_kappa(kappa, -1) == identity() * (2 * kappa)
    alpha = Quaternion(0, GaussRational(0, -5), -3, 0)
    assert d_alpha(alpha) == D + const_right(alpha)


@given(quaternions, quaternions)
def test_right_multiplications_reverse(p, q):
    assert const_right(p) @ const_right(q) == const_right(qmul(q, p))


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=2, max_value=6))
def test_confluence_of_association_orders(seed, n):
    rng = random.Random(seed)
    atoms = [rand_atom(rng) for _ in range(n)]
    left = atoms[0]
    for a in atoms[1:]:
        left = left @ a
    right = atoms[-1]
    for a in reversed(atoms[:-1]):
        right = a @ right
    assert left == right


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=2**32))
def test_add_commutes_and_compose_distributes(seed):
    rng = random.Random(seed)
    a, b, c = (rand_atom(rng) + rand_atom(rng) for _ in range(3))
    assert equals(add(a, b), add(b, a))
    assert a @ (b + c) == a @ b + a @ c
    assert (a + b) @ c == a @ c + b @ c


def test_zero_terms_are_pruned():
    op = partial(1) - partial(1)
    assert op.is_zero() and list(op.items()) == []


def test_scalar_operator():
    assert scalar(3) == identity() * 3
    assert const_matrix(Matrix4.identity()) == identity()


def test_axis_out_of_range():
    with pytest.raises(ValueError):
        partial(4)
    with pytest.raises(ValueError):
        reflect(0)


def test_mode_mismatch():
    with pytest.raises(ModeMismatchError):
        partial(1) + partial(1, FLOAT)
    with pytest.raises(ModeMismatchError):
        partial(1) @ reflect(2, FLOAT)


def test_float_mode_d_squared():
    Df = moisil_theodoresco(FLOAT)
    assert Df @ Df == -laplacian(FLOAT)
    assert (Df @ Df).mode == FLOAT and D.mode == EXACT

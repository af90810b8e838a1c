"""Normal-form algebra of constant-coefficient differential operators.

Every operator is a finite sum of terms ``C @ d^n @ R^m``: a 4x4 matrix
coefficient ``C``, a derivative multi-index ``n = (n1, n2, n3)``, and a set
``m`` of axis reflections ``(R_k f)(x) = f(x with x_k negated)``. Written
as a composition, reflections sit rightmost, so they act on a field first.

Rewriting rules used by :meth:`DiffOperator.__matmul__`::

    R_k d_k = -d_k R_k,   R_k d_j = d_j R_k (j != k),   R_k R_k = Id,

and constant matrices commute with both ``d_j`` and ``R_k``.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .algebra import Matrix4, Quaternion, lift_left, lift_right
from .scalars import EXACT, ModeMismatchError, mode_of_values, scalar_mode

Degree = tuple  # (n1, n2, n3)
Mask = tuple  # sorted axes, subset of (1, 2, 3)
Key = tuple  # (Degree, Mask)

ZERO_DEGREE: Degree = (0, 0, 0)
NO_MASK: Mask = ()


def _check_axis(k: int) -> None:
    if k not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {k!r}")


class DiffOperator:
    """Immutable operator in canonical normal form.

    Two operators are equal iff their term maps are identical, so ``==``
    decides operator identities (exactly, in exact mode).
    """

    __slots__ = ("terms", "mode")

    def __init__(self, terms: Mapping[Key, Matrix4] | None = None, mode: str = EXACT):
        clean = {}
        for (deg, mask), coeff in (terms or {}).items():
            deg = tuple(int(n) for n in deg)
            mask = tuple(sorted(set(mask)))
            if len(deg) != 3 or any(n < 0 for n in deg):
                raise ValueError(f"bad degree {deg!r}")
            for k in mask:
                _check_axis(k)
            if coeff.mode != mode:
                raise ValueError(f"{coeff.mode} coefficient in {mode} operator")
            if not coeff.is_zero():
                clean[(deg, mask)] = coeff
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("DiffOperator is immutable")

    def items(self) -> Iterator[tuple[Key, Matrix4]]:
        return iter(sorted(self.terms.items(), key=lambda kv: _key_order(kv[0])))

    def coefficient(self, degree: Degree = ZERO_DEGREE, mask: Mask = NO_MASK) -> Matrix4:
        return self.terms.get((tuple(degree), tuple(mask)), Matrix4.zeros(self.mode))

    def degree_set(self) -> set:
        return {deg for deg, _ in self.terms}

    def masks(self) -> set:
        return {mask for _, mask in self.terms}

    def order(self) -> int:
        return max((sum(deg) for deg, _ in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def max_abs(self) -> float:
        """Largest coefficient entry modulus (0.0 for the zero operator)."""
        return max((c.max_abs() for c in self.terms.values()), default=0.0)

    def to_mode(self, mode: str) -> "DiffOperator":
        return DiffOperator({k: c.to_mode(mode) for k, c in self.terms.items()}, mode)

    def _same_mode(self, other: "DiffOperator") -> None:
        if self.mode != other.mode:
            raise ModeMismatchError(f"{self.mode} operator combined with {other.mode} operator")

    def __add__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        self._same_mode(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return DiffOperator(out, self.mode)

    def __sub__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return DiffOperator({k: -c for k, c in self.terms.items()}, self.mode)

    def __mul__(self, c):
        """Scalar multiple; use ``@`` for composition."""
        if isinstance(c, DiffOperator):
            raise TypeError("use @ to compose operators")
        mode_of_values([c, Matrix4.identity(self.mode)[0, 0]])
        return DiffOperator({k: m * c for k, m in self.terms.items()}, self.mode)

    __rmul__ = __mul__

    def __matmul__(self, other):
        """Composition ``self o other`` (``other`` acts first)."""
        if not isinstance(other, DiffOperator):
            return NotImplemented
        self._same_mode(other)
        out: dict = {}
        for (d1, m1), c1 in self.terms.items():
            for (d2, m2), c2 in other.terms.items():
                # moving R^m1 rightwards past d^d2 flips sign once per reflected derivative
                flips = sum(d2[k - 1] for k in m1)
                coeff = c1 @ c2
                if flips % 2:
                    coeff = -coeff
                deg = tuple(a + b for a, b in zip(d1, d2))
                mask = tuple(sorted(set(m1) ^ set(m2)))
                key = (deg, mask)
                out[key] = out[key] + coeff if key in out else coeff
        return DiffOperator(out, self.mode)

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"DiffOperator({format_operator(self)!r})"

    def __str__(self):
        return format_operator(self)


def _key_order(key: Key):
    deg, mask = key
    return (sum(deg), tuple(-n for n in deg), len(mask), mask)


def compose(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    return a @ b


def add(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    return a + b


def negate(a: DiffOperator) -> DiffOperator:
    return -a


def equals(a: DiffOperator, b: DiffOperator) -> bool:
    return a == b


# ------------------------------------------------------------------ atoms

def identity(mode: str = EXACT) -> DiffOperator:
    return DiffOperator({(ZERO_DEGREE, NO_MASK): Matrix4.identity(mode)}, mode)


def zero_operator(mode: str = EXACT) -> DiffOperator:
    return DiffOperator({}, mode)


def partial(k: int, mode: str = EXACT) -> DiffOperator:
    _check_axis(k)
    deg = tuple(1 if j == k else 0 for j in (1, 2, 3))
    return DiffOperator({(deg, NO_MASK): Matrix4.identity(mode)}, mode)


def reflect(k: int, mode: str = EXACT) -> DiffOperator:
    _check_axis(k)
    return DiffOperator({(ZERO_DEGREE, (k,)): Matrix4.identity(mode)}, mode)


def const_matrix(m: Matrix4) -> DiffOperator:
    return DiffOperator({(ZERO_DEGREE, NO_MASK): m}, m.mode)


def const_left(q: Quaternion) -> DiffOperator:
    return const_matrix(lift_left(q))


def const_right(q: Quaternion) -> DiffOperator:
    """The right multiplication operator ``f -> f*q``."""
    return const_matrix(lift_right(q))


def scalar(c, mode: str | None = None) -> DiffOperator:
    mode = mode or scalar_mode(c)
    return identity(mode) * c


def laplacian(mode: str = EXACT) -> DiffOperator:
    out = zero_operator(mode)
    for k in (1, 2, 3):
        out = out + partial(k, mode) @ partial(k, mode)
    return out


def moisil_theodoresco(mode: str = EXACT) -> DiffOperator:
    """``D = i1 d1 + i2 d2 + i3 d3`` acting by left multiplication."""
    out = zero_operator(mode)
    for k in (1, 2, 3):
        out = out + const_left(Quaternion.unit(k, mode)) @ partial(k, mode)
    return out


def d_alpha(alpha: Quaternion) -> DiffOperator:
    """``D + M^alpha``: the Moisil-Theodoresco operator plus right multiplication by ``alpha``."""
    return moisil_theodoresco(alpha.mode) + const_right(alpha)


def d_kappa(kappa, sign: int = 1) -> DiffOperator:
    """``D + sign*kappa`` for a complex scalar ``kappa``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    mode = scalar_mode(kappa)
    return moisil_theodoresco(mode) + scalar(kappa * sign, mode)


def format_operator(op: DiffOperator) -> str:
    # late import: the printer lives with the grammar
    from .parser import format_diff_operator

    return format_diff_operator(op)

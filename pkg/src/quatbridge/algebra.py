"""Complex quaternions H(C) and their 4x4 coordinate matrices.

Coordinates are stored scalar first, ``(a0, a1, a2, a3)`` for
``a0*i0 + a1*i1 + a2*i2 + a3*i3``. The complex unit (written ``j`` in
literals) commutes with every quaternion unit.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .scalars import (
    EXACT,
    FLOAT,
    format_complex,
    mode_of_values,
    one,
    parse_complex,
    scalar_mode,
    to_mode,
    unify,
    zero,
)

# (row unit, column unit) -> (sign, product unit)
MULTIPLICATION_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


class Quaternion:
    """Immutable complex quaternion."""

    __slots__ = ("coords",)

    def __init__(self, a0=0, a1=0, a2=0, a3=0, *, mode: str | None = None):
        object.__setattr__(self, "coords", unify((a0, a1, a2, a3), mode))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def from_coords(cls, coords: Iterable, mode: str | None = None) -> "Quaternion":
        c = tuple(coords)
        if len(c) != 4:
            raise ValueError(f"quaternion needs 4 coordinates, got {len(c)}")
        return cls(*c, mode=mode)

    @classmethod
    def unit(cls, k: int, mode: str = EXACT) -> "Quaternion":
        c = [0, 0, 0, 0]
        c[k] = 1
        return cls(*c, mode=mode)

    @classmethod
    def scalar(cls, c, mode: str | None = None) -> "Quaternion":
        return cls(c, 0, 0, 0, mode=mode)

    @classmethod
    def vector(cls, v1, v2, v3, mode: str | None = None) -> "Quaternion":
        return cls(0, v1, v2, v3, mode=mode)

    @property
    def mode(self) -> str:
        return scalar_mode(self.coords[0])

    a0 = property(lambda self: self.coords[0])
    a1 = property(lambda self: self.coords[1])
    a2 = property(lambda self: self.coords[2])
    a3 = property(lambda self: self.coords[3])

    def sc(self) -> "Quaternion":
        return Quaternion(self.a0, 0, 0, 0, mode=self.mode)

    def vec(self) -> "Quaternion":
        return Quaternion(0, self.a1, self.a2, self.a3, mode=self.mode)

    def is_vector(self) -> bool:
        return self.a0 == 0

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_mode(self, mode: str) -> "Quaternion":
        return Quaternion(*(to_mode(c, mode) for c in self.coords), mode=mode)

    def norm_max(self) -> float:
        return max(abs(c) for c in self.coords)

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            other = Quaternion.scalar(other, mode=self.mode)
        return Quaternion(*(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            other = Quaternion.scalar(other, mode=self.mode)
        return Quaternion(*(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Quaternion(*(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, other)
        return Quaternion(*(a * other for a in self.coords))

    def __rmul__(self, other):
        # complex scalars are central
        return Quaternion(*(other * a for a in self.coords))

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            raise TypeError("quaternion division is not defined here; use a scalar")
        return Quaternion(*(a / other for a in self.coords))

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Quaternion({', '.join(format_complex(c) for c in self.coords)})"

    def __str__(self):
        return format_quaternion(self)


def _check_same_mode(*qs: Quaternion) -> None:
    mode_of_values(c for q in qs for c in q.coords)


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Product ``a*b`` expanded over the 16 basis products of the table."""
    _check_same_mode(a, b)
    out = [zero(a.mode)] * 4
    for (r, c), (sign, k) in MULTIPLICATION_TABLE.items():
        term = a.coords[r] * b.coords[c]
        out[k] = out[k] + term if sign > 0 else out[k] - term
    return Quaternion(*out)


def dot(u: Sequence, v: Sequence):
    """Bilinear (not Hermitian) pairing of two complex 3-vectors."""
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def qmul_vecform(a: Quaternion, b: Quaternion) -> Quaternion:
    """Product in vector form: a0 b0 - <a,b> + [a x b] + a0 b + b0 a."""
    _check_same_mode(a, b)
    av, bv = a.coords[1:], b.coords[1:]
    s = a.a0 * b.a0 - dot(av, bv)
    cx = cross(av, bv)
    v = [cx[i] + a.a0 * bv[i] + b.a0 * av[i] for i in range(3)]
    return Quaternion(s, *v)


def square_of_vector(v: Quaternion):
    """Square of a purely vectorial quaternion, ``-(v1^2 + v2^2 + v3^2)``."""
    if not v.is_vector():
        raise ValueError(f"not purely vectorial: {v}")
    return -dot(v.coords[1:], v.coords[1:])


_QUAT_RE = re.compile(r"^\s*\[\s*\[?(?P<body>[^\[\]]*)\]?\s*\]\s*$")


def parse_quaternion(text: str, mode: str = EXACT) -> Quaternion:
    """Parse ``[c0, c1, c2, c3]``."""
    m = _QUAT_RE.match(text)
    if not m:
        raise ValueError(f"bad quaternion literal {text!r}")
    parts = m.group("body").split(",")
    if len(parts) != 4:
        raise ValueError(f"quaternion literal needs 4 components: {text!r}")
    return Quaternion(*(parse_complex(p, mode) for p in parts), mode=mode)


def format_quaternion(q: Quaternion) -> str:
    return "[" + ", ".join(format_complex(c) for c in q.coords) + "]"


class Matrix4:
    """Immutable 4x4 complex matrix, row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows, *, mode: str | None = None):
        rows = [tuple(r) for r in rows]
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("Matrix4 needs 4 rows of 4 entries")
        flat = unify((x for r in rows for x in r), mode)
        object.__setattr__(self, "rows", tuple(tuple(flat[4 * i: 4 * i + 4]) for i in range(4)))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix4 is immutable")

    @classmethod
    def identity(cls, mode: str = EXACT) -> "Matrix4":
        return cls([[1 if i == j else 0 for j in range(4)] for i in range(4)], mode=mode)

    @classmethod
    def zeros(cls, mode: str = EXACT) -> "Matrix4":
        return cls([[0] * 4 for _ in range(4)], mode=mode)

    @classmethod
    def from_columns(cls, cols, mode: str | None = None) -> "Matrix4":
        cols = [tuple(c) for c in cols]
        return cls([[cols[j][i] for j in range(4)] for i in range(4)], mode=mode)

    @property
    def mode(self) -> str:
        return scalar_mode(self.rows[0][0])

    def entries(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def to_mode(self, mode: str) -> "Matrix4":
        return Matrix4([[to_mode(x, mode) for x in r] for r in self.rows], mode=mode)

    def __matmul__(self, other):
        if isinstance(other, Matrix4):
            b = other.rows
            return Matrix4(
                [
                    [sum((self.rows[i][k] * b[k][j] for k in range(1, 4)), self.rows[i][0] * b[0][j])
                     for j in range(4)]
                    for i in range(4)
                ]
            )
        return NotImplemented

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        return tuple(
            sum((r[k] * vec[k] for k in range(1, 4)), r[0] * vec[0]) for r in self.rows
        )

    def __add__(self, other):
        return Matrix4([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix4([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix4([[-a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, Matrix4):
            raise TypeError("use @ for matrix products")
        return Matrix4([[a * c for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __truediv__(self, c):
        return Matrix4([[a / c for a in r] for r in self.rows])

    def transpose(self) -> "Matrix4":
        return Matrix4([self.column(j) for j in range(4)])

    def trace(self):
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2] + self.rows[3][3]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries())

    def max_abs(self) -> float:
        return max(abs(x) for x in self.entries())

    def inverse(self) -> "Matrix4":
        """Gauss-Jordan inverse; raises ``ZeroDivisionError`` when singular."""
        mode = self.mode
        a = [list(r) + [one(mode) if i == j else zero(mode) for j in range(4)]
             for i, r in enumerate(self.rows)]
        for col in range(4):
            if mode == EXACT:
                pivot = next((r for r in range(col, 4) if a[r][col] != 0), None)
            else:
                pivot = max(range(col, 4), key=lambda r: abs(a[r][col]))
                if abs(a[pivot][col]) < 1e-14 * max(1.0, self.max_abs()):
                    pivot = None
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[pivot] = a[pivot], a[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            for r in range(4):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix4([row[4:] for row in a], mode=mode)

    def __eq__(self, other):
        if not isinstance(other, Matrix4):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(format_complex(x) for x in r) for r in self.rows)
        return f"Matrix4([{body}])"


def coords(q: Quaternion) -> tuple:
    return q.coords


def lift_left(q: Quaternion) -> Matrix4:
    """Matrix of ``f -> q*f`` acting on coordinate columns."""
    mode = q.mode
    return Matrix4.from_columns(
        (qmul(q, Quaternion.unit(k, mode)).coords for k in range(4)), mode=mode
    )


def lift_right(q: Quaternion) -> Matrix4:
    """Matrix of ``f -> f*q`` (right multiplication operator)."""
    mode = q.mode
    return Matrix4.from_columns(
        (qmul(Quaternion.unit(k, mode), q).coords for k in range(4)), mode=mode
    )


def basis_products(mode: str = EXACT) -> dict:
    """The 16 matrices ``lift_left(i_a) @ lift_right(i_b)``.

    They are signed permutation matrices, mutually orthogonal under the
    entrywise pairing, and span all 4x4 complex matrices.
    """
    units = [Quaternion.unit(k, mode) for k in range(4)]
    return {
        (a, b): lift_left(units[a]) @ lift_right(units[b])
        for a in range(4)
        for b in range(4)
    }


def decompose_matrix(m: Matrix4) -> dict:
    """Coefficients ``c[a, b]`` with ``m = sum c[a, b] * L(i_a) R(i_b)`` (zeros dropped)."""
    out = {}
    for key, basis in basis_products(m.mode).items():
        c = sum(
            (x * y for x, y in zip(basis.entries(), m.entries())), zero(m.mode)
        ) / 4
        if c != 0:
            out[key] = c
    return out


__all__ = [
    "EXACT",
    "FLOAT",
    "MULTIPLICATION_TABLE",
    "Matrix4",
    "Quaternion",
    "basis_products",
    "coords",
    "cross",
    "decompose_matrix",
    "dot",
    "format_quaternion",
    "lift_left",
    "lift_right",
    "parse_quaternion",
    "qmul",
    "qmul_vecform",
    "square_of_vector",
]

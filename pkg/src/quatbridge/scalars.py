"""Complex scalars in two arithmetic modes.

Exact mode uses :class:`GaussRational` (rational real and imaginary parts).
Float mode uses the builtin :class:`complex`. Python ``int`` and
:class:`fractions.Fraction` are mode-neutral literals that promote to
whichever mode they meet. Mixing a ``GaussRational`` with a float value
raises :class:`ModeMismatchError` instead of silently coercing.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Rational

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)


class ModeMismatchError(TypeError):
    """Exact and floating point values met in one expression."""


class NotExactError(ValueError):
    """An operation has no exact Gaussian-rational result."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise ModeMismatchError(f"cannot use {type(x).__name__} value {x!r} in exact mode")


class GaussRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussRational(other)
        if isinstance(other, (float, complex)):
            raise ModeMismatchError(
                f"cannot combine exact value with {type(other).__name__} {other!r}"
            )
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return GaussRational(
            (self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussRational(1) / (self ** -n)
        out, base = GaussRational(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        return format_complex(self)


I = GaussRational(0, 1)


def is_exact(x) -> bool:
    return isinstance(x, (GaussRational, int, Fraction)) and not isinstance(x, bool)


def mode_of_values(values) -> str | None:
    """Return the mode forced by ``values``, or ``None`` if all are neutral."""
    has_exact = has_float = False
    for v in values:
        if isinstance(v, GaussRational):
            has_exact = True
        elif isinstance(v, (float, complex)):
            has_float = True
        elif isinstance(v, (int, Fraction)):
            continue
        else:
            raise TypeError(f"not a complex scalar: {v!r}")
    if has_exact and has_float:
        raise ModeMismatchError("exact and float values mixed")
    if has_exact:
        return EXACT
    if has_float:
        return FLOAT
    return None


def to_mode(x, mode: str):
    """Convert one scalar to ``mode``. Float to exact is a binary-exact conversion."""
    if mode == EXACT:
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRational(x)
        if isinstance(x, float):
            return GaussRational(Fraction(x))
        if isinstance(x, complex):
            return GaussRational(Fraction(x.real), Fraction(x.imag))
    elif mode == FLOAT:
        return complex(x)
    raise ValueError(f"unknown mode {mode!r}")


def unify(values, mode: str | None = None) -> tuple:
    """Coerce ``values`` to one mode (inferred when ``mode`` is None; exact by default)."""
    values = tuple(values)
    found = mode_of_values(values)
    if mode is None:
        mode = found or EXACT
    elif found is not None and found != mode:
        raise ModeMismatchError(f"{found} values where {mode} mode required")
    return tuple(to_mode(v, mode) for v in values)


def scalar_mode(x) -> str:
    return FLOAT if isinstance(x, (float, complex)) else EXACT


def imag_unit(mode: str):
    return I if mode == EXACT else 1j


def one(mode: str):
    return GaussRational(1) if mode == EXACT else 1 + 0j


def zero(mode: str):
    return GaussRational(0) if mode == EXACT else 0j


def is_zero(x) -> bool:
    return x == 0


def _exact_rational_sqrt(q: Fraction) -> Fraction:
    if q < 0:
        raise NotExactError(f"negative radicand {q}")
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise NotExactError(f"{q} is not a rational square")
    return Fraction(rn, rd)


def csqrt(z):
    """Principal square root.

    The branch cut lies on the negative real axis; a negative real radicand
    yields a root with nonnegative imaginary part. In exact mode the root
    must itself be a Gaussian rational, otherwise :class:`NotExactError`.
    """
    if isinstance(z, (int, Fraction)):
        z = GaussRational(z)
    if isinstance(z, GaussRational):
        a, b = z.re, z.im
        if b == 0:
            if a >= 0:
                return GaussRational(_exact_rational_sqrt(a))
            return GaussRational(0, _exact_rational_sqrt(-a))
        modulus = _exact_rational_sqrt(a * a + b * b)
        x = _exact_rational_sqrt((modulus + a) / 2)
        y = _exact_rational_sqrt((modulus - a) / 2)
        return GaussRational(x, y if b > 0 else -y)
    z = complex(z)
    if z.imag == 0:
        # -0.0 imaginary part would flip the branch
        z = complex(z.real, 0.0)
    return cmath.sqrt(z)


# ---------------------------------------------------------------- literals

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?"
_COMPLEX_RE = re.compile(
    rf"^\s*(?:(?P<re>[+-]?{_NUM})(?:\s*(?P<isign>[+-])\s*(?P<im>{_NUM})j)?"
    rf"|(?P<only_im>[+-]?{_NUM})j)\s*$"
)


def _parse_real(text: str, mode: str):
    text = text.replace(" ", "")
    if mode == EXACT:
        return Fraction(text)
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def parse_complex(text: str, mode: str = EXACT):
    """Parse ``a``, ``bj`` or ``a+bj`` (``j`` is the complex imaginary unit).

    Parts may be decimals (with optional exponent) or ``p/q`` rationals.
    """
    m = _COMPLEX_RE.match(text)
    if not m:
        raise ValueError(f"bad complex literal {text!r}")
    if m.group("only_im") is not None:
        re_part, im_part = 0, _parse_real(m.group("only_im"), mode)
    else:
        re_part = _parse_real(m.group("re"), mode)
        im_part = 0
        if m.group("im") is not None:
            im_part = _parse_real(m.group("isign") + m.group("im"), mode)
    if mode == EXACT:
        return GaussRational(re_part, im_part)
    return complex(re_part, im_part)


def _format_real(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    x = float(x)
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def format_complex(z) -> str:
    """Inverse of :func:`parse_complex` (round-trips exactly in both modes)."""
    if isinstance(z, (int, Fraction)):
        z = GaussRational(z)
    if isinstance(z, GaussRational):
        re_part, im_part = z.re, z.im
    else:
        z = complex(z)
        re_part, im_part = z.real, z.imag
    if im_part == 0:
        return _format_real(re_part)
    im_text = _format_real(im_part) + "j"
    if re_part == 0:
        return im_text
    if not im_text.startswith("-"):
        im_text = "+" + im_text
    return _format_real(re_part) + im_text


# JSON carries numbers as [re, im] pairs; exact non-integers travel as "p/q".

def _real_to_json(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return float(x)


def complex_to_json(z) -> list:
    if isinstance(z, (int, Fraction)):
        z = GaussRational(z)
    if isinstance(z, GaussRational):
        return [_real_to_json(z.re), _real_to_json(z.im)]
    z = complex(z)
    return [z.real, z.imag]


def _real_from_json(x, mode: str):
    if isinstance(x, bool):
        raise ValueError("boolean is not a number")
    if isinstance(x, str):
        return Fraction(x) if mode == EXACT else float(Fraction(x))
    if mode == EXACT:
        # str() keeps decimal literals like 0.1 at their written value
        return Fraction(str(x)) if isinstance(x, float) else Fraction(x)
    return float(x)


def complex_from_json(value, mode: str = EXACT):
    """Read a number given as ``[re, im]``, a plain number, or a complex literal string."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"complex pair must have two entries: {value!r}")
        re_part = _real_from_json(value[0], mode)
        im_part = _real_from_json(value[1], mode)
    elif isinstance(value, str):
        return parse_complex(value, mode)
    else:
        re_part, im_part = _real_from_json(value, mode), 0
    if mode == EXACT:
        return GaussRational(re_part, im_part)
    return complex(re_part, im_part)

"""Plane-wave fields with exact differentiation, and sampled grids for
finite-difference cross-checks.

An :class:`AnalyticField` is a finite sum ``sum amp * exp(i <k, x>)`` with
4-component complex amplitudes and complex wave vectors ``k``. Derivatives
act on a term by multiplying its amplitude by ``i k_j``, so every operator
from :mod:`quatbridge.operators` maps such fields to such fields exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algebra import Matrix4, Quaternion, qmul
from .operators import DiffOperator
from .scalars import (
    EXACT,
    ModeMismatchError,
    complex_from_json,
    complex_to_json,
    imag_unit,
    scalar_mode,
    to_mode,
    unify,
)


class PlaneWaveTerm:
    """``amp * exp(i <k, x>)``; immutable."""

    __slots__ = ("amp", "k")

    def __init__(self, amp: Sequence, k: Sequence, mode: str | None = None):
        amp, k = tuple(amp), tuple(k)
        if len(amp) != 4 or len(k) != 3:
            raise ValueError("amplitude needs 4 components and k needs 3")
        values = unify(amp + k, mode)
        object.__setattr__(self, "amp", values[:4])
        object.__setattr__(self, "k", values[4:])

    def __setattr__(self, name, value):
        raise AttributeError("PlaneWaveTerm is immutable")

    @property
    def mode(self) -> str:
        return scalar_mode(self.amp[0])

    def __eq__(self, other):
        if not isinstance(other, PlaneWaveTerm):
            return NotImplemented
        return self.amp == other.amp and self.k == other.k

    def __hash__(self):
        return hash((self.amp, self.k))

    def __repr__(self):
        return f"PlaneWaveTerm(amp={self.amp!r}, k={self.k!r})"


def _k_order(k: tuple):
    return tuple((c.real, c.imag) for c in k)


class AnalyticField:
    """Finite sum of plane waves, merged by wave vector with zero amplitudes dropped.

    Equality is structural on the normalized sum, so a field equals the
    zero field exactly when it vanishes identically.
    """

    __slots__ = ("terms", "mode")

    def __init__(self, terms: Iterable[PlaneWaveTerm] = (), mode: str | None = None):
        terms = list(terms)
        if mode is None:
            mode = terms[0].mode if terms else EXACT
        merged: dict = {}
        for t in terms:
            if t.mode != mode:
                _raise_mode(t, mode)
            if t.k in merged:
                merged[t.k] = tuple(a + b for a, b in zip(merged[t.k], t.amp))
            else:
                merged[t.k] = t.amp
        kept = [PlaneWaveTerm(a, k, mode) for k, a in merged.items() if any(x != 0 for x in a)]
        kept.sort(key=lambda t: _k_order(t.k))
        object.__setattr__(self, "terms", tuple(kept))
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("AnalyticField is immutable")

    @classmethod
    def plane_wave(cls, amp: Sequence, k: Sequence, mode: str | None = None) -> "AnalyticField":
        term = PlaneWaveTerm(amp, k, mode)
        return cls([term], term.mode)

    @classmethod
    def constant(cls, amp: Sequence, mode: str | None = None) -> "AnalyticField":
        return cls.plane_wave(amp, (0, 0, 0), mode)

    @classmethod
    def zero(cls, mode: str = EXACT) -> "AnalyticField":
        return cls((), mode)

    def is_zero(self) -> bool:
        return not self.terms

    def to_mode(self, mode: str) -> "AnalyticField":
        return AnalyticField(
            [PlaneWaveTerm([to_mode(a, mode) for a in t.amp], [to_mode(c, mode) for c in t.k], mode)
             for t in self.terms],
            mode,
        )

    def amplitude_norm(self) -> float:
        """Largest amplitude modulus over terms and components."""
        return max((abs(a) for t in self.terms for a in t.amp), default=0.0)

    def map_amplitudes(self, fn) -> "AnalyticField":
        return AnalyticField([PlaneWaveTerm(fn(t.amp), t.k, self.mode) for t in self.terms], self.mode)

    def __add__(self, other):
        if not isinstance(other, AnalyticField):
            return NotImplemented
        if self.mode != other.mode and self.terms and other.terms:
            _raise_mode(other.terms[0], self.mode)
        mode = self.mode if self.terms else other.mode
        return AnalyticField(self.terms + other.terms, mode)

    def __neg__(self):
        return self.map_amplitudes(lambda a: tuple(-x for x in a))

    def __sub__(self, other):
        if not isinstance(other, AnalyticField):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        """Multiply by a complex scalar."""
        return self.map_amplitudes(lambda a: tuple(x * c for x in a))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.map_amplitudes(lambda a: tuple(x / c for x in a))

    def right_mul(self, q: Quaternion) -> "AnalyticField":
        """Pointwise ``f * q``, amplitudes read as quaternion coordinates."""
        return self.map_amplitudes(lambda a: qmul(Quaternion(*a), q).coords)

    def left_mul(self, q: Quaternion) -> "AnalyticField":
        return self.map_amplitudes(lambda a: qmul(q, Quaternion(*a)).coords)

    def matrix_mul(self, m: Matrix4) -> "AnalyticField":
        return self.map_amplitudes(m.apply)

    def scalar_part(self) -> "AnalyticField":
        return self.map_amplitudes(lambda a: (a[0], 0 * a[0], 0 * a[0], 0 * a[0]))

    def vector_part(self) -> "AnalyticField":
        return self.map_amplitudes(lambda a: (0 * a[0], a[1], a[2], a[3]))

    def is_vectorial(self) -> bool:
        return all(t.amp[0] == 0 for t in self.terms)

    def component(self, i: int) -> "AnalyticField":
        """Component ``i`` moved into slot 0, other slots zeroed."""
        return self.map_amplitudes(lambda a: (a[i], 0 * a[i], 0 * a[i], 0 * a[i]))

    def evaluate(self, points) -> np.ndarray:
        """Values at ``points`` (shape ``(..., 3)``), returned with shape ``(4, ...)``."""
        pts = np.asarray(points, dtype=float)
        out = np.zeros((4,) + pts.shape[:-1], dtype=complex)
        for t in self.terms:
            k = np.array([complex(c) for c in t.k])
            phase = np.exp(1j * (pts @ k))
            for i in range(4):
                out[i] += complex(t.amp[i]) * phase
        return out

    def __eq__(self, other):
        if not isinstance(other, AnalyticField):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.mode == other.mode and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"AnalyticField({field_to_json(self)})"


def _raise_mode(term, mode):
    raise ModeMismatchError(f"{term.mode} term in {mode} field")


def apply_operator(op: DiffOperator, f: AnalyticField) -> AnalyticField:
    """Apply ``op`` to ``f`` exactly.

    For a term ``C d^n R^m``: reflect (negate ``k_j`` for ``j`` in ``m``),
    multiply by ``prod (i k_j)^n_j``, then act with ``C`` on the amplitude.
    """
    if f.is_zero():
        return AnalyticField.zero(op.mode)
    if op.mode != f.mode:
        _raise_mode(f.terms[0], op.mode)
    i = imag_unit(f.mode)
    out = []
    for (deg, mask), coeff in op.items():
        for t in f.terms:
            k = tuple(-c if j + 1 in mask else c for j, c in enumerate(t.k))
            factor = None
            for j in range(3):
                for _ in range(deg[j]):
                    factor = i * k[j] if factor is None else factor * (i * k[j])
            amp = coeff.apply(t.amp)
            if factor is not None:
                amp = tuple(a * factor for a in amp)
            out.append(PlaneWaveTerm(amp, k, f.mode))
    return AnalyticField(out, f.mode)


def vector_parts(f: AnalyticField) -> tuple[AnalyticField, AnalyticField, AnalyticField]:
    """``(div f_vec, grad f0, rot f_vec)`` computed directly from the components.

    ``div`` sits in slot 0; ``grad`` and ``rot`` occupy slots 1..3.
    """
    i = imag_unit(f.mode)
    divs, grads, rots = [], [], []
    for t in f.terms:
        a, k = t.amp, t.k
        d = [i * kj for kj in k]
        z = 0 * a[0]
        divs.append(PlaneWaveTerm((d[0] * a[1] + d[1] * a[2] + d[2] * a[3], z, z, z), k, f.mode))
        grads.append(PlaneWaveTerm((z, d[0] * a[0], d[1] * a[0], d[2] * a[0]), k, f.mode))
        rots.append(PlaneWaveTerm(
            (z, d[1] * a[3] - d[2] * a[2], d[2] * a[1] - d[0] * a[3], d[0] * a[2] - d[1] * a[1]),
            k, f.mode,
        ))
    return (AnalyticField(divs, f.mode), AnalyticField(grads, f.mode), AnalyticField(rots, f.mode))


# ------------------------------------------------------------------ JSON

def field_to_json(f: AnalyticField) -> dict:
    return {
        "terms": [
            {"amp": [complex_to_json(a) for a in t.amp], "k": [complex_to_json(c) for c in t.k]}
            for t in f.terms
        ]
    }


def field_from_json(data, mode: str = EXACT) -> AnalyticField:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "terms" not in data:
        raise ValueError('field literal must be an object with a "terms" list')
    terms = []
    for entry in data["terms"]:
        amp = [complex_from_json(a, mode) for a in entry["amp"]]
        k = [complex_from_json(c, mode) for c in entry["k"]]
        terms.append(PlaneWaveTerm(amp, k, mode))
    return AnalyticField(terms, mode)


# ------------------------------------------------------------------ grids

MIN_NODES = 5


@dataclass(frozen=True)
class GridField:
    """Samples on a uniform axis-aligned grid; ``samples`` has shape ``(4, n1, n2, n3)``."""

    corner: tuple
    h: float
    samples: np.ndarray

    @property
    def shape(self) -> tuple:
        return self.samples.shape[1:]

    def interior(self) -> "GridField":
        return GridField(
            tuple(c + self.h for c in self.corner),
            self.h,
            self.samples[:, 1:-1, 1:-1, 1:-1],
        )

    def __sub__(self, other: "GridField") -> "GridField":
        if self.samples.shape != other.samples.shape:
            raise ValueError("grid shapes differ")
        return GridField(self.corner, self.h, self.samples - other.samples)


def _nodes(extent: float, h: float) -> int:
    n = int(round(extent / h)) + 1
    if abs((n - 1) * h - extent) > 1e-9 * max(1.0, extent):
        raise ValueError(f"extent {extent} is not a multiple of h={h}")
    return n


def sample(f: AnalyticField, box, h: float) -> GridField:
    """Sample ``f`` on the grid spanning ``box = (corner, extents)``."""
    corner, extents = box
    corner = tuple(float(c) for c in corner)
    counts = [_nodes(float(e), h) for e in extents]
    if min(counts) < MIN_NODES:
        raise ValueError(f"box too small: need at least {MIN_NODES} nodes per axis, got {counts}")
    axes = [corner[j] + h * np.arange(counts[j]) for j in range(3)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
    return GridField(corner, float(h), f.evaluate(grid))


def _central_first(a: np.ndarray, axis: int, h: float) -> np.ndarray:
    return (np.roll(a, -1, axis=axis) - np.roll(a, 1, axis=axis)) / (2 * h)


def _central_second(a: np.ndarray, axis: int, h: float) -> np.ndarray:
    return (np.roll(a, -1, axis=axis) - 2 * a + np.roll(a, 1, axis=axis)) / (h * h)


def fd_apply(op: DiffOperator, g: GridField) -> GridField:
    """Second-order central differences, returned on interior nodes only.

    Operators may have total degree at most 2. Reflections flip the sample
    array, which needs the box symmetric about each reflected plane.
    """
    if op.order() > 2:
        raise ValueError("finite differences support total degree <= 2")
    if min(g.shape) < MIN_NODES:
        raise ValueError(f"box too small: need at least {MIN_NODES} nodes per axis")
    for _, mask in op.terms:
        for k in mask:
            centre = g.corner[k - 1] + 0.5 * (g.shape[k - 1] - 1) * g.h
            if abs(centre) > 1e-9 * max(1.0, g.h * g.shape[k - 1]):
                raise ValueError(f"reflection R{k} needs a box symmetric about x{k}=0")
    out = np.zeros_like(g.samples)
    for (deg, mask), coeff in op.items():
        a = g.samples
        for k in mask:
            a = np.flip(a, axis=k)
        for j in range(3):
            n = deg[j]
            axis = j + 1
            if n == 2:
                a = _central_second(a, axis, g.h)
            elif n == 1:
                a = _central_first(a, axis, g.h)
        m = np.array([[complex(x) for x in row] for row in coeff.rows])
        out += np.tensordot(m, a, axes=(1, 0))
    # roll wraps around; only interior nodes are valid
    return GridField(g.corner, g.h, out).interior()


def residual_max(g: GridField) -> float:
    """Max complex modulus over all components and nodes."""
    return float(np.max(np.abs(g.samples))) if g.samples.size else 0.0


def fd_error(op: DiffOperator, f: AnalyticField, box, h: float) -> float:
    """Max-norm gap between finite differences and exact application of ``op``."""
    numeric = fd_apply(op, sample(f, box, h))
    exact = sample(apply_operator(op, f), box, h).interior()
    return residual_max(numeric - exact)


def fd_convergence(op: DiffOperator, f: AnalyticField, box, h: float) -> dict:
    """Errors at ``h`` and ``h/2`` with the ratio and observed order."""
    coarse = fd_error(op, f, box, h)
    fine = fd_error(op, f, box, h / 2)
    ratio = coarse / fine if fine > 0 else float("inf")
    return {
        "h": h,
        "error_h": coarse,
        "error_h2": fine,
        "ratio": ratio,
        "order": float(np.log2(ratio)) if fine > 0 and coarse > 0 else float("inf"),
    }

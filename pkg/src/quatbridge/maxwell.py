"""Time-harmonic Maxwell equations in vector and quaternionic form,
their diagonalization into Beltrami fields, and plane-wave solutions.

Fields carry ``exp(-i omega t)`` implicitly; only spatial amplitudes are
represented. Natural units (``eps0 = mu0 = c = 1``) are the default.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import cross, dot
from .fields import AnalyticField, apply_operator, vector_parts
from .operators import d_kappa, moisil_theodoresco
from .scalars import EXACT, FLOAT, csqrt, imag_unit, mode_of_values, to_mode, unify

TIME_CONVENTION = "exp(-i*omega*t)"


@dataclass(frozen=True)
class MediumParams:
    """Homogeneous isotropic medium and frequency.

    ``eps0 * mu0 * c**2 == 1`` is enforced so that both wave-number
    formulas agree. Relative parameters may be complex (lossy media).
    """

    eps0: object = 1
    mu0: object = 1
    eps_r: object = 1
    mu_r: object = 1
    omega: object = 1
    c: object = 1
    mode: str | None = field(default=None, compare=False)

    def __post_init__(self):
        names = ("eps0", "mu0", "eps_r", "mu_r", "omega", "c")
        values = unify((getattr(self, n) for n in names), self.mode)
        for n, v in zip(names, values):
            object.__setattr__(self, n, v)
        mode = mode_of_values(values) or EXACT
        object.__setattr__(self, "mode", mode)
        closure = self.eps0 * self.mu0 * self.c * self.c
        if mode == EXACT:
            if closure != 1:
                raise ValueError(f"eps0*mu0*c^2 must equal 1, got {closure}")
        elif abs(closure - 1) > 1e-12:
            raise ValueError(f"eps0*mu0*c^2 must equal 1, got {closure}")

    @property
    def eps(self):
        return self.eps0 * self.eps_r

    @property
    def mu(self):
        return self.mu0 * self.mu_r

    def to_mode(self, mode: str) -> "MediumParams":
        return MediumParams(
            *(to_mode(getattr(self, n), mode) for n in ("eps0", "mu0", "eps_r", "mu_r", "omega", "c")),
            mode=mode,
        )


@dataclass(frozen=True)
class MaxwellPair:
    E: AnalyticField
    H: AnalyticField

    def __post_init__(self):
        if not (self.E.is_vectorial() and self.H.is_vectorial()):
            raise ValueError("E and H must be purely vectorial")

    @property
    def mode(self) -> str:
        for f in (self.E, self.H):
            if not f.is_zero():
                return f.mode
        return self.E.mode


def wavenumber(m: MediumParams):
    """``kappa = (omega/c) * sqrt(eps_r*mu_r)`` on the principal branch."""
    return m.omega / m.c * csqrt(m.eps_r * m.mu_r)


def maxwell_residuals(p: MaxwellPair, m: MediumParams) -> tuple:
    """``(rot H + i w eps E, rot E - i w mu H, div E, div H)``; all vanish iff ``p`` solves the system."""
    i = imag_unit(m.mode)
    div_e, _, rot_e = vector_parts(p.E)
    div_h, _, rot_h = vector_parts(p.H)
    return (
        rot_h + p.E * (i * m.omega * m.eps),
        rot_e - p.H * (i * m.omega * m.mu),
        div_e,
        div_h,
    )


def quaternionic_residuals(p: MaxwellPair, m: MediumParams) -> tuple:
    """``(D E - i w mu H, D H + i w eps E)``."""
    i = imag_unit(m.mode)
    d = moisil_theodoresco(m.mode)
    return (
        apply_operator(d, p.E) - p.H * (i * m.omega * m.mu),
        apply_operator(d, p.H) + p.E * (i * m.omega * m.eps),
    )


def to_beltrami(p: MaxwellPair, m: MediumParams) -> tuple[AnalyticField, AnalyticField]:
    """``phi = -i w eps E + kappa H`` and ``psi = i w eps E + kappa H``."""
    i = imag_unit(m.mode)
    kappa = wavenumber(m)
    e_part = p.E * (i * m.omega * m.eps)
    h_part = p.H * kappa
    return h_part - e_part, h_part + e_part


def from_beltrami(phi: AnalyticField, psi: AnalyticField, m: MediumParams) -> MaxwellPair:
    i = imag_unit(m.mode)
    kappa = wavenumber(m)
    if kappa == 0 or m.omega * m.eps == 0:
        raise ValueError("inversion needs kappa != 0 and omega*eps != 0")
    E = (psi - phi) / (2 * i * m.omega * m.eps)
    H = (psi + phi) / (2 * kappa)
    return MaxwellPair(E, H)


def beltrami_residual(f: AnalyticField, kappa, sign: int) -> AnalyticField:
    """``(D + sign*kappa) f``.

    ``phi`` solves it with ``sign=-1`` and ``psi`` with ``sign=+1``.
    """
    return apply_operator(d_kappa(kappa, sign), f)


def _mode_of(x) -> str:
    return mode_of_values([x]) or EXACT


def plane_wave(m: MediumParams, direction, polarization) -> MaxwellPair:
    """Plane-wave solution along a real unit ``direction``.

    ``E = e exp(i kappa <k, x>)`` and ``H = kappa/(omega mu) (k x e) exp(...)``.
    """
    k_hat = unify(direction, m.mode)
    e = unify(polarization, m.mode)
    _check_direction(k_hat, m.mode)
    if dot(k_hat, e) != 0 and not (m.mode == FLOAT and abs(dot(k_hat, e)) < 1e-12):
        raise ValueError("polarization must be transverse to the direction")
    kappa = wavenumber(m)
    k = tuple(kappa * c for c in k_hat)
    h_amp = tuple(c * (kappa / (m.omega * m.mu)) for c in cross(k_hat, e))
    z = 0 * kappa
    E = AnalyticField.plane_wave((z, *e), k, m.mode)
    H = AnalyticField.plane_wave((z, *h_amp), k, m.mode)
    return MaxwellPair(E, H)


def _check_direction(k_hat, mode: str) -> None:
    n2 = dot(k_hat, k_hat)
    if all(c == 0 for c in k_hat):
        raise ValueError("direction must be nonzero")
    if mode == EXACT:
        if n2 != 1:
            raise ValueError(f"direction must have unit length, |k|^2 = {n2}")
    elif abs(n2 - 1) > 1e-12:
        raise ValueError(f"direction must have unit length, |k|^2 = {n2}")


def orthonormal_frame(direction, mode: str = EXACT) -> tuple:
    """``(u, v)`` with ``(u, v, direction)`` right-handed orthonormal.

    In exact mode this needs a coordinate axis whose cross product with
    ``direction`` has rational length, e.g. any rational unit vector with a
    zero component.
    """
    k = unify(direction, mode)
    _check_direction(k, mode)
    for axis in range(3):
        e = [0, 0, 0]
        e[axis] = 1
        e = unify(e, mode)
        w = cross(k, e)
        n2 = dot(w, w)
        if n2 == 0:
            continue
        try:
            n = csqrt(n2)
        except ValueError:
            continue
        v = tuple(c / n for c in w)
        u = cross(v, k)
        return u, v
    raise ValueError(f"no exact orthonormal frame for direction {direction}")


def circular_beltrami(kappa, direction, sign: int = 1, mode: str | None = None) -> AnalyticField:
    """``(u + sign*j*v) exp(i kappa <k, x>)``, an eigenfield with ``D f = sign*kappa*f``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    mode = mode or _mode_of(kappa)
    u, v = orthonormal_frame(direction, mode)
    i = imag_unit(mode)
    kappa = to_mode(kappa, mode)
    amp = tuple(a + sign * i * b for a, b in zip(u, v))
    k = tuple(kappa * c for c in unify(direction, mode))
    return AnalyticField.plane_wave((0 * kappa, *amp), k, mode)


def vacuum(omega=1, mode: str | None = None) -> MediumParams:
    return MediumParams(omega=omega, mode=mode)


__all__ = [
    "TIME_CONVENTION",
    "MaxwellPair",
    "MediumParams",
    "beltrami_residual",
    "circular_beltrami",
    "from_beltrami",
    "maxwell_residuals",
    "orthonormal_frame",
    "plane_wave",
    "quaternionic_residuals",
    "to_beltrami",
    "vacuum",
    "wavenumber",
]

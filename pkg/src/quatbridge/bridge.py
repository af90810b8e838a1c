"""Projectors linking the Dirac operator ``D_alpha`` to the Maxwell
operators ``D +- kappa``, solution transport, and dispersion bookkeeping.

Orientation convention, kept in one place: ``P+-`` act by right
multiplication with ``(kappa +- alpha) / (2 kappa)``. The product
``P D`` means "apply ``D``, then multiply on the right", so as operators
``P D = const_right(p) @ D``. Right multiplications compose in reverse:
``const_right(p) @ const_right(q) == const_right(q * p)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Quaternion, qmul, square_of_vector
from .dirac import DiracParams, alpha_vector, matching_kappa
from .fields import AnalyticField
from .maxwell import (
    MaxwellPair,
    MediumParams,
    beltrami_residual,
    maxwell_residuals,
    wavenumber,
)
from .operators import DiffOperator, const_right, d_alpha, d_kappa
from .report import Check, check_zero
from .scalars import (
    EXACT,
    complex_from_json,
    complex_to_json,
    csqrt,
    imag_unit,
    mode_of_values,
    to_mode,
    unify,
)


class RelationViolated(ValueError):
    """``kappa^2 != alpha^2`` where a construction depends on it."""


@dataclass(frozen=True)
class ProjectorPair:
    plus: Quaternion
    minus: Quaternion

    def operators(self) -> tuple[DiffOperator, DiffOperator]:
        return const_right(self.plus), const_right(self.minus)


def projectors(kappa, alpha: Quaternion) -> ProjectorPair:
    """Right multipliers ``(kappa +- alpha) / (2 kappa)``."""
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    k = Quaternion.scalar(kappa, mode=alpha.mode)
    two_k = 2 * to_mode(kappa, alpha.mode)
    return ProjectorPair((k + alpha) / two_k, (k - alpha) / two_k)


def relation_defect(kappa, alpha: Quaternion):
    """``kappa^2 - alpha^2``; zero exactly when the projectors are genuine projectors."""
    return kappa * kappa - square_of_vector(alpha)


def projector_laws(pp: ProjectorPair, kappa, alpha: Quaternion, tol: float = 1e-12) -> list[Check]:
    """Idempotence, mutual orthogonality and completeness of ``P+-`` with residuals."""
    mode = alpha.mode
    one = Quaternion.unit(0, mode)
    p, m = pp.plus, pp.minus
    return [
        check_zero("projector.idempotent_plus", "P+ P+ = P+", qmul(p, p) - p, mode, tol),
        check_zero("projector.idempotent_minus", "P- P- = P-", qmul(m, m) - m, mode, tol),
        check_zero("projector.orthogonal_minus_plus", "P- P+ = 0", qmul(m, p), mode, tol),
        check_zero("projector.orthogonal_plus_minus", "P+ P- = 0", qmul(p, m), mode, tol),
        check_zero("projector.complete", "P+ + P- = 1", p + m - one, mode, tol),
    ]


def projector_identities(kappa, alpha: Quaternion) -> dict[str, tuple[str, DiffOperator]]:
    """Normal-form differences ``lhs - rhs`` for the projector identities.

    Keys name the identity; values are ``(formula, difference)``.
    """
    pp = projectors(kappa, alpha)
    p_plus, p_minus = pp.operators()
    d_a, d_ma = d_alpha(alpha), d_alpha(-alpha)
    kappa = to_mode(kappa, alpha.mode)
    d_k, d_mk = d_kappa(kappa, 1), d_kappa(kappa, -1)
    return {
        "identity.forward": (
            "D_alpha = P+ D_kappa + P- D_-kappa",
            d_a - (p_plus @ d_k + p_minus @ d_mk),
        ),
        "identity.reverse_plus": (
            "D_kappa = P+ D_alpha + P- D_-alpha",
            d_k - (p_plus @ d_a + p_minus @ d_ma),
        ),
        "identity.reverse_minus": (
            "D_-kappa = P- D_alpha + P+ D_-alpha",
            d_mk - (p_minus @ d_a + p_plus @ d_ma),
        ),
        "identity.commute_plus": ("P+ D_kappa = D_kappa P+", p_plus @ d_k - d_k @ p_plus),
        "identity.commute_minus": ("P- D_-kappa = D_-kappa P-", p_minus @ d_mk - d_mk @ p_minus),
        "identity.intertwine_plus": ("P+ D_alpha = D_kappa P+", p_plus @ d_a - d_k @ p_plus),
        "identity.intertwine_minus": ("P- D_alpha = D_-kappa P-", p_minus @ d_a - d_mk @ p_minus),
    }


def identity_check(kappa, alpha: Quaternion, tol: float = 1e-12) -> list[Check]:
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    return [
        check_zero(name, formula, diff, alpha.mode, tol)
        for name, (formula, diff) in projector_identities(kappa, alpha).items()
    ]


def _relation_holds(kappa, alpha: Quaternion, tol: float) -> bool:
    defect = relation_defect(to_mode(kappa, alpha.mode), alpha)
    return defect == 0 if alpha.mode == EXACT else abs(defect) <= tol


def maxwell_to_dirac(
    pair: MaxwellPair, m: MediumParams, p: DiracParams, tol: float = 1e-12
) -> AnalyticField:
    """``f = (i w eps / kappa) E * alpha + kappa H``, a solution of ``D_alpha f = 0``."""
    alpha = alpha_vector(p)
    kappa = wavenumber(m)
    if not _relation_holds(kappa, alpha, tol):
        raise RelationViolated(
            f"kappa^2 = {kappa * kappa} differs from alpha^2 = {square_of_vector(alpha)}"
        )
    for r in maxwell_residuals(pair, m):
        if not r.is_zero() and (m.mode == EXACT or r.amplitude_norm() > tol):
            raise ValueError("fields do not solve the Maxwell system")
    i = imag_unit(m.mode)
    return pair.E.right_mul(alpha) * (i * m.omega * m.eps / kappa) + pair.H * kappa


def decompose(f: AnalyticField, kappa, alpha: Quaternion) -> tuple[AnalyticField, AnalyticField]:
    """``(psi, phi) = (P+ f, P- f)``; they sum to ``f``."""
    pp = projectors(kappa, alpha)
    return f.right_mul(pp.plus), f.right_mul(pp.minus)


def decomposition_residuals(f: AnalyticField, kappa, alpha: Quaternion) -> tuple:
    """``((D + kappa) psi, (D - kappa) phi)`` for the parts from :func:`decompose`."""
    psi, phi = decompose(f, kappa, alpha)
    kappa = to_mode(kappa, alpha.mode)
    return beltrami_residual(psi, kappa, 1), beltrami_residual(phi, kappa, -1)


# ------------------------------------------------------------ dispersion

@dataclass(frozen=True)
class DispersionRecord:
    omega: object
    kappa: object
    energy: object
    mass: object
    momentum: object
    eps_r: object = 1
    mu_r: object = 1
    hbar: object = 1
    c: object = 1
    mode: str | None = field(default=None, compare=False)

    _names = ("omega", "kappa", "energy", "mass", "momentum", "eps_r", "mu_r", "hbar", "c")

    def __post_init__(self):
        values = unify((getattr(self, n) for n in self._names), self.mode)
        for n, v in zip(self._names, values):
            object.__setattr__(self, n, v)
        object.__setattr__(self, "mode", mode_of_values(values) or EXACT)

    @classmethod
    def from_dirac(cls, p: DiracParams, eps_r=1, mu_r=1) -> "DispersionRecord":
        """Solve the matching condition for ``omega`` with ``p = hbar * kappa``."""
        eps_r, mu_r = unify((eps_r, mu_r), p.mode)
        kappa = matching_kappa(p)
        omega = kappa * p.c / csqrt(eps_r * mu_r)
        return cls(omega, kappa, p.energy, p.mass, p.hbar * kappa, eps_r, mu_r, p.hbar, p.c, mode=p.mode)

    def to_json(self) -> dict:
        return {n: complex_to_json(getattr(self, n)) for n in self._names}

    @classmethod
    def from_json(cls, data: dict, mode: str = EXACT) -> "DispersionRecord":
        defaults = {"eps_r": 1, "mu_r": 1, "hbar": 1, "c": 1}
        values = {}
        for n in cls._names:
            if n in data:
                values[n] = complex_from_json(data[n], mode)
            elif n in defaults:
                values[n] = defaults[n]
            else:
                raise ValueError(f"dispersion record misses {n!r}")
        return cls(**values, mode=mode)


def dispersion_residuals(r: DispersionRecord) -> dict:
    c2 = r.c * r.c
    return {
        "kappa^2 = (E^2/c^2 - m^2 c^2)/hbar^2":
            r.kappa * r.kappa - (r.energy * r.energy / c2 - r.mass * r.mass * c2) / (r.hbar * r.hbar),
        "(hbar omega)^2 eps_r mu_r = E^2 - m^2 c^4":
            (r.hbar * r.omega) ** 2 * r.eps_r * r.mu_r - (r.energy * r.energy - r.mass * r.mass * c2 * c2),
        "E^2 = p^2 c^2 + m^2 c^4":
            r.energy * r.energy - (r.momentum * r.momentum * c2 + r.mass * r.mass * c2 * c2),
        "p = hbar kappa": r.momentum - r.hbar * r.kappa,
    }


_DISPERSION_NAMES = ("dispersion.matching", "dispersion.frequency_form",
                     "dispersion.energy_momentum", "dispersion.de_broglie")


def dispersion_check(r: DispersionRecord, tol: float = 1e-12) -> list[Check]:
    checks = [
        check_zero(name, formula, value, r.mode, tol)
        for name, (formula, value) in zip(_DISPERSION_NAMES, dispersion_residuals(r).items())
    ]
    if r.mass == 0 and r.eps_r * r.mu_r == 1:
        checks.append(check_zero("dispersion.massless_energy_frequency", "E = hbar omega",
                                 r.energy - r.hbar * r.omega, r.mode, tol))
        checks.append(check_zero("dispersion.massless_energy_momentum", "E = p c",
                                 r.energy - r.momentum * r.c, r.mode, tol))
    return checks


__all__ = [
    "DispersionRecord",
    "ProjectorPair",
    "RelationViolated",
    "decompose",
    "decomposition_residuals",
    "dispersion_check",
    "dispersion_residuals",
    "identity_check",
    "maxwell_to_dirac",
    "projector_identities",
    "projector_laws",
    "projectors",
    "relation_defect",
]

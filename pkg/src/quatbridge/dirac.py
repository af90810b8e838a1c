"""Quaternionic form of the fixed-energy Dirac equation.

The wave function is ``Phi(t, x) = q(x) exp(i E t / hbar)``; only ``q`` is
represented. The transform ``A`` maps a bispinor ``Phi`` to a quaternion
field ``F(x) = M_A Phi(x1, x2, -x3)``, and its inverse uses ``M_inv`` with
the same reflection.

The gamma matrices are not assumed. :func:`reconstruct_gammas` recovers
them from the quaternionic operator by conjugating with ``A`` and reading
off the coefficients, then measures the Clifford relations they satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Matrix4, Quaternion, square_of_vector
from .fields import AnalyticField, apply_operator
from .operators import (
    NO_MASK,
    ZERO_DEGREE,
    DiffOperator,
    const_matrix,
    d_alpha,
    identity,
    partial,
    reflect,
)
from .scalars import (
    EXACT,
    FLOAT,
    GaussRational,
    complex_to_json,
    csqrt,
    imag_unit,
    mode_of_values,
    to_mode,
    unify,
)

TIME_CONVENTION = "exp(+i*E*t/hbar)"
MINKOWSKI = (1, -1, -1, -1)


class ReconstructionError(ArithmeticError):
    """Gamma matrices could not be recovered from the quaternionic operator."""


@dataclass(frozen=True)
class DiracParams:
    energy: object = 0
    mass: object = 0
    hbar: object = 1
    c: object = 1
    mode: str | None = field(default=None, compare=False)

    def __post_init__(self):
        names = ("energy", "mass", "hbar", "c")
        values = unify((getattr(self, n) for n in names), self.mode)
        for n, v in zip(names, values):
            object.__setattr__(self, n, v)
        object.__setattr__(self, "mode", mode_of_values(values) or EXACT)
        for n in names:
            if getattr(self, n).imag != 0:
                raise ValueError(f"{n} must be real")
        if not self.hbar.real > 0 or not self.c.real > 0:
            raise ValueError("hbar and c must be positive")
        if self.mass.real < 0:
            raise ValueError("mass must be nonnegative")

    @property
    def a(self):
        """Energy coefficient ``E / (c hbar)``."""
        return self.energy / (self.c * self.hbar)

    @property
    def b(self):
        """Mass coefficient ``m c / hbar``."""
        return self.mass * self.c / self.hbar

    def to_mode(self, mode: str) -> "DiracParams":
        return DiracParams(
            *(to_mode(getattr(self, n), mode) for n in ("energy", "mass", "hbar", "c")), mode=mode
        )


def alpha_vector(p: DiracParams) -> Quaternion:
    """``-(1/hbar) (i (E/c) i1 + m c i2)``."""
    i = imag_unit(p.mode)
    return Quaternion(0, -i * p.energy / (p.c * p.hbar), -p.mass * p.c / p.hbar, 0, mode=p.mode)


def matching_kappa(p: DiracParams):
    """Principal root of ``alpha^2``; imaginary when ``E^2 < m^2 c^4``."""
    return csqrt(square_of_vector(alpha_vector(p)))


def dirac_quaternionic(p: DiracParams) -> DiffOperator:
    return d_alpha(alpha_vector(p))


# ------------------------------------------------------------ transform A

def _half(mode):
    return GaussRational(Fraction(1, 2)) if mode == EXACT else 0.5 + 0j


@dataclass(frozen=True)
class TransformA:
    """``F = M_A Phi~`` and ``Phi = M_inv F~``, where ``~`` negates ``x3``."""

    matrix: Matrix4
    inverse_matrix: Matrix4
    axis: int = 3

    @classmethod
    def build(cls, mode: str = EXACT) -> "TransformA":
        i = imag_unit(mode)
        m_a = Matrix4(
            [
                [0, -1, 1, 0],
                [i, 0, 0, -i],
                [-1, 0, 0, -1],
                [0, i, i, 0],
            ],
            mode=mode,
        ) * _half(mode)
        m_inv = Matrix4(
            [
                [0, -i, -1, 0],
                [-1, 0, 0, -i],
                [1, 0, 0, -i],
                [0, i, -1, 0],
            ],
            mode=mode,
        )
        return cls(m_a, m_inv)

    @property
    def mode(self) -> str:
        return self.matrix.mode

    def operator(self) -> DiffOperator:
        return const_matrix(self.matrix) @ reflect(self.axis, self.mode)

    def inverse_operator(self) -> DiffOperator:
        return const_matrix(self.inverse_matrix) @ reflect(self.axis, self.mode)


def transform_A(phi: AnalyticField, t: TransformA | None = None) -> AnalyticField:
    t = t or TransformA.build(phi.mode)
    return apply_operator(t.operator(), phi)


def transform_A_inv(f: AnalyticField, t: TransformA | None = None) -> AnalyticField:
    t = t or TransformA.build(f.mode)
    return apply_operator(t.inverse_operator(), f)


# ------------------------------------------------------- gamma reconstruction

@dataclass(frozen=True)
class GammaSet:
    """Reconstructed ``gamma0..gamma3`` with the constant-term matrix ``Q``.

    ``sign`` is the measured global sign ``s`` in
    ``g_mu g_nu + g_nu g_mu = 2 s eta_mu_nu``; ``None`` when no single sign fits.
    """

    gammas: tuple
    q: Matrix4
    sign: int | None

    @property
    def mode(self) -> str:
        return self.q.mode

    def anticommutator(self, mu: int, nu: int) -> Matrix4:
        g = self.gammas
        return g[mu] @ g[nu] + g[nu] @ g[mu]

    def clifford_defect(self, sign: int | None = None) -> float:
        """Largest entry of ``{g_mu, g_nu} - 2 s eta_mu_nu Id`` over all pairs."""
        s = self.sign if sign is None else sign
        if s is None:
            return float("inf")
        ident = Matrix4.identity(self.mode)
        worst = 0.0
        for mu in range(4):
            for nu in range(4):
                target = ident * (2 * s * MINKOWSKI[mu]) if mu == nu else Matrix4.zeros(self.mode)
                worst = max(worst, (self.anticommutator(mu, nu) - target).max_abs())
        return worst

    def product_123(self) -> Matrix4:
        g = self.gammas
        return g[1] @ g[2] @ g[3]


def conjugated_operator(p: DiracParams, t: TransformA | None = None) -> DiffOperator:
    """``N = -A^-1 o D_alpha o A``; the two reflections cancel."""
    t = t or TransformA.build(p.mode)
    return -(t.inverse_operator() @ dirac_quaternionic(p) @ t.operator())


def _unit_vector(k: int) -> tuple:
    return tuple(1 if j == k else 0 for j in (1, 2, 3))


def reconstruct_gammas(
    p1: DiracParams | None = None, p2: DiracParams | None = None, mode: str | None = None
) -> GammaSet:
    """Recover the gamma matrices from two parameter points.

    ``N = B0 + sum_k B_k d_k`` with ``B0 = i a P + i b Q`` where
    ``a = E/(c hbar)`` and ``b = m c/hbar``. The two points must separate
    ``(a, b)``. Returns ``gamma_k = Q^-1 B_k`` and ``gamma0 = Q^-1 P``.
    """
    mode = mode or (p1.mode if p1 is not None else EXACT)
    if p1 is None:
        p1 = DiracParams(energy=1, mass=0, mode=mode)
    if p2 is None:
        p2 = DiracParams(energy=0, mass=1, mode=mode)
    t = TransformA.build(mode)
    n1, n2 = conjugated_operator(p1, t), conjugated_operator(p2, t)
    for n in (n1, n2):
        if any(mask != NO_MASK for mask in n.masks()):
            raise ReconstructionError("conjugated operator kept a reflection")
        if n.order() > 1:
            raise ReconstructionError("conjugated operator is not first order")
    b_k = [n1.coefficient(_unit_vector(k)) for k in (1, 2, 3)]
    if b_k != [n2.coefficient(_unit_vector(k)) for k in (1, 2, 3)]:
        raise ReconstructionError("derivative coefficients depend on the parameters")

    i = imag_unit(mode)
    x1 = n1.coefficient(ZERO_DEGREE) / i
    x2 = n2.coefficient(ZERO_DEGREE) / i
    a1, b1, a2, b2 = p1.a, p1.b, p2.a, p2.b
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise ReconstructionError("parameter points do not separate energy and mass terms")
    p_mat = (x1 * b2 - x2 * b1) / det
    q_mat = (x2 * a1 - x1 * a2) / det
    try:
        q_inv = q_mat.inverse()
    except ZeroDivisionError as exc:
        raise ReconstructionError("constant-term matrix Q is singular") from exc

    gammas = (q_inv @ p_mat, *(q_inv @ b for b in b_k))
    return GammaSet(gammas, q_mat, _measure_sign(gammas, mode))


def _measure_sign(gammas, mode) -> int | None:
    sq = gammas[0] @ gammas[0]
    s = sq[0, 0]
    tol = 0 if mode == EXACT else 1e-12
    for cand in (1, -1):
        if abs(s - cand) <= tol:
            trial = GammaSet(gammas, Matrix4.identity(mode), cand)
            defect = trial.clifford_defect()
            if (mode == EXACT and defect == 0) or (mode == FLOAT and defect <= 1e-12):
                return cand
    return None


def covariant_operator(g: GammaSet, p: DiracParams) -> DiffOperator:
    """``(i E/(c hbar)) gamma0 + sum gamma_k d_k + i m c/hbar``."""
    i = imag_unit(p.mode)
    out = const_matrix(g.gammas[0] * (i * p.a)) + identity(p.mode) * (i * p.b)
    for k in (1, 2, 3):
        out = out + const_matrix(g.gammas[k]) @ partial(k, p.mode)
    return out


def covariant_residual(q: AnalyticField, g: GammaSet, p: DiracParams) -> AnalyticField:
    return apply_operator(covariant_operator(g, p), q)


def relation_operator(g: GammaSet, p: DiracParams, sign: int = -1) -> DiffOperator:
    """``sign * A o (g1 g2 g3 Dirac) o A^-1``; equal to ``D_alpha`` for the right ``sign``."""
    t = TransformA.build(p.mode)
    inner = const_matrix(g.product_123()) @ covariant_operator(g, p)
    return (t.operator() @ inner @ t.inverse_operator()) * sign


def measured_relation_sign(g: GammaSet, p: DiracParams) -> int | None:
    """The sign ``s`` with ``D_alpha = s A g1 g2 g3 Dirac A^-1``, or ``None``."""
    target = dirac_quaternionic(p)
    for s in (-1, 1):
        diff = relation_operator(g, p, s) - target
        if diff.is_zero() or (p.mode == FLOAT and diff.max_abs() <= 1e-12):
            return s
    return None


def gammas_to_json(g: GammaSet) -> dict:
    def mat(m: Matrix4):
        return [[complex_to_json(x) for x in row] for row in m.rows]

    return {
        "gammas": [mat(m) for m in g.gammas],
        "q": mat(g.q),
        "clifford_sign": g.sign,
        "metric": list(MINKOWSKI),
    }


__all__ = [
    "DiracParams",
    "GammaSet",
    "MINKOWSKI",
    "ReconstructionError",
    "TIME_CONVENTION",
    "TransformA",
    "alpha_vector",
    "conjugated_operator",
    "covariant_operator",
    "covariant_residual",
    "dirac_quaternionic",
    "gammas_to_json",
    "matching_kappa",
    "measured_relation_sign",
    "reconstruct_gammas",
    "relation_operator",
    "transform_A",
    "transform_A_inv",
]

"""Verification suites run by ``quatbridge verify``.

Every randomized check draws from ``random.Random(cfg.seed)`` so reports
are byte-identical across runs with the same configuration.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import bridge, dirac, maxwell
from .algebra import (
    Quaternion,
    dot,
    lift_left,
    lift_right,
    qmul,
    qmul_vecform,
    square_of_vector,
)
from .config import ScenarioConfig
from .fields import (
    AnalyticField,
    PlaneWaveTerm,
    apply_operator,
    fd_apply,
    fd_convergence,
    residual_max,
    sample,
    vector_parts,
)
from .operators import (
    DiffOperator,
    const_left,
    const_right,
    d_alpha,
    d_kappa,
    identity,
    laplacian,
    moisil_theodoresco,
    partial,
    reflect,
    scalar,
)
from .report import Check, VerificationReport, check_bool, check_nonzero, check_zero
from .scalars import EXACT, FLOAT, GaussRational, imag_unit, to_mode

FD_ORDER_MIN = 1.8
FD_RATIO_RANGE = (3.5, 4.5)


# ------------------------------------------------------------ random data

def rand_rational(rng: random.Random, span: int = 9, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_scalar(rng: random.Random, mode: str = EXACT):
    return to_mode(GaussRational(rand_rational(rng), rand_rational(rng)), mode)


def rand_quaternion(rng: random.Random, mode: str = EXACT) -> Quaternion:
    return Quaternion(*(rand_scalar(rng, mode) for _ in range(4)), mode=mode)


def rand_field(rng: random.Random, mode: str = EXACT, terms: int = 2) -> AnalyticField:
    return AnalyticField(
        [PlaneWaveTerm([rand_scalar(rng, mode) for _ in range(4)],
                       [rand_scalar(rng, mode) for _ in range(3)], mode)
         for _ in range(terms)],
        mode,
    )


def rand_atom(rng: random.Random, mode: str = EXACT) -> DiffOperator:
    kind = rng.randrange(5)
    if kind == 0:
        return partial(rng.randint(1, 3), mode)
    if kind == 1:
        return reflect(rng.randint(1, 3), mode)
    if kind == 2:
        return const_left(rand_quaternion(rng, mode))
    if kind == 3:
        return const_right(rand_quaternion(rng, mode))
    return scalar(rand_scalar(rng, mode), mode)


def _fold_left(atoms):
    out = atoms[0]
    for a in atoms[1:]:
        out = out @ a
    return out


def _fold_right(atoms):
    out = atoms[-1]
    for a in reversed(atoms[:-1]):
        out = a @ out
    return out


# ------------------------------------------------------------ suites

def suite_algebra(cfg: ScenarioConfig, rng: random.Random) -> list[Check]:
    mode, tol = cfg.mode, cfg.tolerance
    n = cfg.random_checks
    assoc, table, lifts_l, lifts_r, commute = [], [], [], [], []
    for _ in range(n):
        a, b, c = (rand_quaternion(rng, mode) for _ in range(3))
        assoc.append(qmul(qmul(a, b), c) - qmul(a, qmul(b, c)))
        table.append(qmul(a, b) - qmul_vecform(a, b))
        lifts_l.append(lift_left(qmul(a, b)) - lift_left(a) @ lift_left(b))
        lifts_r.append(lift_right(qmul(a, b)) - lift_right(b) @ lift_right(a))
        commute.append(lift_left(a) @ lift_right(b) - lift_right(b) @ lift_left(a))
    i1, i2 = Quaternion.unit(1, mode), Quaternion.unit(2, mode)
    alpha = dirac.alpha_vector(cfg.dirac)
    p = cfg.dirac
    formula = (p.energy * p.energy / (p.c * p.c) - p.mass * p.mass * p.c * p.c) / (p.hbar * p.hbar)
    square_full = qmul(alpha, alpha)
    return [
        check_zero("algebra.associativity", "(ab)c = a(bc)", assoc, mode, tol),
        check_zero("algebra.vector_form", "ab = a0 b0 - <a,b> + [a x b] + a0 b + b0 a", table, mode, tol),
        check_zero("algebra.unit_product", "i1 i2 = i3", qmul(i1, i2) - Quaternion.unit(3, mode), mode, tol),
        check_zero("algebra.anticommuting_units", "i1 i2 = -i2 i1", qmul(i1, i2) + qmul(i2, i1), mode, tol),
        check_nonzero("algebra.noncommutative", "i1 i2 != i2 i1", qmul(i1, i2) - qmul(i2, i1), mode, tol),
        check_zero("algebra.lift_left_homomorphism", "L(pq) = L(p) L(q)", lifts_l, mode, tol),
        check_zero("algebra.lift_right_reversal", "R(pq) = R(q) R(p)", lifts_r, mode, tol),
        check_zero("algebra.lifts_commute", "L(p) R(q) = R(q) L(p)", commute, mode, tol),
        check_zero("algebra.alpha_square", "alpha^2 = (E^2/c^2 - m^2 c^2)/hbar^2",
                   square_of_vector(alpha) - formula, mode, tol),
        check_zero("algebra.alpha_square_vector_part", "Vec(alpha alpha) = 0", square_full.vec(), mode, tol),
    ]


def suite_operators(cfg: ScenarioConfig, rng: random.Random) -> list[Check]:
    mode, tol = cfg.mode, cfg.tolerance
    d = moisil_theodoresco(mode)
    r3, d1, d3 = reflect(3, mode), partial(1, mode), partial(3, mode)
    confluence = []
    for _ in range(max(10, cfg.random_checks // 10)):
        atoms = [rand_atom(rng, mode) for _ in range(rng.randint(2, 6))]
        confluence.append(_fold_left(atoms) - _fold_right(atoms))
    reversal, homomorphism = [], []
    for _ in range(max(10, cfg.random_checks // 20)):
        p, q = rand_quaternion(rng, mode), rand_quaternion(rng, mode)
        reversal.append(const_right(p) @ const_right(q) - const_right(qmul(q, p)))
        a, b = rand_atom(rng, mode) @ rand_atom(rng, mode), rand_atom(rng, mode)
        f = rand_field(rng, mode)
        homomorphism.append(apply_operator(a @ b, f) - apply_operator(a, apply_operator(b, f)))
    return [
        check_zero("operators.d_squared", "D^2 = -Laplacian", d @ d + laplacian(mode), mode, tol),
        check_zero("operators.reflect_d3", "R3 d3 R3 = -d3", r3 @ d3 @ r3 + d3, mode, tol),
        check_zero("operators.reflect_d1", "R3 d1 R3 = d1", r3 @ d1 @ r3 - d1, mode, tol),
        check_zero("operators.reflect_square", "R3 R3 = Id", r3 @ r3 - identity(mode), mode, tol),
        check_zero("operators.confluence", "(AB)C = A(BC) in normal form", confluence, mode, tol),
        check_zero("operators.right_mult_reversal", "M^p M^q = M^(qp)", reversal, mode, tol),
        check_zero("operators.field_homomorphism", "(AB)f = A(Bf)", homomorphism, mode, tol),
    ]


def _dvec_residual(f: AnalyticField):
    div, grad, rot = vector_parts(f)
    df = apply_operator(moisil_theodoresco(f.mode), f)
    return [df.scalar_part() + div, df.vector_part() - grad - rot]


def suite_maxwell(cfg: ScenarioConfig, rng: random.Random) -> list[Check]:
    mode, tol, m = cfg.mode, cfg.tolerance, cfg.medium
    kappa = maxwell.wavenumber(m)
    ten_percent = to_mode(Fraction(11, 10), mode)
    checks = [
        check_zero("maxwell.kappa_consistency", "kappa^2 = omega^2 eps mu",
                   kappa * kappa - m.omega * m.omega * m.eps * m.mu, mode, tol),
        check_zero("maxwell.vector_form_identity", "Df = -div f + grad f0 + rot f",
                   [r for _ in range(10) for r in _dvec_residual(rand_field(rng, mode))], mode, tol),
    ]
    for sign, name in ((1, "plus"), (-1, "minus")):
        f = maxwell.circular_beltrami(kappa, (0, 0, 1), sign, mode)
        checks.append(check_zero(f"maxwell.circular_beltrami_{name}", "(D -+ kappa) f = 0",
                                 maxwell.beltrami_residual(f, kappa, -sign), mode, tol))
    pairs = _maxwell_pairs(cfg)
    for label, pair in pairs:
        phi, psi = maxwell.to_beltrami(pair, m)
        back = maxwell.from_beltrami(phi, psi, m)
        bad = maxwell.MaxwellPair(pair.E, pair.H * ten_percent)
        bad_phi, bad_psi = maxwell.to_beltrami(bad, m)
        checks += [
            check_zero(f"maxwell.{label}.vector_form", "rot H = -i w eps E, rot E = i w mu H, div E = div H = 0",
                       maxwell.maxwell_residuals(pair, m), mode, tol),
            check_zero(f"maxwell.{label}.quaternionic_form", "D E = i w mu H, D H = -i w eps E",
                       maxwell.quaternionic_residuals(pair, m), mode, tol),
            check_zero(f"maxwell.{label}.beltrami_phi", "(D - kappa) phi = 0",
                       maxwell.beltrami_residual(phi, kappa, -1), mode, tol),
            check_zero(f"maxwell.{label}.beltrami_psi", "(D + kappa) psi = 0",
                       maxwell.beltrami_residual(psi, kappa, 1), mode, tol),
            check_zero(f"maxwell.{label}.beltrami_roundtrip", "(phi, psi) -> (E, H)",
                       [back.E - pair.E, back.H - pair.H], mode, tol),
            check_nonzero(f"maxwell.{label}.perturbed_detected", "1.1 H breaks rot H = -i w eps E",
                          maxwell.maxwell_residuals(bad, m)[0], mode, tol),
            # a circularly polarized pair has one helicity only, so either residual may carry the defect
            check_nonzero(f"maxwell.{label}.perturbed_beltrami_detected", "1.1 H breaks (D -+ kappa)(phi, psi) = 0",
                          [maxwell.beltrami_residual(bad_phi, kappa, -1),
                           maxwell.beltrami_residual(bad_psi, kappa, 1)], mode, tol),
        ]
    return checks


def _maxwell_pairs(cfg: ScenarioConfig) -> list:
    pairs = [
        (f"pw{i}", maxwell.plane_wave(cfg.medium, direction, pol))
        for i, (direction, pol) in enumerate(cfg.plane_waves)
    ]
    if cfg.fields is not None:
        pairs.append(("fields", cfg.fields))
    return pairs


def suite_dirac(cfg: ScenarioConfig, rng: random.Random, conventions: dict) -> list[Check]:
    mode, tol, p = cfg.mode, cfg.tolerance, cfg.dirac
    t = dirac.TransformA.build(mode)
    roundtrip = []
    for _ in range(50):
        phi = rand_field(rng, mode)
        roundtrip.append(dirac.transform_A_inv(dirac.transform_A(phi, t), t) - phi)
        roundtrip.append(dirac.transform_A(dirac.transform_A_inv(phi, t), t) - phi)
    n_op = dirac.conjugated_operator(p, t)
    checks = [
        check_zero("dirac.transform_matrices", "M_inv M_A = Id",
                   t.inverse_matrix @ t.matrix - identity(mode).coefficient(), mode, tol),
        check_zero("dirac.transform_roundtrip", "A^-1 A = A A^-1 = Id on plane-wave bispinors",
                   roundtrip, mode, tol),
        check_bool("dirac.conjugation_reflection_free", "-A^-1 D_alpha A has no reflections",
                   all(mask == () for mask in n_op.masks()), mode),
    ]
    try:
        g = dirac.reconstruct_gammas(mode=mode)
    except dirac.ReconstructionError as exc:
        return checks + [check_bool("dirac.gamma_reconstruction", str(exc), False, mode)]
    conventions["clifford_sign"] = g.sign
    checks += [
        check_bool("dirac.gamma_reconstruction", "Q invertible", True, mode),
        check_bool("dirac.gamma_clifford_sign", "single global Clifford sign s", g.sign is not None, mode),
        check_zero("dirac.gamma_clifford", "g_mu g_nu + g_nu g_mu = 2 s eta_mu_nu",
                   g.clifford_defect() if g.sign is not None else float("inf"), mode, tol),
    ]
    # a second pair of admissible points must give the same set
    alt = dirac.reconstruct_gammas(
        dirac.DiracParams(energy=2, mass=1, mode=mode), dirac.DiracParams(energy=-1, mass=3, mode=mode)
    )
    checks.append(check_zero("dirac.gamma_point_independence", "reconstruction independent of parameter points",
                             [a - b for a, b in zip(alt.gammas, g.gammas)], mode, tol))
    checks.append(check_zero("dirac.gamma_q_product", "Q = g1 g2 g3",
                             g.q - g.product_123(), mode, tol))
    printed = dirac.relation_operator(g, p, -1) - dirac.dirac_quaternionic(p)
    checks.append(check_zero("dirac.relation_as_printed", "D_alpha = -A g1 g2 g3 Dirac A^-1", printed, mode, tol))
    measured = dirac.measured_relation_sign(g, p)
    conventions["relation_sign_measured"] = measured
    checks.append(check_bool("dirac.relation_some_sign", "D_alpha = s' A g1 g2 g3 Dirac A^-1 for s' = +-1",
                             measured is not None, mode))

    q_inv = g.q.inverse()
    restated = []
    for _ in range(10):
        q = rand_field(rng, mode)
        lhs = dirac.covariant_residual(q, g, p)
        rhs = -dirac.transform_A_inv(apply_operator(dirac.dirac_quaternionic(p), dirac.transform_A(q, t)), t)
        restated.append(lhs - rhs.matrix_mul(q_inv))
    checks.append(check_zero("dirac.covariant_restatement", "Dirac q = -Q^-1 A^-1 D_alpha A q",
                             restated, mode, tol))
    return checks


def _relation_kappa(cfg: ScenarioConfig):
    if cfg.kappa is not None:
        return cfg.kappa
    return maxwell.wavenumber(cfg.medium)


def suite_projector_laws(cfg: ScenarioConfig, rng: random.Random) -> list[Check]:
    alpha = dirac.alpha_vector(cfg.dirac)
    kappa = to_mode(_relation_kappa(cfg), cfg.mode)
    pp = bridge.projectors(kappa, alpha)
    return bridge.projector_laws(pp, kappa, alpha, cfg.tolerance)


def suite_bridge(cfg: ScenarioConfig, rng: random.Random) -> list[Check]:
    mode, tol = cfg.mode, cfg.tolerance
    alpha = dirac.alpha_vector(cfg.dirac)
    kappa = to_mode(_relation_kappa(cfg), mode)
    checks = [
        Check(c.name.replace("identity.", "bridge.identity."), c.anchor, c.status, c.residual, c.tolerance, c.mode, c.expect)
        for c in bridge.identity_check(kappa, alpha, tol)
    ]
    d_a = d_alpha(alpha)
    g = None
    for label, pair in _maxwell_pairs(cfg):
        name = f"bridge.transport.{label}"
        try:
            f = bridge.maxwell_to_dirac(pair, cfg.medium, cfg.dirac, tol)
        except ValueError as exc:
            checks.append(check_bool(name, f"transport refused: {exc}", False, mode))
            continue
        m_kappa = maxwell.wavenumber(cfg.medium)
        phi, psi = maxwell.to_beltrami(pair, cfg.medium)
        pp = bridge.projectors(m_kappa, alpha)
        psi_part, phi_part = bridge.decompose(f, m_kappa, alpha)
        if g is None:
            g = dirac.reconstruct_gammas(mode=mode)
        bispinor = dirac.transform_A_inv(f)
        checks += [
            check_zero(name, "D_alpha f = 0", apply_operator(d_a, f), mode, tol),
            check_zero(f"{name}.beltrami_form", "f = P+ psi + P- phi",
                       psi.right_mul(pp.plus) + phi.right_mul(pp.minus) - f, mode, tol),
            check_zero(f"{name}.scalar_part", "Sc(f) = -(i w eps/kappa) <E, alpha>",
                       f.scalar_part() - _scalar_part_formula(pair, cfg, alpha, m_kappa), mode, tol),
            check_zero(f"{name}.decompose_sum", "P+ f + P- f = f", psi_part + phi_part - f, mode, tol),
            check_zero(f"{name}.decompose_psi", "(D + kappa) P+ f = 0",
                       maxwell.beltrami_residual(psi_part, m_kappa, 1), mode, tol),
            check_zero(f"{name}.decompose_phi", "(D - kappa) P- f = 0",
                       maxwell.beltrami_residual(phi_part, m_kappa, -1), mode, tol),
            check_zero(f"{name}.covariant", "Dirac A^-1 f = 0 with reconstructed gammas",
                       dirac.covariant_residual(bispinor, g, cfg.dirac), mode, tol),
        ]
    return checks


def _scalar_part_formula(pair, cfg: ScenarioConfig, alpha: Quaternion, kappa) -> AnalyticField:
    i = imag_unit(cfg.mode)
    m = cfg.medium
    factor = -(i * m.omega * m.eps / kappa)
    return pair.E.map_amplitudes(lambda a: (factor * dot(a[1:], alpha.coords[1:]), 0 * a[0], 0 * a[0], 0 * a[0]))


def suite_dispersion(cfg: ScenarioConfig, rng: random.Random) -> list[Check]:
    mode, tol, m = cfg.mode, cfg.tolerance, cfg.medium
    record = bridge.DispersionRecord.from_dirac(cfg.dirac, m.eps_r, m.mu_r)
    checks = bridge.dispersion_check(record, tol)
    checks.append(check_zero("dispersion.medium_frequency", "configured omega solves the matching condition",
                             record.omega - m.omega, mode, tol))
    p = cfg.dirac
    massless = bridge.DispersionRecord.from_dirac(dirac.DiracParams(p.energy, 0, p.hbar, p.c, mode=mode))
    checks += [
        Check("dispersion.massless." + c.name.split(".", 1)[1], c.anchor, c.status, c.residual,
              c.tolerance, c.mode, c.expect)
        for c in bridge.dispersion_check(massless, tol)
    ]
    return checks


def suite_fd(cfg: ScenarioConfig, rng: random.Random) -> list[Check]:
    grid = cfg.grid
    box = (grid["corner"], grid["extent"])
    h = float(grid["h"])
    fields = {
        "axial": AnalyticField.plane_wave((0, 1, 0, 0), (0, 0, 1), FLOAT),
        "oblique": AnalyticField.plane_wave((1, 0.5j, 0, -1), (0.9, 1.2, 0), FLOAT),
    }
    alpha = dirac.alpha_vector(cfg.dirac.to_mode(FLOAT))
    scale = max(abs(c) for c in alpha.coords)
    alpha = alpha / scale  # keeps coefficient sizes comparable to the derivative part
    ops = {
        "D": moisil_theodoresco(FLOAT),
        "D_alpha": d_alpha(alpha),
        "D_plus_kappa": d_kappa(1 + 0j, 1),
        "D_minus_kappa": d_kappa(1 + 0j, -1),
    }
    checks = []
    const = sample(AnalyticField.constant((1, 2j, -1, 0.5), FLOAT), box, h)
    checks.append(check_zero("fd.constant_field", "D c = 0 on grid",
                             residual_max(fd_apply(ops["D"], const)), FLOAT, 1e-12))
    for op_name, op in ops.items():
        for f_name, f in fields.items():
            conv = fd_convergence(op, f, box, h)
            lo, hi = FD_RATIO_RANGE
            ok = conv["order"] >= FD_ORDER_MIN and lo <= conv["ratio"] <= hi
            checks.append(Check(
                f"fd.order.{op_name}.{f_name}",
                f"observed order >= {FD_ORDER_MIN}, error ratio {conv['ratio']:.4f} in [{lo}, {hi}]",
                "pass" if ok else "fail",
                conv["order"], FD_ORDER_MIN, FLOAT, "true",
            ))
    return checks


def run_suite(cfg: ScenarioConfig) -> VerificationReport:
    """Run the configured suites in order; deterministic for a given config."""
    rng = random.Random(cfg.seed)
    conventions = {
        "mode": cfg.mode,
        "seed": cfg.seed,
        "maxwell_time_factor": maxwell.TIME_CONVENTION,
        "dirac_time_factor": dirac.TIME_CONVENTION,
        "beltrami_residual": "(D + sign*kappa) f",
        "projector_order": "P D f = (D f) (kappa +- alpha)/(2 kappa)",
        "metric": list(dirac.MINKOWSKI),
        "clifford_sign": None,
        "relation_sign_as_printed": -1,
        "relation_sign_measured": None,
    }
    report = VerificationReport(conventions=conventions)
    for name in cfg.selected_suites():
        if name == "algebra":
            report.extend(suite_algebra(cfg, rng))
        elif name == "operators":
            report.extend(suite_operators(cfg, rng))
        elif name == "maxwell":
            report.extend(suite_maxwell(cfg, rng))
        elif name == "dirac":
            report.extend(suite_dirac(cfg, rng, conventions))
        elif name == "bridge":
            report.extend(suite_bridge(cfg, rng))
        elif name == "projector-laws":
            report.extend(suite_projector_laws(cfg, rng))
        elif name == "dispersion":
            report.extend(suite_dispersion(cfg, rng))
        elif name == "fd-convergence":
            report.extend(suite_fd(cfg, rng))
    return report

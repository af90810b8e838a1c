import pytest
from hypothesis import given, settings, strategies as st

from quatbridge.algebra import Quaternion, qmul
from quatbridge.bridge import (
    DispersionRecord,
    RelationViolated,
    decompose,
    decomposition_residuals,
    dispersion_check,
    maxwell_to_dirac,
    projector_laws,
    projectors,
    relation_defect,
    identity_check,
    projector_identities,
)
from quatbridge.dirac import DiracParams, alpha_vector, dirac_quaternionic, matching_kappa
from quatbridge.fields import AnalyticField, apply_operator
from quatbridge.maxwell import MaxwellPair, MediumParams, plane_wave, to_beltrami, vacuum
from quatbridge.scalars import EXACT, FLOAT, GaussRational, csqrt, to_mode

from conftest import vectors

J = GaussRational(0, 1)
ALPHA = Quaternion(0, -5 * J, -3, 0)
ONE = Quaternion.unit(0)
E3 = (0, 0, 1)


def by_name(checks):
    return {c.name: c for c in checks}


def test_projectors_at_matching_kappa():
    pp = projectors(4, ALPHA)
    assert qmul(pp.plus, pp.plus) == pp.plus
    assert qmul(pp.minus, pp.minus) == pp.minus
    assert pp.plus + pp.minus == ONE
    assert all(c.passed for c in projector_laws(pp, 4, ALPHA))


def test_projectors_off_relation():
    pp = projectors(1, ALPHA)
    assert qmul(pp.plus, pp.plus) != pp.plus
    assert qmul(pp.minus, pp.plus) == ONE * GaussRational(-15, 0) / 4
    assert relation_defect(1, ALPHA) == -15
    laws = by_name(projector_laws(pp, 1, ALPHA))
    assert laws["projector.complete"].passed
    assert not laws["projector.idempotent_plus"].passed
    assert laws["projector.orthogonal_minus_plus"].residual == 3.75


def test_projectors_need_nonzero_kappa():
    with pytest.raises(ValueError):
        projectors(0, ALPHA)
    with pytest.raises(ValueError):
        identity_check(0, ALPHA)


@given(vectors, st.fractions(-9, 9, max_denominator=7).filter(lambda x: x != 0))
def test_completeness_always(alpha, kappa):
    pp = projectors(kappa, alpha)
    assert pp.plus + pp.minus == ONE


def test_identity_at_matching_kappa():
    checks = identity_check(4, ALPHA)
    assert len(checks) == 7 and all(c.passed for c in checks)


def test_identity_off_relation():
    ids = projector_identities(1, ALPHA)
    assert ids["identity.forward"][1].is_zero()
    assert not ids["identity.intertwine_plus"][1].is_zero()
    assert not ids["identity.reverse_plus"][1].is_zero()
    assert ids["identity.commute_plus"][1].is_zero()


@settings(max_examples=30)
@given(vectors, st.fractions(-9, 9, max_denominator=7).filter(lambda x: x != 0))
def test_forward_identity_unconditional(alpha, kappa):
    assert projector_identities(kappa, alpha)["identity.forward"][1].is_zero()


def _worked_example():
    m = vacuum(1)
    pair = MaxwellPair(AnalyticField.plane_wave((0, 1, 0, 0), E3), AnalyticField.plane_wave((0, 0, 1, 0), E3))
    return m, pair, DiracParams(energy=1, mass=0)


def test_transport_worked_example():
    m, pair, p = _worked_example()
    f = maxwell_to_dirac(pair, m, p)
    assert f == AnalyticField.plane_wave((-1, 0, 1, 0), E3)
    assert apply_operator(dirac_quaternionic(p), f).is_zero()
    assert not f.scalar_part().is_zero()


def test_transport_zero_pair():
    z = AnalyticField.zero()
    assert maxwell_to_dirac(MaxwellPair(z, z), vacuum(4), DiracParams(energy=5, mass=3)).is_zero()


def test_transport_errors():
    m, pair, _ = _worked_example()
    with pytest.raises(RelationViolated):
        maxwell_to_dirac(pair, m, DiracParams(energy=5, mass=3))
    with pytest.raises(ValueError):
        maxwell_to_dirac(MaxwellPair(pair.E, pair.H * 2), m, DiracParams(energy=1, mass=0))


def test_transport_matches_projected_beltrami_fields():
    m, pair, p = _worked_example()
    alpha = alpha_vector(p)
    pp = projectors(1, alpha)
    phi, psi = to_beltrami(pair, m)
    assert psi.right_mul(pp.plus) + phi.right_mul(pp.minus) == maxwell_to_dirac(pair, m, p)


# (direction, polarization, energy, mass, eps_r): kappa^2 = alpha^2 in every row
CASES = [
    ((0, 0, 1), (1, 0, 0), 5, 3, 1),
    ((GaussRational(3) / 5, GaussRational(4) / 5, 0), (GaussRational(-4) / 5, GaussRational(3) / 5, J), 5, 3, 1),
    ((0, 1, 0), (1, 0, J), 5, 4, 9),
    ((1, 0, 0), (0, 2, 1), 13, 5, GaussRational(144) / 16),
]


@pytest.mark.parametrize("direction, pol, energy, mass, eps_r", CASES)
def test_transport_soundness(direction, pol, energy, mass, eps_r):
    p = DiracParams(energy=energy, mass=mass)
    alpha, kappa = alpha_vector(p), matching_kappa(p)
    # choose omega so that the medium wavenumber equals the Dirac kappa
    m = MediumParams(eps_r=eps_r, omega=kappa / csqrt(to_mode(eps_r, EXACT)))
    f = maxwell_to_dirac(plane_wave(m, direction, pol), m, p)
    assert apply_operator(dirac_quaternionic(p), f).is_zero()
    psi_res, phi_res = decomposition_residuals(f, kappa, alpha)
    assert psi_res.is_zero() and phi_res.is_zero()
    psi, phi = decompose(f, kappa, alpha)
    assert psi + phi == f


def test_decompose_sums_for_non_solutions():
    f = AnalyticField.plane_wave((1, 2, 3, J), (1, 0, 0))
    psi, phi = decompose(f, 4, ALPHA)
    assert psi + phi == f


def test_decompose_fixed_point():
    kappa = GaussRational(4)
    # phi = g (kappa - alpha) solves phi (kappa + alpha) = 0 under kappa^2 = alpha^2
    g = Quaternion(1, 0, 0, 0)
    amp = qmul(g, Quaternion.scalar(kappa) - ALPHA)
    phi = AnalyticField.plane_wave(amp.coords, (0, 0, 0))
    assert phi.right_mul(Quaternion.scalar(kappa) + ALPHA).is_zero()
    assert decompose(phi, kappa, ALPHA)[1] == phi


def test_dispersion_default_chain():
    r = DispersionRecord.from_dirac(DiracParams(energy=5, mass=3))
    assert (r.omega, r.kappa, r.momentum) == (4, 4, 4)
    assert r.energy ** 2 == r.momentum ** 2 + r.mass ** 2 == 25
    assert all(c.passed for c in dispersion_check(r))


def test_dispersion_massless():
    r = DispersionRecord.from_dirac(DiracParams(energy=7, mass=0))
    checks = by_name(dispersion_check(r))
    assert checks["dispersion.massless_energy_frequency"].passed
    assert checks["dispersion.massless_energy_momentum"].passed
    assert r.energy == r.hbar * r.omega == r.momentum * r.c


def test_dispersion_in_medium_float():
    r = DispersionRecord.from_dirac(DiracParams(energy=5.0, mass=3.0), eps_r=2.0)
    assert abs(r.omega - 4 / 2 ** 0.5) < 1e-14
    assert abs((r.hbar * r.omega) ** 2 * 2 - 16) < 1e-12
    assert all(c.passed for c in dispersion_check(r))
    assert r.mode == FLOAT


def test_dispersion_detects_bad_record():
    r = DispersionRecord(omega=4, kappa=4, energy=5, mass=3, momentum=5)
    failed = {c.name for c in dispersion_check(r) if not c.passed}
    assert failed == {"dispersion.energy_momentum", "dispersion.de_broglie"}


def test_dispersion_json_roundtrip():
    r = DispersionRecord.from_dirac(DiracParams(energy=5, mass=3), eps_r=GaussRational(9, 0) / 4)
    assert DispersionRecord.from_json(r.to_json()) == r

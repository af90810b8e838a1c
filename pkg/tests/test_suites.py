import random

from quatbridge.config import SUITES, load_config
from quatbridge.report import emit_report
from quatbridge.suites import rand_field, run_suite


def test_selected_suites_run_in_order():
    cfg = load_config(suites=["dispersion", "projector-laws"])
    names = [c.name for c in run_suite(cfg).checks]
    assert names[0].startswith("dispersion.")
    assert names[-1].startswith("projector.")


def test_every_check_appears_once():
    report = run_suite(load_config(suites=["algebra", "operators", "maxwell", "bridge"]))
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names))


def test_conventions_block():
    conv = run_suite(load_config(suites=["dirac"])).conventions
    assert conv["maxwell_time_factor"] == "exp(-i*omega*t)"
    assert conv["dirac_time_factor"] == "exp(+i*E*t/hbar)"
    assert conv["clifford_sign"] == 1
    assert conv["relation_sign_measured"] == 1


def test_same_config_same_report():
    cfg = load_config(suites=["algebra", "operators"])
    assert emit_report(run_suite(cfg)) == emit_report(run_suite(cfg))


def test_seed_changes_random_inputs():
    a = rand_field(random.Random(1))
    b = rand_field(random.Random(2))
    assert a != b


def test_fd_suite_float_only():
    report = run_suite(load_config(suites=["fd-convergence"]))
    assert report.ok
    assert {c.mode for c in report.checks} == {"float"}
    assert len(SUITES) == 8

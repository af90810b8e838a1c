"""Exact complex-quaternion calculus linking the time-harmonic Maxwell
system and the Dirac equation."""

from .algebra import Matrix4, Quaternion, lift_left, lift_right, qmul
from .bridge import (
    DispersionRecord,
    decompose,
    dispersion_check,
    maxwell_to_dirac,
    projector_laws,
    projectors,
    identity_check,
)
from .config import ScenarioConfig, load_config
from .dirac import DiracParams, TransformA, alpha_vector, reconstruct_gammas
from .fields import AnalyticField, apply_operator, fd_apply, sample
from .maxwell import MaxwellPair, MediumParams
from .operators import DiffOperator, compose, d_alpha, d_kappa, moisil_theodoresco
from .parser import parse_operator
from .report import VerificationReport, emit_report
from .scalars import EXACT, FLOAT, GaussRational, ModeMismatchError, NotExactError
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "AnalyticField", "DiffOperator", "DiracParams", "DispersionRecord", "EXACT", "FLOAT",
    "GaussRational", "Matrix4", "MaxwellPair", "MediumParams", "ModeMismatchError", "NotExactError",
    "Quaternion", "ScenarioConfig", "TransformA", "VerificationReport", "alpha_vector", "apply_operator",
    "compose", "d_alpha", "d_kappa", "decompose", "dispersion_check", "emit_report", "fd_apply",
    "lift_left", "lift_right", "load_config", "maxwell_to_dirac", "moisil_theodoresco", "parse_operator",
    "projector_laws", "projectors", "qmul", "reconstruct_gammas", "identity_check", "run_suite", "sample",
]

"""Verification checks and report emission (JSON or one line per check)."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .algebra import Matrix4, Quaternion
from .fields import AnalyticField, GridField, residual_max
from .operators import DiffOperator
from .scalars import EXACT

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    status: str
    residual: float
    tolerance: float
    mode: str
    expect: str = "zero"

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _measure(value) -> tuple[bool, float]:
    """``(exactly zero, magnitude)`` for scalars, quaternions, matrices, operators, fields."""
    if isinstance(value, Quaternion):
        return value.is_zero(), value.norm_max()
    if isinstance(value, Matrix4):
        return value.is_zero(), value.max_abs()
    if isinstance(value, DiffOperator):
        return value.is_zero(), value.max_abs()
    if isinstance(value, AnalyticField):
        return value.is_zero(), value.amplitude_norm()
    if isinstance(value, GridField):
        r = residual_max(value)
        return r == 0, r
    if isinstance(value, (list, tuple)):
        parts = [_measure(v) for v in value]
        return all(z for z, _ in parts), max((m for _, m in parts), default=0.0)
    return value == 0, float(abs(value))


def check_zero(name: str, anchor: str, value, mode: str, tol: float = 1e-12) -> Check:
    """Pass iff ``value`` vanishes: exactly in exact mode, within ``tol`` in float mode."""
    exact_zero, size = _measure(value)
    if mode == EXACT:
        ok, tol = exact_zero, 0.0
    else:
        ok = size <= tol
    return Check(name, anchor, PASS if ok else FAIL, size, tol, mode)


def check_nonzero(name: str, anchor: str, value, mode: str, tol: float = 1e-12) -> Check:
    """Pass iff ``value`` is detectably nonzero (a defect or perturbation was seen)."""
    exact_zero, size = _measure(value)
    if mode == EXACT:
        ok, tol = not exact_zero, 0.0
    else:
        ok = size > tol
    return Check(name, anchor, PASS if ok else FAIL, size, tol, mode, expect="nonzero")


def check_bool(name: str, anchor: str, ok: bool, mode: str, residual: float = 0.0) -> Check:
    return Check(name, anchor, PASS if ok else FAIL, float(residual), 0.0, mode, expect="true")


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)
    conventions: dict = field(default_factory=dict)

    def extend(self, checks) -> None:
        seen = {c.name for c in self.checks}
        for c in checks:
            if c.name in seen:
                raise ValueError(f"duplicate check name {c.name!r}")
            seen.add(c.name)
            self.checks.append(c)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "conventions": dict(self.conventions),
            "checks": [asdict(c) for c in self.checks],
            "summary": {
                "total": len(self.checks),
                "passed": sum(c.passed for c in self.checks),
                "failed": len(self.failures()),
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls([Check(**c) for c in data["checks"]], dict(data.get("conventions", {})))


def emit_report(r: VerificationReport, format: str = "json") -> str:
    if format == "json":
        return json.dumps(r.to_dict(), indent=2, sort_keys=False) + "\n"
    if format == "text":
        lines = [
            f"{c.status.upper():4s}  {c.name:44s} residual={c.residual:.3e} tol={c.tolerance:.1e} [{c.mode}]  {c.anchor}"
            for c in r.checks
        ]
        s = r.to_dict()["summary"]
        lines.append(f"{s['passed']}/{s['total']} checks passed")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {format!r}")


def parse_report(text: str) -> VerificationReport:
    return VerificationReport.from_dict(json.loads(text))

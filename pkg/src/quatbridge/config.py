"""Scenario configuration: loading, schema validation, and typed access."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import jsonschema

from .dirac import DiracParams
from .fields import AnalyticField, field_from_json
from .maxwell import MaxwellPair, MediumParams
from .scalars import EXACT, MODES, complex_from_json

SUITES = (
    "algebra",
    "operators",
    "maxwell",
    "dirac",
    "bridge",
    "projector-laws",
    "dispersion",
    "fd-convergence",
)


class ConfigError(ValueError):
    pass


def _data_text(name: str) -> str:
    return resources.files("quatbridge").joinpath("data").joinpath(name).read_text()


def config_schema() -> dict:
    return json.loads(_data_text("config.schema.json"))


def report_schema() -> dict:
    return json.loads(_data_text("report.schema.json"))


def default_config_dict() -> dict:
    return json.loads(_data_text("default_config.json"))


@dataclass
class ScenarioConfig:
    mode: str = EXACT
    seed: int = 1729
    suites: list = field(default_factory=lambda: ["all"])
    tolerance: float = 1e-12
    random_checks: int = 200
    medium: MediumParams = None
    dirac: DiracParams = None
    kappa: object = None
    plane_waves: list = field(default_factory=list)
    fields: MaxwellPair | None = None
    grid: dict = field(default_factory=lambda: {"corner": [-1, -1, -1], "extent": [2, 2, 2], "h": 0.1})

    def selected_suites(self) -> list:
        out = []
        for name in self.suites:
            names = SUITES if name == "all" else (name,)
            for n in names:
                if n not in SUITES:
                    raise ConfigError(f"unknown suite {n!r}; choose from {', '.join(SUITES)} or all")
                if n not in out:
                    out.append(n)
        return out


def _params(cls, data: dict, mode: str):
    return cls(**{k: complex_from_json(v, mode) for k, v in data.items()}, mode=mode)


def build_config(data: dict, mode: str | None = None, suites: list | None = None,
                 tolerance: float | None = None) -> ScenarioConfig:
    """Validate ``data`` against the schema and build typed parameters.

    ``mode``, ``suites`` and ``tolerance`` override the file values.
    """
    try:
        jsonschema.validate(data, config_schema())
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"config schema violation at {path}: {exc.message}") from None
    defaults = default_config_dict()
    merged = {**defaults, **data}
    # nested blocks merge key by key so a partial medium keeps the vacuum constants
    for block in ("medium", "dirac"):
        merged[block] = {**defaults[block], **data.get(block, {})}
    mode = mode or merged["mode"]
    if mode not in MODES:
        raise ConfigError(f"unknown mode {mode!r}")
    try:
        cfg = ScenarioConfig(
            mode=mode,
            seed=merged["seed"],
            suites=list(suites if suites is not None else merged["suites"]),
            tolerance=float(tolerance if tolerance is not None else merged["tolerance"]),
            random_checks=merged["random_checks"],
            medium=_params(MediumParams, merged["medium"], mode),
            dirac=_params(DiracParams, merged["dirac"], mode),
            kappa=None if merged.get("kappa") is None else complex_from_json(merged["kappa"], mode),
            plane_waves=[
                (
                    [complex_from_json(c, mode) for c in pw["direction"]],
                    [complex_from_json(c, mode) for c in pw["polarization"]],
                )
                for pw in merged["plane_waves"]
            ],
            fields=None,
            grid={**defaults["grid"], **merged.get("grid", {})},
        )
        if merged.get("fields"):
            cfg.fields = MaxwellPair(
                field_from_json(merged["fields"]["E"], mode),
                field_from_json(merged["fields"]["H"], mode),
            )
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConfigError(str(exc)) from exc
    cfg.selected_suites()
    return cfg


def load_config(path: str | Path | None = None, **overrides) -> ScenarioConfig:
    if path is None:
        data = default_config_dict()
    else:
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON: {exc}") from None
    return build_config(data, **overrides)


def parse_field_literal(text: str, mode: str = EXACT) -> AnalyticField:
    """Field literal from a JSON string or ``@path``."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    return field_from_json(json.loads(text), mode)

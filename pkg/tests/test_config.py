import json
from fractions import Fraction

import pytest

from quatbridge.config import SUITES, ConfigError, build_config, default_config_dict, load_config, parse_field_literal
from quatbridge.scalars import EXACT, FLOAT, GaussRational


def test_default_config():
    cfg = load_config()
    assert cfg.mode == EXACT and cfg.selected_suites() == list(SUITES)
    assert cfg.dirac.energy == 5 and cfg.medium.omega == 4
    assert len(cfg.plane_waves) == 3


def test_overrides():
    cfg = load_config(mode=FLOAT, suites=["bridge", "bridge", "dispersion"], tolerance=1e-9)
    assert cfg.mode == FLOAT and cfg.tolerance == 1e-9
    assert cfg.selected_suites() == ["bridge", "dispersion"]
    assert isinstance(cfg.dirac.energy, complex)


def test_partial_blocks_merge_with_defaults():
    cfg = build_config({"medium": {"omega": 1}, "dirac": {"energy": 1, "mass": 0}})
    assert cfg.medium.omega == 1 and cfg.medium.c == 1
    assert cfg.dirac.mass == 0


def test_rational_strings():
    cfg = build_config({"kappa": "1/2", "dirac": {"energy": ["5/2", 0]}})
    assert cfg.kappa == GaussRational(Fraction(1, 2))
    assert cfg.dirac.energy == GaussRational(Fraction(5, 2))


@pytest.mark.parametrize("data, where", [
    ({"mode": "fuzzy"}, "mode"),
    ({"seed": "x"}, "seed"),
    ({"medium": {"omega": [1, 2, 3]}}, "medium/omega"),
    ({"unknown": 1}, "<root>"),
    ({"plane_waves": [{"direction": [0, 0, 1]}]}, "plane_waves/0"),
])
def test_schema_violations(data, where):
    with pytest.raises(ConfigError) as err:
        build_config(data)
    assert where in str(err.value)


def test_semantic_errors_are_config_errors():
    with pytest.raises(ConfigError):
        build_config({"medium": {"eps0": 2}})
    with pytest.raises(ConfigError):
        build_config({"suites": ["nope"]})


def test_invalid_json_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    with pytest.raises(ConfigError):
        load_config(path)


def test_config_file_roundtrip(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(default_config_dict()))
    assert load_config(path).plane_waves == load_config().plane_waves


def test_field_literal(tmp_path):
    text = '{"terms":[{"amp":[0,1,0,0],"k":[0,0,1]}]}'
    f = parse_field_literal(text)
    path = tmp_path / "f.json"
    path.write_text(text)
    assert parse_field_literal(f"@{path}") == f

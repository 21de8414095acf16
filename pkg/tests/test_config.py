import pytest
import yaml

from charsbp.harness.config import (EXPERIMENTS, ConfigError, CourantConfig, EnergyConfig, Mms2DConfig,
                                    SelfConvConfig, load_config)


def write(tmp_path, data):
    p = tmp_path / "c.yaml"
    p.write_text(yaml.safe_dump(data))
    return p


@pytest.mark.parametrize("name", sorted(EXPERIMENTS))
def test_defaults_and_empty_file(name, tmp_path):
    assert load_config(None, name) == EXPERIMENTS[name]()
    p = tmp_path / "empty.yaml"
    p.write_text("")
    assert load_config(p, name) == EXPERIMENTS[name]()


def test_default_values():
    assert Mms2DConfig().resolutions == [17, 34, 68] and Mms2DConfig().alpha == 128.0
    c = CourantConfig()
    assert (c.N, c.order, c.reference_gamma, c.threshold) == (48, 6, 0.5, 10.0)
    assert EnergyConfig().resolutions == [34, 68]
    assert SelfConvConfig().resolutions == [34, 68, 136]


def test_values_override(tmp_path):
    cfg = load_config(write(tmp_path, {"orders": [4], "alpha": 2, "mesh": {"bow": 0.3}}), "mms2d")
    assert cfg.orders == [4] and cfg.alpha == 2.0 and isinstance(cfg.alpha, float)
    assert cfg.mesh.bow == 0.3 and cfg.mesh.core_radius == 0.6


@pytest.mark.parametrize("data,match", [
    ({"bogus": 1}, "unknown key"),
    ({"mesh": {"radius": 1.0}}, r"mms2d\.mesh: unknown key"),
    ({"orders": 4}, "expected a list"),
    ({"orders": [3]}, "order must be"),
    ({"orders": [True]}, "expected an integer"),
    ({"alpha": "big"}, "expected a number"),
    ({"alpha": 0}, "positive"),
    ({"treatment": "upwind"}, "unknown treatment"),
    ({"mesh": [1, 2]}, "expected a mapping"),
])
def test_rejections(tmp_path, data, match):
    with pytest.raises(ConfigError, match=match):
        load_config(write(tmp_path, data), "mms2d")


def test_nested_scenario_rejections(tmp_path):
    with pytest.raises(ConfigError, match=r"scenario: unknown key"):
        load_config(write(tmp_path, {"scenario": {"mu": [0, 0], "extra": 1}}), "energy")
    with pytest.raises(ConfigError, match="boundary_treatment"):
        load_config(write(tmp_path, {"scenario": {"boundary_treatment": "x"}}), "energy")
    with pytest.raises(ConfigError, match="interface"):
        load_config(write(tmp_path, {"interfaces": ["glued"]}), "energy")
    with pytest.raises(ConfigError, match="three distinct"):
        load_config(write(tmp_path, {"resolutions": [34, 34, 68]}), "selfconv")
    with pytest.raises(ConfigError, match="abort_factor"):
        load_config(write(tmp_path, {"abort_factor": 0.5}), "courant")
    with pytest.raises(ConfigError, match=r"\|R\|"):
        load_config(write(tmp_path, {"reflections": [1.5]}), "spectrum")


def test_top_level_must_be_mapping(tmp_path):
    p = tmp_path / "c.yaml"
    p.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigError, match="mapping"):
        load_config(p, "spectrum")
    with pytest.raises(ConfigError, match="unknown experiment"):
        load_config(None, "nope")


@pytest.mark.parametrize("sub", ["", "quick"])
@pytest.mark.parametrize("name", sorted(EXPERIMENTS))
def test_shipped_configs_load(name, sub):
    from pathlib import Path
    path = Path(__file__).resolve().parent.parent / "configs" / sub / f"{name}.yaml"
    cfg = load_config(path, name)
    if not sub:
        assert cfg == EXPERIMENTS[name]()

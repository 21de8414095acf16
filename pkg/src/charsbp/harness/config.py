"""Experiment configuration: dataclasses loaded from YAML with strict keys."""
from __future__ import annotations

import dataclasses
import typing
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml


class ConfigError(ValueError):
    pass


TREATMENTS = ("characteristic", "non-characteristic")


@dataclass
class MeshConfig:
    core_radius: float = 0.6
    bow: float = 0.55


@dataclass
class Convergence1DConfig:
    orders: list[int] = field(default_factory=lambda: [2, 4, 6])
    reflections: list[float] = field(default_factory=lambda: [0.99, 0.0, -0.99])
    treatments: list[str] = field(default_factory=lambda: list(TREATMENTS))
    base_N: int = 17
    refinements: int = 6  # N = base_N * 2^r, r < refinements
    t_final: float = 0.9


@dataclass
class SpectrumConfig:
    N: int = 50
    order: int = 4
    reflections: list[float] = field(default_factory=lambda: [round(-0.95 + 0.05 * k, 2) for k in range(39)])
    treatments: list[str] = field(default_factory=lambda: list(TREATMENTS))
    dump_eigenvalues: bool = True


@dataclass
class Mms2DConfig:
    orders: list[int] = field(default_factory=lambda: [2, 4, 6])
    resolutions: list[int] = field(default_factory=lambda: [17, 34, 68])
    alpha: float = 128.0
    gamma: float = 0.5
    t_final: float = 1.0
    treatment: str = "characteristic"
    mesh: MeshConfig = field(default_factory=MeshConfig)


@dataclass
class CourantConfig:
    N: int = 48
    order: int = 6
    alphas: list[float] = field(default_factory=lambda: [1.0, 4.0, 16.0, 64.0, 128.0])
    treatments: list[str] = field(default_factory=lambda: list(TREATMENTS))
    t_final: float = 0.1
    gamma_max: float = 1.0
    gamma_min: float = 1.0 / 256
    reference_gamma: float = 0.5
    threshold: float = 10.0
    # runs whose error passes abort_factor * threshold * reference mid-run stop early
    abort_factor: float = 100.0
    mesh: MeshConfig = field(default_factory=MeshConfig)


@dataclass
class ScenarioConfig:
    """Rotated-anisotropy Gaussian pulse with zero data."""
    mu: list[float] = field(default_factory=lambda: [0.1, 0.2])
    sigma: list[float] = field(default_factory=lambda: [0.0025, 0.005])
    alpha: float = 1.0
    gamma: float = 0.5
    boundary_treatment: str = "characteristic"
    mesh: MeshConfig = field(default_factory=MeshConfig)


@dataclass
class EnergyConfig:
    order: int = 6
    resolutions: list[int] = field(default_factory=lambda: [34, 68])
    interfaces: list[str] = field(default_factory=lambda: ["locked", "nonlinear"])
    t_final: float = 3.0
    tolerance: float = 1e-10
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)


@dataclass
class SelfConvConfig:
    order: int = 6
    resolutions: list[int] = field(default_factory=lambda: [34, 68, 136])
    interface: str = "nonlinear"
    t_final: float = 3.0
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)


EXPERIMENTS: dict[str, type] = {
    "convergence1d": Convergence1DConfig,
    "spectrum": SpectrumConfig,
    "mms2d": Mms2DConfig,
    "courant": CourantConfig,
    "energy": EnergyConfig,
    "selfconv": SelfConvConfig,
}


def _coerce(tp: Any, value: Any, where: str) -> Any:
    origin = typing.get_origin(tp)
    if dataclasses.is_dataclass(tp):
        if not isinstance(value, dict):
            raise ConfigError(f"{where}: expected a mapping")
        return from_dict(tp, value, where)
    if origin is list:
        (inner,) = typing.get_args(tp)
        if not isinstance(value, (list, tuple)):
            raise ConfigError(f"{where}: expected a list")
        return [_coerce(inner, v, f"{where}[{i}]") for i, v in enumerate(value)]
    if tp is bool:
        if not isinstance(value, bool):
            raise ConfigError(f"{where}: expected true/false")
        return value
    if tp is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{where}: expected an integer")
        return value
    if tp is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{where}: expected a number")
        return float(value)
    if tp is str:
        if not isinstance(value, str):
            raise ConfigError(f"{where}: expected a string")
        return value
    raise ConfigError(f"{where}: unsupported field type {tp!r}")


def from_dict(cls: type, data: dict, where: str = "config"):
    hints = typing.get_type_hints(cls)
    names = {f.name for f in dataclasses.fields(cls)}
    unknown = sorted(set(data) - names)
    if unknown:
        raise ConfigError(f"{where}: unknown key(s) {', '.join(unknown)}")
    kwargs = {k: _coerce(hints[k], v, f"{where}.{k}") for k, v in data.items()}
    obj = cls(**kwargs)
    validate(obj, where)
    return obj


def validate(cfg, where: str = "config") -> None:
    for name in ("treatments",):
        for t in getattr(cfg, name, []):
            if t not in TREATMENTS:
                raise ConfigError(f"{where}.{name}: unknown treatment {t!r}")
    if getattr(cfg, "treatment", "characteristic") not in TREATMENTS:
        raise ConfigError(f"{where}.treatment: unknown treatment {cfg.treatment!r}")
    orders = list(getattr(cfg, "orders", [])) + ([cfg.order] if hasattr(cfg, "order") else [])
    for o in orders:
        if o not in (2, 4, 6):
            raise ConfigError(f"{where}: order must be 2, 4 or 6, got {o}")
    for name in ("gamma", "t_final", "alpha"):
        v = getattr(cfg, name, 1.0)
        if v < 0 or (name != "t_final" and v == 0):
            raise ConfigError(f"{where}.{name}: must be positive")
    for R in getattr(cfg, "reflections", []):
        if abs(R) > 1:
            raise ConfigError(f"{where}.reflections: |R| must not exceed 1")
    if isinstance(cfg, CourantConfig) and not cfg.abort_factor >= 1:
        raise ConfigError(f"{where}.abort_factor: must be at least 1")
    if isinstance(cfg, ScenarioConfig) and cfg.boundary_treatment not in TREATMENTS:
        raise ConfigError(f"{where}.boundary_treatment: unknown treatment {cfg.boundary_treatment!r}")
    if isinstance(cfg, (EnergyConfig,)):
        for k in cfg.interfaces:
            if k not in ("locked", "nonlinear"):
                raise ConfigError(f"{where}.interfaces: unknown interface {k!r}")
    if isinstance(cfg, SelfConvConfig):
        if cfg.interface not in ("locked", "nonlinear"):
            raise ConfigError(f"{where}.interface: unknown interface {cfg.interface!r}")
        if len(set(cfg.resolutions)) != len(cfg.resolutions) or len(cfg.resolutions) < 3:
            raise ConfigError(f"{where}.resolutions: need three distinct resolutions")


def load_config(path: str | Path | None, experiment: str):
    """Read ``path`` (YAML) into the dataclass of ``experiment``; None gives defaults."""
    if experiment not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment {experiment!r}")
    cls = EXPERIMENTS[experiment]
    if path is None:
        return cls()
    data = yaml.safe_load(Path(path).read_text()) or {}
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a mapping")
    return from_dict(cls, data, experiment)

"""Experiment configuration: a nested JSON document mapped onto dataclasses."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..errors import ConfigError, QuasiZenoError
from ..hilbert import BasisKind, build_site_operators
from ..models import ModelSpec, ObservableSpec, build_hamiltonian, build_observable
from ..zeno import MAX_ORDER, projectors_from_observable

MODES = ("exact", "effective", "qzd", "trajectories", "compare")
FORMATS = ("csv", "json")


@dataclass
class ExperimentConfig:
    model: ModelSpec
    observable: ObservableSpec
    initial_state: dict
    dt: float
    tau: float
    order: int = 2
    mode: str = "compare"
    n_trajectories: int = 1000
    seed: int = 0
    stride: int = 1
    output: str = "run"
    format: str = "csv"
    locking_threshold: float = 0.1
    name: str = ""

    @property
    def n_steps(self) -> int:
        return int(round(self.tau / self.dt))

    def validate(self) -> "ExperimentConfig":
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ConfigError("dt", "must be a positive number")
        if not (math.isfinite(self.tau) and self.tau >= self.dt * (1 - 1e-12)):
            raise ConfigError("tau", "must be at least dt")
        ratio = self.tau / self.dt
        if abs(ratio - round(ratio)) > 1e-9 * max(1.0, ratio):
            raise ConfigError("tau", f"tau/dt = {ratio!r} is not an integer number of measurements")
        if not 1 <= self.order <= MAX_ORDER:
            raise ConfigError("order", f"must be between 1 and {MAX_ORDER}")
        if self.mode not in MODES:
            raise ConfigError("mode", f"must be one of {', '.join(MODES)}")
        if self.format not in FORMATS:
            raise ConfigError("format", f"must be one of {', '.join(FORMATS)}")
        if self.n_trajectories < 1:
            raise ConfigError("n_trajectories", "must be >= 1")
        if self.stride < 1:
            raise ConfigError("stride", "must be >= 1")
        if not self.locking_threshold > 0:
            raise ConfigError("locking_threshold", "must be positive")
        if not ({"label", "amplitudes"} & set(self.initial_state)):
            raise ConfigError("initial_state", "needs a 'label' or 'amplitudes' entry")
        return self

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "model": self.model.to_dict(),
            "observable": self.observable.to_dict(),
            "initial_state": self.initial_state,
            "dt": self.dt,
            "tau": self.tau,
            "order": self.order,
            "mode": self.mode,
            "n_trajectories": self.n_trajectories,
            "seed": self.seed,
            "stride": self.stride,
            "output": self.output,
            "format": self.format,
            "locking_threshold": self.locking_threshold,
        }


def _section(data, key, cls):
    if key not in data:
        raise ConfigError(key, "missing section")
    try:
        return cls(**data[key])
    except (TypeError, ValueError) as exc:
        raise ConfigError(key, str(exc)) from None


def config_from_dict(data: dict) -> ExperimentConfig:
    if not isinstance(data, dict):
        raise ConfigError("<root>", "configuration must be a mapping")
    data = dict(data)
    model = _section(data, "model", ModelSpec)
    observable = _section(data, "observable", ObservableSpec)
    if "initial_state" not in data or not isinstance(data["initial_state"], dict):
        raise ConfigError("initial_state", "missing or not a mapping")
    kwargs = {}
    casts = {"dt": float, "tau": float, "order": int, "mode": str,
             "n_trajectories": int, "seed": int, "stride": int, "output": str,
             "format": str, "locking_threshold": float, "name": str}
    for key in ("dt", "tau"):
        if key not in data:
            raise ConfigError(key, "missing")
    for key, cast in casts.items():
        if key in data:
            try:
                kwargs[key] = cast(data[key])
            except (TypeError, ValueError):
                raise ConfigError(key, f"cannot interpret {data[key]!r}") from None
    unknown = set(data) - set(casts) - {"model", "observable", "initial_state"}
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown key")
    return ExperimentConfig(model, observable, dict(data["initial_state"]), **kwargs).validate()


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("<file>", f"{path}: invalid JSON ({exc.msg}, line {exc.lineno})") from None
    config = config_from_dict(data)
    build_system(config)
    return config


@dataclass(frozen=True)
class System:
    """Everything derived from a config before time stepping."""
    ops: object
    hamiltonian: np.ndarray
    projectors: object
    subspace: int
    psi0: np.ndarray


def _initial_state(config: ExperimentConfig, basis) -> np.ndarray:
    spec = config.initial_state
    if "label" in spec:
        label = spec["label"]
        if basis.kind is BasisKind.BOSON_FOCK:
            label = tuple(label)
        try:
            return basis.state(label)
        except KeyError:
            raise ConfigError("initial_state.label", f"{label!r} is not a basis label") from None
    amps = spec["amplitudes"]
    try:
        psi = np.array([complex(*a) if isinstance(a, (list, tuple)) else complex(a) for a in amps])
    except (TypeError, ValueError):
        raise ConfigError("initial_state.amplitudes", "entries must be numbers or [re, im] pairs") from None
    if psi.size != basis.dim:
        raise ConfigError("initial_state.amplitudes", f"expected {basis.dim} amplitudes, got {psi.size}")
    norm = np.linalg.norm(psi)
    if not norm > 0:
        raise ConfigError("initial_state.amplitudes", "state has zero norm")
    return psi / norm


def build_system(config: ExperimentConfig) -> System:
    try:
        basis = config.model.basis()
        ops = build_site_operators(basis)
        h = build_hamiltonian(config.model, ops)
        a = build_observable(config.observable, ops)
    except QuasiZenoError as exc:
        raise ConfigError("model", str(exc)) from None
    projset = projectors_from_observable(a)
    psi0 = _initial_state(config, basis)
    try:
        k = projset.subspace_of(psi0)
    except QuasiZenoError:
        raise ConfigError("initial_state", "state does not lie in a single measurement subspace") from None
    return System(ops, h, projset, k, psi0)

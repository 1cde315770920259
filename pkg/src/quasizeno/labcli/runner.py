from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .. import __version__
from ..models import site_expectation_operators
from ..numkernel import op_norm
from ..zeno import (
    RNG_ALGORITHM,
    ZenoLockingWarning,
    effective_evolution,
    effective_hamiltonian,
    exact_step,
    sample_ensemble,
    subspace_basis,
    zeno_locking_metric,
)
from .config import ExperimentConfig, build_system


@dataclass
class RunReport:
    mode: str
    columns: list  # observable column names, between "time" and "survival"
    rows: list = field(default_factory=list)  # (time, *values, survival)
    metadata: dict = field(default_factory=dict)
    parts: dict = field(default_factory=dict)  # compare mode: mode -> RunReport

    @property
    def header(self) -> list[str]:
        return ["time", *self.columns, "survival", "mode"]

    @property
    def times(self) -> np.ndarray:
        return np.array([r[0] for r in self.rows])

    @property
    def survival(self) -> np.ndarray:
        return np.array([r[-1] for r in self.rows])

    def column(self, name: str) -> np.ndarray:
        k = 1 + self.columns.index(name)
        return np.array([r[k] for r in self.rows])


@dataclass
class DiffReport:
    """Exact-versus-effective discrepancy per recorded step."""
    rows: list = field(default_factory=list)  # (time, operator_diff, state_diff)
    metadata: dict = field(default_factory=dict)
    mode: str = "diff"
    columns: list = field(default_factory=lambda: ["operator_diff", "state_diff"])

    @property
    def header(self) -> list[str]:
        return ["time", *self.columns, "mode"]

    @property
    def max_operator_diff(self) -> float:
        return self.metadata["max_operator_diff"]


def _recorded_steps(n, stride):
    marks = list(range(stride, n + 1, stride))
    if n >= 1 and marks[-1:] != [n]:
        marks.append(n)
    return set(marks)


def _row(t, psi, obs_ops):
    norm2 = float(np.vdot(psi, psi).real)
    values = [float(np.vdot(psi, o @ psi).real) / norm2 for o in obs_ops]
    return (t, *values, norm2)


def _deterministic(step, psi0, n, stride, dt, obs_ops):
    record = _recorded_steps(n, stride)
    psi = psi0.copy()
    rows = []
    for m in range(1, n + 1):
        psi = step @ psi
        if m in record:
            rows.append(_row(m * dt, psi, obs_ops))
    return rows


def operator_error_history(h, p, dt, n, order=2, stride=1, psi0=None):
    """``||(P U)^m P - U_eff(m dt) P||`` on the subspace for recorded steps ``m``.

    Returns ``(steps, errors, max_error, state_errors)``; the maximum runs over
    every step, not only the recorded ones.  ``state_errors`` holds
    ``||(P U)^m psi0 - U_eff(m dt) psi0||`` when ``psi0`` is given.
    """
    v = subspace_basis(p)
    coords = None if psi0 is None else v.conj().T @ np.asarray(psi0, dtype=complex)
    exact = exact_step(h, p, dt)
    eff = effective_evolution(effective_hamiltonian(h, p, dt, order), dt)
    a = v.astype(complex)
    b = v.astype(complex)
    record = _recorded_steps(n, stride)
    steps, errors, state_errors, worst = [], [], [], 0.0
    for m in range(1, n + 1):
        a = exact @ a
        b = eff @ b
        err = op_norm(a - b)
        worst = max(worst, err)
        if m in record:
            steps.append(m)
            errors.append(err)
            if coords is not None:
                state_errors.append(float(np.linalg.norm((a - b) @ coords)))
    return np.array(steps), np.array(errors), worst, np.array(state_errors)


def run_experiment(config: ExperimentConfig) -> RunReport:
    system = build_system(config)
    h, psi0 = system.hamiltonian, system.psi0
    p = system.projectors.projectors[system.subspace]
    names, obs_ops = site_expectation_operators(system.ops)
    dt, n = config.dt, config.n_steps

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ZenoLockingWarning)
        metric = zeno_locking_metric(h, psi0, p, dt, threshold=config.locking_threshold)
    metadata = {
        "config": config.to_dict(),
        "seed": config.seed,
        "rng": RNG_ALGORITHM,
        "code_version": __version__,
        "n_steps": n,
        "subspace": {
            "index": system.subspace,
            "eigenvalue": float(system.projectors.eigenvalues[system.subspace]),
            "dimension": system.projectors.dims[system.subspace],
        },
        "zeno_locking_metric": metric,
        "warnings": [str(w.message) for w in caught],
    }

    def single(mode):
        meta = dict(metadata, mode=mode)
        if mode == "exact":
            rows = _deterministic(exact_step(h, p, dt), psi0, n, config.stride, dt, obs_ops)
        elif mode in ("effective", "qzd"):
            order = config.order if mode == "effective" else 1
            step = effective_evolution(effective_hamiltonian(h, p, dt, order), dt)
            meta["order"] = order
            rows = _deterministic(step, psi0, n, config.stride, dt, obs_ops)
        else:
            ens = sample_ensemble(h, system.projectors, psi0, dt, n,
                                  config.n_trajectories, config.seed,
                                  observables=obs_ops, stride=config.stride)
            rows = [(float(t), *map(float, e), float(s))
                    for t, e, s in zip(ens.times, ens.expectations, ens.survival)]
            meta["n_trajectories"] = config.n_trajectories
        return RunReport(mode, list(names), rows, meta)

    if config.mode != "compare":
        return single(config.mode)

    parts = {mode: single(mode) for mode in ("exact", "effective", "qzd")}
    steps, errors, worst, gaps = operator_error_history(h, p, dt, n, config.order,
                                                        config.stride, psi0)
    diff_rows = [(m * dt, float(e), float(g)) for m, e, g in zip(steps, errors, gaps)]
    parts["diff"] = DiffReport(diff_rows, dict(metadata, mode="diff", max_operator_diff=worst))
    return RunReport("compare", list(names), [], dict(metadata, mode="compare"), parts)


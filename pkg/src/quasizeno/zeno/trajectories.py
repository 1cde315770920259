"""Born-rule sampling of measurement records.

Each step applies ``exp(-i H dt)``, samples an outcome ``k`` with probability
``||P_k psi||^2``, and projects.  Stored states are normalised; the cumulative
log-probability of the realised record is kept in ``log_survival``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateStep, ZeroVector
from ..numkernel import TOLERANCES
from .evolution import unitary_step
from .projectors import ProjectorSet

RNG_ALGORITHM = "numpy.random.PCG64"


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray
    outcomes: np.ndarray
    log_survival: np.ndarray
    seed: int
    initial_outcome: int
    rng: str = RNG_ALGORITHM

    @property
    def no_jump(self) -> bool:
        return bool(np.all(self.outcomes == self.initial_outcome))

    def first_jump(self) -> int | None:
        changed = np.flatnonzero(self.outcomes != self.initial_outcome)
        return int(changed[0]) if changed.size else None


def _normalized(psi0):
    psi = np.asarray(psi0, dtype=complex)
    norm = np.linalg.norm(psi)
    if norm == 0 or not np.isfinite(norm):
        raise ZeroVector("initial state has zero or non-finite norm")
    return psi / norm


def _sample(probs, u):
    u = np.asarray(u)
    total = probs.sum(axis=-1)
    if np.any(np.max(probs, axis=-1) < TOLERANCES.probability_floor):
        raise DegenerateStep("every outcome has vanishing probability")
    cdf = np.cumsum(probs, axis=-1) / total[..., None]
    k = (u[..., None] >= cdf).sum(axis=-1)
    return np.minimum(k, probs.shape[-1] - 1)


def sample_trajectory(h, projset: ProjectorSet, psi0, dt: float, n: int,
                      seed: int) -> Trajectory:
    if n < 1:
        raise ValueError("n must be >= 1")
    psi = _normalized(psi0)
    initial = int(np.argmax(projset.probabilities(psi)))
    u_step = unitary_step(h, dt)
    rng = np.random.default_rng(seed)
    projs = np.array(projset.projectors)

    states = np.empty((n, psi.size), dtype=complex)
    outcomes = np.empty(n, dtype=int)
    log_s = np.empty(n)
    acc = 0.0
    for step in range(n):
        psi = u_step @ psi
        branches = projs @ psi
        probs = np.einsum("kd,kd->k", branches.conj(), branches).real
        k = int(_sample(probs, rng.random()))
        acc += np.log(probs[k])
        psi = branches[k] / np.sqrt(probs[k])
        states[step] = psi
        outcomes[step] = k
        log_s[step] = acc
    times = dt * np.arange(1, n + 1)
    return Trajectory(times, states, outcomes, log_s, seed, initial)


@dataclass(frozen=True)
class EnsembleResult:
    times: np.ndarray
    survival: np.ndarray  # fraction of records with no outcome change so far
    expectations: np.ndarray  # (steps, observables), averaged over records
    final_outcomes: np.ndarray
    jumped: np.ndarray  # per record: did any outcome differ from the initial one
    seed: int
    n_trajectories: int
    rng: str = RNG_ALGORITHM

    @property
    def no_jump_fraction(self) -> float:
        return float(1.0 - self.jumped.mean())


def sample_ensemble(h, projset: ProjectorSet, psi0, dt: float, n: int,
                    n_trajectories: int, seed: int,
                    observables=(), stride: int = 1) -> EnsembleResult:
    """Vectorised sampling of ``n_trajectories`` records from one generator.

    Results depend only on ``(seed, n_trajectories)``.  Expectations of
    ``observables`` are averaged over the normalised post-measurement states
    and recorded every ``stride`` steps (plus the last step).
    """
    if n < 1 or n_trajectories < 1:
        raise ValueError("need n >= 1 and n_trajectories >= 1")
    psi0 = _normalized(psi0)
    initial = int(np.argmax(projset.probabilities(psi0)))
    u_step = unitary_step(h, dt)
    rng = np.random.default_rng(seed)
    projs = np.array(projset.projectors)
    obs = np.array(observables, dtype=complex).reshape(-1, psi0.size, psi0.size)

    psi = np.tile(psi0, (n_trajectories, 1))
    jumped = np.zeros(n_trajectories, dtype=bool)
    rows = list(range(stride, n + 1, stride))
    if rows[-1:] != [n]:
        rows.append(n)
    record = set(rows)
    survival, expectations = [], []
    idx = np.arange(n_trajectories)
    for step in range(1, n + 1):
        psi = psi @ u_step.T
        branches = np.einsum("kij,tj->tki", projs, psi)
        probs = np.einsum("tki,tki->tk", branches.conj(), branches).real
        k = _sample(probs, rng.random(n_trajectories))
        psi = branches[idx, k] / np.sqrt(probs[idx, k])[:, None]
        jumped |= k != initial
        if step in record:
            survival.append(1.0 - jumped.mean())
            vals = np.einsum("ti,oij,tj->ot", psi.conj(), obs, psi).real
            expectations.append(vals.mean(axis=1))
    return EnsembleResult(dt * np.array(rows), np.array(survival),
                          np.array(expectations).reshape(len(rows), obs.shape[0]),
                          k, jumped, seed, n_trajectories)

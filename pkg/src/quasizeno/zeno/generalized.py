"""Unequal measurement intervals, piecewise-constant Hamiltonians, random intervals.

Products are time ordered with the earliest interval rightmost, so the
returned operator acts on the initial state directly.
"""
from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from ..errors import InvalidMoments
from ..numkernel import hermitian_eig, mat_exp
from .evolution import exact_step
from .hamiltonians import effective_hamiltonian
from .projectors import check_projector


def _check_steps(timesteps):
    steps = np.asarray(timesteps, dtype=float)
    if steps.ndim != 1 or steps.size == 0 or np.any(steps <= 0):
        raise ValueError("timesteps must be a non-empty list of positive intervals")
    return steps


def _ordered_product(factors, dim):
    u = np.eye(dim, dtype=complex)
    for f in factors:
        u = f @ u
    return u


def nonuniform_effective_evolution(h, p, timesteps: Sequence[float], order: int = 2) -> np.ndarray:
    """``prod_j exp(-i dt_j H_eff(dt_j))`` over the given intervals."""
    steps = _check_steps(timesteps)
    cache = {}

    def factor(dt):
        if dt not in cache:
            stack = effective_hamiltonian(h, p, dt, order)
            cache[dt] = mat_exp(-1j * dt * stack.h_eff)
        return cache[dt]

    return _ordered_product((factor(dt) for dt in steps), np.shape(h)[0])


def second_order_closed_form(h, p, timesteps: Sequence[float]) -> np.ndarray:
    """``exp(-i H_Z^(1) tau - H_Z^(2) sum_j dt_j^2 / 2)``.

    Drops the commutators between intervals of different length, which is
    accurate to first order in the interval spread.
    """
    steps = _check_steps(timesteps)
    stack = effective_hamiltonian(h, p, 0.0, order=2)
    tau = steps.sum()
    weight = 0.5 * np.sum(steps**2)
    return mat_exp(-1j * stack.hz[0] * tau - stack.hz[1] * weight)


def time_dependent_effective_evolution(h_of_step: Callable[[int], np.ndarray] | Sequence,
                                       p, timesteps: Sequence[float],
                                       order: int = 2) -> np.ndarray:
    """Effective evolution for a Hamiltonian held constant within each interval.

    ``h_of_step`` is a sequence of Hamiltonians or a callable ``j -> H_j``;
    interval ``j`` uses its own quasi-Zeno stack.
    """
    steps = _check_steps(timesteps)
    get = h_of_step if callable(h_of_step) else h_of_step.__getitem__

    def factors():
        for j, dt in enumerate(steps):
            stack = effective_hamiltonian(get(j), p, dt, order)
            yield mat_exp(-1j * dt * stack.h_eff)

    return _ordered_product(factors(), np.shape(get(0))[0])


def exact_piecewise(h_of_step, p, timesteps: Sequence[float]) -> np.ndarray:
    """Exact post-selected evolution ``prod_j P exp(-i H_j dt_j)``."""
    steps = _check_steps(timesteps)
    if isinstance(h_of_step, np.ndarray) and h_of_step.ndim == 2:
        # one diagonalisation serves every step
        p = check_projector(p)
        w, v = hermitian_eig(h_of_step)
        vp = p @ v
        vh = v.conj().T
        return _ordered_product((vp @ (np.exp(-1j * w * dt)[:, None] * vh) for dt in steps),
                                h_of_step.shape[0])
    if callable(h_of_step):
        get = h_of_step
    else:
        get = h_of_step.__getitem__
    return _ordered_product((exact_step(get(j), p, dt) for j, dt in enumerate(steps)),
                            np.shape(get(0))[0])


def stochastic_timestep_summary(mean_dt: float, mean_dt2: float, tau: float) -> tuple[float, float]:
    """Average measurement count and accumulated second-order weight.

    Returns ``(<N>, <N> <dt^2> / 2)`` with ``<N> = tau / <dt>``; the weight
    replaces ``sum_j dt_j^2 / 2`` in :func:`second_order_closed_form`.
    """
    if not mean_dt > 0:
        raise InvalidMoments("first moment must be positive")
    if mean_dt2 < mean_dt**2 * (1 - 1e-12):
        raise InvalidMoments("second moment is below the squared first moment")
    n_avg = tau / mean_dt
    return n_avg, 0.5 * n_avg * mean_dt2


def averaged_closed_form(h, p, mean_dt: float, mean_dt2: float, tau: float) -> np.ndarray:
    """Second-order effective evolution using interval moments instead of a realisation."""
    _, weight = stochastic_timestep_summary(mean_dt, mean_dt2, tau)
    stack = effective_hamiltonian(h, p, 0.0, order=2)
    return mat_exp(-1j * stack.hz[0] * tau - stack.hz[1] * weight)

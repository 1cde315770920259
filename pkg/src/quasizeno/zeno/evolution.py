"""Exact stroboscopic and effective evolutions, leakage diagnostics, survival.

Operator-route states are kept unnormalised: the squared norm of
``U psi0`` is the probability that every measurement so far returned the
initial subspace.
"""
from __future__ import annotations

import warnings

import numpy as np

from ..errors import NotProjector, StateOutsideSubspace, ZeroVector
from ..numkernel import TOLERANCES, as_matrix, dagger, hermitian_eig, mat_exp, op_norm
from .hamiltonians import QuasiZenoStack, effective_hamiltonian
from .projectors import check_projector


class ZenoLockingWarning(UserWarning):
    """Per-step leakage probability is not small compared with one."""


def unitary_step(h, dt: float) -> np.ndarray:
    return mat_exp(-1j * as_matrix(h) * dt)


def effective_evolution(stack: QuasiZenoStack, tau: float) -> np.ndarray:
    """``exp(-i H_eff tau)``.

    ``H_eff`` is supported on the measurement subspace, so the result maps
    that subspace into itself and acts as the identity on its complement.
    """
    if tau < 0:
        raise ValueError("tau must be non-negative")
    return mat_exp(-1j * stack.h_eff * tau)


def qzd_evolution(h, p, tau: float) -> np.ndarray:
    """Standard Zeno evolution ``exp(-i P H P tau)``."""
    return effective_evolution(effective_hamiltonian(h, p, 0.0, order=1), tau)


def exact_step(h, p, dt: float) -> np.ndarray:
    """One evolve-then-measure cycle ``P exp(-i H dt)``."""
    p = check_projector(p)
    return p @ unitary_step(h, dt)


def exact_stroboscopic(h, p, dt: float, n: int) -> np.ndarray:
    """``(P exp(-i H dt))^n``, the post-selected evolution after ``n`` measurements.

    The power is formed by binary powering of the exact one-cycle operator.
    ``n = 0`` gives the identity.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return np.eye(as_matrix(h).shape[0], dtype=complex)
    if dt <= 0:
        raise ValueError("dt must be positive")
    return np.linalg.matrix_power(exact_step(h, p, dt), n)


def propagate(step: np.ndarray, psi0, n: int, stride: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Apply ``step`` ``n`` times; return recorded step indices and states.

    States are recorded after steps ``stride, 2*stride, ...`` and always after
    the final step.
    """
    psi = np.asarray(psi0, dtype=complex).copy()
    marks = list(range(stride, n + 1, stride))
    if n >= 1 and (not marks or marks[-1] != n):
        marks.append(n)
    jump = np.linalg.matrix_power(step, stride) if stride > 1 else step
    states = np.empty((len(marks), psi.size), dtype=complex)
    done = 0
    for r, m in enumerate(marks):
        if m - done == stride:
            psi = jump @ psi
        else:
            psi = np.linalg.matrix_power(step, m - done) @ psi
        done = m
        states[r] = psi
    return np.array(marks, dtype=int), states


def _as_density(state) -> np.ndarray:
    s = np.asarray(state, dtype=complex)
    if s.ndim == 1:
        return np.outer(s, np.conj(s))
    return s


def _check_support(state, p, tol):
    s = np.asarray(state, dtype=complex)
    q = np.eye(p.shape[0]) - p
    if s.ndim == 1:
        leak = np.linalg.norm(q @ s) / max(np.linalg.norm(s), 1e-300)
    else:
        leak = op_norm(q @ s) / max(op_norm(s), 1e-300)
    if leak > tol:
        raise StateOutsideSubspace(f"state has weight {leak:.2e} outside the subspace")


def zeno_locking_metric(h, state, p, dt: float, tol: float | None = None,
                        threshold: float | None = None) -> float:
    """Per-step leakage ``Tr((I - P) H rho H) dt^2`` for ``rho`` in the subspace.

    Warns with :class:`ZenoLockingWarning` when the value exceeds ``threshold``.
    """
    h = as_matrix(h)
    p = check_projector(p)
    _check_support(state, p, TOLERANCES.subspace if tol is None else tol)
    rho = _as_density(state)
    q = np.eye(h.shape[0]) - p
    value = float(np.real(np.trace(q @ h @ rho @ h))) * dt**2
    threshold = TOLERANCES.locking_warning if threshold is None else threshold
    if value > threshold:
        warnings.warn(f"Zeno-locking metric {value:.3g} exceeds {threshold:g}",
                      ZenoLockingWarning, stacklevel=2)
    return value


def transition_probability(h, state, q, dt: float) -> float:
    """Leading-order probability ``Tr(H rho H Q) dt^2`` of an outcome in ``Q``."""
    h = as_matrix(h)
    q = check_projector(q)
    s = np.asarray(state, dtype=complex)
    if s.ndim == 1:
        v = q @ h @ s
        return float(np.vdot(v, v).real) * dt**2
    return max(0.0, float(np.real(np.trace(h @ s @ h @ q)))) * dt**2


def survival_exact(h, p, psi0, dt: float, n: int) -> float:
    """Exact survival probability ``||(P U)^n psi0||^2``."""
    psi = exact_stroboscopic(h, p, dt, n) @ np.asarray(psi0, dtype=complex)
    return float(np.vdot(psi, psi).real)


def survival_product(h, p, psi0, dt: float, n: int, order: int = 2) -> float:
    """Approximate survival ``prod_n (1 - Tr(H_Z^(2) rho_n) dt^2)``.

    ``rho_n`` is the normalised effective-evolution state at the start of the
    n-th interval.  This is the leading-order estimate; :func:`survival_exact`
    is the reference.
    """
    stack = effective_hamiltonian(h, p, dt, order=max(order, 2))
    step = effective_evolution(stack, dt)
    hz2 = stack.hz[1]
    psi = np.asarray(psi0, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    log_s = 0.0
    for _ in range(n):
        leak = float(np.vdot(psi, hz2 @ psi).real) * dt**2
        log_s += np.log1p(-leak)
        psi = step @ psi
        psi = psi / np.linalg.norm(psi)
    return float(np.exp(log_s))


def subspace_switch(psi, p_old, p_new, h, tol: float | None = None) -> np.ndarray:
    """Leading-order state after the outcome changes: ``P_new H P_old psi``.

    The result is unnormalised; its squared norm times ``dt^2`` is the
    switching probability.
    """
    h = as_matrix(h)
    p_old = check_projector(p_old)
    p_new = check_projector(p_new)
    tol = TOLERANCES.projector if tol is None else tol
    if op_norm(p_new @ p_old) > tol:
        raise NotProjector("new and old subspaces are not orthogonal")
    psi = np.asarray(psi, dtype=complex)
    _check_support(psi, p_old, TOLERANCES.subspace)
    out = p_new @ h @ p_old @ psi
    scale = max(op_norm(h), 1.0) * np.linalg.norm(psi)
    if np.linalg.norm(out) <= 1e-12 * scale:
        raise ZeroVector("no first-order path from the old to the new subspace")
    return out


def evolve_density(op, rho) -> np.ndarray:
    """``rho -> M rho M^dagger`` applied to each eigencomponent of ``rho``."""
    op = as_matrix(op)
    w, v = hermitian_eig(rho)
    mv = op @ v
    return (mv * w) @ dagger(mv)

"""Quasi-Zeno Hamiltonians and the truncated effective Hamiltonian.

For a measurement subspace with projector ``P`` and ``Q = I - P``::

    H_Z^(k) = P H (Q H)^(k-1) P
    H_eff   = sum_{k=1}^{K} (-i dt)^(k-1) / k! * H_Z^(k)

``H_Z^(1)`` is the ordinary Zeno Hamiltonian.  ``H_Z^(2) = (QHP)^dagger (QHP)``
is positive semidefinite and makes ``H_eff`` dissipative for ``dt > 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import NotHermitian
from ..numkernel import TOLERANCES, as_matrix, dagger, hermitian_eig, is_hermitian
from .projectors import check_projector

MAX_ORDER = 6


def _check_inputs(h, p):
    h = as_matrix(h)
    p = check_projector(p)
    if h.shape != p.shape:
        raise ValueError(f"H has shape {h.shape} but P has shape {p.shape}")
    if not is_hermitian(h):
        raise NotHermitian("Hamiltonian is not Hermitian")
    return h, p


def _stack(h, p, order):
    q = np.eye(h.shape[0], dtype=complex) - p
    qh = q @ h
    ph = p @ h
    tail = p
    out = []
    for _ in range(order):
        out.append(ph @ tail)
        tail = qh @ tail
    return out


def quasi_zeno_hamiltonian(h, p, k: int) -> np.ndarray:
    if k < 1:
        raise ValueError("order k must be >= 1")
    h, p = _check_inputs(h, p)
    return _stack(h, p, k)[-1]


def effective_coefficient(k: int, dt: float) -> complex:
    return (-1j * dt) ** (k - 1) / math.factorial(k)


@dataclass(frozen=True)
class QuasiZenoStack:
    projector: np.ndarray
    order: int
    hz: tuple
    dt: float
    h_eff: np.ndarray
    subspace: int | None = None

    def term(self, k: int) -> np.ndarray:
        """The k-th contribution to ``h_eff``."""
        return effective_coefficient(k, self.dt) * self.hz[k - 1]


def effective_hamiltonian(h, p, dt: float, order: int = 2,
                          subspace: int | None = None) -> QuasiZenoStack:
    if dt < 0:
        raise ValueError("dt must be non-negative")
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be between 1 and {MAX_ORDER}")
    h, p = _check_inputs(h, p)
    hz = _stack(h, p, order)
    h_eff = hz[0].copy()
    if dt > 0:
        for k in range(2, order + 1):
            h_eff = h_eff + effective_coefficient(k, dt) * hz[k - 1]
    return QuasiZenoStack(p, order, tuple(hz), float(dt), h_eff, subspace)


def subspace_basis(p, tol: float = 0.5) -> np.ndarray:
    """Orthonormal columns spanning the range of the projector ``p``."""
    w, v = hermitian_eig(p)
    return v[:, w > tol]


@dataclass(frozen=True)
class SteadyStateAnalysis:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns, embedded in the full space
    steady: np.ndarray  # boolean mask of minimal-eigenvalue columns

    @property
    def steady_states(self) -> np.ndarray:
        return self.eigenvectors[:, self.steady]


def steady_state_analysis(stack: QuasiZenoStack, tol: float | None = None) -> SteadyStateAnalysis:
    """Spectrum of ``H_Z^(2)`` on the measurement subspace, lowest first.

    The lowest-eigenvalue eigenvectors are the states that survive repeated
    measurement with the largest probability; they are flagged in ``steady``.
    """
    if stack.order < 2:
        raise ValueError("steady-state analysis needs a stack of order >= 2")
    tol = TOLERANCES.hermitian if tol is None else tol
    v = subspace_basis(stack.projector)
    reduced = dagger(v) @ stack.hz[1] @ v
    w, u = hermitian_eig(reduced)
    scale = max(1.0, float(np.max(np.abs(w)))) if w.size else 1.0
    steady = w - w[0] <= tol * scale
    return SteadyStateAnalysis(w, v @ u, steady)

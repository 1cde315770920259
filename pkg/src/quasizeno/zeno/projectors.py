from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NotProjector, StateOutsideSubspace
from ..numkernel import TOLERANCES, as_matrix, dagger, hermitian_eig, op_norm


@dataclass(frozen=True)
class ProjectorSet:
    """Spectral resolution ``A = sum_j eigenvalues[j] * projectors[j]``."""
    eigenvalues: np.ndarray
    projectors: tuple
    observable: np.ndarray

    def __len__(self):
        return len(self.projectors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(int(round(np.real(np.trace(p)))) for p in self.projectors)

    def complement(self, k: int) -> np.ndarray:
        return np.eye(self.observable.shape[0], dtype=complex) - self.projectors[k]

    def probabilities(self, psi: np.ndarray) -> np.ndarray:
        return np.array([np.vdot(p @ psi, p @ psi).real for p in self.projectors])

    def subspace_of(self, psi: np.ndarray, tol: float | None = None) -> int:
        """Index of the single subspace that supports ``psi``."""
        tol = TOLERANCES.subspace if tol is None else tol
        psi = np.asarray(psi, dtype=complex)
        norm = np.linalg.norm(psi)
        for k, p in enumerate(self.projectors):
            if np.linalg.norm(psi - p @ psi) <= tol * norm:
                return k
        raise StateOutsideSubspace("state is not contained in a single measurement subspace")


def check_projector(p, tol: float | None = None) -> np.ndarray:
    p = as_matrix(p)
    tol = TOLERANCES.projector if tol is None else tol
    if op_norm(p @ p - p) > tol or op_norm(p - dagger(p)) > tol:
        raise NotProjector("matrix is not an orthogonal projector")
    return p


def _is_diagonal(a: np.ndarray) -> bool:
    return not np.any(a - np.diag(np.diag(a)))


def _group(values: np.ndarray, tol: float) -> list[list[int]]:
    order = np.argsort(values, kind="stable")
    groups: list[list[int]] = []
    start = None
    for idx in order:
        if start is None or values[idx] - start > tol:
            groups.append([idx])
            start = values[idx]
        else:
            groups[-1].append(idx)
    return groups


def projectors_from_observable(a, degeneracy_tol: float | None = None) -> ProjectorSet:
    """Group the spectrum of a Hermitian observable into eigenspace projectors.

    Eigenvalues closer than ``degeneracy_tol`` to the first member of a group
    are merged.  The default is ``1e-9 * max(1, max|eigenvalue|)``.  Diagonal
    observables are handled without a numerical eigensolver, so their
    projectors are exact 0/1 matrices.
    """
    a = as_matrix(a)
    dim = a.shape[0]
    if _is_diagonal(a):
        if np.any(np.imag(np.diag(a))):
            hermitian_eig(a)  # raises NotHermitian
        values = np.real(np.diag(a))
        vectors = np.eye(dim, dtype=complex)
    else:
        values, vectors = hermitian_eig(a)
    if degeneracy_tol is None:
        degeneracy_tol = 1e-9 * max(1.0, float(np.max(np.abs(values))))

    eigenvalues, projectors = [], []
    for group in _group(values, degeneracy_tol):
        v = vectors[:, group]
        projectors.append(v @ dagger(v))
        eigenvalues.append(float(np.mean(values[group])))
    return ProjectorSet(np.array(eigenvalues), tuple(projectors), a)

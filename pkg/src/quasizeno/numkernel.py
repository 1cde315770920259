"""Dense complex linear algebra used throughout the package.

Operators are plain ``numpy.ndarray`` objects of dtype ``complex128``.  The
matrix exponential is a scaling-and-squaring Pade routine (Higham 2005), so it
is safe for the non-normal effective Hamiltonians that appear at finite
measurement interval; an eigendecomposition route is not.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrix, NotHermitian


@dataclass
class Tolerances:
    hermitian: float = 1e-10
    projector: float = 1e-10
    subspace: float = 1e-8
    probability_floor: float = 1e-15
    locking_warning: float = 0.1


#: Package-wide defaults. Mutate the attributes to override globally.
TOLERANCES = Tolerances()


def as_matrix(m) -> np.ndarray:
    """Return ``m`` as a square complex128 array, rejecting non-finite input."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise InvalidMatrix(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidMatrix("matrix has non-finite entries")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def op_norm(m: np.ndarray) -> float:
    """Spectral norm (largest singular value)."""
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def hermiticity_error(m: np.ndarray) -> float:
    return op_norm(m - dagger(m))


def is_hermitian(m: np.ndarray, tol: float | None = None) -> bool:
    tol = TOLERANCES.hermitian if tol is None else tol
    m = np.asarray(m)
    return hermiticity_error(m) <= tol * max(op_norm(m), 1.0)


# Pade coefficients b_0..b_m and the 1-norm thresholds theta_m from
# Higham, SIAM J. Matrix Anal. Appl. 26 (2005) 1179, Table 2.1.
_PADE = {
    3: (120.0, 60.0, 12.0, 1.0),
    5: (30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0),
    7: (17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0),
    9: (17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
        2162160.0, 110880.0, 3960.0, 90.0, 1.0),
    13: (64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
         1187353796428800.0, 129060195264000.0, 10559470521600.0,
         670442572800.0, 33522128640.0, 1323241920.0, 40840800.0, 960960.0,
         16380.0, 182.0, 1.0),
}
_THETA = {
    3: 1.495585217958292e-2,
    5: 2.539398330063230e-1,
    7: 9.504178996162932e-1,
    9: 2.097847961257068e0,
    13: 5.371920351148152e0,
}


def _pade_low(a, m):
    b = _PADE[m]
    ident = np.eye(a.shape[0], dtype=a.dtype)
    a2 = a @ a
    powers = [ident, a2]
    for _ in range(2, (m + 1) // 2):
        powers.append(powers[-1] @ a2)
    u = sum(b[2 * j + 1] * powers[j] for j in range(len(powers)))
    v = sum(b[2 * j] * powers[j] for j in range(len(powers)))
    return a @ u, v


def _pade13(a):
    b = _PADE[13]
    ident = np.eye(a.shape[0], dtype=a.dtype)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a4 @ a2
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
             + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
         + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident)
    return u, v


def mat_exp(m) -> np.ndarray:
    """Matrix exponential of an arbitrary (not necessarily normal) square matrix."""
    a = as_matrix(m)
    norm1 = float(np.linalg.norm(a, 1))
    if norm1 == 0.0:
        return np.eye(a.shape[0], dtype=complex)

    for deg in (3, 5, 7, 9):
        if norm1 <= _THETA[deg]:
            u, v = _pade_low(a, deg)
            return np.linalg.solve(v - u, v + u)

    squarings = max(0, int(np.ceil(np.log2(norm1 / _THETA[13]))))
    a = a / 2.0**squarings
    u, v = _pade13(a)
    r = np.linalg.solve(v - u, v + u)
    for _ in range(squarings):
        r = r @ r
    return r


def expm_hermitian(h, t: float = 1.0) -> np.ndarray:
    """``exp(-i h t)`` through the spectral decomposition; ``h`` must be Hermitian.

    Independent of :func:`mat_exp`, used as a cross-check.
    """
    w, v = hermitian_eig(h)
    return (v * np.exp(-1j * w * t)) @ dagger(v)


def hermitian_eig(m, tol: float | None = None):
    """Eigenvalues (ascending) and orthonormal eigenvector columns of a Hermitian matrix."""
    a = as_matrix(m)
    tol = TOLERANCES.hermitian if tol is None else tol
    scale = max(op_norm(a), np.finfo(float).tiny)
    if hermiticity_error(a) > tol * scale:
        raise NotHermitian(
            f"||M - M^dagger|| = {hermiticity_error(a):.3e} exceeds {tol:g} * ||M||")
    a = 0.5 * (a + dagger(a))
    w, v = np.linalg.eigh(a)
    return w, v

import numpy as np
import pytest

from quasizeno.hilbert import build_site_operators, fock_basis, spin1_basis
from quasizeno.models import ModelSpec, ObservableSpec, build_hamiltonian, build_observable
from quasizeno.zeno import projectors_from_observable

SQ2 = np.sqrt(2.0)


class ThreeLevel:
    """Spin-1, H = lam S^X, |S^Z| measured; basis order (|-1>, |0>, |1>)."""

    def __init__(self, lam=1.0):
        self.lam = lam
        self.ops = build_site_operators(spin1_basis())
        self.h = build_hamiltonian(ModelSpec("Spin1Transverse", lam=lam), self.ops)
        self.projset = projectors_from_observable(
            build_observable(ObservableSpec("AbsSz"), self.ops))
        self.p0, self.p1 = self.projset.projectors
        self.minus1 = np.array([1, 0, 0], dtype=complex)
        self.plus = np.array([1, 0, 1], dtype=complex) / SQ2
        self.minus = np.array([1, 0, -1], dtype=complex) / SQ2


class Fig4:
    """4 sites, 2 bosons, U = 0, J = 1, occupation of sites {1, 2} measured."""

    def __init__(self, J=1.0):
        self.basis = fock_basis(4, 2)
        self.ops = build_site_operators(self.basis)
        self.spec = ModelSpec("BoseHubbard", J=J, U=0.0, sites=4, total_particles=2)
        self.h = build_hamiltonian(self.spec, self.ops)
        self.projset = projectors_from_observable(
            build_observable(ObservableSpec.region([1, 2]), self.ops))
        self.k = list(self.projset.eigenvalues).index(1.0)
        self.p = self.projset.projectors[self.k]
        self.psi0 = self.basis.state((1, 1, 0, 0))


@pytest.fixture
def three_level():
    return ThreeLevel()


@pytest.fixture
def fig4():
    return Fig4()


def random_hermitian(rng, dim, scale=1.0):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (a + a.conj().T) / 2


def random_projector(rng, dim, rank):
    q, _ = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    v = q[:, :rank]
    return v @ v.conj().T

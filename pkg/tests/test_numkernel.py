import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from quasizeno.errors import InvalidMatrix, NotHermitian
from quasizeno.numkernel import expm_hermitian, hermitian_eig, mat_exp, op_norm

from conftest import random_hermitian

SQ2 = np.sqrt(2.0)


def test_exp_of_zero_is_identity():
    assert_allclose(mat_exp(np.zeros((4, 4))), np.eye(4), atol=0)


def test_exp_of_diagonal():
    out = mat_exp(np.diag([1j * np.pi, 0.0]))
    assert_allclose(out, np.diag([-1.0, 1.0]), atol=1e-15)


def test_spin1_rotation_two_routes():
    sx = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) / SQ2
    u = mat_exp(-1j * sx)
    assert op_norm(u.conj().T @ u - np.eye(3)) <= 1e-12
    assert_allclose(u, expm_hermitian(sx, 1.0), atol=1e-13)


@pytest.mark.parametrize("scale", [1e-3, 0.1, 1.0, 7.0, 60.0])
def test_matches_reference_on_non_normal_input(scale):
    rng = np.random.default_rng(int(scale * 1000))
    a = scale * (rng.normal(size=(12, 12)) + 1j * rng.normal(size=(12, 12))) / np.sqrt(12)
    ref = scipy.linalg.expm(a)
    assert op_norm(mat_exp(a) - ref) <= 1e-12 * op_norm(ref) * max(1.0, scale)


def test_large_dimension():
    rng = np.random.default_rng(3)
    h = random_hermitian(rng, 256, 0.1)
    u = mat_exp(-1j * h)
    assert op_norm(u - scipy.linalg.expm(-1j * h)) <= 1e-12


def test_rejects_non_finite():
    with pytest.raises(InvalidMatrix):
        mat_exp(np.array([[np.nan, 0], [0, 1]]))
    with pytest.raises(InvalidMatrix):
        mat_exp(np.ones((2, 3)))


def test_deterministic():
    a = random_hermitian(np.random.default_rng(0), 5)
    assert np.array_equal(mat_exp(a), mat_exp(a))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1), st.floats(-20, 20))
def test_unitary_for_hermitian_generator(dim, seed, t):
    h = random_hermitian(np.random.default_rng(seed), dim)
    u = mat_exp(-1j * h * t / max(op_norm(h), 1.0))
    assert op_norm(u.conj().T @ u - np.eye(dim)) <= 1e-12


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1), st.floats(0.01, 10))
def test_exp_inverse(dim, seed, norm):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    a *= norm / op_norm(a)
    assert op_norm(mat_exp(a) @ mat_exp(-a) - np.eye(dim)) <= 1e-10


def test_eig_identity():
    w, v = hermitian_eig(np.eye(3))
    assert_allclose(w, [1, 1, 1])
    assert_allclose(v.conj().T @ v, np.eye(3), atol=1e-15)


def test_eig_three_level_second_order():
    hz2 = 0.5 * np.array([[1, 0, 1], [0, 0, 0], [1, 0, 1]])
    w, _ = hermitian_eig(hz2[np.ix_([0, 2], [0, 2])])
    assert_allclose(w, [0.0, 1.0], atol=1e-15)


def test_eig_constrained_lattice_matrix():
    # second-order Hamiltonian of the constrained 4-state lattice, J = 1, basis
    # |1100>, |1010>, |0101>, |0011>; characteristic polynomial worked by hand:
    # (4 - x)^2 ((2 - x)^2 - 4) = (4 - x)^2 x (x - 4)  ->  roots 0, 4, 4, 4
    m = np.array([[4, 0, 0, 0], [0, 2, 2, 0], [0, 2, 2, 0], [0, 0, 0, 4]], dtype=float)
    w, v = hermitian_eig(m)
    assert_allclose(w, [0, 4, 4, 4], atol=1e-12)
    assert_allclose(m @ v, v * w, atol=1e-12)


def test_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eig(np.array([[0, 1], [0, 0]]))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 16), st.integers(0, 2**32 - 1))
def test_eig_reconstruction(dim, seed):
    m = random_hermitian(np.random.default_rng(seed), dim)
    w, v = hermitian_eig(m)
    scale = op_norm(m)
    assert np.all(np.diff(w) >= 0)
    assert op_norm(v @ np.diag(w) @ v.conj().T - m) <= 1e-10 * scale
    assert op_norm(v.conj().T @ v - np.eye(dim)) <= 1e-10
    assert np.max(np.linalg.norm(m @ v - v * w, axis=0)) <= 1e-10 * scale

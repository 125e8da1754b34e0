import numpy as np
import pytest

from sylvan.errors import DimensionMismatch, NotNormal, SingularSystem, SizeGuard, SpectraOverlap
from sylvan.generators import circulant
from sylvan.oracle import eig_solve_normal, kron_matrix, kron_solve

from .conftest import random_normal


def residual(A, B, Q, X):
    return np.linalg.norm(B @ X - X @ A - Q)


def rel(x, y):
    return np.linalg.norm(x - y) / np.linalg.norm(y)


def test_scalar():
    assert kron_solve([[0]], [[2]], [[4]]).data[0, 0] == 2


def test_diagonal_formula():
    expected = np.array([[1 / 2, 1], [1 / 3, 1 / 2]])
    for solver in (kron_solve, eig_solve_normal):
        X = solver(np.diag([0, 1]), np.diag([2, 3]), np.ones((2, 2))).data
        assert np.allclose(X, expected, rtol=0, atol=1e-15)


def test_hermitian_shift(rng):
    m = rng.standard_normal((6, 6))
    A = m + m.T
    X = eig_solve_normal(A, A + 5 * np.eye(6), np.eye(6)).data
    assert np.allclose(X, np.eye(6) / 5, atol=1e-13)


def test_cross_oracle_random_normal(rng):
    for _ in range(20):
        A = random_normal(rng, 10, center=0, radius=1)
        B = random_normal(rng, 10, center=3 + 1j, radius=1)
        Q = rng.standard_normal((10, 10)) + 1j * rng.standard_normal((10, 10))
        Xk, Xe = kron_solve(A, B, Q).data, eig_solve_normal(A, B, Q).data
        assert rel(Xk, Xe) <= 1e-10
        for X in (Xk, Xe):
            assert residual(A, B, Q, X) <= 1e-10 * (1 + np.linalg.norm(Q))


def test_cross_oracle_circulant(rng):
    for _ in range(5):
        A = circulant(rng.standard_normal(8) + 1j * rng.standard_normal(8))
        B = circulant(rng.standard_normal(8)) + 12j * np.eye(8)
        Q = rng.standard_normal((8, 8))
        assert rel(kron_solve(A, B, Q).data, eig_solve_normal(A, B, Q).data) <= 1e-10


def test_rectangular(rng):
    A = np.diag([0.0, 1, 2])
    B = np.diag([5.0, 6])
    Q = rng.standard_normal((2, 3))
    X = kron_solve(A, B, Q).data
    assert X.shape == (2, 3)
    assert np.allclose(X, Q / (np.diag(B)[:, None] - np.diag(A)[None, :]), atol=1e-15)
    assert np.allclose(eig_solve_normal(A, B, Q).data, X, atol=1e-14)


def test_uniqueness_and_conditioning(rng):
    A = random_normal(rng, 5)
    B = random_normal(rng, 5, center=4)
    Q = rng.standard_normal((5, 5))
    X1 = kron_solve(A, B, Q).data
    X2 = kron_solve(A, B, Q + 0 * Q).data
    assert np.array_equal(X1, X2)
    assert np.isfinite(np.linalg.cond(kron_matrix(A, B)))


def test_singular():
    A = np.diag([1.0, 2.0])
    with pytest.raises(SingularSystem):
        kron_solve(A, A, np.eye(2))
    with pytest.raises(SpectraOverlap):
        eig_solve_normal(A, A, np.eye(2))


def test_guards():
    with pytest.raises(SizeGuard):
        kron_solve(np.eye(65), np.eye(65), np.ones((65, 65)))
    with pytest.raises(DimensionMismatch):
        kron_solve(np.eye(2), np.eye(3), np.ones((2, 3)))
    with pytest.raises(NotNormal):
        eig_solve_normal([[0, 1], [0, 0]], np.eye(2) * 3, np.eye(2))

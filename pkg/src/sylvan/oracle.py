"""Direct Sylvester solvers used as ground truth for the contour method."""
import numpy as np
import scipy.linalg as spla

from .errors import DimensionMismatch, NotNormal, SingularSystem, SizeGuard, SpectraOverlap
from .matrix import CMatrix, as_cmatrix, is_normal

__all__ = ["kron_matrix", "kron_solve", "eig_solve_normal"]

MAX_UNKNOWNS = 4096


def _check_shapes(A, B, Q):
    A, B, Q = as_cmatrix(A), as_cmatrix(B), as_cmatrix(Q)
    if not A.is_square or not B.is_square:
        raise DimensionMismatch("A and B must be square")
    if Q.shape != (B.nrows, A.nrows):
        raise DimensionMismatch(
            f"Q must be {B.nrows}x{A.nrows} for A {A.shape} and B {B.shape}, got {Q.shape}")
    return A, B, Q


def kron_matrix(A, B):
    """The matrix ``I (x) B - A^T (x) I`` acting on column-stacked ``vec(X)``."""
    a, b = as_cmatrix(A).data, as_cmatrix(B).data
    n, m = a.shape[0], b.shape[0]
    return np.kron(np.eye(n), b) - np.kron(a.T, np.eye(m))


def kron_solve(A, B, Q):
    """Solve ``B X - X A = Q`` by LU on the vectorized ``mn x mn`` system.

    Raises
    ------
    SizeGuard
        If ``m * n`` exceeds 4096.
    SingularSystem
        If the reciprocal condition estimate of the Kronecker matrix falls
        below machine epsilon (the spectra of A and B meet).
    """
    A, B, Q = _check_shapes(A, B, Q)
    n, m = A.nrows, B.nrows
    if m * n > MAX_UNKNOWNS:
        raise SizeGuard(f"{m * n} unknowns exceeds the dense guard of {MAX_UNKNOWNS}")
    K = kron_matrix(A, B)
    anorm = np.linalg.norm(K, 1)
    lu, piv, info = spla.lapack.zgetrf(K)
    if info > 0:
        raise SingularSystem("Kronecker system is exactly singular")
    rcond, _ = spla.lapack.zgecon(lu, anorm)
    if anorm == 0 or rcond < np.finfo(float).eps:
        raise SingularSystem(f"Kronecker system is singular to working precision (rcond={rcond:.2e})")
    vec, _ = spla.lapack.zgetrs(lu, piv, Q.data.reshape(-1, order="F"))
    X = vec.reshape((m, n), order="F")
    return CMatrix(X, B.row_offset, A.col_offset)


def eig_solve_normal(A, B, Q, overlap_rtol=1e-12):
    """Solve ``B X - X A = Q`` by unitary diagonalization of normal A and B.

    The complex Schur form of a normal matrix is diagonal, so with
    ``A = U diag(alpha) U*`` and ``B = V diag(beta) V*`` the transformed
    equation decouples into ``Y[i, j] = (V* Q U)[i, j] / (beta[i] - alpha[j])``.
    """
    A, B, Q = _check_shapes(A, B, Q)
    if not is_normal(A) or not is_normal(B):
        raise NotNormal("eig_solve_normal requires normal A and B")
    ta, ua = spla.schur(A.data, output="complex")
    tb, ub = spla.schur(B.data, output="complex")
    alpha, beta = np.diag(ta), np.diag(tb)
    gap = beta[:, None] - alpha[None, :]
    scale = max(np.abs(alpha).max(), np.abs(beta).max())
    if np.abs(gap).min() <= overlap_rtol * (1 + scale):
        raise SpectraOverlap("A and B share an eigenvalue")
    Y = (ub.conj().T @ Q.data @ ua) / gap
    return CMatrix(ub @ Y @ ua.conj().T, B.row_offset, A.col_offset)

"""Lyapunov equations as a special case.

A^T X + X A + Q = 0 is B X - X A = Q with B = -A^T. For symmetric positive
definite A the spectra of A and -A^T lie on opposite sides of the imaginary
axis, and with Q = -I the solution is symmetric positive definite.
"""
import numpy as np

from sylvan import GenSpec, generate, solve_lyapunov

n = 10
base = generate(GenSpec("hermitian_banded", n, bandwidth=2, decay_alpha=1.0, real=True, seed=8))
shift = 0.5 - np.linalg.eigvalsh(base.data.real).min()
A = generate(GenSpec("shifted_copy", n, shift=shift, base=base))
print(f"eigenvalues of A in [{np.linalg.eigvalsh(A.data).min():.3f}, "
      f"{np.linalg.eigvalsh(A.data).max():.3f}]")

rep = solve_lyapunov(A, -np.eye(n))
X = rep.X.data
print(f"converged = {rep.converged}, residual = {rep.residual_fro:.1e}")
print(f"||X - X^*||_F = {np.linalg.norm(X - X.conj().T):.1e}")
print(f"eigenvalues of X in [{np.linalg.eigvalsh(X).min():.4f}, {np.linalg.eigvalsh(X).max():.4f}]")

# For a diagonal A the answer is X = diag(1 / (2 a_i)).
D = np.diag([1.0, 2.0, 4.0])
print("diagonal check:", np.round(solve_lyapunov(D, -np.eye(3)).X.data.real.diagonal(), 12))

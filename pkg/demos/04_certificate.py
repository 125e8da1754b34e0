"""A-priori norm bound for the solution.

If A and B are normal with spectra delta apart, then in any inverse-closed
algebra with a norm-control function h the solution satisfies

    ||X|| <= (24/pi) ||Q|| (||A||_op + delta)^2 / delta
             * h~(3/delta, max(||A||, ||B||) + (||A||_op + delta) ||I||)^2,

where h~ is the running supremum of h. In the operator norm h(s, t) = s
works, which is what the built-in "identity" control function provides.
"""
import math

import numpy as np

from sylvan import (AlgebraSpec, GenSpec, IDENTITY_H, NormControlFn, certify, generate,
                    monotonize, solve_sylvester)

# The smallest example: 1x1 with A = 0, B = 1, Q = 1 gives X = 1 and
# g = (24/pi) * 1 * (0 + 1)^2 / 1 * 3^2 = 216/pi.
rep = solve_sylvester([[0]], [[1]], [[1]], certify=True)
c = rep.certificate
print(f"1x1: ||X|| = {c.norm_X_A:.3f}, g = {c.g_value:.6f}, 216/pi = {216 / math.pi:.6f}")

rng = np.random.default_rng(5)
n = 10
A = generate(GenSpec("hermitian_banded", n, bandwidth=1, decay_alpha=1.0, seed=4))
B = generate(GenSpec("diagonal", n, seed=6, shift=4j))
Q = rng.standard_normal((n, n))
rep = solve_sylvester(A, B, Q, certify=True)
c = rep.certificate
print(f"n = {n}: ||X||_op = {c.norm_X_A:.3f} <= g = {c.g_value:.1f}  pass = {c.passed}")
print("the bound is far from tight; it is uniform in the dimension, not sharp")

# Other algebras need their own control function. Any callable h(s, t) can
# be supplied; if it is not declared monotone it is monotonized on a grid.
wobbly = NormControlFn(lambda s, t: s * (2 + math.cos(t)), name="wobbly")
print(f"monotonized wobbly h at (1, 1): {monotonize(wobbly, 1.0, 1.0):.6f} (closed form 3)")
cert = certify(A, B, Q, rep.X, AlgebraSpec("op"), wobbly, rep.separation)
print(f"with wobbly h: g = {cert.g_value:.1f}, pass = {cert.passed}")
cert = certify(A, B, Q, rep.X, AlgebraSpec("op"), IDENTITY_H, rep.separation)
print(f"with h = s:    g = {cert.g_value:.1f}, pass = {cert.passed}")

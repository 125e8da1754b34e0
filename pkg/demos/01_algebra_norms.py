"""Off-diagonal decay norms.

Three ways of measuring how fast the entries of a matrix fall off away from
the diagonal: the Gröchenig-Schur norm (worst row or column), the
Baskakov-Gohberg-Sjöstrand norm (sup along each diagonal, then summed) and
the Beurling norm (sup over everything at distance >= k, then summed). On
every matrix they are ordered GS <= BGS <= Beurling, and at p = inf they
coincide.
"""
import numpy as np

from sylvan import AlgebraSpec, GenSpec, algebra_norm, generate, inclusion_check

A = generate(GenSpec("hermitian_banded", 12, bandwidth=1, decay_alpha=2.0, seed=3))

print("hermitian banded matrix, n = 12, polynomial decay outside the band")
print(f"{'p':>5} {'alpha':>6} {'GS':>10} {'BGS':>10} {'Beurling':>10}  ordered")
for p in (1.0, 2.0, np.inf):
    for alpha in (0.0, 1.0, 2.0):
        gs, bgs, beur, ok = inclusion_check(A, p, alpha)
        print(f"{p:>5} {alpha:>6} {gs:10.4f} {bgs:10.4f} {beur:10.4f}  {ok}")

# A heavier weight rewards fast decay less; a dense random matrix has no
# decay at all and its weighted norms grow quickly with alpha.
rng = np.random.default_rng(0)
D = rng.standard_normal((12, 12))
print("\ndense random matrix, p = 1")
for alpha in (0.0, 1.0, 2.0):
    print(f"  alpha = {alpha}: Beurling {algebra_norm(D, AlgebraSpec('beurling', 1, alpha)):9.2f}"
          f"   banded {algebra_norm(A, AlgebraSpec('beurling', 1, alpha)):7.2f}")

# Admissibility: the weighted algebra is inverse-closed once alpha > 1 - 1/p.
for spec in (AlgebraSpec("gs", 2, 0.0), AlgebraSpec("gs", 2, 0.75), AlgebraSpec("bgs", 1, 0.0)):
    print(f"{spec.kind}:p={spec.p}:alpha={spec.alpha} admissible = {spec.admissible}")

"""Eigenvalues and spectral separation.

Two separations between spectra are used: the Chebyshev distance
``delta = min max(|Re(a - b)|, |Im(a - b)|)``, which drives the grid
construction, and the Euclidean distance ``d = min |a - b|``.
"""
from dataclasses import dataclass

import numpy as np
import scipy.linalg as spla

from .errors import DegenerateSpectrum, EigFailure, NonSquare, SpectraOverlap
from .matrix import as_cmatrix, normality_residual, normality_tolerance

__all__ = ["SpectrumSet", "Separation", "spectrum", "separation", "op_norm"]


@dataclass(frozen=True, eq=False)
class SpectrumSet:
    values: np.ndarray
    normality_residual: float = 0.0
    is_normal: bool = True

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.complex128).ravel()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return self.values.size

    def to_dict(self):
        return {
            "values": [[float(z.real), float(z.imag)] for z in self.values],
            "normality_residual": self.normality_residual,
            "is_normal": self.is_normal,
        }


@dataclass(frozen=True)
class Separation:
    delta_cheb: float
    delta_eucl: float
    delta_prime: float
    n0: int

    def to_dict(self):
        return {"delta_cheb": self.delta_cheb, "delta_eucl": self.delta_eucl,
                "delta_prime": self.delta_prime, "n0": self.n0}


def op_norm(A):
    return float(np.linalg.norm(as_cmatrix(A).data, 2))


def spectrum(A):
    """Eigenvalues of a square section together with a normality diagnosis.

    Hermitian input goes through the symmetric eigensolver and comes back
    real and ascending; everything else uses the general dense solver and is
    sorted lexicographically by (real, imag).
    """
    A = as_cmatrix(A)
    if not A.is_square:
        raise NonSquare(f"spectrum needs a square matrix, got {A.shape}")
    a = A.data
    try:
        if np.array_equal(a, a.conj().T):
            vals = spla.eigvalsh(a).astype(np.complex128)
        else:
            vals = np.sort_complex(spla.eigvals(a))
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigFailure(str(exc)) from exc
    res = normality_residual(A)
    return SpectrumSet(vals, res, bool(res <= normality_tolerance(A)))


def _values(s):
    if isinstance(s, SpectrumSet):
        return s.values
    return np.asarray(s, dtype=np.complex128).ravel()


def separation(sa, sb, op_norm_A, overlap_rtol=1e-9):
    """Chebyshev and Euclidean separation of two spectra.

    Parameters
    ----------
    sa, sb : SpectrumSet or array_like
        Eigenvalues of A and B.
    op_norm_A : float
        Operator norm of A, which fixes the window size ``n0``.

    Raises
    ------
    SpectraOverlap
        If the Chebyshev separation is below
        ``overlap_rtol * (1 + max |lambda|)``.
    """
    a, b = _values(sa), _values(sb)
    if a.size == 0 or b.size == 0:
        raise DegenerateSpectrum("both spectra must be nonempty")
    diff = a[:, None] - b[None, :]
    cheb = np.maximum(np.abs(diff.real), np.abs(diff.imag))
    delta = float(cheb.min())
    dist = float(np.abs(diff).min())
    scale = max(np.abs(a).max(), np.abs(b).max())
    if delta <= overlap_rtol * (1.0 + scale):
        raise SpectraOverlap(
            f"spectra are not separated: delta = {delta:.3e}")
    dp = delta / 3.0
    n0 = int(np.floor((op_norm_A + dp) / dp))
    return Separation(delta, dist, dp, n0)

"""Structured normal test matrices with controllable spectra and decay.

All randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), so a
fixed seed reproduces the same matrix bit for bit. ``spawn_seeds`` splits a
root seed into independent per-matrix streams.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec
from .matrix import CMatrix, as_cmatrix

__all__ = ["GenSpec", "generate", "circulant", "spawn_seeds", "FAMILIES"]

FAMILIES = ("diagonal", "hermitian_banded", "circulant", "shifted_copy")


@dataclass(frozen=True, eq=False)
class GenSpec:
    """Recipe for :func:`generate`.

    ``values`` fixes the diagonal of a ``diagonal`` matrix and
    ``coefficients`` the first row of a ``circulant``; when omitted they are
    drawn at random. ``shift`` is added as ``shift * I`` for every family.
    ``real`` restricts ``hermitian_banded`` to real symmetric output.
    """

    family: str
    n: int
    bandwidth: int = 0
    decay_alpha: float = 0.0
    shift: complex = 0.0
    seed: int = 0
    values: tuple | None = None
    coefficients: tuple | None = None
    base: CMatrix | None = None
    real: bool = False
    offset: int = 0

    def validate(self):
        if self.family not in FAMILIES:
            raise InvalidSpec(f"unknown family {self.family!r}")
        if self.family == "shifted_copy":
            if self.base is None:
                raise InvalidSpec("shifted_copy needs a base matrix")
            return
        if self.n < 1:
            raise InvalidSpec("n must be positive")
        if not 0 <= self.bandwidth < self.n:
            raise InvalidSpec("bandwidth must satisfy 0 <= bandwidth < n")
        if self.decay_alpha < 0:
            raise InvalidSpec("decay_alpha must be nonnegative")
        if self.values is not None and len(self.values) != self.n:
            raise InvalidSpec("values must have length n")
        if self.coefficients is not None and len(self.coefficients) != self.n:
            raise InvalidSpec("coefficients must have length n")


def spawn_seeds(seed, count):
    """``count`` independent integer seeds derived from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


def _damping(lag, bandwidth, alpha):
    return np.where(lag <= bandwidth, 1.0, (1.0 + lag) ** (-alpha - 1.0))


def circulant(first_row):
    """Circulant matrix with ``C[i, j] = first_row[(j - i) mod n]``."""
    c = np.asarray(first_row, dtype=np.complex128)
    n = c.size
    idx = np.arange(n)
    return c[(idx[None, :] - idx[:, None]) % n]


def generate(spec):
    """Build the matrix described by ``spec``; see :class:`GenSpec`."""
    spec.validate()
    shift = complex(spec.shift)
    if spec.family == "shifted_copy":
        base = as_cmatrix(spec.base)
        if not base.is_square:
            raise InvalidSpec("shifted_copy needs a square base")
        return CMatrix(base.data + shift * np.eye(base.nrows), base.row_offset, base.col_offset)

    rng = np.random.default_rng(spec.seed)
    n = spec.n
    if spec.family == "diagonal":
        if spec.values is None:
            vals = rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
        else:
            vals = np.asarray(spec.values, dtype=np.complex128)
        data = np.diag(vals)
    elif spec.family == "hermitian_banded":
        g = rng.standard_normal((n, n))
        if not spec.real:
            g = g + 1j * rng.standard_normal((n, n))
        idx = np.arange(n)
        lag = np.abs(idx[:, None] - idx[None, :])
        h = (g + g.conj().T) / 2
        data = h * _damping(lag, spec.bandwidth, spec.decay_alpha)
    else:
        if spec.coefficients is None:
            k = np.arange(n)
            lag = np.minimum(k, n - k)
            c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            coeffs = c * _damping(lag, spec.bandwidth, spec.decay_alpha)
        else:
            coeffs = np.asarray(spec.coefficients, dtype=np.complex128)
        data = circulant(coeffs)
    return CMatrix(data + shift * np.eye(n), spec.offset, spec.offset)

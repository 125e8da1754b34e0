"""Weighted norms of localized matrices on finite sections.

Three families of off-diagonal decay norms with polynomial weight
``u_alpha(i, j) = (1 + |i - j|)**alpha`` are evaluated, plus the plain
l2 operator norm:

* ``gs``        Groechenig-Schur: largest weighted row/column l^p norm.
* ``bgs``       Baskakov-Gohberg-Sjostrand: l^p norm over diagonals of the
                per-diagonal weighted sup.
* ``beurling``  Beurling: l^p norm over k of the weighted sup taken over
                all diagonals with ``|i - j| >= |k|``.
* ``op``        largest singular value.

Sums and sups run over the stored window only.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec, NonSquare, ZeroMatrix
from .matrix import as_cmatrix

__all__ = [
    "AlgebraSpec",
    "DifferentialProbe",
    "weight",
    "weighted_abs",
    "algebra_norm",
    "inclusion_check",
    "differential_ratio",
]

KINDS = ("gs", "bgs", "beurling", "op")
_ALIASES = {
    "grochenigschur": "gs",
    "baskakovgohbergsjostrand": "bgs",
    "operatorl2": "op",
}


def _parse_p(p):
    if isinstance(p, str):
        if p.strip().lower() in ("inf", "infinity", "oo"):
            return math.inf
        p = float(p)
    return float(p)


@dataclass(frozen=True)
class AlgebraSpec:
    """Which norm to evaluate, with exponent ``p`` and weight order ``alpha``."""

    kind: str = "op"
    p: float = 1.0
    alpha: float = 0.0

    def __post_init__(self):
        kind = _ALIASES.get(str(self.kind).lower(), str(self.kind).lower())
        if kind not in KINDS:
            raise InvalidSpec(f"unknown algebra kind {self.kind!r}")
        p = _parse_p(self.p)
        if math.isnan(p) or p < 1:
            raise InvalidSpec(f"p must lie in [1, inf], got {self.p!r}")
        alpha = float(self.alpha)
        if not alpha >= 0:
            raise InvalidSpec(f"alpha must be nonnegative, got {self.alpha!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "alpha", alpha)

    @property
    def admissible(self):
        """Whether ``alpha > 1 - 1/p``, the range where the algebra is a
        differential *-subalgebra of B(l^2) for one-dimensional indices."""
        return self.alpha > 1.0 - 1.0 / self.p

    @classmethod
    def parse(cls, text):
        """Parse ``kind:p:alpha`` (``p`` may be ``inf``); trailing fields optional."""
        parts = text.split(":")
        if not 1 <= len(parts) <= 3:
            raise InvalidSpec(f"cannot parse algebra spec {text!r}")
        kind = parts[0]
        p = parts[1] if len(parts) > 1 else 1.0
        alpha = parts[2] if len(parts) > 2 else 0.0
        try:
            return cls(kind, p, float(alpha))
        except ValueError as exc:
            raise InvalidSpec(f"cannot parse algebra spec {text!r}") from exc

    def to_dict(self):
        return {"kind": self.kind, "p": "inf" if math.isinf(self.p) else self.p,
                "alpha": self.alpha}

    @classmethod
    def from_dict(cls, obj):
        return cls(obj["kind"], obj.get("p", 1.0), obj.get("alpha", 0.0))


@dataclass(frozen=True)
class DifferentialProbe:
    m: int
    theta: float
    ratio: float


def weight(i, j, alpha):
    """Polynomial weight ``(1 + |i - j|)**alpha``."""
    if alpha < 0:
        raise InvalidSpec("alpha must be nonnegative")
    return (1.0 + abs(i - j)) ** alpha


def _section(A):
    A = as_cmatrix(A)
    if not A.is_square:
        raise NonSquare(f"algebra norms need a square section, got {A.shape}")
    if A.row_offset != A.col_offset:
        raise NonSquare("algebra norms need equal row and column offsets")
    return A


def weighted_abs(A, alpha):
    """Return ``|a(i, j)| * u_alpha(i, j)`` over the stored window."""
    A = _section(A)
    n = A.nrows
    idx = np.arange(n)
    lag = np.abs(idx[:, None] - idx[None, :])
    return np.abs(A.data) * (1.0 + lag) ** alpha


def _lp(values, p):
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        return 0.0
    if math.isinf(p):
        return float(values.max())
    if p == 1:
        return float(values.sum())
    # scale by the max so |x|**p cannot underflow or overflow
    top = values.max()
    if top == 0:
        return 0.0
    return float(top * np.sum((values / top) ** p) ** (1.0 / p))


def _diagonal_sups(w):
    # index 0 of the result is k = -(n-1); k = i - j
    n = w.shape[0]
    return np.array([np.diagonal(w, offset=-k).max() for k in range(-(n - 1), n)])


def algebra_norm(A, spec):
    """Evaluate the norm of ``A`` in the algebra described by ``spec``.

    Parameters
    ----------
    A : CMatrix or array_like
        Square finite section with equal row/column offsets.
    spec : AlgebraSpec

    Returns
    -------
    float
    """
    A = _section(A)
    if spec.kind == "op":
        return float(np.linalg.norm(A.data, 2))
    w = weighted_abs(A, spec.alpha)
    p = spec.p
    if spec.kind == "gs":
        if math.isinf(p):
            return float(w.max())
        rows = max(_lp(r, p) for r in w)
        cols = max(_lp(c, p) for c in w.T)
        return float(max(rows, cols))
    diag = _diagonal_sups(w)
    if spec.kind == "bgs":
        return _lp(diag, p)
    # beurling: tail sup over |i - j| >= |k|, from the outermost diagonals inward
    n = w.shape[0]
    band = np.maximum(diag[n - 1:], diag[n - 1::-1])  # |k| = 0 .. n-1
    tail = np.maximum.accumulate(band[::-1])[::-1]
    return _lp(np.concatenate([tail[:0:-1], tail]), p)


def inclusion_check(A, p, alpha, rtol=1e-12):
    """Return ``(gs, bgs, beurling, ordered)`` for ``A``.

    ``ordered`` is true when ``gs <= bgs <= beurling`` up to ``rtol``
    relative slack.
    """
    gs = algebra_norm(A, AlgebraSpec("gs", p, alpha))
    bgs = algebra_norm(A, AlgebraSpec("bgs", p, alpha))
    beur = algebra_norm(A, AlgebraSpec("beurling", p, alpha))
    ordered = gs <= bgs * (1 + rtol) and bgs <= beur * (1 + rtol)
    return gs, bgs, beur, bool(ordered)


def differential_ratio(A, spec, m, theta):
    """Measure ``||A^m|| / (||A||^(m - theta) * ||A||_op^theta)``.

    This is a lower estimate of the constant in the differential-norm
    inequality for the algebra ``spec`` relative to B(l^2).
    """
    if int(m) != m or m < 2:
        raise ValueError("m must be an integer >= 2")
    if not 0 < theta <= m - 1:
        raise ValueError("theta must lie in (0, m - 1]")
    A = _section(A)
    norm_a = algebra_norm(A, spec)
    if norm_a == 0:
        raise ZeroMatrix("the algebra norm of A vanishes")
    op = float(np.linalg.norm(A.data, 2))
    power = np.linalg.matrix_power(A.data, int(m))
    norm_pow = algebra_norm(type(A)(power, A.row_offset, A.col_offset), spec)
    ratio = norm_pow / (norm_a ** (m - theta) * op ** theta)
    return DifferentialProbe(int(m), float(theta), float(ratio))

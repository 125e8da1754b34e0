"""Contour-integral Sylvester solver and norm certificates.

For ``sigma(A)`` inside a Cauchy domain ``D`` and ``sigma(B)`` outside its
closure, the unique solution of ``B X - X A = Q`` is

    X = 1/(2 pi i) * integral over dD of (B - zI)^-1 Q (zI - A)^-1 dz.

The boundary produced by :func:`sylvan.domain.build_domain` is a union of
axis-aligned unit edges; each edge gets a ``q``-point Gauss-Legendre rule and
``q`` is doubled until two consecutive rules agree and the residual is small.
"""
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .domain import build_domain, verify_domain
from .errors import (DimensionMismatch, NodeSingular, NonFiniteH, NotNormal,
                     QuadratureNotConverged, ResolventSingular)
from .matrix import CMatrix, as_cmatrix, is_normal
from .norms import AlgebraSpec, algebra_norm
from .spectra import op_norm, separation, spectrum

__all__ = [
    "ContourQuadrature",
    "NormControlFn",
    "NormCertificate",
    "SolveOptions",
    "SolveReport",
    "IDENTITY_H",
    "build_quadrature",
    "winding_selfcheck",
    "contour_integral",
    "resolvent_margin",
    "solve_sylvester",
    "solve_lyapunov",
    "monotonize",
    "certify",
]

CHUNK = 1024
CERT_CONSTANT = 24.0 / math.pi


@dataclass(frozen=True, eq=False)
class ContourQuadrature:
    """Composite Gauss-Legendre rule on oriented boundary segments.

    ``nodes`` and ``weights`` have shape ``(n_segments, order)``. The weights
    are the ``dz`` contributions; the ``1/(2 pi i)`` factor is applied when
    summing.
    """

    segments: np.ndarray
    order: int
    nodes: np.ndarray
    weights: np.ndarray
    loop_sizes: tuple = ()

    @property
    def n_nodes(self):
        return self.nodes.size


def build_quadrature(dom, order):
    if order < 1:
        raise ValueError("quadrature order must be >= 1")
    segments = dom.unit_edges()
    x, w = np.polynomial.legendre.leggauss(int(order))
    a, b = segments[:, :1], segments[:, 1:]
    half = (b - a) / 2
    nodes = (a + b) / 2 + half * x[None, :]
    weights = half * w[None, :]
    return ContourQuadrature(segments, int(order), nodes, weights,
                             tuple(len(lp.grid) for lp in dom.loops))


def winding_selfcheck(quad, a):
    """Discrete ``1/(2 pi i) * integral dz / (z - a)``; about 1 inside, 0 outside."""
    diff = quad.nodes - a
    if np.abs(diff).min() < 1e-14:
        raise NodeSingular(f"{a} coincides with a quadrature node")
    return complex(np.sum(quad.weights / diff) / (2j * math.pi))


def _threads(threads=None):
    if threads is None:
        threads = os.environ.get("SYLVAN_THREADS", "1")
    try:
        return max(1, int(threads))
    except ValueError:
        return 1


def _chunk_sum(a, b, qs, z, w):
    n, m = a.shape[0], b.shape[0]
    ra = z[:, None, None] * np.eye(n) - a
    rb = b - z[:, None, None] * np.eye(m)
    try:
        ia = np.linalg.inv(ra)
        ib = np.linalg.inv(rb)
    except np.linalg.LinAlgError as exc:
        raise ResolventSingular("resolvent is singular at a quadrature node") from exc
    if not (np.all(np.isfinite(ia)) and np.all(np.isfinite(ib))):
        raise ResolventSingular("resolvent is not finite at a quadrature node")
    wib = w[:, None, None] * ib
    return [np.sum(wib @ q @ ia, axis=0) for q in qs]


def contour_integral(A, B, Qs, quad, threads=None):
    """Evaluate the discretized contour integral for one or several ``Q``.

    The two resolvents at each node are formed once and shared by all
    right-hand sides. Nodes are processed in fixed-size blocks whose partial
    sums are reduced in block order, so the result does not depend on the
    number of worker threads.
    """
    a, b = as_cmatrix(A).data, as_cmatrix(B).data
    single = not isinstance(Qs, (list, tuple))
    qs = [as_cmatrix(q).data for q in ([Qs] if single else Qs)]
    z = quad.nodes.ravel()
    w = quad.weights.ravel()
    blocks = [slice(i, i + CHUNK) for i in range(0, z.size, CHUNK)]
    nthreads = _threads(threads)
    if nthreads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            partial = list(pool.map(lambda s: _chunk_sum(a, b, qs, z[s], w[s]), blocks))
    else:
        partial = [_chunk_sum(a, b, qs, z[s], w[s]) for s in blocks]
    out = []
    for k in range(len(qs)):
        acc = np.zeros_like(partial[0][k])
        for p in partial:
            acc = acc + p[k]
        out.append(acc / (2j * math.pi))
    B_, A_ = as_cmatrix(B), as_cmatrix(A)
    xs = [CMatrix(x, B_.row_offset, A_.col_offset) for x in out]
    return xs[0] if single else xs


def resolvent_margin(quad, M):
    """Smallest singular value of ``zI - M`` over all quadrature nodes."""
    m = as_cmatrix(M).data
    z = quad.nodes.ravel()
    lowest = math.inf
    for i in range(0, z.size, CHUNK):
        r = z[i:i + CHUNK, None, None] * np.eye(m.shape[0]) - m
        lowest = min(lowest, float(np.linalg.svd(r, compute_uv=False)[:, -1].min()))
    return lowest


# --------------------------------------------------------------------------
# norm control

@dataclass(frozen=True)
class NormControlFn:
    """Norm-control function ``h(s, t)`` for inversion in a subalgebra.

    Set ``monotone_declared`` when ``h`` is already nondecreasing in both
    arguments; otherwise its running supremum is taken on a lattice.
    """

    h: object
    monotone_declared: bool = False
    name: str = "user"

    def __call__(self, s, t):
        return self.h(s, t)


IDENTITY_H = NormControlFn(lambda s, t: s, monotone_declared=True, name="identity")


def monotonize(h, s, t, grid=64):
    """Running supremum ``sup h(u, v)`` over ``0 <= u <= s, 0 <= v <= t``.

    Evaluated on a ``grid x grid`` lattice including both endpoints, unless
    ``h`` declares itself monotone, in which case ``h(s, t)`` is returned.
    """
    if s < 0 or t < 0:
        raise ValueError("s and t must be nonnegative")
    if grid < 2:
        raise ValueError("grid must be >= 2")
    if not isinstance(h, NormControlFn):
        h = NormControlFn(h)
    if h.monotone_declared:
        val = float(h(s, t))
        if not math.isfinite(val):
            raise NonFiniteH(f"h({s}, {t}) = {val}")
        return val
    best = -math.inf
    for u in np.linspace(0.0, s, grid):
        for v in np.linspace(0.0, t, grid):
            val = float(h(float(u), float(v)))
            if not math.isfinite(val):
                raise NonFiniteH(f"h({u}, {v}) = {val}")
            best = max(best, val)
    return best


@dataclass
class NormCertificate:
    norm_Q_A: float
    norm_A_A: float
    norm_B_A: float
    op_norm_A: float
    delta: float
    norm_I_A: float
    h_args: tuple
    h_value: float
    h_mode: str
    g_value: float
    norm_X_A: float
    passed: bool
    spec: AlgebraSpec = field(default_factory=AlgebraSpec)

    def to_dict(self):
        return {
            "spec": self.spec.to_dict(),
            "norm_Q_A": self.norm_Q_A,
            "norm_A_A": self.norm_A_A,
            "norm_B_A": self.norm_B_A,
            "op_norm_A": self.op_norm_A,
            "delta": self.delta,
            "norm_I_A": self.norm_I_A,
            "h_args": list(self.h_args),
            "h_value": self.h_value,
            "h_mode": self.h_mode,
            "g_value": self.g_value,
            "norm_X_A": self.norm_X_A,
            "pass": self.passed,
        }


def certify(A, B, Q, X, spec, h, sep, grid=64):
    """Evaluate the a-priori bound ``g`` on ``||X||`` in the algebra ``spec``.

    ``g = (24/pi) ||Q|| (||A||_op + delta)^2 / delta * h~(3/delta, t)^2`` with
    ``t = max(||A||, ||B||) + (||A||_op + delta) ||I||``; norms without the
    ``op`` subscript are taken in ``spec``.
    """
    A, B, Q, X = (as_cmatrix(M) for M in (A, B, Q, X))
    if not (A.is_section and A.shape == B.shape == Q.shape == X.shape):
        raise DimensionMismatch("certification needs square sections of a common size")
    if not is_normal(A) or not is_normal(B):
        raise NotNormal("certification requires normal A and B")
    if not isinstance(h, NormControlFn):
        h = NormControlFn(h)
    delta = sep.delta_cheb
    op_a = op_norm(A)
    nA, nB, nQ, nX = (algebra_norm(M, spec) for M in (A, B, Q, X))
    nI = algebra_norm(CMatrix.identity(A.nrows, A.row_offset), spec)
    s = 3.0 / delta
    t = max(nA, nB) + (op_a + delta) * nI
    hv = monotonize(h, s, t, grid)
    g = CERT_CONSTANT * nQ * (op_a + delta) ** 2 / delta * hv ** 2
    mode = "declared monotone" if h.monotone_declared else "lattice h~"
    return NormCertificate(nQ, nA, nB, op_a, delta, nI, (s, t), hv, mode, g, nX,
                           bool(nX <= g), spec)


# --------------------------------------------------------------------------
# solver

@dataclass(frozen=True)
class SolveOptions:
    tol: float = 1e-9
    q0: int = 2
    q_max: int = 64
    certify: bool = False
    spec: AlgebraSpec = field(default_factory=AlgebraSpec)
    h: object = "identity"
    h_grid: int = 64
    threads: int | None = None

    def control_fn(self):
        if isinstance(self.h, NormControlFn):
            return self.h
        if self.h == "identity":
            return IDENTITY_H
        if callable(self.h):
            return NormControlFn(self.h)
        raise ValueError(f"unknown norm-control function {self.h!r}")

    def to_dict(self):
        return {"tol": self.tol, "q0": self.q0, "q_max": self.q_max,
                "certify": self.certify, "spec": self.spec.to_dict(),
                "h": self.control_fn().name}

    @classmethod
    def from_dict(cls, obj):
        kw = dict(obj)
        if "spec" in kw:
            kw["spec"] = AlgebraSpec.from_dict(kw["spec"])
        if kw.get("h") == "user":
            raise ValueError("a user norm-control function must be passed as a callable")
        return cls(**kw)


@dataclass
class SolveReport:
    X: CMatrix
    residual_fro: float
    order_used: int
    converged: bool
    certificate: NormCertificate | None = None
    spectrum_A: object = None
    spectrum_B: object = None
    separation: object = None
    domain: object = None
    verification: object = None
    quadrature: ContourQuadrature | None = None
    warnings: list = field(default_factory=list)

    def to_dict(self):
        out = {
            "X": self.X.to_dict(),
            "residual_fro": self.residual_fro,
            "order_used": self.order_used,
            "converged": self.converged,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }
        if self.spectrum_A is not None:
            out["spectrum_A"] = self.spectrum_A.to_dict()
            out["spectrum_B"] = self.spectrum_B.to_dict()
        if self.separation is not None:
            out["separation"] = self.separation.to_dict()
        if self.domain is not None:
            out["domain"] = self.domain.summary()
        if self.verification is not None:
            out["verification"] = self.verification.to_dict()
        out["warnings"] = list(self.warnings)
        return out


def _residual(A, B, Q, X):
    return float(np.linalg.norm(B.data @ X.data - X.data @ A.data - Q.data, "fro"))


def solve_sylvester(A, B, Q, opts=None, **kwargs):
    """Solve ``B X - X A = Q`` by contour quadrature around the spectrum of A.

    Parameters
    ----------
    A : (n, n) CMatrix or array_like
    B : (m, m) CMatrix or array_like
    Q : (m, n) CMatrix or array_like
    opts : SolveOptions, optional
        Keyword arguments override individual fields.

    Returns
    -------
    SolveReport

    Raises
    ------
    SpectraOverlap
        The spectra of A and B are not separated.
    QuadratureNotConverged
        ``q_max`` was reached; the exception carries the last report.
    """
    if opts is None:
        opts = SolveOptions(**kwargs)
    elif kwargs:
        opts = replace(opts, **kwargs)
    A, B, Q = as_cmatrix(A), as_cmatrix(B), as_cmatrix(Q)
    if not A.is_square or not B.is_square:
        raise DimensionMismatch("A and B must be square")
    if Q.shape != (B.nrows, A.nrows):
        raise DimensionMismatch(f"Q must have shape {(B.nrows, A.nrows)}, got {Q.shape}")

    warnings = []
    sa, sb = spectrum(A), spectrum(B)
    normal = sa.is_normal and sb.is_normal
    if not normal:
        warnings.append("A or B is not normal: clearance check and certification skipped")
    op_a = op_norm(A)
    sep = separation(sa, sb, op_a)
    dom = build_domain(sa, sep)
    ver = verify_domain(dom, sa, sb, op_a, sep, check_clearance=normal)

    qnorm = Q.fro()
    q = max(1, int(opts.q0))
    quad = build_quadrature(dom, q)
    X = contour_integral(A, B, Q, quad, opts.threads)
    res = _residual(A, B, Q, X)
    converged = opts.q0 >= opts.q_max and res <= opts.tol * (1 + qnorm)
    while not converged and q < opts.q_max:
        q = min(2 * q, int(opts.q_max))
        quad = build_quadrature(dom, q)
        X_new = contour_integral(A, B, Q, quad, opts.threads)
        step = float(np.linalg.norm(X_new.data - X.data, "fro"))
        res = _residual(A, B, Q, X_new)
        converged = step <= opts.tol * (1 + X.fro()) and res <= opts.tol * (1 + qnorm)
        X = X_new

    report = SolveReport(X, res, q, converged, None, sa, sb, sep, dom, ver, quad, warnings)
    if not converged:
        raise QuadratureNotConverged(
            f"no convergence up to order {opts.q_max} (residual {res:.3e})", report)
    if opts.certify and normal:
        if not (A.is_section and A.shape == B.shape == Q.shape):
            warnings.append("certification skipped: needs square sections of a common size")
        else:
            report.certificate = certify(A, B, Q, X, opts.spec, opts.control_fn(), sep,
                                         opts.h_grid)
    return report


def solve_lyapunov(A, Q, opts=None, **kwargs):
    """Solve ``A^T X + X A + Q = 0`` as the Sylvester equation with ``B = -A^T``."""
    A = as_cmatrix(A)
    B = CMatrix(-A.data.T, A.col_offset, A.row_offset)
    return solve_sylvester(A, B, Q, opts, **kwargs)

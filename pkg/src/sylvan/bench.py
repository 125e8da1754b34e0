"""Seeded instance suite comparing the contour solver against the oracles.

Each instance records the solve accuracy, the domain checks, the resolvent
margins at the quadrature nodes, the discrete winding numbers and the
operator-norm certificate, so one JSON report covers every property.
"""
import time

import numpy as np

from .contour import IDENTITY_H, certify, resolvent_margin, solve_sylvester, winding_selfcheck
from .generators import GenSpec, generate, spawn_seeds
from .matrix import CMatrix
from .norms import AlgebraSpec
from .oracle import kron_solve
from .spectra import op_norm

__all__ = ["SUITE_FAMILIES", "SUITE_SIZES", "make_instance", "suite_instances",
           "run_instance", "run_suite"]

SUITE_FAMILIES = ("diagonal", "hermitian_banded", "circulant")
SUITE_SIZES = (4, 8, 12, 24)
_DIRECTIONS = (1, 1j, np.exp(0.25j * np.pi), -1, -1j)


def make_instance(family, n, seed, rep=0):
    """Return ``(A, B, Q)`` with normal A, B whose spectra are >= 0.5 apart."""
    s_a, s_b, s_q = spawn_seeds(seed, 3)
    direction = _DIRECTIONS[rep % len(_DIRECTIONS)]
    if family == "diagonal":
        A = generate(GenSpec("diagonal", n, seed=s_a))
        B = generate(GenSpec("diagonal", n, seed=s_b, shift=3 * direction))
    elif family == "hermitian_banded":
        A = generate(GenSpec("hermitian_banded", n, bandwidth=min(2, n - 1),
                             decay_alpha=1.0, seed=s_a))
        B0 = generate(GenSpec("hermitian_banded", n, bandwidth=min(2, n - 1),
                              decay_alpha=1.0, seed=s_b))
        c = op_norm(A) + op_norm(B0) + 1.0
        B = generate(GenSpec("shifted_copy", n, shift=c * direction, base=B0))
    elif family == "circulant":
        A = generate(GenSpec("circulant", n, bandwidth=1, decay_alpha=1.0, seed=s_a))
        B0 = generate(GenSpec("circulant", n, bandwidth=1, decay_alpha=1.0, seed=s_b))
        c = op_norm(A) + op_norm(B0) + 1.0
        B = generate(GenSpec("shifted_copy", n, shift=c * direction, base=B0))
    else:
        raise ValueError(f"unknown suite family {family!r}")
    rng = np.random.default_rng(s_q)
    Q = CMatrix(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    return A, B, Q


def suite_instances(seed=0, reps=5, sizes=SUITE_SIZES, families=SUITE_FAMILIES):
    """Yield ``(family, n, rep, instance_seed)`` for the whole grid."""
    cells = [(f, n, r) for f in families for n in sizes for r in range(reps)]
    for (family, n, rep), s in zip(cells, spawn_seeds(seed, len(cells))):
        yield family, n, rep, s


def run_instance(family, n, rep, seed, tol=1e-9):
    A, B, Q = make_instance(family, n, seed, rep)
    report = solve_sylvester(A, B, Q, tol=tol)
    X_ref = kron_solve(A, B, Q)
    rel_err = float(np.linalg.norm(report.X.data - X_ref.data) / np.linalg.norm(X_ref.data))
    quad = report.quadrature
    sep = report.separation
    wind_a = max(abs(winding_selfcheck(quad, z) - 1) for z in report.spectrum_A.values)
    wind_b = max(abs(winding_selfcheck(quad, z)) for z in report.spectrum_B.values)
    cert = certify(A, B, Q, report.X, AlgebraSpec("op"), IDENTITY_H, sep)
    ver = report.verification
    return {
        "family": family,
        "n": n,
        "rep": rep,
        "seed": seed,
        "normal": bool(report.spectrum_A.is_normal and report.spectrum_B.is_normal),
        "delta": sep.delta_cheb,
        "delta_eucl": sep.delta_eucl,
        "delta_prime": sep.delta_prime,
        "n0": sep.n0,
        "op_norm_A": op_norm(A),
        "converged": report.converged,
        "order_used": report.order_used,
        "n_segments": int(quad.segments.shape[0]),
        "residual_fro": report.residual_fro,
        "norm_Q_fro": Q.fro(),
        "rel_err_kron": rel_err,
        "domain": {
            "spectrum_in_d1": ver.spectrum_in_d1,
            "spectrum_in_window": ver.spectrum_in_window,
            "b_outside_d3": ver.b_outside_d3,
            "max_boundary_abs": ver.max_boundary_abs,
            "radius_bound": ver.radius_bound,
            "boundary_length": ver.boundary_length,
            "length_bound": ver.length_bound,
            "clearance_a": ver.clearance_a,
            "clearance_b": ver.clearance_b,
        },
        "resolvent_margin_A": resolvent_margin(quad, A),
        "resolvent_margin_B": resolvent_margin(quad, B),
        "winding_err_A": float(wind_a),
        "winding_err_B": float(wind_b),
        "certificate": cert.to_dict(),
    }


def run_suite(seed=0, reps=5, sizes=SUITE_SIZES, families=SUITE_FAMILIES,
              tol=1e-9, deterministic=False):
    """Run every instance and return a JSON-ready report."""
    start = time.perf_counter()
    rows = []
    for family, n, rep, s in suite_instances(seed, reps, sizes, families):
        t0 = time.perf_counter()
        row = run_instance(family, n, rep, s, tol)
        if not deterministic:
            row["elapsed_s"] = time.perf_counter() - t0
        rows.append(row)
    out = {
        "seed": seed,
        "tol": tol,
        "instances": rows,
        "summary": {
            "count": len(rows),
            "converged": sum(r["converged"] for r in rows),
            "max_rel_err_kron": max(r["rel_err_kron"] for r in rows),
            "certificates_passed": sum(r["certificate"]["pass"] for r in rows),
        },
    }
    if not deterministic:
        out["summary"]["elapsed_s"] = time.perf_counter() - start
    return out

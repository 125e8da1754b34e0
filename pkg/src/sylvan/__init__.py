"""Sylvester equations ``B X - X A = Q`` for normal matrices, solved by
contour quadrature over a grid-square Cauchy domain, with a-priori norm
bounds in Banach algebras of localized matrices."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .matrix import CMatrix, as_cmatrix, mat_apply, normality_residual, is_normal
from .norms import AlgebraSpec, DifferentialProbe, weight, algebra_norm, inclusion_check, differential_ratio
from .spectra import SpectrumSet, Separation, spectrum, separation, op_norm
from .domain import (GridDomain, Loop, DomainVerification, build_domain, trace_boundary,
                     verify_domain, winding_number, domain_svg)
from .oracle import kron_solve, eig_solve_normal
from .contour import (ContourQuadrature, NormControlFn, NormCertificate, SolveOptions,
                      SolveReport, IDENTITY_H, build_quadrature, winding_selfcheck,
                      contour_integral, resolvent_margin, solve_sylvester, solve_lyapunov,
                      monotonize, certify)
from .generators import GenSpec, generate, circulant

"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse error, 2 spectra overlap,
3 quadrature did not converge (the report is still written),
4 any other numerical failure (domain check, non-normal input to a
certificate, singular resolvent).
"""
import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .bench import SUITE_SIZES, run_suite
from .contour import SolveOptions, certify, solve_lyapunov, solve_sylvester
from .domain import build_domain, domain_svg, verify_domain
from .errors import QuadratureNotConverged, SpectraOverlap, SylvanError
from .generators import FAMILIES, GenSpec, generate
from .matrix import CMatrix, is_normal
from .norms import AlgebraSpec, algebra_norm, inclusion_check
from .oracle import eig_solve_normal, kron_solve
from .spectra import op_norm, separation, spectrum

EXIT_OK, EXIT_IO, EXIT_OVERLAP, EXIT_NOCONV, EXIT_NUMERIC = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _load(path):
    try:
        return CMatrix.from_json(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except ValueError as exc:
        raise InputError(f"cannot parse {path}: {exc}") from exc


def _emit(obj, path):
    text = json.dumps(obj, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {path}: {exc.strerror}") from exc


def _stamp(obj, args, started):
    if not args.deterministic:
        obj["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S%z")
        obj["elapsed_s"] = time.perf_counter() - started
    return obj


def _options(args):
    return SolveOptions(tol=args.tol, q0=args.q0, q_max=args.qmax,
                        certify=args.certify, spec=args.spec, h=args.h)


def _oracle_block(A, B, Q, X):
    ref = kron_solve(A, B, Q)
    out = {"kron_max_abs_dev": float(np.abs(X.data - ref.data).max()),
           "kron_rel_fro_dev": float(np.linalg.norm(X.data - ref.data)
                                     / max(np.linalg.norm(ref.data), 1e-300))}
    if is_normal(A) and is_normal(B):
        ref2 = eig_solve_normal(A, B, Q)
        out["eig_max_abs_dev"] = float(np.abs(X.data - ref2.data).max())
    return out


def _write_svg(report, path):
    svg = domain_svg(report.domain, report.spectrum_A, report.spectrum_B)
    try:
        Path(path).write_text(svg)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc


def _finish_solve(args, A, B, Q, solver, started):
    try:
        report = solver()
        code = EXIT_OK
    except QuadratureNotConverged as exc:
        report, code = exc.report, EXIT_NOCONV
        print(f"QuadratureNotConverged: {exc}", file=sys.stderr)
    out = {"command": args.command, "options": _options(args).to_dict()}
    out.update(report.to_dict())
    if args.oracle:
        out["oracle"] = _oracle_block(A, B, Q, report.X)
    if args.svg:
        _write_svg(report, args.svg)
    _emit(_stamp(out, args, started), args.out)
    return code


def cmd_gen(args, started):
    base = _load(args.base) if args.base else None
    spec = GenSpec(args.family, args.n, bandwidth=args.bandwidth,
                   decay_alpha=args.decay_alpha, shift=complex(args.shift.replace(" ", "")),
                   seed=args.seed, base=base, real=args.real, offset=args.offset)
    _emit(generate(spec).to_dict(), args.out)
    return EXIT_OK


def cmd_solve(args, started):
    A, B, Q = _load(args.A), _load(args.B), _load(args.Q)
    return _finish_solve(args, A, B, Q,
                         lambda: solve_sylvester(A, B, Q, _options(args)), started)


def cmd_lyapunov(args, started):
    A, Q = _load(args.A), _load(args.Q)
    B = CMatrix(-A.data.T, A.col_offset, A.row_offset)
    return _finish_solve(args, A, B, Q, lambda: solve_lyapunov(A, Q, _options(args)), started)


def cmd_norms(args, started):
    A = _load(args.A)
    gs, bgs, beur, ordered = inclusion_check(A, args.p, args.alpha)
    spec = AlgebraSpec("gs", args.p, args.alpha)
    out = {
        "command": "norms",
        "p": spec.to_dict()["p"],
        "alpha": spec.alpha,
        "admissible": spec.admissible,
        "gs": gs,
        "bgs": bgs,
        "beurling": beur,
        "op": algebra_norm(A, AlgebraSpec("op")),
        "ordering_pass": ordered,
    }
    _emit(_stamp(out, args, started), args.out)
    return EXIT_OK


def cmd_domain(args, started):
    A, B = _load(args.A), _load(args.B)
    sa, sb = spectrum(A), spectrum(B)
    op_a = op_norm(A)
    sep = separation(sa, sb, op_a)
    dom = build_domain(sa, sep)
    ver = verify_domain(dom, sa, sb, op_a, sep, check_clearance=sa.is_normal and sb.is_normal)
    if args.svg:
        svg = domain_svg(dom, sa, sb)
        try:
            Path(args.svg).write_text(svg)
        except OSError as exc:
            raise InputError(f"cannot write {args.svg}: {exc.strerror}") from exc
    out = {
        "command": "domain",
        "spectrum_A": sa.to_dict(),
        "spectrum_B": sb.to_dict(),
        "separation": sep.to_dict(),
        "domain": dom.summary(),
        "verification": ver.to_dict(),
    }
    _emit(_stamp(out, args, started), args.out)
    return EXIT_OK


def cmd_certify(args, started):
    A, B, Q = _load(args.A), _load(args.B), _load(args.Q)
    opts = _options(args)
    if args.X:
        X = _load(args.X)
        sep = separation(spectrum(A), spectrum(B), op_norm(A))
    else:
        report = solve_sylvester(A, B, Q, opts)
        X, sep = report.X, report.separation
    cert = certify(A, B, Q, X, opts.spec, opts.control_fn(), sep)
    out = {"command": "certify", "separation": sep.to_dict(), "certificate": cert.to_dict()}
    _emit(_stamp(out, args, started), args.out)
    return EXIT_OK


def cmd_bench(args, started):
    sizes = tuple(int(s) for s in args.sizes.split(","))
    out = run_suite(seed=args.seed, reps=args.reps, sizes=sizes, tol=args.tol,
                    deterministic=args.deterministic)
    out["command"] = "bench"
    _emit(_stamp(out, args, started), args.out)
    return EXIT_OK


def _spec_arg(text):
    try:
        return AlgebraSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _p_arg(text):
    return float("inf") if text.lower() in ("inf", "infinity") else float(text)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sylvan",
        description="Contour-integral Sylvester solver with localized-algebra norm certificates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="report path (default: stdout)")
        p.add_argument("--deterministic", action="store_true",
                       help="omit timestamps and timings from the report")

    def solve_opts(p):
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--q0", type=int, default=2)
        p.add_argument("--qmax", type=int, default=64)
        p.add_argument("--spec", type=_spec_arg, default=AlgebraSpec("op"),
                       help="algebra for the certificate, kind:p:alpha "
                            "with kind in gs|bgs|beurling|op")
        p.add_argument("--h", choices=["identity"], default="identity")
        p.add_argument("--certify", action="store_true")
        p.add_argument("--oracle", action="store_true",
                       help="cross-check against the direct solvers")
        p.add_argument("--svg", help="write the contour diagram here")

    p = sub.add_parser("gen", help="generate a structured normal matrix")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--bandwidth", type=int, default=0)
    p.add_argument("--decay-alpha", type=float, default=0.0)
    p.add_argument("--shift", default="0")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--real", action="store_true")
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--base", help="base matrix for shifted_copy")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen, deterministic=True)

    p = sub.add_parser("solve", help="solve B X - X A = Q")
    for name in ("--A", "--B", "--Q"):
        p.add_argument(name, required=True)
    solve_opts(p)
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("lyapunov", help="solve A^T X + X A + Q = 0")
    for name in ("--A", "--Q"):
        p.add_argument(name, required=True)
    solve_opts(p)
    common(p)
    p.set_defaults(func=cmd_lyapunov)

    p = sub.add_parser("norms", help="evaluate the three decay norms and their ordering")
    p.add_argument("--A", required=True)
    p.add_argument("--p", type=_p_arg, default=1.0)
    p.add_argument("--alpha", type=float, default=0.0)
    common(p)
    p.set_defaults(func=cmd_norms)

    p = sub.add_parser("domain", help="build and verify the grid domain")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--svg")
    common(p)
    p.set_defaults(func=cmd_domain)

    p = sub.add_parser("certify", help="evaluate the norm bound for the solution")
    for name in ("--A", "--B", "--Q"):
        p.add_argument(name, required=True)
    p.add_argument("--X", help="precomputed solution; solved if omitted")
    solve_opts(p)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("bench", help="run the seeded oracle-comparison suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--sizes", default=",".join(str(s) for s in SUITE_SIZES))
    p.add_argument("--tol", type=float, default=1e-9)
    common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_IO if exc.code else EXIT_OK
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SpectraOverlap as exc:
        print(f"SpectraOverlap: {exc}", file=sys.stderr)
        return EXIT_OVERLAP
    except SylvanError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""Grid-square Cauchy domains around the spectrum of A.

The complex plane is tiled by closed squares ``S[k, k']`` of side ``s``
centred at ``(k + 1j*k') * s``. Starting from the squares that meet the
spectrum of A (``d1``), two one-ring dilations give ``d2`` and ``d3``. The
contour is the boundary of the union of ``d2``; with ``s = delta / 3`` the
spectrum of B stays outside ``d3`` and every boundary point keeps a
Chebyshev clearance of at least ``s`` from both spectra.

Vertices are handled internally in doubled integer coordinates
(``2 * Re(z) / s``, ``2 * Im(z) / s``), which are always odd, so the tracing
is exact.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSpectrum, DomainInvalid
from .spectra import _values

__all__ = [
    "Loop",
    "GridDomain",
    "DomainVerification",
    "touching_cells",
    "dilate",
    "build_domain",
    "trace_boundary",
    "exposed_edge_count",
    "verify_domain",
    "winding_number",
    "domain_svg",
]

CELL_TOL = 1e-12
LENGTH_CONSTANT = 48.0

_NEIGHBOURS = [(dk, dl) for dk in (-1, 0, 1) for dl in (-1, 0, 1)]


@dataclass(frozen=True, eq=False)
class Loop:
    """Closed rectilinear polygon on the half-integer grid.

    ``grid`` lists the doubled integer coordinates of consecutive unit-edge
    endpoints; the edge from the last point back to the first closes it.
    """

    grid: np.ndarray
    side: float

    def __post_init__(self):
        g = np.array(self.grid, dtype=np.int64).reshape(-1, 2)
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)

    @property
    def points(self):
        return (self.grid[:, 0] + 1j * self.grid[:, 1]) * (self.side / 2)

    @property
    def unit_edges(self):
        """``(L, 2)`` complex array of ``(start, end)`` pairs, each of length ``side``."""
        p = self.points
        return np.stack([p, np.roll(p, -1)], axis=1)

    @property
    def vertices(self):
        """Corner vertices only (collinear points dropped)."""
        g = self.grid
        prev = g - np.roll(g, 1, axis=0)
        nxt = np.roll(g, -1, axis=0) - g
        cross = prev[:, 0] * nxt[:, 1] - prev[:, 1] * nxt[:, 0]
        corners = g[cross != 0]
        return (corners[:, 0] + 1j * corners[:, 1]) * (self.side / 2)

    @property
    def signed_area(self):
        x, y = self.grid[:, 0], self.grid[:, 1]
        twice = int(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))
        return twice / 2 * (self.side / 2) ** 2

    @property
    def ccw(self):
        return self.signed_area > 0

    @property
    def perimeter(self):
        return len(self.grid) * self.side

    def to_dict(self):
        return {
            "orientation": "ccw" if self.ccw else "cw",
            "vertices": [[float(z.real), float(z.imag)] for z in self.vertices],
            "perimeter": self.perimeter,
        }


@dataclass(frozen=True, eq=False)
class GridDomain:
    side: float
    d1: frozenset
    d2: frozenset
    d3: frozenset
    loops: tuple
    boundary_length: float

    def unit_edges(self):
        """All oriented boundary edges, loop by loop."""
        return np.concatenate([lp.unit_edges for lp in self.loops])

    def summary(self):
        return {
            "side": self.side,
            "cells_d1": len(self.d1),
            "cells_d2": len(self.d2),
            "cells_d3": len(self.d3),
            "boundary_length": self.boundary_length,
            "loops": [lp.to_dict() for lp in self.loops],
        }


@dataclass
class DomainVerification:
    spectrum_in_d1: bool
    spectrum_in_window: bool
    b_outside_d3: bool
    max_boundary_abs: float
    radius_bound: float
    boundary_length: float
    length_bound: float
    clearance_a: float | None
    clearance_b: float | None
    clearance_required: float
    warnings: list = field(default_factory=list)

    def to_dict(self):
        return dict(self.__dict__)


def touching_cells(z, side, tol=CELL_TOL):
    """Cells whose closed square contains ``z`` (up to ``tol * side``)."""
    x, y = z.real / side, z.imag / side
    ks = range(math.ceil(x - 0.5 - tol), math.floor(x + 0.5 + tol) + 1)
    ls = range(math.ceil(y - 0.5 - tol), math.floor(y + 0.5 + tol) + 1)
    return [(k, l) for k in ks for l in ls]


def dilate(cells):
    """Add every cell sharing an edge or a corner with ``cells``."""
    return frozenset((k + dk, l + dl) for k, l in cells for dk, dl in _NEIGHBOURS)


def build_domain(sa, sep):
    """Construct ``d1``, ``d2``, ``d3`` and the boundary of ``d2``.

    Parameters
    ----------
    sa : SpectrumSet or array_like
        Spectrum of A.
    sep : Separation
        Only ``sep.delta_prime`` (the cell side) is used.
    """
    vals = _values(sa)
    if vals.size == 0:
        raise DegenerateSpectrum("cannot build a domain around an empty spectrum")
    side = float(sep.delta_prime)
    d1 = frozenset(c for z in vals for c in touching_cells(z, side))
    d2 = dilate(d1)
    d3 = dilate(d2)
    loops = tuple(trace_boundary(d2, side))
    length = sum(lp.perimeter for lp in loops)
    return GridDomain(side, d1, d2, d3, loops, length)


def _cell_edges(cells):
    """Exposed edges of the union, oriented with the region on the left."""
    edges = []
    for k, l in sorted(cells):
        x0, x1, y0, y1 = 2 * k - 1, 2 * k + 1, 2 * l - 1, 2 * l + 1
        if (k, l - 1) not in cells:
            edges.append(((x0, y0), (x1, y0)))
        if (k + 1, l) not in cells:
            edges.append(((x1, y0), (x1, y1)))
        if (k, l + 1) not in cells:
            edges.append(((x1, y1), (x0, y1)))
        if (k - 1, l) not in cells:
            edges.append(((x0, y1), (x0, y0)))
    return edges


def exposed_edge_count(cells):
    return len(_cell_edges(frozenset(cells)))


def trace_boundary(cells, side):
    """Chain the exposed edges of a union of grid cells into closed loops.

    Outer loops come out counterclockwise and holes clockwise. Where two
    cells touch only at a corner, the walk turns left so that each loop
    stays simple; such loops share that single vertex.
    """
    cells = frozenset(cells)
    edges = _cell_edges(cells)
    outgoing = {}
    for e in edges:
        outgoing.setdefault(e[0], []).append(e)

    def successor(e):
        options = outgoing[e[1]]
        if len(options) == 1:
            return options[0]
        dx, dy = e[1][0] - e[0][0], e[1][1] - e[0][1]
        for o in options:
            ox, oy = o[1][0] - o[0][0], o[1][1] - o[0][1]
            if dx * oy - dy * ox > 0:
                return o
        raise AssertionError("no left turn at a pinch vertex")

    used = set()
    loops = []
    for start in sorted(edges):
        if start in used:
            continue
        chain = []
        e = start
        while e not in used:
            used.add(e)
            chain.append(e[0])
            e = successor(e)
        pts = np.array(chain, dtype=np.int64)
        first = min(range(len(pts)), key=lambda i: (pts[i, 0], pts[i, 1]))
        loops.append(Loop(np.roll(pts, -first, axis=0), side))
    return loops


def _cheb_to_segments(edges, pts):
    """Chebyshev distance from each point to the nearest axis-aligned segment."""
    if pts.size == 0:
        return math.inf
    a, b = edges[:, 0], edges[:, 1]
    xlo = np.minimum(a.real, b.real)[:, None]
    xhi = np.maximum(a.real, b.real)[:, None]
    ylo = np.minimum(a.imag, b.imag)[:, None]
    yhi = np.maximum(a.imag, b.imag)[:, None]
    px, py = pts.real[None, :], pts.imag[None, :]
    dx = np.maximum(0.0, np.maximum(xlo - px, px - xhi))
    dy = np.maximum(0.0, np.maximum(ylo - py, py - yhi))
    return float(np.maximum(dx, dy).min())


def verify_domain(dom, sa, sb, op_norm_A, sep, check_clearance=True, rtol=1e-12):
    """Check the containment, radius, length and clearance estimates.

    Returns a :class:`DomainVerification` record, or raises
    :class:`DomainInvalid` naming the first failed check.
    ``check_clearance=False`` skips the boundary-to-spectrum clearance test
    (used when A or B is not normal).
    """
    a, b = _values(sa), _values(sb)
    side = dom.side
    delta = sep.delta_cheb
    n0 = sep.n0

    for z in a:
        cells = touching_cells(z, side)
        if not any(c in dom.d1 for c in cells):
            raise DomainInvalid("spectrum_in_d1", f"eigenvalue {z} of A not covered by d1")
        if not any(abs(k) <= n0 and abs(l) <= n0 for k, l in cells):
            raise DomainInvalid("spectrum_in_window",
                                f"eigenvalue {z} of A outside the |k|, |k'| <= {n0} window")
    for z in b:
        # z is interior to the union only if every cell touching it belongs to d3
        if all(c in dom.d3 for c in touching_cells(z, side)):
            raise DomainInvalid("b_outside_d3", f"eigenvalue {z} of B lies inside d3")

    verts = np.concatenate([lp.vertices for lp in dom.loops])
    max_abs = float(np.abs(verts).max())
    radius_bound = op_norm_A + delta
    if max_abs > radius_bound * (1 + rtol):
        raise DomainInvalid("radius", f"boundary reaches |z| = {max_abs} > {radius_bound}")

    length_bound = LENGTH_CONSTANT * (op_norm_A + delta) ** 2 / delta
    if dom.boundary_length > length_bound * (1 + rtol):
        raise DomainInvalid("length", f"boundary length {dom.boundary_length} > {length_bound}")

    record = DomainVerification(
        spectrum_in_d1=True, spectrum_in_window=True, b_outside_d3=True,
        max_boundary_abs=max_abs, radius_bound=radius_bound,
        boundary_length=dom.boundary_length, length_bound=length_bound,
        clearance_a=None, clearance_b=None, clearance_required=side,
    )
    if not check_clearance:
        record.warnings.append("clearance check skipped: A or B is not normal")
        return record
    edges = dom.unit_edges()
    record.clearance_a = _cheb_to_segments(edges, a)
    record.clearance_b = _cheb_to_segments(edges, b)
    for name, value in (("clearance_a", record.clearance_a), ("clearance_b", record.clearance_b)):
        if value < side * (1 - rtol):
            raise DomainInvalid(name, f"Chebyshev clearance {value} < {side}")
    return record


def winding_number(loops, z):
    """Exact winding number of rectilinear loops about ``z``.

    Counts signed crossings of the vertical edges with the ray from ``z``
    towards ``+inf``. Raises ``ValueError`` if ``z`` lies on a loop.
    """
    if isinstance(loops, GridDomain):
        loops = loops.loops
    total = 0
    for lp in loops:
        e = lp.unit_edges
        if _cheb_to_segments(e, np.array([z])) == 0.0:
            raise ValueError(f"{z} lies on the contour")
        a, b = e[:, 0], e[:, 1]
        vertical = a.real == b.real
        lo = np.minimum(a.imag, b.imag)
        hi = np.maximum(a.imag, b.imag)
        hit = vertical & (a.real > z.real) & (lo <= z.imag) & (z.imag < hi)
        total += int(np.sum(np.sign(b.imag - a.imag)[hit]))
    return total


def domain_svg(dom, sa, sb, size=600):
    """Render the domain and both spectra as a standalone SVG string.

    Filled squares are the ``d2`` cells, strokes the oriented loops, dots the
    eigenvalues of A and crosses those of B.
    """
    a, b = _values(sa), _values(sb)
    s = dom.side
    margin = 3 * s
    ks = np.array(sorted(dom.d2), dtype=float)
    xs = np.concatenate([a.real, b.real, (ks[:, 0] - 0.5) * s, (ks[:, 0] + 0.5) * s])
    ys = np.concatenate([a.imag, b.imag, (ks[:, 1] - 0.5) * s, (ks[:, 1] + 0.5) * s])
    x0, x1 = xs.min() - margin, xs.max() + margin
    y0, y1 = ys.min() - margin, ys.max() + margin
    scale = size / max(x1 - x0, y1 - y0)

    def px(z):
        return (z.real - x0) * scale, (y1 - z.imag) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    w = s * scale
    for k, l in sorted(dom.d2):
        cx, cy = px(complex((k - 0.5) * s, (l + 0.5) * s))
        out.append(f'<rect x="{cx:.3f}" y="{cy:.3f}" width="{w:.3f}" height="{w:.3f}" '
                   f'fill="#cfe3f7" stroke="none"/>')
    for lp in dom.loops:
        pts = " ".join("{:.3f},{:.3f}".format(*px(z)) for z in lp.vertices)
        color = "#1f4e9c" if lp.ccw else "#b03a2e"
        out.append(f'<polygon points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
    r = max(2.0, 0.08 * w)
    for z in a:
        cx, cy = px(z)
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{r:.3f}" fill="black"/>')
    for z in b:
        cx, cy = px(z)
        out.append(f'<path d="M{cx - r:.3f},{cy - r:.3f}L{cx + r:.3f},{cy + r:.3f}'
                   f'M{cx - r:.3f},{cy + r:.3f}L{cx + r:.3f},{cy - r:.3f}" '
                   f'stroke="#c0392b" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Building a Cauchy domain from grid squares.

The plane is tiled by squares of side delta' = delta / 3, where delta is the
Chebyshev distance between the two spectra. Squares touching sigma(A) form
D1; dilating twice by the eight neighbours gives D2 and D3. The boundary of
D2 is a union of axis-parallel loops that encloses sigma(A) and keeps every
point of sigma(B) outside.
"""
from pathlib import Path

from sylvan import (build_domain, domain_svg, generate, GenSpec, op_norm, separation,
                    spectrum, verify_domain, winding_number)

A = generate(GenSpec("diagonal", 6, values=(0, 1, 1j, 3 + 3j, 3 + 2.5j, -2)))
B = generate(GenSpec("diagonal", 3, values=(1.5 + 1.5j, -4, 5)))

sa, sb = spectrum(A), spectrum(B)
sep = separation(sa, sb, op_norm(A))
print(f"delta (Chebyshev) = {sep.delta_cheb:.3f}, Euclidean = {sep.delta_eucl:.3f}")
print(f"grid side delta' = {sep.delta_prime:.3f}, window N0 = {sep.n0}")

dom = build_domain(sa, sep)
print(f"D1 {len(dom.d1)} cells, D2 {len(dom.d2)}, D3 {len(dom.d3)}")
for i, loop in enumerate(dom.loops):
    sense = "counter-clockwise" if loop.ccw else "clockwise (hole)"
    print(f"  loop {i}: {len(loop.unit_edges)} unit edges, {sense}")

ver = verify_domain(dom, sa, sb, op_norm(A), sep)
print(f"boundary length {ver.boundary_length:.2f} <= bound {ver.length_bound:.1f}")
print(f"max |z| on boundary {ver.max_boundary_abs:.2f} <= {ver.radius_bound:.2f}")
print(f"clearance to sigma(A) {ver.clearance_a:.3f}, to sigma(B) {ver.clearance_b:.3f}")

print("winding numbers:",
      [winding_number(dom, z) for z in sa.values], "|", [winding_number(dom, z) for z in sb.values])

out = Path(__file__).with_name("domain.svg")
out.write_text(domain_svg(dom, sa, sb))
print(f"diagram written to {out}")

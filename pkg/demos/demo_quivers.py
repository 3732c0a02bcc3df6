"""Build the three quiver views of one sequence and check they agree.

The block quiver lives on a window of integer positions; the lattice quiver
lives on (node, level) pairs; the map s -> (i_s, p_s) identifies them.  The
inter-column quiver shows the arrow pattern of the underlying height
function.  DOT output can be piped straight into graphviz.
"""

from iboxes.qdata import default_q_datum
from iboxes.quivers import check_gls_eq_hl, export_dot, gls_quiver, hl_quiver, psi_quiver
from iboxes.sequences import canonical_sequence

seq = canonical_sequence("B2")
print("type B2, one period:", list(zip(seq.period_i, seq.period_p)))

window = (-6, 6)
block = gls_quiver(seq, *window)
print(f"\nblock quiver on {window}: {len(block.vertices)} vertices, {len(block.arrows)} arrows")
for s, t in block.arrows[:6]:
    print(f"    {s} -> {t}   (colors {seq.i(s)} -> {seq.i(t)})")

verts = [seq.pair(k) for k in range(window[0], window[1] + 1)]
lattice = hl_quiver(seq.datum, verts)
print(f"lattice quiver on the image: {len(lattice.arrows)} arrows")

print("\nagreement on [-20, 20]:", check_gls_eq_hl(seq, -20, 20))

q = default_q_datum("B2")
print("\ninter-column quiver of the default heights, levels [-8, 0]:")
print(export_dot(psi_quiver(q, -8, 0), label=lambda v: f"({v[0]},{v[1]})"))

"""
Lambert sheets and the strength cone
====================================

Stack the Lambert lines along R and cut with the cone R = |w|.  Each cut is
the line itself with its radius attached; its lowest point is a critical
strength.
"""

from pathlib import Path

from welllines import intersection_curves
from welllines.export import figure

curves = intersection_curves(8.7)
for c in curves:
    u, v, R = c.minimum()
    print(f"{str(c.spec):15s} lowest point u={u:+.6f} v={v:.6f} R={R:.6f}")

out = Path("demo_out")
out.mkdir(exist_ok=True)
for view in "abcd":
    path = out / f"figure11{view}.svg"
    path.write_text(figure(f"11{view}").draw())
    print("wrote", path)

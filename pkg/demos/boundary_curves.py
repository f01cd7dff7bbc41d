"""Write the two region boundaries in both coordinate systems.

d0 separates holes with only fixed points from the rest, d1 separates
countable survivor sets from positive dimension.  In (u, v) = (a + b,
1/4 + b - a) the picture is symmetric about u = 1.
"""
import sys
from pathlib import Path

from doubling_holes.survivor import boundary_curves, write_points_csv

out = Path(sys.argv[1] if len(sys.argv) > 1 else "boundary_out")
out.mkdir(exist_ok=True)
for coords in ("ab", "uv"):
    curves = boundary_curves(7, 2, coords=coords, inner_q_max=4)
    for name, pts in curves.items():
        path = out / f"{name}_{coords}.csv"
        write_points_csv(path, pts, coords=coords)
        lo, hi = pts[0], pts[-1]
        print(f"{path}: {len(pts)} points from ({float(lo[0]):.4f}, {float(lo[1]):.4f})"
              f" to ({float(hi[0]):.4f}, {float(hi[1]):.4f})")

"""Shrink the hole along the renormalisation tower and count the cycles.

Each level of the tower adds one period to the list of surviving cycles:
a hole inside the plateau rectangle of (r_1, ..., r_n) keeps exactly the
periods Q_1, Q_2, ..., Q_n.  Once the hole is narrower than the SOCH the
number of periodic orbits grows exponentially.
"""
from fractions import Fraction as R

from doubling_holes.sturmian import q_products
from doubling_holes.survivor import Hole, cycle_census, growth_rate
from doubling_holes.survivor import interior_hole, route_chaos_rectangle

tower = [(R(1, 2),), (R(1, 2), R(1, 3)), (R(1, 2), R(1, 3), R(1, 2)), (R(2, 5), R(1, 2))]

for v in tower:
    a_lo, a_hi, b_lo, b_hi = route_chaos_rectangle(v)
    h = interior_hole(v)
    census = cycle_census(h, q_products(v)[-1] + 2)
    print(f"v = {tuple(str(r) for r in v)}")
    print(f"  a in ({float(a_lo):.6f}, {float(a_hi):.6f}), b in ({float(b_lo):.6f}, {float(b_hi):.6f})")
    print(f"  hole ({float(h.a):.6f}, {float(h.b):.6f}) keeps periods {sorted(census.periods)}"
          f" (Q = {q_products(v)})")

print()
print("growth of periodic points, N_p for p = 1..16")
for b in (R(2, 3), R(3, 5), R(59, 100), R(7, 12), R(57, 100), R(11, 20)):
    g = growth_rate(Hole(R(1, 3), b), 16)
    print(f"  (1/3, {b}): slope {g.slope:.3f}  N = {list(g.counts.values())}")

"""The IFS F_r, the Thue-Morse point and the dimension of the attractor.

F_r replaces 0 and 1 by the two extremal words of rotation number r.
Iterating F_{1/2} on 0 gives the Thue-Morse sequence; its value a* is the
point where the SOCH is shortest, with length 1 - 2a*.
"""
from fractions import Fraction as R
from itertools import repeat

from doubling_holes.ifs import apply_F, attractor_dimension, dimension_sum, measure_identity_check, phi_limit
from doubling_holes.thresholds import min_soch_length
from doubling_holes.words import inf

x = inf("0")
for _ in range(4):
    x = apply_F(R(1, 2), x)
    print(f"F_1/2 ... (0^inf) = {x}")

lo, hi = phi_limit(repeat(R(1, 2)), 0, R(1, 10**12))
print(f"a* in [{float(lo):.12f}, {float(hi):.12f}]")
c_lo, c_hi = min_soch_length()
print(f"1 - 2a* in [{float(c_lo):.12f}, {float(c_hi):.12f}]")

print()
for q in (2, 3, 5, 10, 40):
    partial, tail = measure_identity_check(q)
    print(f"sum phi(q)/(2^q-1) up to {q:2d}: {float(partial):.12f} (tail <= {float(tail):.1e})")

print()
for s in (R(2, 5), R(1, 2)):
    f_lo, f_hi = dimension_sum(s)
    print(f"sum phi(q) 4^(-q s) at s = {s}: [{float(f_lo):.9f}, {float(f_hi):.9f}]")
sol = attractor_dimension(R(1, 10**9))
print(f"dim of the attractor: {sol}")

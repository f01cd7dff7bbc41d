"""Walk the left endpoint across (1/4, 1/2) and watch the thresholds.

For each a we print phi (beyond it only the fixed points survive), chi
(beyond it the survivor set is countable) and psi, together with the
critical holes they define.  Points where a plateau starts or ends are the
interesting ones, so the samples include a few exact words.
"""
from fractions import Fraction

from doubling_holes import chi, foch_classify, locate, phi, psi, soch_classify
from doubling_holes.cli import parse_exact


def show(th):
    if th.is_exact:
        return f"{th.lo} ({float(th.lo):.6f})"
    return f"~{float(th.lo):.6f}..{float(th.hi):.6f}"


samples = ["0.(01)", "0.01(10)", "1/3", "0.0110(01)", "19/48", "3/8", "0.(011)", "0.4", "0.412454", "0.45"]

for text in samples:
    a = parse_exact(text)
    print(f"a = {text}  ({float(a):.6f})")
    print(f"  address : {locate(a)}")
    print(f"  phi     : {show(phi(a))}")
    print(f"  chi     : {show(chi(a))}")
    print(f"  psi     : {show(psi(a))}")
    f, s = foch_classify(a), soch_classify(a)
    print(f"  FOCH b  : [{f.lo}, {f.hi}] ({f.kind})" if f.lo != f.hi else f"  FOCH b  : {f.lo}")
    print(f"  SOCH b  : [{s.lo}, {s.hi}] ({s.kind})" if s.lo != s.hi else f"  SOCH b  : {s.lo}")
    print()

# the gap b - chi(a) never drops below 1 - 2a*, reached at the Thue-Morse point
a = Fraction("0.412454")
c = chi(a)
print(f"chi(a) - a near the Thue-Morse constant: {float(c.lo - a):.6f}")

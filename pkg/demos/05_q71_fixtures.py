"""Two dimension-6 matrices over q = 71 given only as exponents.

The exponents refer to an unnamed generator of the norm-one group, so each
of the 24 generators u**k with gcd(k, 72) = 1 is tried.
"""

from __future__ import annotations

from finmub.constructions import dardo71_report

rows = dardo71_report()
for r in rows:
    flags = ["H1" if r["H1_hadamard"] else "", "D0" if r["D0_hadamard"] else "", "MU" if r["mutually_unbiased"] else ""]
    print(f"k={r['k']:2d}: {' '.join(f for f in flags if f) or '-'}")
print("generators making the pair unbiased:", [r["k"] for r in rows if r["mutually_unbiased"]])

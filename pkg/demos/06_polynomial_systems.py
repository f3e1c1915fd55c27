"""The defining polynomial system and its zeros.

Each entry becomes x + iota*y with iota**2 = c, giving integer polynomials:
entry norms (type I), orthogonality (type II) and unbiasedness (type III).
A search witness converted to (x, y) coordinates is an exact zero.
"""

from __future__ import annotations

from finmub import search_full
from finmub.polysys import evaluate_system, generate_system, mubset_assignment

sysm = generate_system(2, 2, -1)
lines = sysm.to_text().splitlines()
print("\n".join(lines[:4] + lines[9:11]), "\n...")

big = generate_system(6, 3)
print("d=6, three bases:", big.counts(), "in", len(big.variables), "variables")

rep = search_full(2, 7)
w = rep.witnesses[0]
vals, c = mubset_assignment(w)
res = evaluate_system(generate_system(2, len(w.bases), c), vals, w.ctx)
print(f"d=2 q=7 witness with c={c}: max residual {max(res)}")

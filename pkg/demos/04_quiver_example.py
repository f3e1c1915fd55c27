"""Three bases and four extra vectors in dimension 6 over a number field.

The entries live in Q(i, sqrt6, sqrt3) and the Hermitian form uses the
involution that negates sqrt3 only, so norms are real-algebraic rather than
absolute values.  The check is exact; reduction modulo q = 5 mod 12 then
gives a finite-field set accepted by the same verifier as search output.
"""

from __future__ import annotations

from finmub import verify_mub_set
from finmub.nfield import SQRT3, nf_norm, quiver_set, reduce_mod, verify_quiver_char0

print("N(sqrt3) =", nf_norm(SQRT3), " N(2 - sqrt3) =", nf_norm(2 - SQRT3))

B1, B2, V = quiver_set()
print("B1[1][1] =", B1[1][1])

rep = verify_quiver_char0()
print(rep.summary())

for q in (5, 17, 29, 41, 53):
    red = reduce_mod(q)
    print(f"q={q}: {red.size} bases + {red.n_extras} vectors, verified={verify_mub_set(red).passed}")

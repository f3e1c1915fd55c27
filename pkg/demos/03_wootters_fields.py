"""Complete sets in prime-power dimension and their tensor products.

The Wootters-Fields bases need a primitive l-th root of unity inside the
norm-one group, so q = -1 mod l**k.  When sqrt(l**k) is not in F_q the scale
factor is multiplied by an element of norm -1 to keep it unitary.
"""

from __future__ import annotations

from finmub import verify_mub_set
from finmub.constructions import WfParams, admissible_q, tensor_mubs, wf_mubs, wf_needs_twist
from finmub.gf import build_field, prime_power

for l, k, q in [(2, 1, 3), (3, 1, 5), (2, 2, 7), (5, 1, 19), (7, 1, 13), (3, 2, 17)]:
    params = WfParams(l, k, build_field(*prime_power(q)))
    mubs = wf_mubs(params)
    rep = verify_mub_set(mubs)
    print(f"d={params.d} q={q}: {mubs.size} bases, twist={wf_needs_twist(params)}, verified={rep.passed}")

# the tensor product pairs bases, so dimension 6 over q = 11 gets 3
ctx = build_field(11)
T = tensor_mubs(wf_mubs(WfParams(2, 1, ctx)), wf_mubs(WfParams(3, 1, ctx)))
print(f"tensor d=6 over q=11: {T.size} bases, verified={verify_mub_set(T).passed}")

print("q admissible for d=6 up to 100:", [p**r for p, r in admissible_q(6, 100)])

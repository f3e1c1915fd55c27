"""Arithmetic in F_{q^2} and the unitary geometry it carries.

Frobenius x -> x**q plays the part of complex conjugation, the norm
x**(q+1) lands in F_q, and the elements of norm one form a cyclic group of
order q+1 that stands in for the unit circle.
"""

from __future__ import annotations

import numpy as np

from finmub.gf import build_field, frobenius, inv_d, norm, solve_norm

ctx = build_field(7)  # F_49 over F_7
print(f"F_{ctx.q}^2 has {ctx.order + 1} elements; generator index {ctx.gamma}")

# conjugation is an involution fixing exactly the subfield F_7
xs = np.arange(ctx.q**2)
print("fixed points of Frobenius:", int(np.sum(frobenius(ctx, xs) == xs)))

# the norm-one group
U = ctx.norm_one_group()
print(f"|U| = {len(U)}, all of norm 1: {bool(np.all(norm(ctx, U) == 1))}")

# delta scales every entry of a basis unbiased to the standard one
for d in (2, 3, 6):
    delta = solve_norm(ctx, inv_d(ctx, d))
    print(f"d={d}: delta = {delta} (dlog {int(ctx.log[delta])}), N(delta) * d = {ctx.mul(norm(ctx, delta), d)}")

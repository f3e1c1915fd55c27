from __future__ import annotations

from finmub.gf import build_field, prime_power


def field(q: int):
    p, r = prime_power(q)
    return build_field(p, r)

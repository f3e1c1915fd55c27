"""Published search results embedded as regression data.

Table 1 lists ``(M_6, nu_6)`` for ``q <= 53``, Table 2 gives congruence rules
for ``d <= 5`` (with ``nu = 0`` whenever ``M > 1``) and Table 3 lists
``(M_7, nu_7)`` for nine values of ``q``.  ``nu`` is taken to be 0 when
``M = 1``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd

from .gf import prime_power

__all__ = ["TABLE1", "TABLE3", "table2_expected", "Cell", "expected_cells", "DEFAULT_MAX_Q", "run_table"]

TABLE1: dict[int, tuple[int, int]] = {
    5: (3, 4),
    7: (3, 0),
    11: (3, 0),
    13: (2, 2),
    17: (3, 4),
    19: (3, 0),
    23: (3, 0),
    25: (2, 4),
    29: (3, 4),
    31: (3, 0),
    37: (2, 2),
    41: (3, 4),
    43: (3, 0),
    47: (3, 0),
    49: (2, 2),
    53: (3, 4),
}

TABLE3: dict[int, tuple[int, int]] = {
    2: (4, 3),
    3: (8, 0),
    4: (1, 0),
    5: (2, 3),
    8: (4, 3),
    9: (3, 0),
    11: (3, 0),
    13: (8, 0),
    17: (2, 3),
}

# ranges over which the Table 2 rules were established
TABLE2_RANGE = {2: None, 3: None, 4: 239, 5: 121}

# default q bounds used for desk-scale reproduction
DEFAULT_MAX_Q = {1: 13, 2: {2: 97, 3: 49, 4: 7, 5: 19}, 3: 5}


def _is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except ValueError:
        return False
    return True


def table2_expected(d: int, q: int) -> tuple[int, int] | None:
    """``(M, nu)`` predicted by the d <= 5 rules, or None outside their scope."""
    if not _is_prime_power(q) or gcd(d, q) != 1:
        return None
    bound = TABLE2_RANGE.get(d, 0)
    if d not in TABLE2_RANGE or (bound is not None and q > bound):
        return None
    if d == 2:
        M = 3 if q % 4 == 3 else 2
    elif d == 3:
        M = 4 if q % 3 == 2 else 1
    elif d == 4:
        M = 5 if q % 4 == 3 else 3
    else:
        if q == 2:
            M = 4
        elif q % 5 == 4:
            M = 6
        elif q % 5 == 1:
            M = 1
        else:
            M = 3
    return M, 0


@dataclass(frozen=True)
class Cell:
    d: int
    q: int
    M: int
    nu: int


def expected_cells(table: int, max_q: int | None = None) -> list[Cell]:
    """Cells of ``table`` with ``q <= max_q`` (per-table defaults if None)."""
    if table == 1:
        top = DEFAULT_MAX_Q[1] if max_q is None else max_q
        return [Cell(6, q, *v) for q, v in TABLE1.items() if q <= top]
    if table == 3:
        top = DEFAULT_MAX_Q[3] if max_q is None else max_q
        return [Cell(7, q, *v) for q, v in TABLE3.items() if q <= top]
    if table == 2:
        out = []
        for d in (2, 3, 4, 5):
            top = DEFAULT_MAX_Q[2][d] if max_q is None else max_q
            for q in range(2, top + 1):
                exp = table2_expected(d, q)
                if exp is not None:
                    out.append(Cell(d, q, *exp))
        return out
    raise ValueError(f"unknown table {table}")


def run_table(table: int, max_q: int | None = None, threads: int = 1, progress=None):
    """Search every cell and compare.  Yields ``(cell, (M, nu), seconds)``."""
    from .search import search_full

    for cell in expected_cells(table, max_q):
        t0 = time.perf_counter()
        rep = search_full(cell.d, cell.q, threads=threads)
        if progress is not None:
            progress(f"d={cell.d} q={cell.q} done in {time.perf_counter() - t0:.1f}s")
        yield cell, (rep.M, rep.nu), time.perf_counter() - t0

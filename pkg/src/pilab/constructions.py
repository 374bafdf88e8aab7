"""Standard algebras by structure constants."""

from __future__ import annotations

import itertools

from .exactalg import Algebra, make_algebra
from .linalg import ONE, ZERO


def _zeros(n):
    return [[[ZERO] * n for _ in range(n)] for _ in range(n)]


def matrix_units(k: int) -> list[tuple[int, int]]:
    return [(r, c) for r in range(k) for c in range(k)]


def matrix_algebra(k: int) -> Algebra:
    """M_k on matrix units e_rc in row-major order."""
    units = matrix_units(k)
    idx = {u: i for i, u in enumerate(units)}
    n = len(units)
    mult = _zeros(n)
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                mult[i][j][idx[(a, d)]] = ONE
    unit = [ONE if r == c else ZERO for r, c in units]
    return make_algebra(n, mult, unit, [f"e{r + 1}{c + 1}" for r, c in units])


def upper_triangular(k: int) -> Algebra:
    """UT_k on matrix units e_rc, r <= c, in row-major order."""
    units = [(r, c) for r in range(k) for c in range(r, k)]
    idx = {u: i for i, u in enumerate(units)}
    n = len(units)
    mult = _zeros(n)
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                mult[i][j][idx[(a, d)]] = ONE
    unit = [ONE if r == c else ZERO for r, c in units]
    return make_algebra(n, mult, unit, [f"e{r + 1}{c + 1}" for r, c in units])


def field_power(m: int) -> Algebra:
    """F e_1 + ... + F e_m with orthogonal idempotents."""
    mult = _zeros(m)
    for i in range(m):
        mult[i][i][i] = ONE
    return make_algebra(m, mult, [ONE] * m, [f"e{i + 1}" for i in range(m)])


def direct_sum(*parts: Algebra) -> Algebra:
    n = sum(p.dim for p in parts)
    mult = _zeros(n)
    unit = []
    labels = []
    off = 0
    has_unit = all(p.unit is not None for p in parts)
    for s, p in enumerate(parts):
        for i, j, k in itertools.product(range(p.dim), repeat=3):
            c = p.mult[i][j][k]
            if c:
                mult[off + i][off + j][off + k] = c
        if has_unit:
            unit.extend(p.unit)
        labels.extend(f"{lab}^({s + 1})" for lab in p.labels)
        off += p.dim
    return make_algebra(n, mult, unit if has_unit else None, labels)


def group_algebra_of(table, labels=None) -> Algebra:
    n = len(table)
    mult = _zeros(n)
    for g in range(n):
        for h in range(n):
            mult[g][h][table[g][h]] = ONE
    ident = next(e for e in range(n) if all(table[e][g] == g for g in range(n)))
    unit = [ONE if g == ident else ZERO for g in range(n)]
    return make_algebra(n, mult, unit, labels or [f"g{g}" for g in range(n)])

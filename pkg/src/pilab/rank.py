"""Exact rank and reduced row echelon form of integer matrices.

The evaluation matrices are tall, sparse and highly redundant.  Before any
elimination we drop zero columns, merge columns that are multiples of an
earlier column, drop repeated rows, and split the matrix into connected
blocks of its row/column support graph.  Each block is reduced by
fraction-free (Bareiss) elimination on Python integers.

Merging a column into an earlier proportional one never moves a pivot of
the canonical RREF, so the canonical form over all columns is recoverable
from the reduced one (see ``ReducedColumns``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


def _as_object(m: np.ndarray) -> np.ndarray:
    if m.dtype == object:
        return m
    return np.array(m.tolist(), dtype=object).reshape(m.shape)


def _normalize_lines(m: np.ndarray):
    """Scale each row of m to content 1 with a positive leading entry.

    Returns (normalized rows, scale per row, nonzero mask).
    """
    if m.shape[1] == 0:
        return m, np.ones(m.shape[0], dtype=m.dtype), np.zeros(m.shape[0], dtype=bool)
    nz = m != 0
    keep = nz.any(axis=1)
    g = np.gcd.reduce(m, axis=1)
    g = np.where(keep, g, 1)
    first = nz.argmax(axis=1)
    lead = m[np.arange(m.shape[0]), first]
    sign = np.where(lead < 0, -1, 1)
    scale = g * sign
    if m.dtype == object:
        scale = scale.astype(object)
    return m // scale[:, None], scale, keep


def _dedupe(rows: np.ndarray, keep: np.ndarray):
    """Index of the first occurrence of each distinct kept row, and the map
    from every row to its representative position (-1 when dropped)."""
    first: dict = {}
    rep = np.full(rows.shape[0], -1, dtype=np.int64)
    order = []
    obj = rows.dtype == object
    for i in range(rows.shape[0]):
        if not keep[i]:
            continue
        key = tuple(rows[i]) if obj else rows[i].tobytes()
        j = first.get(key)
        if j is None:
            j = len(order)
            first[key] = j
            order.append(i)
        rep[i] = j
    return np.array(order, dtype=np.int64), rep


@dataclass
class ReducedColumns:
    """Column reduction data: original column c equals scale[c] times
    kept column rep[c] (rep[c] = -1 for zero columns)."""

    ncols: int
    kept: np.ndarray  # original index of each kept column, increasing
    rep: np.ndarray
    scale: np.ndarray


def reduce_columns(m: np.ndarray) -> tuple[np.ndarray, ReducedColumns]:
    norm_t, scale, keep = _normalize_lines(m.T)
    order, rep = _dedupe(norm_t, keep)
    reduced = np.ascontiguousarray(norm_t[order].T) if order.size else np.zeros((m.shape[0], 0), dtype=m.dtype)
    return reduced, ReducedColumns(m.shape[1], order, rep, scale)


def reduce_rows(m: np.ndarray) -> np.ndarray:
    norm, _, keep = _normalize_lines(m)
    order, _ = _dedupe(norm, keep)
    return norm[order]


def blocks(m: np.ndarray) -> list[tuple[np.ndarray, np.ndarray]]:
    """Connected blocks of the support graph as (row indices, column indices)."""
    r, c = m.shape
    if r == 0 or c == 0:
        return []
    ri, ci = np.nonzero(m != 0)
    g = coo_matrix((np.ones(ri.size, dtype=np.int8), (ri, ci + r)), shape=(r + c, r + c))
    _, labels = connected_components(g, directed=False)
    out: dict[int, tuple[list, list]] = {}
    for i in range(r):
        out.setdefault(labels[i], ([], []))[0].append(i)
    for j in range(c):
        out.setdefault(labels[r + j], ([], []))[1].append(j)
    res = []
    for lab in sorted(out, key=lambda k: min(out[k][1]) if out[k][1] else c + min(out[k][0])):
        rows, cols = out[lab]
        if rows and cols:
            res.append((np.array(rows), np.array(cols)))
    return res


def bareiss_echelon(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Fraction-free row echelon form; pivot = first row with a nonzero entry."""
    a = _as_object(m).copy()
    nrows, ncols = a.shape
    prev = 1
    r = 0
    piv: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nzi = np.flatnonzero(col != 0)
        if nzi.size == 0:
            continue
        p = r + int(nzi[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        pv = a[r, c]
        if r + 1 < nrows:
            below = a[r + 1:, c:]
            f = below[:, :1].copy()
            a[r + 1:, c:] = (below * pv - f * a[r, c:]) // prev
        prev = pv
        piv.append(c)
        r += 1
    return a[:r], piv


def integer_rank(m: np.ndarray) -> int:
    red, _ = reduce_columns(m)
    red = reduce_rows(red)
    return sum(len(bareiss_echelon(red[np.ix_(rs, cs)])[1]) for rs, cs in blocks(red))


def rref_from_echelon(e: np.ndarray, piv: list[int]) -> list[dict[int, Fraction]]:
    """Back-substitute an integer echelon form to sparse canonical RREF rows."""
    a = _as_object(e).copy()
    r = len(piv)
    for k in range(r - 1, 0, -1):
        p = piv[k]
        f = a[:k, p]
        mask = f != 0
        if not mask.any():
            continue
        idx = np.flatnonzero(mask)
        sub = a[idx] * a[k, p] - np.outer(f[idx], a[k])
        g = np.gcd.reduce(sub, axis=1)
        g = np.where(g == 0, 1, g)
        a[idx] = sub // g[:, None]
    out = []
    for k in range(r):
        lead = a[k, piv[k]]
        out.append({int(j): Fraction(int(a[k, j]), int(lead)) for j in np.flatnonzero(a[k] != 0)})
    return out


@dataclass
class RowSpace:
    """Canonical RREF basis of the row space of an integer matrix.

    ``rows`` are sparse dicts over kept-column positions (see ``columns``);
    ``pivots`` are kept-column positions, increasing.
    """

    rank: int
    rows: list
    pivots: list
    columns: ReducedColumns

    def entry(self, k: int, col: int) -> Fraction:
        """Row k at an original column index."""
        j = int(self.columns.rep[col])
        if j < 0:
            return Fraction(0)
        v = self.rows[k].get(j)
        if v is None:
            return Fraction(0)
        return v * int(self.columns.scale[col])

    def pivot_columns(self) -> list[int]:
        return [int(self.columns.kept[p]) for p in self.pivots]

    def dense_row(self, k: int) -> list[Fraction]:
        return [self.entry(k, c) for c in range(self.columns.ncols)]


def row_space(m: np.ndarray, with_basis: bool = True) -> RowSpace:
    red, cols = reduce_columns(m)
    red = reduce_rows(red)
    found = []
    total = 0
    for rs, cs in blocks(red):
        e, piv = bareiss_echelon(red[np.ix_(rs, cs)])
        total += len(piv)
        if with_basis and piv:
            for row in rref_from_echelon(e, piv):
                lead = min(row)
                found.append((int(cs[lead]), {int(cs[j]): v for j, v in row.items()}))
    found.sort(key=lambda t: t[0])
    if with_basis:
        # rows expressed on kept columns, in units where kept column = normalized column;
        # rescale so that entry(k, original col) is the true RREF entry.
        rows = []
        piv = []
        for p, row in found:
            orig = int(cols.kept[p])
            s = int(cols.scale[orig])
            # kept column p of the normalized matrix is original column / s,
            # so a true RREF row has value 1 at the original pivot column
            rows.append({j: v / s for j, v in row.items()})
            piv.append(p)
        return RowSpace(total, rows, piv, cols)
    return RowSpace(total, [], [], cols)

"""Exact linear algebra over the rationals.

Vectors are tuples of ``Fraction``; matrices are lists of rows.  Linear maps
act on column coordinate vectors, so column ``i`` of a map's matrix is the
image of basis vector ``i``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple
Matrix = list


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        num, _, den = x.strip().partition("/")
        if den and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {x!r}")
        return Fraction(int(num), int(den) if den else 1)
    return Fraction(x)


def vec(xs: Iterable) -> Vector:
    return tuple(frac(x) for x in xs)


def zeros(m: int, n: int) -> Matrix:
    return [[ZERO] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(s, v: Sequence) -> Vector:
    return tuple(s * a for a in v)


def combo(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return tuple(out)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a)


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


def matrix_from_columns(cols: Sequence[Sequence]) -> Matrix:
    return [list(r) for r in zip(*cols)]


def columns(a: Matrix) -> list[Vector]:
    return [tuple(c) for c in zip(*a)]


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return all(tuple(r) == tuple(s) for r, s in zip(a, b)) and len(a) == len(b)


def rref(rows: Iterable[Sequence], ncols: int | None = None) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form with deterministic pivoting.

    Pivot search scans columns left to right and takes the first row (in
    current order) holding a nonzero entry.  Zero rows are dropped.
    """
    m = [list(map(frac, r)) for r in rows]
    if not m:
        return [], []
    n = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], row)]
        pivots.append(c)
        r += 1
    return [tuple(m[i]) for i in range(r)], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[0])


def nullspace(a: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}, one vector per free column, in column order."""
    n = len(a[0]) if a else (ncols or 0)
    if ncols is not None:
        n = ncols
    red, piv = rref(a, n) if a else ([], [])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Matrix, b: Sequence, ncols: int | None = None) -> Vector | None:
    """One solution of a x = b (free variables set to 0), or None."""
    n = len(a[0]) if a else (ncols or 0)
    if ncols is not None:
        n = ncols
    aug = [list(r) + [frac(y)] for r, y in zip(a, b)]
    red, piv = rref(aug, n + 1)
    if piv and piv[-1] == n:
        return None
    x = [ZERO] * n
    for row, p in zip(red, piv):
        x[p] = row[n]
    return tuple(x)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(r) + list(e) for r, e in zip(a, identity(n))]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [list(r[n:]) for r in red]


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [list(map(frac, r)) for r in a]
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


class Subspace:
    """A subspace of F^n stored in canonical reduced row echelon form.

    Equal subspaces have identical ``basis`` tuples, so ``==`` and ``hash``
    are structural.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vs = [v for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        red, piv = rref(vs, ambient_dim) if vs else ([], [])
        self.ambient_dim = ambient_dim
        self.basis: tuple[Vector, ...] = tuple(red)
        self.pivots: tuple[int, ...] = tuple(piv)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def span_of_units(cls, n: int, idx: Iterable[int]) -> "Subspace":
        return cls(n, [unit_vector(n, i) for i in idx])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        rows = ["[" + " ".join(str(x) for x in r) + "]" for r in self.basis]
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, {', '.join(rows)})"

    def is_zero(self) -> bool:
        return not self.basis

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of v after eliminating the pivot coordinates."""
        w = list(map(frac, v))
        for row, p in zip(self.basis, self.pivots):
            if w[p]:
                f = w[p]
                w = [x - f * y for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of v in the canonical basis; raises if v is outside."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(frac(v[p]) for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x in both: x = sum a_i u_i = sum b_j v_j
        if self.is_zero() or other.is_zero():
            return Subspace(self.ambient_dim)
        cols = list(self.basis) + [scale(-1, v) for v in other.basis]
        a = matrix_from_columns(cols)
        ker = nullspace(a, len(cols))
        k = self.dim
        return Subspace(
            self.ambient_dim,
            [combo(z[:k], self.basis, self.ambient_dim) for z in ker],
        )

    def complement_units(self) -> list[int]:
        """Indices of standard basis vectors spanning a complement (non-pivots)."""
        return [i for i in range(self.ambient_dim) if i not in self.pivots]

    def image(self, m: Matrix) -> "Subspace":
        return Subspace(self.ambient_dim, [matvec(m, v) for v in self.basis])

    def is_invariant(self, m: Matrix) -> bool:
        return all(self.contains(matvec(m, v)) for v in self.basis)


class SparseEchelon:
    """Incremental fraction-free row echelon form over the integers.

    Rows are dicts ``column -> int``.  Each stored row is primitive (content
    1) with a positive leading entry.  Rows are reduced in arrival order, so
    the result depends only on the input order.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, row: dict[int, int]) -> bool:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            piv = self.rows.get(lead)
            if piv is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if r[lead] < 0:
                    g = -g
                self.rows[lead] = {c: v // g for c, v in r.items()}
                return True
            a = piv[lead]
            b = r[lead]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {}
            for c, v in r.items():
                new[c] = v * ma
            for c, v in piv.items():
                x = new.get(c, 0) - v * mb
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            r = new
        return False

    def rref(self) -> tuple[list[dict[int, Fraction]], list[int]]:
        """Canonical reduced form as sparse Fraction rows, ordered by pivot."""
        piv = sorted(self.rows)
        out: dict[int, dict[int, Fraction]] = {}
        for p in reversed(piv):
            lead = self.rows[p][p]
            row = {c: Fraction(v, lead) for c, v in self.rows[p].items()}
            for q in [c for c in row if c != p and c in out]:
                f = row[q]
                if not f:
                    continue
                for c, v in out[q].items():
                    x = row.get(c, ZERO) - f * v
                    if x:
                        row[c] = x
                    else:
                        row.pop(c, None)
            out[p] = row
        return [out[p] for p in piv], piv

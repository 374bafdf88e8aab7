"""Structure theory of finite-dimensional associative algebras over Q.

Radicals, invariant Wedderburn-Malcev decompositions, H-simple components
and the PI-exponent d(A), all in exact rational arithmetic.

Action arguments are duck-typed: anything with an ``operators`` list of
square matrices (and optionally ``kind``/``averaging_available``) works, and
``None`` means the trivial action.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .linalg import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    Vector,
    combo,
    frac,
    identity,
    inverse,
    is_zero,
    matmul,
    matrix_from_columns,
    matvec,
    nullspace,
    rref,
    solve,
    sub,
    unit_vector,
    vec,
)
from .report import CheckReport


class AlgebraError(Exception):
    pass


class AssociativityViolation(AlgebraError):
    def __init__(self, i, j, k, lhs, rhs):
        self.triple = (i, j, k)
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"(e{i} e{j}) e{k} = {_fmt(lhs)} but e{i} (e{j} e{k}) = {_fmt(rhs)}")


class UnitViolation(AlgebraError):
    def __init__(self, i):
        self.index = i
        super().__init__(f"unit law fails at basis element {i}")


class NotNilpotentRadical(AlgebraError):
    pass


class NotSemisimple(AlgebraError):
    pass


class NotInvariant(AlgebraError):
    def __init__(self, h_index):
        self.h_index = h_index
        super().__init__(f"subspace not invariant under action operator {h_index}")


class NotSplit(AlgebraError):
    pass


class LiftingFailed(AlgebraError):
    pass


class AveragingUnavailable(AlgebraError):
    pass


class DimensionMismatch(AlgebraError, ValueError):
    pass


def _fmt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


@dataclass(frozen=True, eq=False)
class Algebra:
    """Structure constants ``mult[i][j][k]``: e_i e_j = sum_k mult[i][j][k] e_k."""

    dim: int
    mult: tuple
    unit: Vector | None = None
    labels: tuple = ()
    _nz: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i}" for i in range(self.dim)))
        nz = tuple(
            tuple(tuple((k, c) for k, c in enumerate(self.mult[i][j]) if c) for j in range(self.dim))
            for i in range(self.dim)
        )
        object.__setattr__(self, "_nz", nz)

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.dim, self.mult, self.unit))

    def basis(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def product(self, u: Sequence, v: Sequence) -> Vector:
        out = [ZERO] * self.dim
        for i, x in enumerate(u):
            if not x:
                continue
            row = self._nz[i]
            for j, y in enumerate(v):
                if not y:
                    continue
                xy = x * y
                for k, c in row[j]:
                    out[k] += xy * c
        return tuple(out)

    def left_matrix(self, x: Sequence) -> Matrix:
        return matrix_from_columns([self.product(x, self.basis(j)) for j in range(self.dim)])

    def right_matrix(self, x: Sequence) -> Matrix:
        return matrix_from_columns([self.product(self.basis(j), x) for j in range(self.dim)])

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def element(self, **coeffs) -> Vector:
        v = [ZERO] * self.dim
        for name, c in coeffs.items():
            v[self.index(name)] = frac(c)
        return tuple(v)


def make_algebra(dim: int, mult, unit=None, labels: Sequence[str] = (), check: bool = True) -> Algebra:
    if dim < 1:
        raise AlgebraError("algebra dimension must be at least 1")
    if len(mult) != dim or any(len(r) != dim or any(len(c) != dim for c in r) for r in mult):
        raise DimensionMismatch(f"structure constants must have shape {dim}x{dim}x{dim}")
    m = tuple(tuple(vec(c) for c in r) for r in mult)
    u = vec(unit) if unit is not None else None
    if u is not None and len(u) != dim:
        raise DimensionMismatch("unit vector has wrong length")
    a = Algebra(dim, m, u, tuple(labels))
    if check:
        _check_associative(a)
        if u is not None:
            for i in range(dim):
                e = a.basis(i)
                if a.product(u, e) != e or a.product(e, u) != e:
                    raise UnitViolation(i)
    return a


def _check_associative(a: Algebra) -> None:
    n = a.dim
    prods = [[a.product(a.basis(i), a.basis(j)) for j in range(n)] for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = a.product(prods[i][j], a.basis(k))
        rhs = a.product(a.basis(i), prods[j][k])
        if lhs != rhs:
            raise AssociativityViolation(i, j, k, lhs, rhs)


def is_associative(a: Algebra) -> bool:
    try:
        _check_associative(a)
    except AssociativityViolation:
        return False
    return True


def _ops(act) -> list[Matrix]:
    return [] if act is None else list(act.operators)


def subspace_product(a: Algebra, u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != a.dim or v.ambient_dim != a.dim:
        raise DimensionMismatch("subspace ambient dimension does not match the algebra")
    return Subspace(a.dim, [a.product(x, y) for x in u.basis for y in v.basis])


def is_ideal(a: Algebra, s: Subspace, within: Subspace | None = None) -> bool:
    w = Subspace.full(a.dim) if within is None else within
    return subspace_product(a, w, s) <= s and subspace_product(a, s, w) <= s


def is_subalgebra(a: Algebra, s: Subspace) -> bool:
    return subspace_product(a, s, s) <= s


def trace_form(a: Algebra) -> Matrix:
    """Gram matrix tr(L_{e_i} L_{e_j})."""
    n = a.dim
    left = [a.left_matrix(a.basis(i)) for i in range(n)]
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            li, lj = left[i], left[j]
            t = sum((li[r][c] * lj[c][r] for r in range(n) for c in range(n) if li[r][c] and lj[c][r]), ZERO)
            out[i][j] = out[j][i] = t
    return out


def powers(a: Algebra, s: Subspace, limit: int | None = None) -> list[Subspace]:
    """[s, s^2, s^3, ...] until the zero subspace (included) or ``limit`` terms."""
    limit = a.dim + 1 if limit is None else limit
    out = [s]
    while not out[-1].is_zero() and len(out) < limit:
        out.append(subspace_product(a, out[-1], s))
    return out


def nilpotency_index(a: Algebra, s: Subspace) -> int:
    """Least p with s^p = 0; raises NotNilpotentRadical otherwise."""
    pw = powers(a, s)
    if not pw[-1].is_zero():
        raise NotNilpotentRadical(f"subspace of dimension {s.dim} is not nilpotent")
    return len(pw)


def quotient(a: Algebra, ideal: Subspace) -> Algebra:
    """A/I on the basis given by the standard vectors outside I's pivots."""
    comp = ideal.complement_units()
    m = len(comp)

    def coords(v):
        w = ideal.reduce(v)
        return tuple(w[c] for c in comp)

    mult = tuple(
        tuple(coords(a.product(a.basis(i), a.basis(j))) for j in comp) for i in comp
    )
    unit = coords(a.unit) if a.unit is not None else None
    return Algebra(m, mult, unit, tuple(a.labels[c] for c in comp))


def _trace_kernel(a: Algebra) -> Subspace:
    return Subspace(a.dim, nullspace(trace_form(a), a.dim))


def radical(a: Algebra) -> tuple[Subspace, int]:
    """Jacobson radical via the trace-form criterion, with its nilpotency index."""
    j = _trace_kernel(a)
    if not is_ideal(a, j):
        raise NotNilpotentRadical("trace-form kernel is not a two-sided ideal")
    p = nilpotency_index(a, j)
    if not j.is_zero():
        q = quotient(a, j)
        if not _trace_kernel(q).is_zero():
            raise NotNilpotentRadical("quotient by the trace-form kernel is not semisimple")
    return j, p


def is_semisimple(a: Algebra) -> bool:
    return _trace_kernel(a).is_zero()


def restrict(a: Algebra, s: Subspace) -> Algebra:
    """The subalgebra s as a standalone algebra on s's canonical basis."""
    if not is_subalgebra(a, s):
        raise AlgebraError("subspace is not closed under multiplication")
    b = s.basis
    mult = tuple(tuple(s.coordinates(a.product(x, y)) for y in b) for x in b)
    sub_alg = Algebra(s.dim, mult, None)
    return Algebra(s.dim, mult, _find_unit(sub_alg))


def _find_unit(a: Algebra) -> Vector | None:
    # u e_j = e_j and e_j u = e_j, linear in u
    n = a.dim
    rows, rhs = [], []
    for j in range(n):
        e = a.basis(j)
        lm = a.right_matrix(e)  # u -> u e_j
        rm = a.left_matrix(e)  # u -> e_j u
        for r in range(n):
            rows.append(lm[r])
            rhs.append(e[r])
            rows.append(rm[r])
            rhs.append(e[r])
    return solve(rows, rhs, n)


def restrict_operator(m: Matrix, s: Subspace) -> Matrix:
    cols = []
    for v in s.basis:
        w = matvec(m, v)
        cols.append(s.coordinates(w))
    return matrix_from_columns(cols) if cols else []


def embed(s: Subspace, coords: Sequence) -> Vector:
    return combo(coords, s.basis, s.ambient_dim)


@dataclass(frozen=True)
class RestrictedAction:
    operators: tuple
    kind: str = "restricted"


def restrict_action(act, s: Subspace) -> RestrictedAction:
    ops = _ops(act)
    for idx, m in enumerate(ops):
        if not s.is_invariant(m):
            raise NotInvariant(idx)
    return RestrictedAction(tuple(restrict_operator(m, s) for m in ops))


def closure(a: Algebra, act, seed: Subspace, within: Subspace | None = None) -> Subspace:
    """Least subspace containing seed, stable under multiplication by ``within``
    (default: all of A) on both sides and under every action operator."""
    if seed.ambient_dim != a.dim:
        raise DimensionMismatch("seed ambient dimension does not match the algebra")
    w = Subspace.full(a.dim) if within is None else within
    ops = _ops(act)
    for m in ops:
        if len(m) != a.dim:
            raise DimensionMismatch("action operator has wrong size")
    cur = seed
    while True:
        vecs = list(cur.basis)
        for x in cur.basis:
            for y in w.basis:
                vecs.append(a.product(x, y))
                vecs.append(a.product(y, x))
            for m in ops:
                vecs.append(matvec(m, x))
        nxt = Subspace(a.dim, vecs)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def center(a: Algebra, within: Subspace | None = None) -> Subspace:
    s = Subspace.full(a.dim) if within is None else within
    # x = sum c_i s_i commutes with every s_j
    k = s.dim
    rows = []
    for y in s.basis:
        cols = [sub(a.product(x, y), a.product(y, x)) for x in s.basis]
        rows.extend(matrix_from_columns(cols) if cols else [])
    coeffs = nullspace(rows, k) if rows else [unit_vector(k, i) for i in range(k)]
    return Subspace(a.dim, [combo(c, s.basis, a.dim) for c in coeffs])


def _min_poly(a: Algebra, z: Vector, one: Vector, space: Subspace) -> list[Fraction]:
    """Monic minimal polynomial of z inside ``space`` (low degree first)."""
    pw = [one]
    while True:
        nxt = a.product(pw[-1], z)
        cols = [space.coordinates(p) for p in pw]
        target = space.coordinates(nxt)
        sol = solve(matrix_from_columns(cols), target, len(cols))
        if sol is not None:
            return [-c for c in sol] + [ONE]
        pw.append(nxt)


def central_idempotents(a: Algebra, s: Subspace | None = None) -> list[Vector]:
    """Primitive central idempotents of the semisimple subalgebra s."""
    s = Subspace.full(a.dim) if s is None else s
    sa = restrict(a, s)
    if sa.unit is None:
        raise NotSemisimple("subalgebra has no unit")
    one = embed(s, sa.unit)
    z_space = center(a, s)
    m = z_space.dim
    zb = z_space.basis
    x = sympy.Symbol("x")
    for t in range(2, 2 + 4 * m + 8):
        z = combo([Fraction(t) ** i for i in range(m)], zb, a.dim)
        coeffs = _min_poly(a, z, one, z_space)
        if len(coeffs) - 1 < m:
            continue
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain="QQ")
        _, factors = poly.factor_list()
        if any(f.degree() > 1 for f, _ in factors):
            raise NotSplit("center does not split over the rationals")
        roots = sorted(Fraction(int(r.p), int(r.q)) for r in (-(f.all_coeffs()[1] / f.all_coeffs()[0]) for f, _ in factors))
        idems = []
        for r in roots:
            e = one
            for q in roots:
                if q != r:
                    num = sub(z, tuple(q * c for c in one))
                    e = a.product(e, tuple(c / (r - q) for c in num))
            idems.append(e)
        return idems
    raise NotSplit("no separating element of the center found")


def simple_components(a: Algebra, s: Subspace | None = None) -> list[Subspace]:
    """Wedderburn (simple) components f_r s of the semisimple subalgebra s."""
    s = Subspace.full(a.dim) if s is None else s
    return [Subspace(a.dim, [a.product(e, x) for x in s.basis]) for e in central_idempotents(a, s)]


def _sort_key(s: Subspace):
    return (s.pivots, s.basis)


def h_simple_components(a: Algebra, b: Subspace, act) -> list[Subspace]:
    """Minimal act-invariant two-sided ideals of the semisimple subalgebra b."""
    for idx, m in enumerate(_ops(act)):
        if not b.is_invariant(m):
            raise NotInvariant(idx)
    if b.is_zero():
        return []
    if not is_semisimple(restrict(a, b)):
        raise NotSemisimple("subalgebra has nonzero radical")
    simple = simple_components(a, b)
    closures = []
    for w in simple:
        c = closure(a, act, w, within=b)
        if c not in closures:
            closures.append(c)
    minimal = [c for c in closures if not any(d != c and d <= c for d in closures)]
    total = Subspace(a.dim)
    dim_sum = 0
    for c in minimal:
        total = total + c
        dim_sum += c.dim
    if total != b or dim_sum != b.dim:
        raise NotSemisimple("invariant ideals do not split b into a direct sum")
    return sorted(minimal, key=_sort_key)


@dataclass(frozen=True)
class HSimpleVerdict:
    """Burnside test result: the operator algebra generated by the action and
    the regular representations, compared with the full endomorphism space."""

    split_h_simple: bool
    envelope_dim: int
    full_dim: int

    def __bool__(self):
        return self.split_h_simple


def enveloping_dim(gens: list[Matrix], n: int) -> int:
    """Dimension of the unital operator algebra generated by ``gens``."""

    def flat(m):
        return tuple(x for r in m for x in r)

    def unflat(v):
        return [list(v[r * n:(r + 1) * n]) for r in range(n)]

    span = Subspace(n * n, [flat(identity(n))] + [flat(g) for g in gens])
    while True:
        new = [flat(matmul(unflat(v), g)) for v in span.basis for g in gens]
        nxt = Subspace(n * n, list(span.basis) + new)
        if nxt.dim == span.dim:
            return span.dim
        span = nxt


def is_h_simple(b0: Algebra, act) -> HSimpleVerdict:
    n = b0.dim
    gens = list(_ops(act))
    for i in range(n):
        e = b0.basis(i)
        gens.append(b0.left_matrix(e))
        gens.append(b0.right_matrix(e))
    d = enveloping_dim(gens, n)
    return HSimpleVerdict(d == n * n, d, n * n)


@dataclass(frozen=True)
class Decomposition:
    algebra: Algebra
    radical: Subspace
    nilpotency_index: int
    components: tuple

    @property
    def semisimple_part(self) -> Subspace:
        out = Subspace(self.algebra.dim)
        for c in self.components:
            out = out + c
        return out


def pi_exponent(d: Decomposition, allow_repeats: bool = False) -> int:
    """max dim(B_{i1} + ... + B_{ir}) over chains B_{i1} J B_{i2} ... J B_{ir} != 0.

    By default indices are pairwise distinct; ``allow_repeats`` searches
    sequences with repetition up to length p (longer chains lie in J^p = 0).
    """
    a, j = d.algebra, d.radical
    comps = list(d.components)
    q = len(comps)
    best = 0
    max_len = q if not allow_repeats else max(d.nilpotency_index, 1)

    def dfs(chain: Subspace, used: tuple, total: Subspace):
        nonlocal best
        best = max(best, total.dim)
        if len(used) == max_len:
            return
        cj = subspace_product(a, chain, j)
        if cj.is_zero():
            return
        for i in range(q):
            if i in used and not allow_repeats:
                continue
            nxt = subspace_product(a, cj, comps[i])
            if not nxt.is_zero():
                dfs(nxt, used + (i,), total + comps[i])

    for i in range(q):
        if not comps[i].is_zero():
            dfs(comps[i], (i,), comps[i])
    return best


def verify_decomposition(a: Algebra, act, d: Decomposition) -> CheckReport:
    rep = CheckReport()
    j, _ = radical(a)
    rep.add("radical matches", j == d.radical, f"computed dim {j.dim}, candidate dim {d.radical.dim}")
    ops = _ops(act)
    labels = list(getattr(act, "labels", ())) or [f"h{i}" for i in range(len(ops))]
    for idx, m in enumerate(ops):
        rep.add(f"J invariant under {labels[idx]}", d.radical.is_invariant(m))
    b = d.semisimple_part
    for ci, c in enumerate(d.components):
        tag = f"B{ci + 1}"
        inv = all(c.is_invariant(m) for m in ops)
        rep.add(f"{tag} invariant", inv)
        rep.add(f"{tag} ideal of B", is_ideal(a, c, within=b))
        sub_ok = is_subalgebra(a, c)
        semis = sub_ok and not c.is_zero() and is_semisimple(restrict(a, c))
        rep.add(f"{tag} semisimple", semis)
        if semis and inv:
            verdict = is_h_simple(restrict(a, c), restrict_action(act, c))
            rep.add(f"{tag} split-H-simple", bool(verdict), f"envelope {verdict.envelope_dim}/{verdict.full_dim}")
        else:
            rep.add(f"{tag} split-H-simple", False, "prerequisites failed")
    dims = sum(c.dim for c in d.components) + d.radical.dim
    total = b + d.radical
    annihilate = all(
        subspace_product(a, d.components[x], d.components[y]).is_zero()
        for x in range(len(d.components))
        for y in range(len(d.components))
        if x != y
    )
    rep.add("direct sum", dims == a.dim and total.dim == a.dim and annihilate, f"dimensions {dims}/{a.dim}")
    return rep


def _mod_coords(s: Subspace, v: Sequence) -> Vector:
    w = s.reduce(v)
    return tuple(w[c] for c in s.complement_units())


def wedderburn_malcev(a: Algebra, act=None) -> Decomposition:
    """Invariant Wedderburn-Malcev decomposition by lifting a section of
    A -> A/J through the filtration J > J^2 > ... .

    At each stage the correction solves the linearized homomorphism equations
    together with the equivariance equations modulo the next power of J; for
    group actions and semisimple Hopf actions the averaged correction is a
    solution, so the combined system is consistent.
    """
    if a.unit is None:
        raise LiftingFailed("algebra has no unit")
    j, p = radical(a)
    ops = _ops(act)
    for idx, m in enumerate(ops):
        if not j.is_invariant(m):
            raise NotInvariant(idx)
    available = getattr(act, "averaging_available", None)
    if act is not None and available is not None and not available():
        raise AveragingUnavailable(f"no averaging for action kind {getattr(act, 'kind', '?')}")
    n = a.dim
    comp = j.complement_units()
    m_ = len(comp)
    s = [a.basis(c) for c in comp]
    if not j.is_zero():
        bar = lambda v: _mod_coords(j, v)  # noqa: E731
        mbar = [[bar(a.product(s[x], s[y])) for y in range(m_)] for x in range(m_)]
        hbar = [[bar(matvec(op, s[x])) for x in range(m_)] for op in ops]
        jp = powers(a, j)
        for k in range(1, p):
            jk, jnext = jp[k - 1], jp[k]
            w = jk.basis
            nw = len(w)
            nunk = m_ * nw
            rows: list[list[Fraction]] = []
            rhs: list[Fraction] = []

            def emit(contrib: dict, const: Vector):
                # contrib: unknown index -> vector in A; equation sum(u * vec) + const = 0 mod jnext
                cols = {u: _mod_coords(jnext, v) for u, v in contrib.items()}
                cc = _mod_coords(jnext, const)
                for r in range(len(cc)):
                    row = [ZERO] * nunk
                    for u, cv in cols.items():
                        row[u] += cv[r]
                    rows.append(row)
                    rhs.append(-cc[r])

            for x in range(m_):
                for y in range(m_):
                    contrib: dict[int, Vector] = {}

                    def acc(u, v):
                        contrib[u] = tuple(p_ + q_ for p_, q_ in zip(contrib.get(u, (ZERO,) * n), v))

                    for l in range(nw):
                        acc(y * nw + l, a.product(s[x], w[l]))
                        acc(x * nw + l, a.product(w[l], s[y]))
                        for z in range(m_):
                            c = mbar[x][y][z]
                            if c:
                                acc(z * nw + l, tuple(-c * t for t in w[l]))
                    const = sub(a.product(s[x], s[y]), combo(mbar[x][y], s, n))
                    emit(contrib, const)
            for hi, op in enumerate(ops):
                for x in range(m_):
                    contrib = {}

                    def acc2(u, v):
                        contrib[u] = tuple(p_ + q_ for p_, q_ in zip(contrib.get(u, (ZERO,) * n), v))

                    for l in range(nw):
                        acc2(x * nw + l, matvec(op, w[l]))
                        for z in range(m_):
                            c = hbar[hi][x][z]
                            if c:
                                acc2(z * nw + l, tuple(-c * t for t in w[l]))
                    const = sub(matvec(op, s[x]), combo(hbar[hi][x], s, n))
                    emit(contrib, const)
            sol = solve(rows, rhs, nunk) if rows else tuple([ZERO] * nunk)
            if sol is None:
                raise LiftingFailed(f"no invariant lift modulo J^{k + 1}")
            s = [tuple(sv + t for sv, t in zip(s[x], combo(sol[x * nw:(x + 1) * nw], w, n))) for x in range(m_)]
    b = Subspace(n, s)
    if b.dim != m_ or not is_subalgebra(a, b) or any(not b.is_invariant(op) for op in ops):
        raise LiftingFailed("lifted complement is not an invariant subalgebra")
    comps = h_simple_components(a, b, act) if m_ else []
    return Decomposition(a, j, p, tuple(comps))


def change_basis(a: Algebra, p: Matrix) -> Algebra:
    """The same algebra written in the basis given by the columns of p."""
    pinv = inverse(p)
    cols = [tuple(r[i] for r in p) for i in range(a.dim)]
    mult = tuple(
        tuple(matvec(pinv, a.product(cols[i], cols[j])) for j in range(a.dim)) for i in range(a.dim)
    )
    unit = matvec(pinv, a.unit) if a.unit is not None else None
    return Algebra(a.dim, mult, unit, a.labels)


def conjugate_operator(m: Matrix, p: Matrix) -> Matrix:
    return matmul(matmul(inverse(p), m), p)

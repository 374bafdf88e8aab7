"""Acting objects: action algebras, Hopf algebras, group actions by
automorphisms and anti-automorphisms, gradings and their duality, integrals
and Maschke projections.

An action algebra H is an ``Algebra`` with a unit; its basis labels name the
operators.  Comultiplications are stored as one length dim*dim vector per
basis element: Delta(h_i) = sum_{j,k} comul[i][j*dim + k] h_j (x) h_k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .constructions import group_algebra_of
from .exactalg import Algebra, NotSemisimple, make_algebra
from .linalg import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    Vector,
    combo,
    frac,
    identity,
    is_zero,
    mat_equal,
    matmul,
    matrix_from_columns,
    matvec,
    nullspace,
    solve,
    unit_vector,
    vec,
)
from .report import CheckReport


class ActionError(Exception):
    pass


class InvalidGroup(ActionError):
    pass


class NotHomomorphism(ActionError):
    pass


class WrongMorphismType(ActionError):
    def __init__(self, g, detail=""):
        self.element = g
        super().__init__(f"group element {g}: {detail}")


class NotDiagonalizable(ActionError):
    pass


class NoIntegral(ActionError):
    pass


class NotBimoduleProjection(ActionError):
    pass


class PostconditionFailed(ActionError):
    pass


# --------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class GroupData:
    order: int
    table: tuple
    identity: int
    g0: frozenset
    labels: tuple = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"g{i}" for i in range(self.order)))

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inverse(self, g: int) -> int:
        return next(h for h in range(self.order) if self.table[g][h] == self.identity)


def make_group(table, identity: int = 0, g0=None, labels: Sequence[str] = ()) -> GroupData:
    n = len(table)
    t = tuple(tuple(int(x) for x in row) for row in table)
    if any(len(r) != n or any(not 0 <= x < n for x in r) for r in t):
        raise InvalidGroup("Cayley table is not a closed n x n table")
    for g in range(n):
        if t[identity][g] != g or t[g][identity] != g:
            raise InvalidGroup(f"{identity} is not an identity")
        if not any(t[g][h] == identity for h in range(n)):
            raise InvalidGroup(f"element {g} has no inverse")
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise InvalidGroup(f"table not associative at {(a, b, c)}")
    g0s = frozenset(range(n)) if g0 is None else frozenset(int(x) for x in g0)
    if identity not in g0s or any(t[a][b] not in g0s for a in g0s for b in g0s):
        raise InvalidGroup("G_0 is not a subgroup")
    if len(g0s) * 2 != n and len(g0s) != n:
        raise InvalidGroup("G_0 must have index 1 or 2")
    return GroupData(n, t, identity, g0s, tuple(labels))


def cyclic_group(n: int, g0=None) -> GroupData:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["e"] + [f"s^{k}" if k > 1 else "s" for k in range(1, n)]
    return make_group(table, 0, g0, labels)


def _cycle_label(p: tuple) -> str:
    seen, parts = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric_group(n: int, g0=None) -> GroupData:
    """S_n on permutations of {0..n-1} in lexicographic order; (gh)(i) = g(h(i))."""
    perms = list(itertools.permutations(range(n)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(g[h[i]] for i in range(n))] for h in perms] for g in perms]
    return make_group(table, 0, g0, [_cycle_label(p) for p in perms])


def trivial_group() -> GroupData:
    return make_group([[0]], 0, None, ["e"])


# --------------------------------------------------------------------------
# Hopf algebras


@dataclass(frozen=True)
class HopfData:
    algebra: Algebra
    comul: tuple
    counit: Vector
    antipode: tuple  # matrix, column i = S(h_i)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> tuple:
        return self.algebra.labels

    def delta(self, x: Sequence) -> Vector:
        return combo(x, self.comul, self.dim * self.dim)

    def eps(self, x: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(x, self.counit)), ZERO)

    def s(self, x: Sequence) -> Vector:
        return matvec([list(r) for r in self.antipode], x)

    def delta2(self, x: Sequence) -> Vector:
        """(Delta (x) id) Delta x as a dim^3 vector."""
        d = self.dim
        out = [ZERO] * (d ** 3)
        dx = self.delta(x)
        for a in range(d):
            for b in range(d):
                c = dx[a * d + b]
                if c:
                    da = self.comul[a]
                    for u in range(d * d):
                        if da[u]:
                            out[u * d + b] += c * da[u]
        return tuple(out)


def make_hopf(algebra: Algebra, comul, counit, antipode) -> HopfData:
    d = algebra.dim
    cm = tuple(vec(r) for r in comul)
    if len(cm) != d or any(len(r) != d * d for r in cm):
        raise ActionError("comultiplication must be dim x dim^2")
    ct = vec(counit)
    sm = tuple(vec(r) for r in antipode)
    if len(ct) != d or len(sm) != d or any(len(r) != d for r in sm):
        raise ActionError("counit/antipode shape mismatch")
    if algebra.unit is None:
        raise ActionError("Hopf algebra needs a unit")
    return HopfData(algebra, cm, ct, sm)


def _tensor_mult(h: Algebra, u: Sequence, v: Sequence) -> Vector:
    """Product in H (x) H of vectors of length dim^2."""
    d = h.dim
    out = [ZERO] * (d * d)
    basis_prod = [[h.product(h.basis(i), h.basis(j)) for j in range(d)] for i in range(d)]
    nu = [(i, x) for i, x in enumerate(u) if x]
    nv = [(i, x) for i, x in enumerate(v) if x]
    for iu, x in nu:
        a, b = divmod(iu, d)
        for iv, y in nv:
            c, e = divmod(iv, d)
            p1, p2 = basis_prod[a][c], basis_prod[b][e]
            xy = x * y
            for k1, c1 in enumerate(p1):
                if c1:
                    for k2, c2 in enumerate(p2):
                        if c2:
                            out[k1 * d + k2] += xy * c1 * c2
    return tuple(out)


def check_hopf(h: HopfData) -> CheckReport:
    rep = CheckReport()
    d = h.dim
    alg = h.algebra
    basis = [alg.basis(i) for i in range(d)]
    one = alg.unit

    def first_bad(pred):
        for i in range(d):
            if not pred(i):
                return alg.labels[i]
        return None

    def coassoc(i):
        dx = h.comul[i]
        left = [ZERO] * d ** 3
        right = [ZERO] * d ** 3
        for a in range(d):
            for b in range(d):
                c = dx[a * d + b]
                if not c:
                    continue
                for u, x in enumerate(h.comul[a]):
                    if x:
                        left[u * d + b] += c * x
                for u, x in enumerate(h.comul[b]):
                    if x:
                        right[a * d * d + u] += c * x
        return left == right

    def counit_law(i):
        dx = h.comul[i]
        lhs = [ZERO] * d
        rhs = [ZERO] * d
        for a in range(d):
            for b in range(d):
                c = dx[a * d + b]
                if c:
                    lhs[b] += c * h.counit[a]
                    rhs[a] += c * h.counit[b]
        return tuple(lhs) == basis[i] and tuple(rhs) == basis[i]

    bad = first_bad(coassoc)
    rep.add("coassociativity", bad is None, f"fails at {bad}" if bad else "")
    bad = first_bad(counit_law)
    rep.add("counit", bad is None, f"fails at {bad}" if bad else "")

    bad = None
    for i, j in itertools.product(range(d), repeat=2):
        lhs = h.delta(alg.product(basis[i], basis[j]))
        rhs = _tensor_mult(alg, h.comul[i], h.comul[j])
        if lhs != rhs:
            bad = (alg.labels[i], alg.labels[j])
            break
    rep.add("comultiplication multiplicative", bad is None, f"fails at {bad}" if bad else "")
    one_one = tuple(x * y for x in one for y in one)
    rep.add("comultiplication unital", h.delta(one) == one_one)
    bad = None
    for i, j in itertools.product(range(d), repeat=2):
        if h.eps(alg.product(basis[i], basis[j])) != h.counit[i] * h.counit[j]:
            bad = (alg.labels[i], alg.labels[j])
            break
    rep.add("counit multiplicative", bad is None, f"fails at {bad}" if bad else "")
    rep.add("counit unital", h.eps(one) == 1)

    def antipode(side):
        def law(i):
            dx = h.comul[i]
            out = [ZERO] * d
            for a in range(d):
                for b in range(d):
                    c = dx[a * d + b]
                    if not c:
                        continue
                    if side == "left":
                        p = alg.product(h.s(basis[a]), basis[b])
                    else:
                        p = alg.product(basis[a], h.s(basis[b]))
                    for k, x in enumerate(p):
                        out[k] += c * x
            return tuple(out) == tuple(h.counit[i] * u for u in one)

        return law

    bad = first_bad(antipode("left"))
    rep.add("antipode m(S(x)id)Delta", bad is None, f"fails at {bad}" if bad else "")
    bad = first_bad(antipode("right"))
    rep.add("antipode m(id(x)S)Delta", bad is None, f"fails at {bad}" if bad else "")
    return rep


def group_algebra(g: GroupData) -> HopfData:
    n = g.order
    alg = group_algebra_of(g.table, list(g.labels))
    comul = [[ONE if u == i * n + i else ZERO for u in range(n * n)] for i in range(n)]
    counit = [ONE] * n
    anti = matrix_from_columns([unit_vector(n, g.inverse(i)) for i in range(n)])
    return make_hopf(alg, comul, counit, anti)


def dual_group_hopf(g: GroupData) -> HopfData:
    n = g.order
    mult = [[[ONE if i == j == k else ZERO for k in range(n)] for j in range(n)] for i in range(n)]
    alg = make_algebra(n, mult, [ONE] * n, [f"h_{lab}" for lab in g.labels])
    comul = []
    for x in range(n):
        row = [ZERO] * (n * n)
        for u in range(n):
            for v in range(n):
                if g.mul(u, v) == x:
                    row[u * n + v] = ONE
        comul.append(row)
    counit = [ONE if x == g.identity else ZERO for x in range(n)]
    anti = matrix_from_columns([unit_vector(n, g.inverse(x)) for x in range(n)])
    return make_hopf(alg, comul, counit, anti)


def dual_hopf(h: HopfData, labels: Sequence[str] = ()) -> HopfData:
    """H* on the dual basis: product dual to Delta, Delta dual to the product."""
    d = h.dim
    alg = h.algebra
    mult = [[[h.comul[k][i * d + j] for k in range(d)] for j in range(d)] for i in range(d)]
    dalg = make_algebra(d, mult, list(h.counit), list(labels) or [f"{lab}*" for lab in alg.labels])
    comul = [[alg.mult[i][j][k] for i in range(d) for j in range(d)] for k in range(d)]
    counit = list(alg.unit)
    anti = [[h.antipode[c][r] for c in range(d)] for r in range(d)]
    return make_hopf(dalg, comul, counit, anti)


def sweedler_hopf() -> HopfData:
    """Sweedler's 4-dimensional Hopf algebra on the basis (1, c, b, cb)."""
    # basis index: 0 = 1, 1 = c, 2 = b, 3 = cb
    table = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    mult = [[[Fraction(table[(i, j)].get(k, 0)) for k in range(4)] for j in range(4)] for i in range(4)]
    alg = make_algebra(4, mult, [1, 0, 0, 0], ["1", "c", "b", "cb"])

    def t(*pairs):
        row = [ZERO] * 16
        for coef, a, b in pairs:
            row[a * 4 + b] += coef
        return row

    comul = [
        t((1, 0, 0)),
        t((1, 1, 1)),
        t((1, 1, 2), (1, 2, 0)),  # c(x)b + b(x)1
        t((1, 0, 3), (1, 3, 1)),  # 1(x)cb + cb(x)c
    ]
    counit = [1, 1, 0, 0]
    anti = matrix_from_columns([unit_vector(4, 0), unit_vector(4, 1), (0, 0, 0, -1), unit_vector(4, 2)])
    return make_hopf(alg, comul, counit, anti)


# --------------------------------------------------------------------------
# actions


TRIVIAL_KINDS = ("trivial", "group", "grading")


@dataclass(frozen=True)
class Action:
    """A unital homomorphism rho: H -> End(A), one matrix per H-basis element."""

    action_algebra: Algebra
    operators: tuple
    kind: str = "generalized"
    hopf: HopfData | None = None
    group: GroupData | None = None
    anti: tuple = ()  # per group element, for kind == "group"
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def labels(self) -> tuple:
        return self.action_algebra.labels

    @property
    def dim_h(self) -> int:
        return self.action_algebra.dim

    def operator(self, h: Sequence) -> Matrix:
        n = len(self.operators[0])
        out = [[ZERO] * n for _ in range(n)]
        for c, m in zip(h, self.operators):
            if c:
                for r in range(n):
                    for s in range(n):
                        if m[r][s]:
                            out[r][s] += c * m[r][s]
        return out

    def apply(self, h_index: int, x: Sequence) -> Vector:
        return matvec(self.operators[h_index], x)

    def averaging_available(self) -> bool:
        if self.kind in TRIVIAL_KINDS:
            return True
        if self.kind == "hopf" and self.hopf is not None:
            try:
                return left_integral(self.hopf).semisimple
            except NoIntegral:
                return False
        return False


def _mat(m) -> tuple:
    return tuple(tuple(frac(x) for x in r) for r in m)


def trivial_action(a: Algebra) -> Action:
    h = make_algebra(1, [[[1]]], [1], ["1"])
    return Action(h, (_mat(identity(a.dim)),), "trivial")


def check_homomorphism(act: Action) -> CheckReport:
    """rho(g_a) rho(g_b) = rho(g_a g_b) on basis pairs and rho(1) = id."""
    rep = CheckReport()
    h = act.action_algebra
    ops = [list(map(list, m)) for m in act.operators]
    n = len(ops[0])
    bad = None
    for a, b in itertools.product(range(h.dim), repeat=2):
        lhs = matmul(ops[a], ops[b])
        rhs = act.operator(h.mult[a][b])
        if not mat_equal(lhs, rhs):
            bad = (h.labels[a], h.labels[b])
            break
    rep.add("homomorphism", bad is None, f"fails at {bad}" if bad else "")
    rep.add("unital", mat_equal(act.operator(h.unit), identity(n)))
    return rep


def check_module_algebra(h: HopfData, a: Algebra, act: Action) -> bool:
    """h(xy) = (h_(1) x)(h_(2) y) on all basis triples."""
    d = h.dim
    n = a.dim
    basis = [a.basis(i) for i in range(n)]
    imgs = [[act.apply(k, basis[i]) for i in range(n)] for k in range(d)]
    for g in range(d):
        dg = [(u, c) for u, c in enumerate(h.comul[g]) if c]
        for i, j in itertools.product(range(n), repeat=2):
            lhs = act.apply(g, a.product(basis[i], basis[j]))
            rhs = [ZERO] * n
            for u, c in dg:
                p, q = divmod(u, d)
                prod = a.product(imgs[p][i], imgs[q][j])
                for k, x in enumerate(prod):
                    if x:
                        rhs[k] += c * x
            if lhs != tuple(rhs):
                return False
    return True


@dataclass(frozen=True)
class Witness:
    """gamma(xy) = sum coef * (u x)(v y), or (v y)(u x) when ``flipped``."""

    terms: tuple  # (coef, u, v, flipped)

    @property
    def flipped_part_zero(self) -> bool:
        return not any(f for _, _, _, f in self.terms)


def generalized_witnesses(h: Algebra, a: Algebra, act: Action) -> list[Witness | None]:
    n = a.dim
    d = h.dim
    basis = [a.basis(i) for i in range(n)]
    imgs = [[act.apply(k, basis[i]) for i in range(n)] for k in range(d)]
    prods = [[a.product(basis[i], basis[j]) for j in range(n)] for i in range(n)]

    def flat_straight(u, v):
        out = []
        for i in range(n):
            for j in range(n):
                out.extend(a.product(imgs[u][i], imgs[v][j]))
        return out

    def flat_flipped(u, v):
        out = []
        for i in range(n):
            for j in range(n):
                out.extend(a.product(imgs[v][j], imgs[u][i]))
        return out

    keys_s = [(u, v, False) for u in range(d) for v in range(d)]
    keys_f = [(u, v, True) for u in range(d) for v in range(d)]
    cols_s = [flat_straight(u, v) for u, v, _ in keys_s]
    cols_f = [flat_flipped(u, v) for u, v, _ in keys_f]
    out = []
    for g in range(d):
        target = []
        for i in range(n):
            for j in range(n):
                target.extend(act.apply(g, prods[i][j]))
        found = None
        for keys, cols in ((keys_s, cols_s), (keys_s + keys_f, cols_s + cols_f)):
            sol = solve(matrix_from_columns(cols), target, len(cols))
            if sol is not None:
                found = Witness(tuple((c, u, v, f) for c, (u, v, f) in zip(sol, keys) if c))
                break
        out.append(found)
    return out


def check_generalized_action(h: Algebra, a: Algebra, act: Action) -> CheckReport:
    rep = CheckReport()
    wits = generalized_witnesses(h, a, act)
    for g, w in enumerate(wits):
        if w is None:
            rep.add(f"decomposition for {h.labels[g]}", False, "unsolvable")
        else:
            flipped = "zero flipped part" if w.flipped_part_zero else "uses flipped terms"
            rep.add(f"decomposition for {h.labels[g]}", True, f"{len(w.terms)} terms, {flipped}")
    rep.witnesses = wits  # type: ignore[attr-defined]
    return rep


def is_automorphism(a: Algebra, m: Matrix) -> bool:
    return all(
        matvec(m, a.product(a.basis(i), a.basis(j))) == a.product(matvec(m, a.basis(i)), matvec(m, a.basis(j)))
        for i in range(a.dim)
        for j in range(a.dim)
    )


def is_anti_automorphism(a: Algebra, m: Matrix) -> bool:
    return all(
        matvec(m, a.product(a.basis(i), a.basis(j))) == a.product(matvec(m, a.basis(j)), matvec(m, a.basis(i)))
        for i in range(a.dim)
        for j in range(a.dim)
    )


def gaction_to_generalized(g: GroupData, a: Algebra, assignment) -> Action:
    """Linear extension of a group action by (anti-)automorphisms to FG.

    ``assignment[x]`` is ``(matrix, is_anti)`` for group element x.
    """
    if len(assignment) != g.order:
        raise NotHomomorphism("assignment must cover every group element")
    ops = [_mat(m) for m, _ in assignment]
    anti = tuple(bool(f) for _, f in assignment)
    for x in range(g.order):
        in_g0 = x in g.g0
        if anti[x] == in_g0:
            raise WrongMorphismType(g.labels[x], "anti flag contradicts G_0 membership")
        m = [list(r) for r in ops[x]]
        ok = is_anti_automorphism(a, m) if anti[x] else is_automorphism(a, m)
        if not ok:
            kind = "anti-automorphism" if anti[x] else "automorphism"
            raise WrongMorphismType(g.labels[x], f"not an {kind}")
    if not mat_equal([list(r) for r in ops[g.identity]], identity(a.dim)):
        raise NotHomomorphism("identity element does not act as the identity")
    for x, y in itertools.product(range(g.order), repeat=2):
        if not mat_equal(matmul([list(r) for r in ops[x]], [list(r) for r in ops[y]]), [list(r) for r in ops[g.mul(x, y)]]):
            raise NotHomomorphism(f"rho({g.labels[x]}) rho({g.labels[y]}) != rho({g.labels[g.mul(x, y)]})")
    hopf = group_algebra(g)
    return Action(hopf.algebra, tuple(ops), "group", hopf=hopf, group=g, anti=anti)


# --------------------------------------------------------------------------
# gradings


@dataclass(frozen=True)
class GradedAlgebra:
    algebra: Algebra
    group: GroupData
    component_of: tuple


def make_graded(a: Algebra, g: GroupData, component_of) -> GradedAlgebra:
    comp = tuple(int(x) for x in component_of)
    if len(comp) != a.dim:
        raise ActionError("component_of must assign one group element per basis vector")
    for i, j in itertools.product(range(a.dim), repeat=2):
        target = g.mul(comp[i], comp[j])
        p = a.product(a.basis(i), a.basis(j))
        bad = [k for k, x in enumerate(p) if x and comp[k] != target]
        if bad:
            raise ActionError(f"A^({g.labels[comp[i]]}) A^({g.labels[comp[j]]}) not inside A^({g.labels[target]})")
    return GradedAlgebra(a, g, comp)


def duality_transform(x: GradedAlgebra) -> tuple[Algebra, Action]:
    """h_g acts as the projection onto A^(g)."""
    g = x.group
    hopf = dual_group_hopf(g)
    n = x.algebra.dim
    ops = []
    for el in range(g.order):
        ops.append(tuple(tuple(ONE if r == c and x.component_of[c] == el else ZERO for c in range(n)) for r in range(n)))
    return x.algebra, Action(hopf.algebra, tuple(ops), "grading", hopf=hopf, group=g)


def action_to_grading(a: Algebra, act: Action, g: GroupData | None = None) -> GradedAlgebra:
    g = g or act.group
    if g is None:
        raise NotDiagonalizable("no group attached to the action")
    n = a.dim
    comp = [None] * n
    for el, m in enumerate(act.operators):
        for r in range(n):
            for c in range(n):
                v = m[r][c]
                if r != c and v:
                    raise NotDiagonalizable(f"operator {act.labels[el]} is not diagonal")
                if r == c and v not in (0, 1):
                    raise NotDiagonalizable(f"operator {act.labels[el]} is not a projection")
                if r == c and v == 1:
                    if comp[c] is not None:
                        raise NotDiagonalizable("projections are not orthogonal")
                    comp[c] = el
    if any(c is None for c in comp):
        raise NotDiagonalizable("projections do not sum to the identity")
    return make_graded(a, g, comp)


# --------------------------------------------------------------------------
# integrals and Maschke averaging


@dataclass(frozen=True)
class IntegralResult:
    t: Vector
    semisimple: bool
    tensor_identity: bool | None  # t_(1) S(t_(3)) (x) t_(2) == 1 (x) t, checked when eps(t) = 1


def integral_tensor_identity_holds(h: HopfData, t: Sequence) -> bool:
    d = h.dim
    alg = h.algebra
    t3 = h.delta2(t)
    out = [ZERO] * (d * d)
    for idx, c in enumerate(t3):
        if not c:
            continue
        a, rest = divmod(idx, d * d)
        b, e = divmod(rest, d)
        p = alg.product(alg.basis(a), h.s(alg.basis(e)))
        for k, x in enumerate(p):
            if x:
                out[k * d + b] += c * x
    expected = tuple(u * v for u in alg.unit for v in t)
    return tuple(out) == expected


def left_integral(h: HopfData) -> IntegralResult:
    d = h.dim
    alg = h.algebra
    rows = []
    for i in range(d):
        lm = alg.left_matrix(alg.basis(i))
        e = h.counit[i]
        for r in range(d):
            rows.append([lm[r][c] - (e if r == c else 0) for c in range(d)])
    ker = nullspace(rows, d)
    if not ker:
        raise NoIntegral("h t = eps(h) t has only the zero solution")
    t = ker[0]
    first = next(x for x in t if x)
    t = tuple(x / first for x in t)
    e = h.eps(t)
    if e:
        t = tuple(x / e for x in t)
        return IntegralResult(t, True, integral_tensor_identity_holds(h, t))
    return IntegralResult(t, False, None)


def averaging_operator(h: HopfData, act: Action, m: Matrix, t: Sequence) -> Matrix:
    """t_(1) . m . S(t_(2)) as an operator on A."""
    d = h.dim
    n = len(m)
    dt = h.delta(t)
    out = [[ZERO] * n for _ in range(n)]
    for idx, c in enumerate(dt):
        if not c:
            continue
        a, b = divmod(idx, d)
        left = act.operator(h.algebra.basis(a))
        right = act.operator(h.s(h.algebra.basis(b)))
        prod = matmul(matmul(left, m), right)
        for r in range(n):
            for s in range(n):
                if prod[r][s]:
                    out[r][s] += c * prod[r][s]
    return out


def _is_bimodule_map(a: Algebra, p: Matrix) -> bool:
    n = a.dim
    for i, j in itertools.product(range(n), repeat=2):
        x, y = a.basis(i), a.basis(j)
        v = matvec(p, a.product(x, y))
        if v != a.product(x, matvec(p, y)) or v != a.product(matvec(p, x), y):
            return False
    return True


def maschke_projection(h: HopfData, act: Action, a: Algebra, i1: Subspace, proj: Matrix) -> Matrix:
    """Equivariant bimodule projection onto the invariant ideal i1."""
    res = left_integral(h)
    if not res.semisimple:
        raise NotSemisimple("integral has eps(t) = 0")
    p = [list(r) for r in proj]
    if not mat_equal(matmul(p, p), p) or Subspace(a.dim, [matvec(p, a.basis(i)) for i in range(a.dim)]) != i1:
        raise NotBimoduleProjection("proj is not a projection onto i1")
    if not _is_bimodule_map(a, p):
        raise NotBimoduleProjection("proj is not a bimodule map")
    if any(not i1.is_invariant(m) for m in act.operators):
        raise NotBimoduleProjection("i1 is not invariant under the action")
    pt = averaging_operator(h, act, p, res.t)
    if not mat_equal(matmul(pt, pt), pt):
        raise PostconditionFailed("averaged map is not idempotent")
    if Subspace(a.dim, [matvec(pt, a.basis(i)) for i in range(a.dim)]) != i1:
        raise PostconditionFailed("averaged map has the wrong image")
    if not _is_bimodule_map(a, pt):
        raise PostconditionFailed("averaged map is not a bimodule map")
    for k, m in enumerate(act.operators):
        mm = [list(r) for r in m]
        if not mat_equal(matmul(pt, mm), matmul(mm, pt)):
            raise PostconditionFailed(f"averaged map does not commute with {act.labels[k]}")
    return pt


# --------------------------------------------------------------------------
# Sweedler's algebra with the action of its dual


def comodule_action(h: HopfData, dual: HopfData) -> Action:
    """g . x = g(x_(2)) x_(1) for g in H*, x in H."""
    d = h.dim
    ops = []
    for k in range(d):
        cols = []
        for i in range(d):
            col = [ZERO] * d
            for idx, c in enumerate(h.comul[i]):
                if c:
                    a, b = divmod(idx, d)
                    if b == k:
                        col[a] += c
            cols.append(tuple(col))
        ops.append(_mat(matrix_from_columns(cols)))
    return Action(dual.algebra, tuple(ops), "hopf", hopf=dual)


def sweedler_scenario() -> tuple[HopfData, Algebra, Action]:
    h = sweedler_hopf()
    dual = dual_hopf(h, ["g_1", "g_c", "g_b", "g_cb"])
    return h, h.algebra, comodule_action(h, dual)


def is_zero_matrix(m) -> bool:
    return all(is_zero(r) for r in m)

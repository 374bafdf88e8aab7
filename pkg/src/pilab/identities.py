"""Multilinear H-polynomials: evaluation, identity tests, codimensions,
alternation and explicit alternating constructions.

A monomial is a pair (perm, labels) of tuples of length n meaning
x^{h_labels[0]}_{perm[0]} x^{h_labels[1]}_{perm[1]} ... with 0-based
variable indices and H-basis label indices.  The symmetric group acts on
the left: tau sends (perm, labels) to (tau o perm, labels), so that
(tau f)(a_1, ..., a_n) = f(a_tau(1), ..., a_tau(n)).
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .actions import Action, generalized_witnesses, sweedler_scenario, trivial_action
from .exactalg import Algebra, is_h_simple, radical, trace_form
from .linalg import ONE, ZERO, Subspace, det, frac, matmul, rank, unit_vector, vec
from .rank import RowSpace, integer_rank, row_space
from .report import CheckReport

DEFAULT_CAP = 10**7


class ResourceExceeded(Exception):
    def __init__(self, what: str, value: int, cap: int):
        self.what, self.value, self.cap = what, value, cap
        super().__init__(f"{what} = {value} exceeds the cap {cap}")


class FeasibilityLimit(Exception):
    pass


class NotHSimple(Exception):
    pass


class PolynomialParseError(ValueError):
    def __init__(self, line: int, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}")


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        return int(cap)
    env = os.environ.get("PILAB_CAP")
    return int(env) if env else DEFAULT_CAP


def sign(perm: Sequence[int]) -> int:
    s = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def inverse_perm(perm: Sequence[int]) -> tuple:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


# --------------------------------------------------------------------------
# H-polynomials


@dataclass(frozen=True)
class HPolynomial:
    n: int
    h_labels: tuple
    terms: tuple = ()  # sorted ((perm, labels), coefficient)

    @property
    def dim_h(self) -> int:
        return len(self.h_labels)

    @classmethod
    def build(cls, n: int, h_labels: Sequence[str], terms: Iterable) -> "HPolynomial":
        """Terms are (coef, perm, labels); each label is a basis index or an
        H-coordinate vector, expanded multilinearly."""
        h_labels = tuple(h_labels)
        dh = len(h_labels)
        acc: dict = {}
        for coef, perm, labels in terms:
            c = frac(coef)
            if not c:
                continue
            perm = tuple(int(p) for p in perm)
            if sorted(perm) != list(range(n)):
                raise ValueError(f"{perm} is not a permutation of {n} variables")
            if len(labels) != n:
                raise ValueError("one label per position is required")
            choices = []
            for lab in labels:
                if isinstance(lab, (int, np.integer)):
                    if not 0 <= lab < dh:
                        raise ValueError(f"label index {lab} out of range")
                    choices.append([(int(lab), ONE)])
                else:
                    v = vec(lab)
                    if len(v) != dh:
                        raise ValueError("label vector has the wrong length")
                    choices.append([(i, x) for i, x in enumerate(v) if x])
            for combo in itertools.product(*choices):
                key = (perm, tuple(i for i, _ in combo))
                acc[key] = acc.get(key, ZERO) + c * math.prod((x for _, x in combo), start=ONE)
        items = tuple(sorted((k, v) for k, v in acc.items() if v))
        return cls(n, h_labels, items)

    @classmethod
    def monomial(cls, n: int, h_labels: Sequence[str], perm, labels, coef=1) -> "HPolynomial":
        return cls.build(n, h_labels, [(coef, perm, labels)])

    def as_dict(self) -> dict:
        return dict(self.terms)

    def _same(self, other: "HPolynomial"):
        if self.n != other.n or self.h_labels != other.h_labels:
            raise ValueError("polynomials live in different spaces")

    def __add__(self, other: "HPolynomial") -> "HPolynomial":
        self._same(other)
        return HPolynomial.build(self.n, self.h_labels, [(c, *k) for k, c in self.terms + other.terms])

    def __sub__(self, other: "HPolynomial") -> "HPolynomial":
        return self + other.scale(-1)

    def __neg__(self) -> "HPolynomial":
        return self.scale(-1)

    def scale(self, s) -> "HPolynomial":
        s = frac(s)
        if not s:
            return HPolynomial(self.n, self.h_labels, ())
        return HPolynomial(self.n, self.h_labels, tuple((k, c * s) for k, c in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def permute_variables(self, tau: Sequence[int]) -> "HPolynomial":
        """Rename x_i to x_tau(i)."""
        return HPolynomial.build(
            self.n, self.h_labels, [(c, tuple(tau[p] for p in perm), labels) for (perm, labels), c in self.terms]
        )

    def __len__(self) -> int:
        return len(self.terms)


def monomial_basis(n: int, h_labels: Sequence[str], cap: int | None = None) -> list[HPolynomial]:
    """All n! (dim H)^n monomials, lexicographic in (perm, labels)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    count = math.factorial(n) * len(h_labels) ** n
    cap = resolve_cap(cap)
    if count > cap:
        raise ResourceExceeded("monomials", count, cap)
    return [
        HPolynomial(n, tuple(h_labels), (((perm, labels), ONE),))
        for perm in itertools.permutations(range(n))
        for labels in itertools.product(range(len(h_labels)), repeat=n)
    ]


def _action_or_trivial(a: Algebra, act: Action | None) -> Action:
    return act if act is not None else trivial_action(a)


def evaluate(f: HPolynomial, a: Algebra, act: Action | None, args: Sequence[Sequence]) -> tuple:
    act = _action_or_trivial(a, act)
    if len(args) != f.n:
        raise ValueError(f"expected {f.n} arguments")
    args = [vec(x) for x in args]
    cache: dict = {}

    def letter(var, lab):
        key = (var, lab)
        v = cache.get(key)
        if v is None:
            v = act.apply(lab, args[var])
            cache[key] = v
        return v

    out = [ZERO] * a.dim
    for (perm, labels), c in f.terms:
        acc = letter(perm[0], labels[0])
        for var, lab in zip(perm[1:], labels[1:]):
            if not any(acc):
                break
            acc = a.product(acc, letter(var, lab))
        for k, x in enumerate(acc):
            if x:
                out[k] += c * x
    return tuple(out)


# --------------------------------------------------------------------------
# integer evaluation tensors


class _IntegerModel:
    """Structure constants and action operators scaled to integers."""

    def __init__(self, a: Algebra, act: Action):
        d = a.dim
        dens = [x.denominator for i in range(d) for j in range(d) for x in a.mult[i][j]]
        self.mden = reduce(math.lcm, dens, 1)
        ops = act.operators
        dens = [x.denominator for m in ops for r in m for x in r]
        self.rden = reduce(math.lcm, dens, 1)
        mult = [[[int(x * self.mden) for x in a.mult[i][j]] for j in range(d)] for i in range(d)]
        # V[h][a, v] = coordinate v of rho(h) e_a
        vs = [[[int(ops[h][v][col] * self.rden) for v in range(d)] for col in range(d)] for h in range(len(ops))]
        self.mmax = max((abs(x) for p in mult for q in p for x in q), default=0)
        self.rmax = max((abs(x) for m in vs for r in m for x in r), default=0)
        self.d = d
        self.mult_list = mult
        self.v_list = vs

    def bound(self, n: int) -> int:
        b = self.rmax
        for _ in range(n - 1):
            b = b * self.d * self.d * self.mmax * self.rmax
        return b

    def arrays(self, n: int, extra: int = 1):
        dtype = np.int64 if self.bound(n) * extra < 2**62 else object
        m = np.array(self.mult_list, dtype=dtype)
        v = [np.array(x, dtype=dtype) for x in self.v_list]
        return m, v, dtype

    def scale(self, n: int) -> int:
        """Common factor of every degree-n product tensor."""
        return self.mden ** (n - 1) * self.rden**n


def product_tensors(a: Algebra, act: Action, n: int, label_tuples: Iterable[tuple], extra: int = 1):
    """Yield (labels, P) with P[i_1..i_n, out] = scale * coordinate ``out``
    of (h_1 e_{i_1})(h_2 e_{i_2})...(h_n e_{i_n}), position-indexed."""
    model = _IntegerModel(a, act)
    m, vs, _ = model.arrays(n, extra)
    cache: dict = {}

    def tensor(prefix: tuple):
        t = cache.get(prefix)
        if t is not None:
            return t
        if len(prefix) == 1:
            t = vs[prefix[0]]
        else:
            prev = tensor(prefix[:-1])
            # prev[..., u] , mult[u, v, o], V[a, v]
            tmp = np.tensordot(prev, m, axes=([prev.ndim - 1], [0]))  # [..., v, o]
            t = np.tensordot(tmp, vs[prefix[-1]], axes=([tmp.ndim - 2], [1]))  # [..., o, a]
            t = np.swapaxes(t, -1, -2)
        if len(prefix) < n:
            cache[prefix] = t
        return t

    for labels in label_tuples:
        yield labels, tensor(tuple(labels))
    return model


def _check_entries(rows: int, cols: int, cap: int):
    if rows * cols > cap:
        raise ResourceExceeded("matrix entries", rows * cols, cap)


def evaluation_matrix(a: Algebra, act: Action | None, n: int, cap: int | None = None) -> np.ndarray:
    """Rows: monomials in lexicographic (perm, labels) order.  Columns:
    (input basis tuple, output coordinate) in lexicographic order.  Entries
    are the evaluations times a common positive integer."""
    act = _action_or_trivial(a, act)
    cap = resolve_cap(cap)
    dh = act.dim_h
    nrows = math.factorial(n) * dh**n
    ncols = a.dim ** (n + 1)
    if math.factorial(n) * dh**n > cap:
        raise ResourceExceeded("monomials", nrows, cap)
    _check_entries(nrows, ncols, cap)
    label_tuples = list(itertools.product(range(dh), repeat=n))
    tensors = dict(product_tensors(a, act, n, label_tuples))
    dtype = next(iter(tensors.values())).dtype
    out = np.empty((nrows, ncols), dtype=dtype)
    r = 0
    for perm in itertools.permutations(range(n)):
        axes = list(inverse_perm(perm)) + [n]
        for labels in label_tuples:
            out[r] = np.transpose(tensors[labels], axes).reshape(-1)
            r += 1
    return out


@dataclass
class EvaluationImage:
    """Image of P^H_n in the n-linear maps A^n -> A; column index of
    (tuple, out) is ravel_multi_index(tuple + (out,), (dim A,)*(n+1))."""

    n: int
    dim_a: int
    space: RowSpace

    @property
    def rank(self) -> int:
        return self.space.rank

    def column(self, tup: Sequence[int], out: int) -> int:
        c = 0
        for i in tup:
            c = c * self.dim_a + i
        return c * self.dim_a + out

    def split_column(self, col: int) -> tuple[tuple, int]:
        idx = np.unravel_index(col, (self.dim_a,) * (self.n + 1))
        return tuple(int(i) for i in idx[:-1]), int(idx[-1])


def codimension(a: Algebra, act: Action | None, n: int, cap: int | None = None, with_image: bool = False):
    """c^H_n(A) as the rank of the evaluation matrix; with_image also returns
    the canonical image basis."""
    m = evaluation_matrix(a, act, n, cap)
    if not with_image:
        return integer_rank(m)
    space = row_space(m, with_basis=True)
    return space.rank, EvaluationImage(n, a.dim, space)


def codimension_oracle(a: Algebra, act: Action | None, n: int) -> int:
    """Independent check: evaluate every monomial on every basis tuple with
    exact rationals and take a dense rank."""
    act = _action_or_trivial(a, act)
    tuples = list(itertools.product(range(a.dim), repeat=n))
    basis = [a.basis(i) for i in range(a.dim)]
    rows = []
    for f in monomial_basis(n, act.labels, cap=10**9):
        row = []
        for t in tuples:
            row.extend(evaluate(f, a, act, [basis[i] for i in t]))
        rows.append(row)
    return rank(rows)


def graded_codimension(graded, n: int) -> int:
    """c^gr_n by summing, over degree assignments of the variables, the rank
    of ordinary monomials on homogeneous basis tuples."""
    a = graded.algebra
    g = graded.group
    act = trivial_action(a)
    by_deg: dict[int, list[int]] = {}
    for i, el in enumerate(graded.component_of):
        by_deg.setdefault(el, []).append(i)
    basis = [a.basis(i) for i in range(a.dim)]
    mons = monomial_basis(n, act.labels, cap=10**9)
    total = 0
    for alpha in itertools.product(range(g.order), repeat=n):
        pools = [by_deg.get(x, []) for x in alpha]
        if any(not p for p in pools):
            continue
        tuples = list(itertools.product(*pools))
        rows = []
        for f in mons:
            row = []
            for t in tuples:
                row.extend(evaluate(f, a, act, [basis[i] for i in t]))
            rows.append(row)
        total += rank(rows)
    return total


def is_identity(f: HPolynomial, a: Algebra, act: Action | None, cap: int | None = None) -> bool:
    """Exact test on all basis tuples (enough by multilinearity)."""
    act = _action_or_trivial(a, act)
    cap = resolve_cap(cap)
    if a.dim**f.n > cap:
        raise ResourceExceeded("basis tuples", a.dim**f.n, cap)
    if not f.terms:
        return True
    return not np.any(evaluation_tensor(f, a, act))


def evaluation_tensor(f: HPolynomial, a: Algebra, act: Action | None) -> np.ndarray:
    """T[i_1..i_n, out] = s * f(e_{i_1}, ..., e_{i_n})[out] for a positive
    integer s (the common scale); all-zero iff f is an identity."""
    act = _action_or_trivial(a, act)
    n = f.n
    den = reduce(math.lcm, (c.denominator for _, c in f.terms), 1)
    coefs = [int(c * den) for _, c in f.terms]
    extra = sum(abs(c) for c in coefs) or 1
    label_set = sorted({labels for (_, labels), _ in f.terms})
    tensors = dict(product_tensors(a, act, n, label_set, extra))
    dtype = next(iter(tensors.values())).dtype
    total = np.zeros((a.dim,) * (n + 1), dtype=dtype)
    for ((perm, labels), _), c in zip(f.terms, coefs):
        axes = list(inverse_perm(perm)) + [n]
        total += c * np.transpose(tensors[labels], axes)
    return total


def values_on_basis(f: HPolynomial, a: Algebra, act: Action | None) -> np.ndarray:
    """Exact values f(e_{i_1},...,e_{i_n}) as an object array of Fractions."""
    act = _action_or_trivial(a, act)
    t = evaluation_tensor(f, a, act)
    model = _IntegerModel(a, act)
    den = reduce(math.lcm, (c.denominator for _, c in f.terms), 1)
    s = model.scale(f.n) * den
    return np.vectorize(lambda x: Fraction(int(x), s), otypes=[object])(t)


# --------------------------------------------------------------------------
# bounds


@dataclass
class BoundsResult:
    n: int
    c_n: int
    c_h_n: int
    dim_a: int
    dim_h: int
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed


def check_bounds(a: Algebra, act: Action | None, n: int, cap: int | None = None) -> BoundsResult:
    act = _action_or_trivial(a, act)
    c = codimension(a, None, n, cap)
    ch = codimension(a, act, n, cap)
    dh = act.dim_h
    rep = CheckReport()
    rep.add("c_n <= c^H_n", c <= ch, f"{c} <= {ch}")
    rep.add("c^H_n <= (dim H)^n c_n", ch <= dh**n * c, f"{ch} <= {dh}^{n}*{c}")
    rep.add("c^H_n <= (dim A)^(n+1)", ch <= a.dim ** (n + 1), f"{ch} <= {a.dim}^{n + 1}")
    return BoundsResult(n, c, ch, a.dim, dh, rep)


# --------------------------------------------------------------------------
# alternation and polynomial constructions


def alternate(f: HPolynomial, varset: Sequence[int]) -> HPolynomial:
    vs = list(varset)
    if any(not 0 <= v < f.n for v in vs) or len(set(vs)) != len(vs):
        raise ValueError("varset must be distinct variables of f")
    terms = []
    for p in itertools.permutations(range(len(vs))):
        s = sign(p)
        tau = list(range(f.n))
        for i, j in enumerate(p):
            tau[vs[i]] = vs[j]
        for (perm, labels), c in f.terms:
            terms.append((s * c, tuple(tau[q] for q in perm), labels))
    return HPolynomial.build(f.n, f.h_labels, terms)


def transposition(n: int, i: int, j: int) -> tuple:
    t = list(range(n))
    t[i], t[j] = j, i
    return tuple(t)


def is_alternating(f: HPolynomial, varset: Sequence[int]) -> bool:
    """Swapping any two variables of the set negates f."""
    vs = list(varset)
    return all(
        f.permute_variables(transposition(f.n, vs[i], vs[j])) == -f
        for i in range(len(vs))
        for j in range(i + 1, len(vs))
    )


def regev_words(ell: int) -> Iterable[tuple[int, tuple]]:
    """(sign, word) for Regev's polynomial; x_i is variable i, y_i is ell^2 + i."""
    if ell >= 3:
        raise FeasibilityLimit(f"expanding the central polynomial for ell={ell} needs ({ell * ell}!)^2 terms")
    if ell < 1:
        raise ValueError("ell must be positive")
    m = ell * ell
    blocks = []
    start = 0
    for b in range(ell):
        size = 2 * b + 1
        blocks.append(range(start, start + size))
        start += size
    for s in itertools.permutations(range(m)):
        ss = sign(s)
        for t in itertools.permutations(range(m)):
            word = []
            for blk in blocks:
                word.extend(s[i] for i in blk)
                word.extend(m + t[i] for i in blk)
            yield ss * sign(t), tuple(word)


def regev(ell: int) -> HPolynomial:
    m = ell * ell
    return HPolynomial.build(2 * m, ("1",), [(sg, w, (0,) * (2 * m)) for sg, w in regev_words(ell)])


def regev_values_on_matrices(ell: int = 2) -> np.ndarray:
    """All values of regev(ell) on basis tuples of M_ell, shape (d,)*2ell^2 + (d,)."""
    from .constructions import matrix_algebra

    a = matrix_algebra(ell)
    return values_on_basis(regev(ell), a, None)


def scalar_values_only(values: np.ndarray, ell: int) -> tuple[bool, bool]:
    """(every value is a scalar matrix, some value is nonzero) for M_ell values."""
    d = ell * ell
    flat = values.reshape(-1, d)
    diag = [r * ell + r for r in range(ell)]
    off = [i for i in range(d) if i not in diag]
    scalar = not np.any(flat[:, off]) and all(np.all(flat[:, diag[0]] == flat[:, k]) for k in diag[1:])
    return bool(scalar), bool(np.any(flat))


# --- rewriting operator words into H-polynomials ---------------------------


class _Rewriter:
    """Expands h(w_1 w_2 ... w_m) into sums of labelled words using
    decomposition witnesses of the action."""

    def __init__(self, a: Algebra, act: Action):
        self.h = act.action_algebra
        self.wits = generalized_witnesses(self.h, a, act)
        bad = [self.h.labels[i] for i, w in enumerate(self.wits) if w is None]
        if bad:
            raise NotHSimple(f"no product decomposition for {bad}")
        self.memo: dict = {}

    def act_label(self, hb: int, lab):
        """gamma_hb * label as a list of (basis index, coefficient)."""
        if lab is None:
            return [(hb, ONE)]
        row = self.h.mult[hb][lab]
        return [(k, c) for k, c in enumerate(row) if c]

    def expand(self, hb: int, word: tuple) -> dict:
        key = (hb, word)
        got = self.memo.get(key)
        if got is not None:
            return got
        out: dict = {}
        if len(word) == 1:
            var, lab = word[0]
            for k, c in self.act_label(hb, lab):
                out[((var, k),)] = out.get(((var, k),), ZERO) + c
        else:
            left, right = word[:1], word[1:]
            for coef, u, v, flipped in self.wits[hb].terms:
                el = self.expand(u, left)
                er = self.expand(v, right)
                for wl, cl in el.items():
                    for wr, cr in er.items():
                        w = wr + wl if flipped else wl + wr
                        out[w] = out.get(w, ZERO) + coef * cl * cr
            out = {w: c for w, c in out.items() if c}
        self.memo[key] = out
        return out

    def apply(self, hb: int, poly: dict) -> dict:
        out: dict = {}
        for w, c in poly.items():
            for w2, c2 in self.expand(hb, w).items():
                out[w2] = out.get(w2, ZERO) + c * c2
        return {w: c for w, c in out.items() if c}


def _to_hpolynomial(poly: dict, names: Sequence[str], h: Algebra) -> HPolynomial:
    idx = {nm: i for i, nm in enumerate(names)}
    unit = h.unit
    terms = []
    for word, c in poly.items():
        perm = tuple(idx[var] for var, _ in word)
        labels = tuple(unit if lab is None else lab for _, lab in word)
        terms.append((c, perm, labels))
    return HPolynomial.build(len(names), h.labels, terms)


def endomorphism_span_dim(b0: Algebra, act: Action) -> int:
    """dim span{ phi(a) psi(b) rho(h) } inside End(B_0)."""
    n = b0.dim
    ops = []
    for i in range(n):
        li = b0.left_matrix(b0.basis(i))
        for k in range(n):
            lr = matmul(li, b0.right_matrix(b0.basis(k)))
            for h in range(act.dim_h):
                m = matmul(lr, [list(r) for r in act.operators[h]])
                ops.append([x for r in m for x in r])
    return Subspace(n * n, ops).dim


@dataclass
class AlternatingWitness:
    """A polynomial with its alternating variable sets and the substitution
    making it act as the identity on B_0 in the last variable."""

    poly: HPolynomial
    names: tuple
    sets: tuple  # tuples of variable indices
    fixed: dict  # variable index -> element of B_0
    z: int  # index of the free variable
    mu: Fraction = ONE
    extra: dict = field(default_factory=dict)

    def substitution(self, zbar: Sequence) -> list:
        args = []
        for i in range(self.poly.n):
            args.append(tuple(zbar) if i == self.z else self.fixed[i])
        return args


def _operator_basis_choice(b0: Algebra, act: Action):
    ell = b0.dim
    flat = lambda m: [x for r in m for x in r]  # noqa: E731
    span = Subspace(ell * ell, [flat(b0.left_matrix(b0.basis(i))) for i in range(ell)])
    chosen = []
    for i in range(ell):
        li = b0.left_matrix(b0.basis(i))
        for k in range(ell):
            lr = matmul(li, b0.right_matrix(b0.basis(k)))
            for h in range(act.dim_h):
                if span.dim == ell * ell:
                    return chosen
                m = flat(matmul(lr, [list(r) for r in act.operators[h]]))
                nxt = Subspace(ell * ell, list(span.basis) + [m])
                if nxt.dim > span.dim:
                    span = nxt
                    chosen.append((i, k, h))
    if span.dim < ell * ell:
        raise NotHSimple("phi(B0) psi(B0) rho(H) does not span End(B0)")
    return chosen


def single_set_alternating(b0: Algebra, act: Action) -> AlternatingWitness:
    """Alternating in two ell-sets, acting as the identity on B_0."""
    ell = b0.dim
    if ell > 2:
        raise FeasibilityLimit(f"dim B0 = {ell}; the central polynomial is expanded only for ell <= 2")
    j, _ = radical(b0)
    if j.dim:
        raise NotHSimple("B0 is not semisimple")
    if not is_h_simple(b0, act):
        raise NotHSimple("B0 is not split-H-simple")
    chosen = _operator_basis_choice(b0, act)
    s = len(chosen)
    rw = _Rewriter(b0, act)
    xs = [f"x{i + 1}" for i in range(ell)]
    ys = [f"y{i + 1}" for i in range(ell)]
    zs = [f"z{t + 1}" for t in range(s)]
    us = [f"u{t + 1}" for t in range(s)]
    vs = [f"v{t + 1}" for t in range(s)]
    ws = [f"w{t + 1}" for t in range(s)]
    names = xs + ys + zs + us + vs + ws + ["z"]
    m = ell * ell

    def slot(v):
        # (left factor, right factor, H-label) of the operator in slot v
        if v < ell:
            return xs[v], None, None
        if v < m:
            t = v - ell
            return zs[t], us[t], chosen[t][2]
        v -= m
        if v < ell:
            return ys[v], None, None
        t = v - ell
        return vs[t], ws[t], chosen[t][2]

    total: dict = {}
    for sg, word in regev_words(ell):
        poly = {(("z", None),): ONE}
        for v in reversed(word):
            left, right, hb = slot(v)
            if hb is not None:
                poly = rw.apply(hb, poly)
            pre = ((left, None),)
            post = ((right, None),) if right else ()
            poly = {pre + w + post: c for w, c in poly.items()}
        for w, c in poly.items():
            total[w] = total.get(w, ZERO) + sg * c
    total = {w: c for w, c in total.items() if c}
    f = _to_hpolynomial(total, names, act.action_algebra)

    idx = {nm: i for i, nm in enumerate(names)}
    fixed = {}
    for i in range(ell):
        fixed[idx[xs[i]]] = b0.basis(i)
        fixed[idx[ys[i]]] = b0.basis(i)
    for t, (i, k, _) in enumerate(chosen):
        fixed[idx[zs[t]]] = b0.basis(i)
        fixed[idx[vs[t]]] = b0.basis(i)
        fixed[idx[us[t]]] = b0.basis(k)
        fixed[idx[ws[t]]] = b0.basis(k)
    wit = AlternatingWitness(f, tuple(names), (tuple(idx[x] for x in xs), tuple(idx[y] for y in ys)), fixed, idx["z"])
    val = evaluate(f, b0, act, wit.substitution(b0.basis(0)))
    mu = val[0]
    if not mu:
        raise NotHSimple("central polynomial vanished on the operator basis")
    for i in range(ell):
        e = b0.basis(i)
        if evaluate(f, b0, act, wit.substitution(e)) != tuple(mu * x for x in e):
            raise NotHSimple("operator value is not scalar")
    wit.poly = f.scale(1 / mu)
    wit.mu = mu
    wit.extra["operator_choice"] = chosen
    return wit


def _glue(wit: AlternatingWitness, b0: Algebra, act: Action, rw: _Rewriter, step: int) -> AlternatingWitness:
    """Add two new alternating sets u, v by inserting u_j v_j before the
    variables of the first set, then normalize by the trace-form determinant."""
    ell = b0.dim
    f = wit.poly
    names = list(wit.names)
    us = [f"u{step}_{j + 1}" for j in range(ell)]
    vs = [f"v{step}_{j + 1}" for j in range(ell)]
    xset = wit.sets[0]
    words: dict = {}
    for (perm, labels), c in f.terms:
        words[tuple((names[p], lab) for p, lab in zip(perm, labels))] = c
    for j in range(ell):
        nxt: dict = {}
        for word, c in words.items():
            for xi in xset:
                xname = names[xi]
                pos = next(q for q, (var, _) in enumerate(word) if var == xname)
                _, lab = word[pos]
                inner = ((us[j], None), (vs[j], None), (xname, None))
                for w2, c2 in rw.expand(lab, inner).items():
                    w = word[:pos] + w2 + word[pos + 1:]
                    nxt[w] = nxt.get(w, ZERO) + c * c2
        words = {w: c for w, c in nxt.items() if c}
    new_names = us + vs + names
    g = _to_hpolynomial(words, new_names, act.action_algebra)
    g = alternate(g, range(ell))
    g = alternate(g, range(ell, 2 * ell))
    norm = math.factorial(ell) * det(trace_form(b0))
    g = g.scale(1 / norm)
    shift = 2 * ell
    fixed = {i + shift: v for i, v in wit.fixed.items()}
    for j in range(ell):
        fixed[j] = b0.basis(j)
        fixed[ell + j] = b0.basis(j)
    sets = (tuple(range(shift, shift + ell)),) + tuple(tuple(i + shift for i in st) for st in wit.sets[1:])
    sets = sets + (tuple(range(ell)), tuple(range(ell, 2 * ell)))
    return AlternatingWitness(g, tuple(new_names), sets, fixed, wit.z + shift, wit.mu, dict(wit.extra))


def build_alternating(b0: Algebra, act: Action, k: int) -> AlternatingWitness:
    """Polynomial alternating in 2k disjoint ell-sets whose witness
    substitution acts as the identity on B_0 in the free variable."""
    if k < 1:
        raise ValueError("k must be at least 1")
    wit = single_set_alternating(b0, act)
    rw = _Rewriter(b0, act)
    for step in range(2, k + 1):
        wit = _glue(wit, b0, act, rw, step)
    return wit


def verify_alternating_witness(wit: AlternatingWitness, b0: Algebra, act: Action) -> CheckReport:
    rep = CheckReport()
    for st in wit.sets:
        rep.add(f"alternating in {[wit.names[i] for i in st]}", is_alternating(wit.poly, st))
    for i in range(b0.dim):
        e = b0.basis(i)
        rep.add(f"identity on {b0.labels[i]}", evaluate(wit.poly, b0, act, wit.substitution(e)) == e)
    return rep


def sweedler_alternating(k: int, n: int) -> tuple[HPolynomial, list]:
    """prod_j f_1(x_{4j-3..4j}) * x_{4k+1} ... x_n over the dual action on
    Sweedler's algebra, with the witness substitution."""
    if n < 4 * k:
        raise ValueError("need n >= 4k")
    _, a, act = sweedler_scenario()
    h = act.action_algebra
    blocks = []
    for j in range(k):
        blocks.append([(sign(s), tuple(4 * j + x for x in s)) for s in itertools.permutations(range(4))])
    tail = tuple(range(4 * k, n))
    terms = []
    for combo in itertools.product(*blocks):
        sg = math.prod(c for c, _ in combo)
        perm = tuple(v for _, w in combo for v in w) + tail
        labels = (0, 1, 2, 3) * k + (h.unit,) * len(tail)
        terms.append((sg, perm, labels))
    f = HPolynomial.build(n, h.labels, terms)
    # witness: (1, c, b, cb) per block, 1 elsewhere
    args = [a.basis(i) for _ in range(k) for i in range(4)] + [a.unit] * len(tail)
    return f, args


# --------------------------------------------------------------------------
# exchange format


def format_polynomial(f: HPolynomial) -> str:
    lines = [f"n {f.n}", "labels " + " ".join(f.h_labels)]
    for (perm, labels), c in f.terms:
        lines.append(
            f"term {c} | {' '.join(str(p + 1) for p in perm)} | {' '.join(f.h_labels[l] for l in labels)}"
        )
    return "\n".join(lines) + "\n"


def parse_polynomial(text: str, h_labels: Sequence[str] | None = None) -> HPolynomial:
    """Lines: ``n <int>``, ``labels <l1> ...``, then ``term <coef> | <perm> | <labels>``
    with 1-based variables; ``#`` starts a comment."""
    n = None
    labels = None
    terms = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        try:
            if head == "n":
                n = int(rest)
            elif head == "labels":
                labels = rest.split()
                if h_labels is not None and tuple(labels) != tuple(h_labels):
                    raise PolynomialParseError(ln, f"labels {labels} do not match the action basis {list(h_labels)}")
            elif head == "term":
                if n is None or labels is None:
                    raise PolynomialParseError(ln, "term before n/labels")
                parts = [p.strip() for p in rest.split("|")]
                if len(parts) != 3:
                    raise PolynomialParseError(ln, "term needs 'coef | perm | labels'")
                coef = frac(parts[0])
                perm = tuple(int(x) - 1 for x in parts[1].split())
                labs = parts[2].split()
                if len(perm) != n or len(labs) != n:
                    raise PolynomialParseError(ln, f"term must have {n} variables and labels")
                lidx = {lab: i for i, lab in enumerate(labels)}
                if any(lab not in lidx for lab in labs):
                    raise PolynomialParseError(ln, "unknown label")
                if sorted(perm) != list(range(n)):
                    raise PolynomialParseError(ln, "not a permutation")
                terms.append((coef, perm, tuple(lidx[lab] for lab in labs)))
            else:
                raise PolynomialParseError(ln, f"unknown keyword {head!r}")
        except PolynomialParseError:
            raise
        except (ValueError, ZeroDivisionError) as e:
            raise PolynomialParseError(ln, str(e)) from e
    if n is None or labels is None:
        raise PolynomialParseError(0, "missing n or labels")
    return HPolynomial.build(n, labels, terms)


def unit_vector_label(dim_h: int, i: int):
    return unit_vector(dim_h, i)

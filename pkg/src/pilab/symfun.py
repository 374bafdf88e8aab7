"""Symmetric group machinery: partitions, hook formula, characters, Young
symmetrizers and cocharacter multiplicities."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .actions import Action
from .exactalg import Algebra
from .identities import HPolynomial, codimension, sign

PARTITION_GUARD = 12
COCHARACTER_GUARD = 5


class GuardExceeded(ValueError):
    pass


class NonIntegralMultiplicity(ArithmeticError):
    pass


Partition = tuple


def is_partition(lam: Sequence[int]) -> bool:
    return all(x > 0 for x in lam) and all(a >= b for a, b in zip(lam, lam[1:]))


def partitions(n: int) -> list[Partition]:
    """Partitions of n, reverse lexicographic: (n), (n-1, 1), ..., (1^n)."""
    if not 1 <= n <= PARTITION_GUARD:
        raise GuardExceeded(f"partitions are enumerated for 1 <= n <= {PARTITION_GUARD}")

    def gen(rest, largest):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, largest), 0, -1):
            for tail in gen(rest - k, k):
                yield (k,) + tail

    return list(gen(n, n))


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0])) if lam else ()


def hook_lengths(lam: Partition) -> list[list[int]]:
    lt = conjugate(lam)
    return [[lam[i] - j + lt[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def hook_dim(lam: Partition) -> int:
    n = sum(lam)
    return math.factorial(n) // math.prod(h for row in hook_lengths(lam) for h in row)


def standard_tableaux(lam: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All standard fillings, by placing n, n-1, ... into removable corners."""
    n = sum(lam)
    out = []

    def rec(shape, filling):
        m = sum(shape)
        if m == 0:
            out.append(tuple(tuple(filling[(i, j)] for j in range(lam[i])) for i in range(len(lam))))
            return
        for i in range(len(shape)):
            if shape[i] and (i + 1 == len(shape) or shape[i + 1] < shape[i]):
                s = list(shape)
                s[i] -= 1
                filling[(i, shape[i] - 1)] = m
                rec(s, filling)
                del filling[(i, shape[i] - 1)]

    rec(list(lam), {})
    assert all(len(set(x for r in t for x in r)) == n for t in out)
    return out


def _beta(lam: Partition, length: int) -> tuple:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    s = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in s:
            between = sum(1 for x in beta if b - r < x < b)
            nb = tuple(sorted((s - {b}) | {b - r}, reverse=True))
            total += (-1) ** between * _mn(nb, rest)
    return total


def irreducible_character(lam: Partition, mu: Partition) -> int:
    """chi_lambda at the class of cycle type mu (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    return _mn(_beta(lam, len(lam)), tuple(sorted(mu, reverse=True)))


def class_size(mu: Partition) -> int:
    n = sum(mu)
    z = 1
    for k, grp in itertools.groupby(sorted(mu)):
        m = len(list(grp))
        z *= k**m * math.factorial(m)
    return math.factorial(n) // z


def cycle_type_representative(mu: Partition) -> tuple:
    perm = []
    start = 0
    for k in mu:
        perm.extend(start + (i + 1) % k for i in range(k))
        start += k
    return tuple(perm)


def cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                c += 1
            out.append(c)
    return tuple(sorted(out, reverse=True))


# --------------------------------------------------------------------------
# cocharacters


@dataclass(frozen=True)
class CocharacterRow:
    partition: Partition
    multiplicity: int


def image_trace(image, tau: Sequence[int]) -> Fraction:
    """Trace of f -> (a -> f(a_tau(1), ..., a_tau(n))) on the evaluation image."""
    sp = image.space
    total = Fraction(0)
    for k, col in enumerate(sp.pivot_columns()):
        tup, out = image.split_column(col)
        moved = tuple(tup[tau[j]] for j in range(len(tup)))
        total += sp.entry(k, image.column(moved, out))
    return total


def cocharacter(a: Algebra, act: Action | None, n: int, cap: int | None = None) -> list[CocharacterRow]:
    if not 1 <= n <= COCHARACTER_GUARD:
        raise GuardExceeded(f"cocharacters are computed for 1 <= n <= {COCHARACTER_GUARD}")
    c, image = codimension(a, act, n, cap, with_image=True)
    classes = partitions(n)
    traces = {mu: image_trace(image, cycle_type_representative(mu)) for mu in classes}
    rows = []
    nf = math.factorial(n)
    for lam in classes:
        s = sum(class_size(mu) * irreducible_character(lam, mu) * traces[mu] for mu in classes)
        m = Fraction(s, 1) / nf
        if m.denominator != 1 or m < 0:
            raise NonIntegralMultiplicity(f"multiplicity of {lam} is {m}")
        rows.append(CocharacterRow(lam, int(m)))
    if sum(r.multiplicity * hook_dim(r.partition) for r in rows) != c:
        raise NonIntegralMultiplicity("multiplicities do not add up to the codimension")
    return rows


def multiplicity_vanishing_check(rows: Sequence[CocharacterRow], d: int, p: int, dim_a: int) -> bool:
    """Rows with a nonzero multiplicity have sum_{i>d} lambda_i < p and at
    most dim A parts."""
    for r in rows:
        if r.multiplicity == 0:
            continue
        lam = r.partition
        if sum(lam[d:]) >= p or len(lam) > dim_a:
            return False
    return True


def strip_bounded(rows: Sequence[CocharacterRow], height: int) -> bool:
    return all(len(r.partition) <= height for r in rows if r.multiplicity)


# --------------------------------------------------------------------------
# Young symmetrizers


@dataclass(frozen=True)
class Tableau:
    rows: tuple  # tuple of tuples of entries 1..n

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def columns(self) -> list[tuple]:
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))]

    @classmethod
    def row_major(cls, lam: Partition) -> "Tableau":
        it = iter(range(1, sum(lam) + 1))
        return cls(tuple(tuple(next(it) for _ in range(k)) for k in lam))

    def __post_init__(self):
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau filling must be a bijection onto 1..n")
        if not is_partition(self.shape):
            raise ValueError("rows must be weakly decreasing in length")


def _symmetrize(f: HPolynomial, block: Sequence[int], signed: bool) -> HPolynomial:
    block = [b - 1 for b in block]
    if len(block) < 2:
        return f
    terms = []
    for p in itertools.permutations(range(len(block))):
        s = sign(p) if signed else 1
        tau = list(range(f.n))
        for i, j in enumerate(p):
            tau[block[i]] = block[j]
        for (perm, labels), c in f.terms:
            terms.append((s * c, tuple(tau[q] for q in perm), labels))
    return HPolynomial.build(f.n, f.h_labels, terms)


def apply_row_symmetrizer(t: Tableau, f: HPolynomial) -> HPolynomial:
    for r in t.rows:
        f = _symmetrize(f, r, signed=False)
    return f


def apply_column_antisymmetrizer(t: Tableau, f: HPolynomial) -> HPolynomial:
    for c in t.columns():
        f = _symmetrize(f, c, signed=True)
    return f


def young_symmetrizer_apply(t: Tableau, f: HPolynomial, variant: str = "e") -> HPolynomial:
    """e_T f = a_T (b_T f); e*_T f = b_T (a_T f)."""
    if t.n != f.n:
        raise ValueError("tableau size must match the number of variables")
    if variant == "e":
        return apply_row_symmetrizer(t, apply_column_antisymmetrizer(t, f))
    if variant in ("e*", "estar"):
        return apply_column_antisymmetrizer(t, apply_row_symmetrizer(t, f))
    raise ValueError("variant must be 'e' or 'e*'")

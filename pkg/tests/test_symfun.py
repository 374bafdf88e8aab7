import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pilab import gallery as gal
from pilab.actions import trivial_action
from pilab.constructions import matrix_algebra, upper_triangular
from pilab.exactalg import pi_exponent, radical, wedderburn_malcev
from pilab.identities import HPolynomial, codimension, transposition
from pilab.symfun import (
    CocharacterRow,
    GuardExceeded,
    Tableau,
    class_size,
    cocharacter,
    conjugate,
    cycle_type,
    cycle_type_representative,
    hook_dim,
    hook_lengths,
    irreducible_character,
    multiplicity_vanishing_check,
    partitions,
    standard_tableaux,
    strip_bounded,
    young_symmetrizer_apply,
)


def as_dict(rows):
    return {r.partition: r.multiplicity for r in rows if r.multiplicity}


# --- partitions and characters ------------------------------------------------


def test_partitions():
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions(1) == [(1,)]
    assert len(partitions(5)) == 7
    assert [len(partitions(n)) for n in range(1, 13)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    with pytest.raises(GuardExceeded):
        partitions(13)


def test_hook_examples():
    assert hook_dim((5,)) == 1
    assert hook_dim((2, 1)) == 2
    assert hook_lengths((2, 2)) == [[3, 2], [2, 1]]
    assert hook_dim((2, 2)) == 2
    assert conjugate((3, 1)) == (2, 1, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_dim_counts_standard_tableaux(n):
    for lam in partitions(n):
        assert hook_dim(lam) == len(standard_tableaux(lam))
    assert sum(hook_dim(l) ** 2 for l in partitions(n)) == math.factorial(n)


def test_character_examples():
    for mu in partitions(4):
        assert irreducible_character((4,), mu) == 1
    assert irreducible_character((1, 1), (2,)) == -1
    assert irreducible_character((2, 1), (1, 1, 1)) == 2
    assert irreducible_character((2, 1), (3,)) == -1


@pytest.mark.parametrize("n", range(1, 7))
def test_character_orthogonality(n):
    classes = partitions(n)
    assert sum(class_size(mu) for mu in classes) == math.factorial(n)
    for lam, nu in itertools.product(classes, repeat=2):
        s = sum(class_size(mu) * irreducible_character(lam, mu) * irreducible_character(nu, mu) for mu in classes)
        assert Fraction(s, math.factorial(n)) == (1 if lam == nu else 0)


def test_cycle_types():
    for mu in partitions(5):
        assert cycle_type(cycle_type_representative(mu)) == mu


# --- cocharacters -------------------------------------------------------------

FROZEN = {
    ("M2", 2): {(2,): 1, (1, 1): 1},
    ("M2", 4): {(4,): 1, (3, 1): 3, (2, 2): 2, (2, 1, 1): 3},
    ("UT2", 4): {(4,): 1, (3, 1): 3, (2, 2): 1, (2, 1, 1): 2},
    ("Sweedler with dual action", 2): {(2,): 13, (1, 1): 9},
    ("Sweedler with dual action", 3): {(3,): 29, (2, 1): 34, (1, 1, 1): 8},
    ("F^2 cyclic orbit", 4): {(4,): 5, (3, 1): 3, (2, 2): 1},
    ("M2 Z2-graded", 4): {(4,): 11, (3, 1): 18, (2, 2): 9, (2, 1, 1): 9, (1, 1, 1, 1): 1},
}

BY_NAME = {s.name: s for s in gal.all_scenarios()}


@pytest.mark.parametrize("key", sorted(FROZEN), ids=lambda k: f"{k[0]} n={k[1]}")
def test_frozen_cocharacters(key):
    s = BY_NAME[key[0]]
    assert as_dict(cocharacter(s.algebra, s.action, key[1])) == FROZEN[key]


def test_m2_n2_by_explicit_traces():
    # image of {xy, yx}: the transposition swaps them, trace 0; identity trace 2
    m2 = matrix_algebra(2)
    rows = as_dict(cocharacter(m2, None, 2))
    tr_id, tr_swap = 2, 0
    assert rows[(2,)] == (tr_id + tr_swap) // 2 and rows[(1, 1)] == (tr_id - tr_swap) // 2


@pytest.mark.parametrize("s", gal.all_scenarios(), ids=lambda s: s.name)
def test_n1_multiplicity_is_first_codimension(s):
    rows = cocharacter(s.algebra, s.action, 1)
    assert rows == [CocharacterRow((1,), codimension(s.algebra, s.action, 1))]


@pytest.mark.parametrize("s", gal.all_scenarios(), ids=lambda s: s.name)
def test_cocharacter_consistency(s):
    for n in (2, 3):
        rows = cocharacter(s.algebra, s.action, n)
        assert all(isinstance(r.multiplicity, int) and r.multiplicity >= 0 for r in rows)
        assert sum(r.multiplicity * hook_dim(r.partition) for r in rows) == codimension(s.algebra, s.action, n)
        assert strip_bounded(rows, s.algebra.dim)


def test_swap_pair_cocharacter_sums_to_codimension():
    s = gal.field_orbits(2)
    rows = cocharacter(s.algebra, s.action, 2)
    assert sum(r.multiplicity * hook_dim(r.partition) for r in rows) == codimension(s.algebra, s.action, 2) == 4


def test_cocharacter_guard():
    m2 = matrix_algebra(2)
    with pytest.raises(GuardExceeded):
        cocharacter(m2, None, 6)


# --- multiplicity vanishing -------------------------------------------------


def test_vanishing_examples():
    m2 = matrix_algebra(2)
    assert multiplicity_vanishing_check(cocharacter(m2, None, 2), 4, 1, 4)
    assert not multiplicity_vanishing_check([CocharacterRow((1, 1, 1, 1, 1), 1)], 4, 1, 4)
    assert multiplicity_vanishing_check([CocharacterRow((1, 1, 1, 1, 1), 0)], 4, 1, 4)
    ut = upper_triangular(2)
    rows = cocharacter(ut, None, 3)
    d = wedderburn_malcev(ut, trivial_action(ut))
    assert (pi_exponent(d), d.nilpotency_index) == (2, 2)
    assert multiplicity_vanishing_check(rows, 2, 2, 3)
    assert as_dict(rows) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}


@pytest.mark.parametrize("s", gal.exponent_gallery() + [BY_NAME["M2 sign flip"], BY_NAME["UT2"]], ids=lambda s: s.name)
def test_vanishing_on_gallery(s):
    d = wedderburn_malcev(s.algebra, s.action)
    for n in (1, 2, 3):
        rows = cocharacter(s.algebra, s.action, n)
        assert multiplicity_vanishing_check(rows, pi_exponent(d), d.nilpotency_index, s.algebra.dim)


# --- Young symmetrizers -------------------------------------------------------


def identity_monomial(n):
    return HPolynomial.monomial(n, ("1",), tuple(range(n)), (0,) * n)


def test_column_tableau_gives_alternating_sum():
    k = 3
    t = Tableau(((1,), (2,), (3,)))
    got = young_symmetrizer_apply(t, identity_monomial(k), "e*")
    from pilab.identities import sign

    want = HPolynomial.build(k, ("1",), [(sign(p), p, (0,) * k) for p in itertools.permutations(range(k))])
    assert got == want


def test_row_tableau_gives_symmetric_sum():
    k = 3
    got = young_symmetrizer_apply(Tableau.row_major((k,)), identity_monomial(k), "e")
    want = HPolynomial.build(k, ("1",), [(1, p, (0,) * k) for p in itertools.permutations(range(k))])
    assert got == want


@pytest.mark.parametrize("lam", [l for n in range(2, 5) for l in partitions(n)], ids=str)
def test_e_star_is_quasi_idempotent(lam):
    n = sum(lam)
    t = Tableau.row_major(lam)
    f = identity_monomial(n)
    once = young_symmetrizer_apply(t, f, "e*")
    twice = young_symmetrizer_apply(t, once, "e*")
    assert twice == once.scale(Fraction(math.factorial(n), hook_dim(lam)))
    assert not once.is_zero()


@given(st.data())
@settings(max_examples=25)
def test_column_swap_negates(data):
    lam = data.draw(st.sampled_from([l for n in range(2, 5) for l in partitions(n) if len(l) > 1]))
    n = sum(lam)
    t = Tableau.row_major(lam)
    col = data.draw(st.sampled_from([c for c in t.columns() if len(c) > 1]))
    i, j = data.draw(st.sampled_from(list(itertools.combinations(col, 2))))
    swapped = Tableau(tuple(tuple(j if x == i else i if x == j else x for x in r) for r in t.rows))
    terms = [(data.draw(st.integers(-2, 2)), tuple(data.draw(st.permutations(range(n)))), (0,) * n) for _ in range(2)]
    f = HPolynomial.build(n, ("1",), terms)
    tau = transposition(n, i - 1, j - 1)
    lhs = young_symmetrizer_apply(swapped, f, "e*")
    assert lhs == -young_symmetrizer_apply(t, f.permute_variables(tau), "e*")


def test_tableau_validation():
    with pytest.raises(ValueError):
        Tableau(((1, 1), (2,)))
    with pytest.raises(ValueError):
        Tableau(((1,), (2, 3)))
    with pytest.raises(ValueError):
        young_symmetrizer_apply(Tableau.row_major((2,)), identity_monomial(3))

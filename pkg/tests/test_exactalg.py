import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pilab import gallery as gal
from pilab.actions import cyclic_group, gaction_to_generalized, sweedler_scenario, trivial_action
from pilab.constructions import direct_sum, field_power, matrix_algebra, upper_triangular
from pilab.exactalg import (
    AssociativityViolation,
    Decomposition,
    DimensionMismatch,
    NotInvariant,
    NotSemisimple,
    UnitViolation,
    change_basis,
    closure,
    conjugate_operator,
    h_simple_components,
    is_h_simple,
    is_ideal,
    make_algebra,
    nilpotency_index,
    pi_exponent,
    powers,
    quotient,
    radical,
    restrict,
    subspace_product,
    verify_decomposition,
    wedderburn_malcev,
)
from pilab.linalg import Subspace, identity

from strategies import invertible_matrices, matrices


def swap_action(a, images):
    n = a.dim
    m = [[0] * n for _ in range(n)]
    for i, j in enumerate(images):
        m[j][i] = 1
    return gaction_to_generalized(cyclic_group(2), a, [(identity(n), False), (m, False)])


def cycle_action(m):
    a = field_power(m)
    return a, gal.field_orbits(m).action


# --- construction ---------------------------------------------------------


def test_split_field_pair_and_matrix_algebra_are_valid():
    a = make_algebra(2, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1])
    assert a.product(a.basis(0), a.basis(1)) == (0, 0)
    m2 = matrix_algebra(2)
    e11, e12 = m2.basis(m2.index("e11")), m2.basis(m2.index("e12"))
    assert m2.product(e11, e12) == e12
    assert m2.product(e12, e11) == (0, 0, 0, 0)


def test_nonassociative_tensor_rejected():
    # e1 e1 = e2, e1 e2 = e1, others 0: (e1 e1) e2 = 0 but e1 (e1 e2) = e2
    mult = [[[0, 1], [1, 0]], [[0, 0], [0, 0]]]
    with pytest.raises(AssociativityViolation):
        make_algebra(2, mult)


def test_bad_unit_rejected():
    with pytest.raises(UnitViolation):
        make_algebra(2, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 0])


def test_shape_mismatch_rejected():
    with pytest.raises(DimensionMismatch):
        make_algebra(2, [[[1, 0]]])


# --- radical --------------------------------------------------------------


def test_radical_examples():
    ut = upper_triangular(2)
    j, p = radical(ut)
    assert j == Subspace.span_of_units(3, [ut.index("e12")]) and p == 2
    j, p = radical(matrix_algebra(2))
    assert j.is_zero() and p == 1
    _, sw, _ = sweedler_scenario()
    j, p = radical(sw)
    assert j == Subspace.span_of_units(4, [2, 3]) and p == 2


@pytest.mark.parametrize("a", [upper_triangular(2), upper_triangular(3), direct_sum(upper_triangular(2), matrix_algebra(2))], ids=["UT2", "UT3", "UT2+M2"])
def test_radical_postconditions(a):
    j, p = radical(a)
    assert is_ideal(a, j)
    assert powers(a, j)[-1].is_zero() if p > 1 else j.is_zero()
    assert nilpotency_index(a, j) == p
    qj, _ = radical(quotient(a, j))
    assert qj.is_zero()


# --- subspace products and closures ---------------------------------------


def test_subspace_product_examples():
    ut = upper_triangular(2)
    e11 = Subspace.span_of_units(3, [ut.index("e11")])
    e12 = Subspace.span_of_units(3, [ut.index("e12")])
    assert subspace_product(ut, e11, e12) == e12
    assert subspace_product(ut, e12, e12).is_zero()
    m2 = matrix_algebra(2)
    got = subspace_product(m2, Subspace.span_of_units(4, [0]), Subspace.full(4))
    assert got == Subspace.span_of_units(4, [m2.index("e11"), m2.index("e12")])


@given(matrices(2, 3), matrices(1, 3), matrices(2, 3))
def test_subspace_product_distributive_and_monotone(u, v, w):
    a = upper_triangular(2)
    su, sv, sw = Subspace(3, u), Subspace(3, v), Subspace(3, w)
    assert subspace_product(a, su, sv + sw) == subspace_product(a, su, sv) + subspace_product(a, su, sw)
    assert subspace_product(a, su, sv) <= subspace_product(a, su + sw, sv)


def test_closure_examples():
    a = field_power(2)
    act = swap_action(a, [1, 0])
    e1 = Subspace.span_of_units(2, [0])
    assert closure(a, act, e1) == Subspace.full(2)
    assert closure(a, trivial_action(a), e1) == e1
    assert closure(a, act, Subspace.zero(2)).is_zero()


@given(matrices(1, 6, st.integers(-2, 2)), matrices(1, 6, st.integers(-2, 2)))
@settings(max_examples=25)
def test_closure_idempotent_extensive_monotone(u, v):
    s = gal.ut_pair_swap(2)
    a, act = s.algebra, s.action
    su = Subspace(6, u)
    sv = su + Subspace(6, v)
    c = closure(a, act, su)
    assert su <= c
    assert closure(a, act, c) == c
    assert c <= closure(a, act, sv)


# --- H-simple components --------------------------------------------------


def test_h_simple_components_examples():
    m2m2 = direct_sum(matrix_algebra(2), matrix_algebra(2))
    full = Subspace.full(8)
    assert len(h_simple_components(m2m2, full, trivial_action(m2m2))) == 2
    swap = swap_action(m2m2, [(i + 4) % 8 for i in range(8)])
    assert h_simple_components(m2m2, full, swap) == [full]
    a, act = cycle_action(3)
    assert h_simple_components(a, Subspace.full(3), act) == [Subspace.full(3)]


def test_h_simple_components_errors():
    ut = upper_triangular(2)
    with pytest.raises(NotSemisimple):
        h_simple_components(ut, Subspace.full(3), trivial_action(ut))
    a = field_power(2)
    with pytest.raises(NotInvariant):
        h_simple_components(a, Subspace.span_of_units(2, [0]), swap_action(a, [1, 0]))


def test_is_h_simple_examples():
    h, sw, act = sweedler_scenario()
    v = is_h_simple(sw, act)
    assert v and v.envelope_dim == 16
    a = field_power(2)
    assert is_h_simple(a, swap_action(a, [1, 0]))
    v = is_h_simple(a, trivial_action(a))
    assert not v and (v.envelope_dim, v.full_dim) == (2, 4)


@pytest.mark.parametrize("s", gal.exponent_gallery(), ids=lambda s: s.name)
def test_gallery_components_pairwise_annihilate_and_are_invariant(s):
    d = wedderburn_malcev(s.algebra, s.action)
    comps = list(d.components)
    for x, y in itertools.permutations(range(len(comps)), 2):
        assert subspace_product(s.algebra, comps[x], comps[y]).is_zero()
    for c in comps:
        assert all(c.is_invariant(m) for m in s.action.operators)


# --- pi_exponent ----------------------------------------------------------


def test_pi_exponent_examples():
    assert pi_exponent(wedderburn_malcev(gal.s3_graded_m2m2().algebra, gal.s3_graded_m2m2().action)) == 4
    s = gal.ut_pair_swap(2)
    assert pi_exponent(wedderburn_malcev(s.algebra, s.action)) == 4
    m2 = matrix_algebra(2)
    assert pi_exponent(wedderburn_malcev(m2, trivial_action(m2))) == 4


def test_pi_exponent_nilpotent_is_zero():
    a = make_algebra(2, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]])
    j, p = radical(a)
    assert j == Subspace.full(2)
    assert pi_exponent(Decomposition(a, j, p, ())) == 0


def test_ut2_trivial_uses_the_radical_chain():
    ut = upper_triangular(2)
    d = wedderburn_malcev(ut, trivial_action(ut))
    assert d.radical == Subspace.span_of_units(3, [1])
    assert d.semisimple_part == Subspace.span_of_units(3, [0, 2])
    assert pi_exponent(d) == 2


@pytest.mark.parametrize("s", gal.exponent_gallery(), ids=lambda s: s.name)
def test_both_readings_of_the_formula_agree(s):
    d = wedderburn_malcev(s.algebra, s.action)
    assert pi_exponent(d) == pi_exponent(d, allow_repeats=True) == s.expected["d"]
    rev = Decomposition(d.algebra, d.radical, d.nilpotency_index, tuple(reversed(d.components)))
    assert pi_exponent(rev) == pi_exponent(d)
    b = d.semisimple_part.dim
    assert max(c.dim for c in d.components) <= pi_exponent(d) <= b


def test_semisimple_exponent_is_largest_component():
    a = direct_sum(matrix_algebra(2), field_power(1))
    d = wedderburn_malcev(a, trivial_action(a))
    assert d.radical.is_zero()
    assert pi_exponent(d) == max(c.dim for c in d.components) == 4


@given(invertible_matrices(6))
@settings(max_examples=15)
def test_pi_exponent_invariant_under_basis_change(p):
    s = gal.ut_pair_swap(2)
    a2 = change_basis(s.algebra, p)
    ops = tuple(tuple(map(tuple, conjugate_operator([list(r) for r in m], p))) for m in s.action.operators)
    act2 = type(s.action)(s.action.action_algebra, ops, s.action.kind, s.action.hopf, s.action.group, s.action.anti)
    d2 = wedderburn_malcev(a2, act2)
    assert verify_decomposition(a2, act2, d2).passed
    assert pi_exponent(d2) == 4


# --- verification and Wedderburn-Malcev ------------------------------------


def test_verify_decomposition_examples():
    s = gal.s3_graded_m2m2()
    assert verify_decomposition(s.algebra, s.action, wedderburn_malcev(s.algebra, s.action)).passed
    sw = gal.sweedler()
    rep = verify_decomposition(sw.algebra, sw.action, sw.decomposition)
    assert not rep.passed
    assert rep["radical matches"].passed
    assert rep.first_failure().name == "J invariant under g_b"
    assert not rep["J invariant under g_cb"].passed
    m2 = matrix_algebra(2)
    d = Decomposition(m2, Subspace.zero(4), 1, (Subspace.full(4),))
    assert verify_decomposition(m2, trivial_action(m2), d).passed


def test_wedderburn_malcev_examples():
    m2 = matrix_algebra(2)
    d = wedderburn_malcev(m2, trivial_action(m2))
    assert d.radical.is_zero() and d.components == (Subspace.full(4),)
    s = gal.ut_pair_swap(2)
    d = wedderburn_malcev(s.algebra, s.action)
    a = s.algebra
    paired = [
        Subspace(6, [a.basis(a.index("e11^(1)")), a.basis(a.index("e11^(2)"))]),
        Subspace(6, [a.basis(a.index("e22^(1)")), a.basis(a.index("e22^(2)"))]),
    ]
    assert d.semisimple_part == paired[0] + paired[1]
    assert sorted(d.components, key=lambda c: c.pivots) == paired


def test_wedderburn_malcev_refuses_noninvariant_radical():
    sw = gal.sweedler()
    with pytest.raises(NotInvariant) as err:
        wedderburn_malcev(sw.algebra, sw.action)
    assert sw.action.labels[err.value.h_index] == "g_b"


def test_restrict_gives_subalgebra_structure():
    s = gal.s3_graded_m2m2()
    d = wedderburn_malcev(s.algebra, s.action)
    for c in d.components:
        r = restrict(s.algebra, c)
        assert r.dim == c.dim and r.unit is not None

import itertools
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pilab import gallery as gal
from pilab.actions import (
    Action,
    HopfData,
    InvalidGroup,
    NotBimoduleProjection,
    NotDiagonalizable,
    NotHomomorphism,
    WrongMorphismType,
    action_to_grading,
    check_generalized_action,
    check_homomorphism,
    check_hopf,
    check_module_algebra,
    cyclic_group,
    dual_group_hopf,
    duality_transform,
    gaction_to_generalized,
    group_algebra,
    is_anti_automorphism,
    is_automorphism,
    left_integral,
    make_graded,
    make_group,
    maschke_projection,
    sweedler_hopf,
    sweedler_scenario,
    symmetric_group,
    trivial_group,
)
from pilab.constructions import direct_sum, field_power, matrix_algebra
from pilab.exactalg import NotSemisimple
from pilab.linalg import Subspace, identity, matmul, matvec
from pilab.scenario import ValidationError, load_scenario, parse_scenario

FIXTURES = Path(__file__).parent / "fixtures"


def hopf_gallery():
    return [
        sweedler_hopf(),
        group_algebra(cyclic_group(2)),
        group_algebra(symmetric_group(3)),
        group_algebra(trivial_group()),
        dual_group_hopf(cyclic_group(2)),
        dual_group_hopf(symmetric_group(3)),
        dual_group_hopf(trivial_group()),
    ]


def swap_action(a, images):
    n = a.dim
    m = [[0] * n for _ in range(n)]
    for i, j in enumerate(images):
        m[j][i] = 1
    return gaction_to_generalized(cyclic_group(2), a, [(identity(n), False), (m, False)])


# --- groups ---------------------------------------------------------------


def test_group_builders():
    assert symmetric_group(3).order == 6
    g = symmetric_group(3)
    t12, t23 = g.labels.index("(12)"), g.labels.index("(23)")
    assert g.mul(t12, t12) == g.identity
    assert g.mul(t12, t23) != g.mul(t23, t12)
    assert g.inverse(g.mul(t12, t23)) == g.mul(t23, t12)
    assert cyclic_group(3).labels == ("e", "s", "s^2")


def test_invalid_groups_rejected():
    with pytest.raises(InvalidGroup):
        make_group([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroup):
        make_group([[0, 1, 2], [1, 2, 0], [2, 0, 1]], g0=[0, 1])
    with pytest.raises(InvalidGroup):
        make_group([[0, 1, 2], [1, 2, 0], [2, 0, 1]], g0=[0])  # index 3


# --- Hopf algebras ----------------------------------------------------------


@pytest.mark.parametrize("h", hopf_gallery(), ids=lambda h: ",".join(h.labels))
def test_constructed_hopf_algebras_pass(h):
    rep = check_hopf(h)
    assert rep.passed, rep.failures()


def test_group_algebra_shapes():
    z2 = group_algebra(cyclic_group(2))
    s = z2.algebra.basis(1)
    assert z2.algebra.product(s, s) == z2.algebra.unit
    assert z2.delta(s) == (0, 0, 0, 1)
    assert group_algebra(symmetric_group(3)).dim == 6
    triv = group_algebra(trivial_group())
    assert triv.dim == 1 and triv.counit == (1,) and triv.antipode == ((1,),)


def test_dual_group_hopf_is_a_sum_of_fields():
    for g in (cyclic_group(2), symmetric_group(3), trivial_group()):
        h = dual_group_hopf(g).algebra
        es = [h.basis(i) for i in range(h.dim)]
        for i, j in itertools.product(range(h.dim), repeat=2):
            assert h.product(es[i], es[j]) == (es[i] if i == j else tuple([0] * h.dim))
        assert tuple(sum(col) for col in zip(*es)) == h.unit
    z2 = dual_group_hopf(cyclic_group(2))
    assert z2.labels == ("h_e", "h_s")


def test_sweedler_with_identity_antipode_fails_at_b():
    h = sweedler_hopf()
    bad = HopfData(h.algebra, h.comul, h.counit, tuple(map(tuple, identity(4))))
    rep = check_hopf(bad)
    assert not rep["antipode m(S(x)id)Delta"].passed
    assert "b" in rep["antipode m(S(x)id)Delta"].detail
    assert rep["coassociativity"].passed


@given(st.data())
@settings(max_examples=60)
def test_single_entry_mutation_breaks_an_axiom(data):
    h = data.draw(st.sampled_from(hopf_gallery()[:3] + hopf_gallery()[4:6]))
    part = data.draw(st.sampled_from(["comul", "counit", "antipode"]))
    delta = data.draw(st.sampled_from([Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3)]))
    d = h.dim
    comul = [list(r) for r in h.comul]
    counit = list(h.counit)
    anti = [list(r) for r in h.antipode]
    if part == "comul":
        i, j = data.draw(st.integers(0, d - 1)), data.draw(st.integers(0, d * d - 1))
        comul[i][j] += delta
    elif part == "counit":
        counit[data.draw(st.integers(0, d - 1))] += delta
    else:
        anti[data.draw(st.integers(0, d - 1))][data.draw(st.integers(0, d - 1))] += delta
    mutated = HopfData(h.algebra, tuple(map(tuple, comul)), tuple(counit), tuple(map(tuple, anti)))
    assert not check_hopf(mutated).passed


# --- module algebras and generalized actions --------------------------------


def test_module_algebra_examples():
    s = gal.m2_z2_grading()
    assert check_module_algebra(s.hopf, s.algebra, s.action)
    triv = group_algebra(trivial_group())
    m2 = matrix_algebra(2)
    assert check_module_algebra(triv, m2, Action(triv.algebra, (tuple(map(tuple, identity(4))),), "hopf", hopf=triv))
    h, a, act = sweedler_scenario()
    assert check_module_algebra(act.hopf, a, act)


def test_transpose_needs_flipped_terms():
    s = gal.m2_transpose()
    rep = check_generalized_action(s.action.action_algebra, s.algebra, s.action)
    assert rep.passed
    w = rep.witnesses[1]
    assert not w.flipped_part_zero
    a, act = s.algebra, s.action
    for i, j in itertools.product(range(4), repeat=2):
        x, y = a.basis(i), a.basis(j)
        total = [Fraction(0)] * 4
        for c, u, v, flipped in w.terms:
            p = a.product(act.apply(v, y), act.apply(u, x)) if flipped else a.product(act.apply(u, x), act.apply(v, y))
            total = [t + c * q for t, q in zip(total, p)]
        assert tuple(total) == act.apply(1, a.product(x, y))


@pytest.mark.parametrize("s", [gal.m2_z2_grading(), gal.sweedler(), gal.s3_graded_m2m2()], ids=lambda s: s.name)
def test_hopf_actions_have_zero_flipped_part(s):
    rep = check_generalized_action(s.action.action_algebra, s.algebra, s.action)
    assert rep.passed
    assert all(w.flipped_part_zero for w in rep.witnesses)


@pytest.mark.parametrize("s", [x for x in gal.all_scenarios() if x.kind == "group"], ids=lambda s: s.name)
def test_group_actions_are_generalized_actions(s):
    assert check_homomorphism(s.action).passed
    assert check_generalized_action(s.action.action_algebra, s.algebra, s.action).passed


def test_rejected_action_fixture():
    text = (FIXTURES / "rejected_action.json").read_text()
    with pytest.raises(ValidationError) as err:
        parse_scenario(text)
    assert err.value.checker == "generalized action"
    assert "s" in err.value.detail


def test_gaction_examples_and_errors():
    m2 = matrix_algebra(2)
    assert gal.m2_sign_flip().action.kind == "group"
    assert gal.m2_transpose().action.anti == (False, True)
    a = field_power(2)
    assert swap_action(a, [1, 0]).operators[1] == ((0, 1), (1, 0))
    tr = gal._perm_matrix([0, 2, 1, 3])
    assert is_anti_automorphism(m2, tr) and not is_automorphism(m2, tr)
    with pytest.raises(WrongMorphismType):
        gaction_to_generalized(cyclic_group(2), m2, [(identity(4), False), (tr, False)])
    with pytest.raises(WrongMorphismType):
        gaction_to_generalized(cyclic_group(2, g0=[0]), m2, [(identity(4), False), (identity(4), False)])
    flip = gal._signed_perm_matrix([(0, 1), (1, -1), (2, -1), (3, 1)])
    z3 = cyclic_group(3)
    with pytest.raises(NotHomomorphism):
        gaction_to_generalized(z3, m2, [(identity(4), False), (flip, False), (identity(4), False)])


# --- gradings and duality ---------------------------------------------------


def test_m2_grading_dualizes_to_diagonal_projections():
    s = gal.m2_z2_grading()
    e0, e1 = s.action.operators
    x = (1, 2, 3, 4)
    assert matvec(e0, x) == (1, 0, 0, 4)
    assert matvec(e1, x) == (0, 2, 3, 0)
    assert s.action.hopf.counit == (1, 0)


def test_trivial_grading_dualizes_to_identity():
    m2 = matrix_algebra(2)
    _, act = duality_transform(make_graded(m2, trivial_group(), [0] * 4))
    assert act.operators == (tuple(map(tuple, identity(4))),)


@pytest.mark.parametrize("s", [x for x in gal.all_scenarios() if x.kind == "grading"], ids=lambda s: s.name)
def test_duality_roundtrip(s):
    a, act = duality_transform(s.graded)
    assert action_to_grading(a, act) == s.graded


def test_s3_grading_roundtrip_recovers_three_components():
    s = gal.s3_graded_m2m2()
    back = action_to_grading(*duality_transform(s.graded))
    assert len(set(back.component_of)) == 3
    assert s.action.dim_h == 6


def test_bad_grading_and_non_projection_rejected():
    m2 = matrix_algebra(2)
    with pytest.raises(Exception):
        make_graded(m2, cyclic_group(2), [0, 1, 0, 0])
    s = gal.m2_sign_flip()
    with pytest.raises(NotDiagonalizable):
        action_to_grading(s.algebra, s.action, cyclic_group(2))


# --- integrals and Maschke --------------------------------------------------


def _is_left_integral(h, t):
    return all(h.algebra.product(h.algebra.basis(i), t) == tuple(h.counit[i] * x for x in t) for i in range(h.dim))


def test_left_integrals():
    z2 = group_algebra(cyclic_group(2))
    r = left_integral(z2)
    assert r.t == (Fraction(1, 2), Fraction(1, 2)) and r.semisimple and r.tensor_identity
    d = dual_group_hopf(cyclic_group(2))
    r = left_integral(d)
    assert r.t == (1, 0) and r.semisimple and r.tensor_identity
    sw = sweedler_hopf()
    r = left_integral(sw)
    assert not r.semisimple and r.tensor_identity is None
    assert r.t == (0, 0, 1, 1)  # b + cb
    for h in hopf_gallery():
        assert _is_left_integral(h, left_integral(h).t)


def test_integral_tensor_identity_for_dual_group_algebras():
    for g in (cyclic_group(2), symmetric_group(3)):
        r = left_integral(dual_group_hopf(g))
        assert r.semisimple and r.tensor_identity is True


def test_maschke_swap_on_field_power():
    a = field_power(4)
    act = swap_action(a, [1, 0, 3, 2])
    i1 = Subspace.span_of_units(4, [0, 1])
    proj = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    pt = maschke_projection(act.hopf, act, a, i1, proj)
    assert matmul(pt, pt) == pt
    assert matmul(pt, [list(r) for r in act.operators[1]]) == matmul([list(r) for r in act.operators[1]], pt)


def test_maschke_trivial_hopf_leaves_projection_unchanged():
    triv = group_algebra(trivial_group())
    a = field_power(2)
    act = Action(triv.algebra, (tuple(map(tuple, identity(2))),), "hopf", hopf=triv)
    proj = [[1, 0], [0, 0]]
    assert maschke_projection(triv, act, a, Subspace.span_of_units(2, [0]), proj) == proj


def test_maschke_dual_s3_on_graded_summand():
    s = gal.s3_graded_m2m2()
    i1 = Subspace.span_of_units(8, range(4))
    proj = [[1 if r == c and r < 4 else 0 for c in range(8)] for r in range(8)]
    pt = maschke_projection(s.hopf, s.action, s.algebra, i1, proj)
    for m in s.action.operators:
        mm = [list(r) for r in m]
        assert matmul(pt, mm) == matmul(mm, pt)


def test_maschke_errors():
    h, a, act = sweedler_scenario()
    with pytest.raises(NotSemisimple):
        maschke_projection(h, act, a, Subspace.span_of_units(4, [2, 3]), identity(4))
    a = field_power(2)
    act = swap_action(a, [1, 0])
    with pytest.raises(NotBimoduleProjection):
        maschke_projection(act.hopf, act, a, Subspace.span_of_units(2, [0]), [[1, 0], [0, 0]])
    with pytest.raises(NotBimoduleProjection):
        maschke_projection(act.hopf, act, a, Subspace.full(2), [[1, 1], [0, 0]])


# --- Sweedler ----------------------------------------------------------------


def test_sweedler_action_table():
    h, a, act = sweedler_scenario()
    table = {
        "g_1": ["1", "0", "b", "0"],
        "g_c": ["0", "c", "0", "cb"],
        "g_b": ["0", "0", "c", "0"],
        "g_cb": ["0", "0", "0", "1"],
    }
    names = ["1", "c", "b", "cb"]
    for k, lab in enumerate(act.labels):
        for y in range(4):
            want = table[lab][y]
            expected = tuple([0] * 4) if want == "0" else a.basis(names.index(want))
            assert act.apply(k, a.basis(y)) == expected, (lab, names[y])


def test_sweedler_shipped_file_matches_constructor():
    s = load_scenario(str(Path(__file__).parents[1] / "scenarios" / "sweedler.json"))
    ref = gal.sweedler()
    assert s == ref
    assert not s.action.averaging_available()

"""Worked examples as ready-made scenarios."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .actions import (
    Action,
    GradedAlgebra,
    GroupData,
    HopfData,
    cyclic_group,
    duality_transform,
    gaction_to_generalized,
    make_graded,
    make_group,
    sweedler_scenario,
    symmetric_group,
    trivial_action,
)
from .constructions import direct_sum, field_power, group_algebra_of, matrix_algebra, upper_triangular
from .exactalg import Algebra, Decomposition
from .identities import HPolynomial
from .linalg import ONE, ZERO, identity


@dataclass(eq=True)
class Scenario:
    name: str
    algebra: Algebra
    kind: str  # trivial | group | grading | hopf | generalized
    action: Action
    group: GroupData | None = None
    assignment: tuple | None = None  # ((matrix, anti), ...) for kind == "group"
    graded: GradedAlgebra | None = None
    hopf: HopfData | None = None
    decomposition: Decomposition | None = None
    expected: dict = field(default_factory=dict)


def _perm_matrix(images: list[int]) -> list[list]:
    """Matrix sending basis vector i to basis vector images[i]."""
    n = len(images)
    m = [[ZERO] * n for _ in range(n)]
    for i, j in enumerate(images):
        m[j][i] = ONE
    return m


def _signed_perm_matrix(images: list[tuple[int, int]]) -> list[list]:
    n = len(images)
    m = [[ZERO] * n for _ in range(n)]
    for i, (j, s) in enumerate(images):
        m[j][i] = ONE * s
    return m


def _matpow(m, k):
    from .linalg import matmul

    out = identity(len(m))
    for _ in range(k):
        out = matmul(out, m)
    return out


def group_scenario(name, a, g, assignment, expected=None) -> Scenario:
    act = gaction_to_generalized(g, a, assignment)
    return Scenario(name, a, "group", act, group=g, assignment=tuple((tuple(map(tuple, m)), bool(f)) for m, f in assignment), expected=expected or {})


def graded_scenario(name, a, g, component_of, expected=None) -> Scenario:
    gr = make_graded(a, g, component_of)
    _, act = duality_transform(gr)
    return Scenario(name, a, "grading", act, group=g, graded=gr, hopf=act.hopf, expected=expected or {})


# --- matrices and signs -----------------------------------------------------


def m2_sign_flip() -> Scenario:
    """Z_2 acting on M_2 by negating the off-diagonal entries."""
    a = matrix_algebra(2)
    g = cyclic_group(2)
    psi = _signed_perm_matrix([(0, 1), (1, -1), (2, -1), (3, 1)])
    return group_scenario("M2 sign flip", a, g, [(identity(4), False), (psi, False)])


def m2_transpose() -> Scenario:
    """Z_2 acting on M_2 by transposition (an anti-automorphism)."""
    a = matrix_algebra(2)
    g = cyclic_group(2, g0=[0])
    return group_scenario("M2 transpose", a, g, [(identity(4), False), (_perm_matrix([0, 2, 1, 3]), True)])


def m2_z2_grading() -> Scenario:
    """M_2 graded by Z_2: diagonal in degree 0, off-diagonal in degree 1."""
    return graded_scenario("M2 Z2-graded", matrix_algebra(2), cyclic_group(2), [0, 1, 1, 0])


# --- gallery ----------------------------------------------------------------


def s3_graded_m2m2() -> Scenario:
    """M_2 + M_2 graded by S_3: off-diagonal units of the first copy in
    degree (12), of the second copy in degree (23)."""
    g = symmetric_group(3)
    e, t12, t23 = g.labels.index("e"), g.labels.index("(12)"), g.labels.index("(23)")
    a = direct_sum(matrix_algebra(2), matrix_algebra(2))
    comp = [e, t12, t12, e, e, t23, t23, e]
    return graded_scenario("S3-graded M2+M2", a, g, comp, {"d": 4, "c_1": 3})


def graded_group_algebra(g: GroupData | None = None) -> Scenario:
    g = g or symmetric_group(3)
    a = group_algebra_of(g.table, list(g.labels))
    return graded_scenario(f"F[G] naturally graded, |G|={g.order}", a, g, list(range(g.order)), {"d": g.order})


def field_orbits(m: int) -> Scenario:
    """F^m with Z_m cycling the idempotents (a single orbit of size m)."""
    a = field_power(m)
    g = cyclic_group(m)
    shift = _perm_matrix([(i + 1) % m for i in range(m)])
    assignment = [(_matpow(shift, k), False) for k in range(m)]
    return group_scenario(f"F^{m} cyclic orbit", a, g, assignment, {"d": m})


def matrix_pair_transpose_swap(k: int = 2) -> Scenario:
    """M_k + M_k with Z_2 acting by (a_1, a_2) -> (a_2^T, a_1^T)."""
    a = direct_sum(matrix_algebra(k), matrix_algebra(k))
    n = k * k
    images = []
    for copy in range(2):
        for r, c in itertools.product(range(k), repeat=2):
            images.append((1 - copy) * n + c * k + r)
    g = cyclic_group(2, g0=[0])
    return group_scenario(f"M{k}+M{k} transpose-swap", a, g, [(identity(2 * n), False), (_perm_matrix(images), True)], {"d": 2 * k * k})


def ut_pair_swap(k: int = 2) -> Scenario:
    """UT_k + UT_k with Z_2 swapping the summands."""
    u = upper_triangular(k)
    a = direct_sum(u, u)
    n = u.dim
    images = [(i + n) % (2 * n) for i in range(2 * n)]
    g = cyclic_group(2)
    return group_scenario(f"UT{k}+UT{k} swap", a, g, [(identity(2 * n), False), (_perm_matrix(images), False)], {"d": 2 * k})


def sweedler() -> Scenario:
    from .exactalg import Decomposition, radical
    from .linalg import Subspace

    h, a, act = sweedler_scenario()
    j, p = radical(a)
    cand = Decomposition(a, j, p, (Subspace(4, [a.basis(0), a.basis(1)]),))
    return Scenario("Sweedler with dual action", a, "hopf", act, hopf=act.hopf, decomposition=cand, expected={"c_1": 4})


def trivial_scenario(name: str, a: Algebra) -> Scenario:
    return Scenario(name, a, "trivial", trivial_action(a))


def exponent_gallery() -> list[Scenario]:
    """Scenarios whose invariant decomposition and d(A) are known."""
    return [
        s3_graded_m2m2(),
        graded_group_algebra(),
        field_orbits(2),
        field_orbits(3),
        matrix_pair_transpose_swap(2),
        ut_pair_swap(2),
    ]


def all_scenarios() -> list[Scenario]:
    return exponent_gallery() + [
        sweedler(),
        m2_sign_flip(),
        m2_transpose(),
        m2_z2_grading(),
        trivial_scenario("M2", matrix_algebra(2)),
        trivial_scenario("UT2", upper_triangular(2)),
    ]


# --- identity fixtures ------------------------------------------------------


def commutator(h_labels, u) -> HPolynomial:
    """[x^u, y^u] for an H-coordinate vector (or basis index) u."""
    return HPolynomial.build(2, h_labels, [(1, (0, 1), (u, u)), (-1, (1, 0), (u, u))])


@dataclass(frozen=True)
class IdentityFixture:
    name: str
    scenario: Scenario
    poly: HPolynomial
    identity: bool


def identity_fixtures() -> list[IdentityFixture]:
    flip, tr, gr, m2 = m2_sign_flip(), m2_transpose(), m2_z2_grading(), trivial_scenario("M2", matrix_algebra(2))
    return [
        IdentityFixture("[x+x^s, y+y^s] on M2 sign flip", flip, commutator(flip.action.labels, (1, 1)), True),
        IdentityFixture("[x-x^s, y-y^s] on M2 transpose", tr, commutator(tr.action.labels, (1, -1)), True),
        IdentityFixture("[x^h_e, y^h_e] on M2 Z2-graded", gr, commutator(gr.action.labels, 0), True),
        IdentityFixture("[x, y] on M2", m2, commutator(m2.action.labels, 0), False),
    ]

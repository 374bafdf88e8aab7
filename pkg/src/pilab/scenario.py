"""Scenario files: JSON with every rational written as a "p/q" string.

Top level: {"name"?, "algebra": {...}, "action": {"kind": ..., ...},
"decomposition"?: {"radical": rows, "components": [rows, ...]},
"expected"?: {...}}.  See README for the per-kind payloads.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from . import actions as ac
from .exactalg import AlgebraError, AssociativityViolation, Decomposition, UnitViolation, make_algebra, nilpotency_index
from .gallery import Scenario
from .linalg import Subspace, frac


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class ValidationError(ValueError):
    def __init__(self, checker: str, detail: str):
        self.checker = checker
        self.detail = detail
        super().__init__(f"{checker}: {detail}")


_RATIONAL = re.compile(r"^\s*-?\d+(\s*/\s*-?\d+)?\s*$")


def _line_of(text: str, token: str) -> int:
    pos = text.find(f'"{token}"')
    return text.count("\n", 0, pos) + 1 if pos >= 0 else 0


class _Reader:
    def __init__(self, text: str):
        self.text = text

    def q(self, x) -> Fraction:
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        if not isinstance(x, str) or not _RATIONAL.match(x):
            raise ParseError(_line_of(self.text, str(x)), f"not a rational string: {x!r}")
        try:
            return frac(x.replace(" ", ""))
        except ZeroDivisionError:
            raise ParseError(_line_of(self.text, x), f"zero denominator in {x!r}") from None

    def vec(self, xs) -> tuple:
        if not isinstance(xs, list):
            raise ParseError(0, f"expected a list, got {type(xs).__name__}")
        return tuple(self.q(x) for x in xs)

    def mat(self, rows) -> tuple:
        if not isinstance(rows, list):
            raise ParseError(0, "expected a matrix as a list of rows")
        return tuple(self.vec(r) for r in rows)

    def field(self, obj: dict, key: str, where: str):
        if not isinstance(obj, dict) or key not in obj:
            raise ParseError(_line_of(self.text, where) if where else 0, f"missing key {key!r} in {where or 'top level'}")
        return obj[key]


def _q(x: Fraction) -> str:
    return str(frac(x))


def _algebra_json(a) -> dict:
    out = {"dim": a.dim, "mult": [[[_q(x) for x in a.mult[i][j]] for j in range(a.dim)] for i in range(a.dim)]}
    if a.unit is not None:
        out["unit"] = [_q(x) for x in a.unit]
    out["labels"] = list(a.labels)
    return out


def _matrix_json(m) -> list:
    return [[_q(x) for x in r] for r in m]


def _group_json(g) -> dict:
    return {"table": [list(r) for r in g.table], "identity": g.identity, "g0": sorted(g.g0), "labels": list(g.labels)}


def _hopf_json(h) -> dict:
    d = _algebra_json(h.algebra)
    d["comul"] = [[_q(x) for x in r] for r in h.comul]
    d["counit"] = [_q(x) for x in h.counit]
    d["antipode"] = _matrix_json(h.antipode)
    return d


def emit_scenario(s: Scenario) -> str:
    out = {"name": s.name, "algebra": _algebra_json(s.algebra)}
    act: dict = {"kind": s.kind}
    if s.kind == "group":
        act["group"] = _group_json(s.group)
        act["assignment"] = [{"matrix": _matrix_json(m), "anti": f} for m, f in s.assignment]
    elif s.kind == "grading":
        act["group"] = _group_json(s.group)
        act["component_of"] = list(s.graded.component_of)
    elif s.kind == "hopf":
        act["hopf"] = _hopf_json(s.hopf)
        act["operators"] = [_matrix_json(m) for m in s.action.operators]
    elif s.kind == "generalized":
        act["action_algebra"] = _algebra_json(s.action.action_algebra)
        act["operators"] = [_matrix_json(m) for m in s.action.operators]
    out["action"] = act
    if s.decomposition is not None:
        d = s.decomposition
        out["decomposition"] = {
            "radical": [[_q(x) for x in r] for r in d.radical.basis],
            "components": [[[_q(x) for x in r] for r in c.basis] for c in d.components],
        }
    if s.expected:
        out["expected"] = dict(sorted(s.expected.items()))
    return json.dumps(out, indent=1, sort_keys=False) + "\n"


def _algebra(r: _Reader, obj, where: str):
    dim = r.field(obj, "dim", where)
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(_line_of(r.text, "dim"), "dim must be a positive integer")
    mult = r.field(obj, "mult", where)
    tensor = [[r.vec(row) for row in plane] for plane in mult] if isinstance(mult, list) else None
    if tensor is None or len(tensor) != dim or any(len(p) != dim or any(len(v) != dim for v in p) for p in tensor):
        raise ParseError(_line_of(r.text, "mult"), "mult must be a dim x dim x dim array")
    unit = r.vec(obj["unit"]) if obj.get("unit") is not None else None
    labels = obj.get("labels") or ()
    try:
        return make_algebra(dim, tensor, unit, labels)
    except AssociativityViolation as e:
        raise ValidationError("associativity", str(e)) from None
    except UnitViolation as e:
        raise ValidationError("unit", str(e)) from None
    except (AlgebraError, ValueError) as e:
        raise ValidationError("algebra", str(e)) from None


def _group(r: _Reader, obj):
    try:
        return ac.make_group(r.field(obj, "table", "group"), obj.get("identity", 0), obj.get("g0"), obj.get("labels") or ())
    except ac.InvalidGroup as e:
        raise ValidationError("group", str(e)) from None


def _hopf(r: _Reader, obj):
    alg = _algebra(r, obj, "hopf")
    try:
        h = ac.make_hopf(alg, [r.vec(x) for x in r.field(obj, "comul", "hopf")], r.vec(r.field(obj, "counit", "hopf")), r.mat(r.field(obj, "antipode", "hopf")))
    except ac.ActionError as e:
        raise ValidationError("hopf", str(e)) from None
    rep = ac.check_hopf(h)
    bad = rep.first_failure()
    if bad:
        raise ValidationError("hopf", f"{bad.name} {bad.detail}".strip())
    return h


def _operators(r: _Reader, obj, a, h):
    ops = tuple(r.mat(m) for m in r.field(obj, "operators", "action"))
    if len(ops) != h.dim or any(len(m) != a.dim or any(len(row) != a.dim for row in m) for m in ops):
        raise ValidationError("action", "one dim A x dim A operator per action-algebra basis element is required")
    return ops


def _check_action(act):
    rep = ac.check_homomorphism(act)
    bad = rep.first_failure()
    if bad:
        raise ValidationError("action homomorphism", f"{bad.name} {bad.detail}".strip())


def parse_scenario(text: str) -> Scenario:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.msg) from None
    if not isinstance(data, dict):
        raise ParseError(1, "top level must be an object")
    r = _Reader(text)
    a = _algebra(r, r.field(data, "algebra", ""), "algebra")
    act_obj = r.field(data, "action", "")
    kind = r.field(act_obj, "kind", "action")
    name = data.get("name", "")
    group = assignment = graded = hopf = None
    if kind == "trivial":
        act = ac.trivial_action(a)
    elif kind == "group":
        group = _group(r, r.field(act_obj, "group", "action"))
        items = r.field(act_obj, "assignment", "action")
        assignment = tuple((r.mat(it["matrix"]), bool(it.get("anti", False))) for it in items)
        try:
            act = ac.gaction_to_generalized(group, a, [([list(x) for x in m], f) for m, f in assignment])
        except ac.WrongMorphismType as e:
            raise ValidationError("morphism type", str(e)) from None
        except ac.NotHomomorphism as e:
            raise ValidationError("group homomorphism", str(e)) from None
    elif kind == "grading":
        group = _group(r, r.field(act_obj, "group", "action"))
        try:
            graded = ac.make_graded(a, group, r.field(act_obj, "component_of", "action"))
        except ac.ActionError as e:
            raise ValidationError("grading", str(e)) from None
        _, act = ac.duality_transform(graded)
        hopf = act.hopf
    elif kind == "hopf":
        hopf = _hopf(r, r.field(act_obj, "hopf", "action"))
        act = ac.Action(hopf.algebra, _operators(r, act_obj, a, hopf.algebra), "hopf", hopf=hopf)
        _check_action(act)
        if not ac.check_module_algebra(hopf, a, act):
            raise ValidationError("module algebra", "h(ab) != (h_(1) a)(h_(2) b) on some basis triple")
    elif kind == "generalized":
        h = _algebra(r, r.field(act_obj, "action_algebra", "action"), "action_algebra")
        if h.unit is None:
            raise ValidationError("action algebra", "a unit is required")
        act = ac.Action(h, _operators(r, act_obj, a, h), "generalized")
        _check_action(act)
        rep = ac.check_generalized_action(h, a, act)
        bad = rep.first_failure()
        if bad:
            raise ValidationError("generalized action", f"{bad.name} {bad.detail}".strip())
    else:
        raise ParseError(_line_of(text, "kind"), f"unknown action kind {kind!r}")

    decomposition = None
    if "decomposition" in data:
        dobj = data["decomposition"]
        rad = Subspace(a.dim, [r.vec(v) for v in r.field(dobj, "radical", "decomposition")])
        comps = [Subspace(a.dim, [r.vec(v) for v in c]) for c in r.field(dobj, "components", "decomposition")]
        decomposition = Decomposition(a, rad, nilpotency_index(a, rad), tuple(comps))
    expected = data.get("expected") or {}
    return Scenario(name, a, kind, act, group, assignment, graded, hopf, decomposition, dict(sorted(expected.items())))


def load_scenario(path: str) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())

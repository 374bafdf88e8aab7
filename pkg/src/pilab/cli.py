"""Command line front end: ``pilab <command> [scenario] [flags]``.

Every command prints a report whose TSV form has the fixed header
``quantity  value  bound  status`` ("-" marks an empty cell).  The first row
is the sha256 of the input.  Exit codes: 0 all checks pass, 1 a mathematical
check failed, 2 usage, parse or resource errors.  Timing goes to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import gallery as gal
from .exactalg import (
    AlgebraError,
    AveragingUnavailable,
    NotInvariant,
    is_associative,
    pi_exponent,
    radical,
    verify_decomposition,
    wedderburn_malcev,
)
from .identities import (
    FeasibilityLimit,
    PolynomialParseError,
    ResourceExceeded,
    check_bounds,
    codimension,
    is_identity,
    parse_polynomial,
    sweedler_alternating,
    evaluate,
)
from .linalg import vec
from .scenario import ParseError, ValidationError, emit_scenario, parse_scenario
from .symfun import GuardExceeded, NonIntegralMultiplicity, cocharacter, hook_dim, multiplicity_vanishing_check

HEADER = ("quantity", "value", "bound", "status")
COMMANDS = ("radical", "decompose", "exponent", "codim", "cochar", "check-identity", "verify", "bounds", "gallery")


@dataclass
class Report:
    command: str
    digest: str
    rows: list = field(default_factory=list)
    seconds: float = 0.0

    def add(self, quantity, value, bound="-", status="-") -> None:
        self.rows.append((str(quantity), str(value), str(bound), str(status)))

    def check(self, quantity, value, bound, ok: bool) -> bool:
        self.add(quantity, value, bound, "pass" if ok else "fail")
        return ok

    @property
    def passed(self) -> bool:
        return all(r[3] != "fail" for r in self.rows)

    def tsv(self) -> str:
        lines = ["\t".join(HEADER), f"input sha256\t{self.digest}\t-\t-"]
        lines += ["\t".join(r) for r in self.rows]
        return "\n".join(lines) + "\n"

    def text(self) -> str:
        rows = [HEADER, ("input sha256", self.digest, "-", "-")] + self.rows
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        out = [f"# {self.command}"]
        for r in rows:
            out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        return "\n".join(out) + "\n"


class UsageError(Exception):
    pass


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _fmt_vec(v) -> str:
    return "[" + " ".join(str(x) for x in v) + "]"


def _cap(args) -> int | None:
    env = os.environ.get("PILAB_CAP")
    if env:
        return int(env)
    return args.cap


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError(f"{args.command} requires --n")
    if args.n < 1:
        raise UsageError("--n must be positive")
    return args.n


def _decomposition(s, rep: Report):
    """User-supplied decomposition if present, else the computed one."""
    if s.decomposition is not None:
        return s.decomposition, "supplied"
    return wedderburn_malcev(s.algebra, s.action), "computed"


def _no_decomposition(s, e, rep: Report) -> None:
    rep.check("invariant decomposition", "none", "-", False)
    if isinstance(e, NotInvariant):
        rep.add("reason", f"J not invariant under {s.action.labels[e.h_index]}")
    else:
        rep.add("reason", str(e))


def _checks_to_rows(rep: Report, checks) -> None:
    for c in checks:
        rep.add(f"{c.name}?", "yes" if c.passed else "no", "-", "pass" if c.passed else "fail")


# --------------------------------------------------------------------------
# scenario commands


def cmd_radical(s, args, rep: Report) -> None:
    j, p = radical(s.algebra)
    rep.add("dim A", s.algebra.dim)
    rep.add("dim J", j.dim)
    rep.add("nilpotency index", p)
    for i, v in enumerate(j.basis):
        rep.add(f"J basis {i + 1}", _fmt_vec(v))


def cmd_decompose(s, args, rep: Report) -> None:
    try:
        d = wedderburn_malcev(s.algebra, s.action)
    except (NotInvariant, AveragingUnavailable) as e:
        _no_decomposition(s, e, rep)
        return
    rep.add("dim J", d.radical.dim)
    rep.add("nilpotency index", d.nilpotency_index)
    rep.add("components", len(d.components))
    for i, c in enumerate(d.components):
        rep.add(f"dim B{i + 1}", c.dim)
        for k, v in enumerate(c.basis):
            rep.add(f"B{i + 1} basis {k + 1}", _fmt_vec(v))
    _checks_to_rows(rep, verify_decomposition(s.algebra, s.action, d))


def cmd_verify(s, args, rep: Report) -> None:
    try:
        d, origin = _decomposition(s, rep)
    except (NotInvariant, AveragingUnavailable) as e:
        _no_decomposition(s, e, rep)
        return
    rep.add("decomposition", origin)
    _checks_to_rows(rep, verify_decomposition(s.algebra, s.action, d))


def cmd_exponent(s, args, rep: Report) -> None:
    try:
        d, origin = _decomposition(s, rep)
    except (NotInvariant, AveragingUnavailable) as e:
        _no_decomposition(s, e, rep)
        return
    if origin == "supplied":
        v = verify_decomposition(s.algebra, s.action, d)
        if not v.passed:
            _checks_to_rows(rep, v.failures())
            return
    val = pi_exponent(d)
    expected = s.expected.get("d")
    if expected is None:
        rep.add("d(A)", val)
    else:
        rep.check("d(A)", val, expected, val == expected)


def cmd_codim(s, args, rep: Report) -> None:
    n = _need_n(args)
    _bounds_rows(s, n, _cap(args), rep)


def cmd_bounds(s, args, rep: Report) -> None:
    n = _need_n(args)
    for k in range(1, n + 1):
        _bounds_rows(s, k, _cap(args), rep)


def _bounds_rows(s, n: int, cap, rep: Report) -> None:
    b = check_bounds(s.algebra, s.action, n, cap)
    expected = s.expected.get(f"c_{n}")
    top = s.algebra.dim ** (n + 1)
    if expected is None:
        rep.check(f"c^H_{n}", b.c_h_n, top, b.c_h_n <= top)
    else:
        rep.check(f"c^H_{n}", b.c_h_n, expected, b.c_h_n == expected)
    rep.add(f"c_{n}", b.c_n)
    rep.check(f"c_{n} <= c^H_{n}", b.c_n, b.c_h_n, b.c_n <= b.c_h_n)
    rep.check(f"c^H_{n} <= (dim H)^{n} c_{n}", b.c_h_n, b.dim_h**n * b.c_n, b.c_h_n <= b.dim_h**n * b.c_n)
    rep.check(f"c^H_{n} <= (dim A)^{n + 1}", b.c_h_n, top, b.c_h_n <= top)


def cmd_cochar(s, args, rep: Report) -> None:
    n = _need_n(args)
    rows = cocharacter(s.algebra, s.action, n, _cap(args))
    c = codimension(s.algebra, s.action, n, _cap(args))
    for r in rows:
        rep.add(f"m({','.join(map(str, r.partition))})", r.multiplicity)
    total = sum(r.multiplicity * hook_dim(r.partition) for r in rows)
    rep.check(f"sum m*dim = c^H_{n}", total, c, total == c)
    try:
        d = wedderburn_malcev(s.algebra, s.action)
    except AlgebraError:
        rep.add("vanishing (d, p)", "no invariant decomposition", "-", "skip")
        return
    dd = pi_exponent(d)
    ok = multiplicity_vanishing_check(rows, dd, d.nilpotency_index, s.algebra.dim)
    rep.check("vanishing (d, p)", f"({dd}, {d.nilpotency_index})", "-", ok)


def cmd_check_identity(s, args, rep: Report) -> None:
    if not args.poly:
        raise UsageError("check-identity requires --poly")
    with open(args.poly, encoding="utf-8") as fh:
        text = fh.read()
    f = parse_polynomial(text, s.action.labels)
    rep.add("poly sha256", _digest(text.encode()))
    rep.add("variables", f.n)
    rep.add("terms", len(f.terms))
    ident = is_identity(f, s.algebra, s.action, _cap(args))
    want = args.expect == "identity"
    rep.check("identity", "yes" if ident else "no", args.expect, ident == want)


SCENARIO_COMMANDS = {
    "radical": cmd_radical,
    "decompose": cmd_decompose,
    "exponent": cmd_exponent,
    "codim": cmd_codim,
    "cochar": cmd_cochar,
    "check-identity": cmd_check_identity,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
}


# --------------------------------------------------------------------------
# gallery

GALLERY_N = 3
SWEEDLER_WITNESS_N = range(4, 9)


def _gallery_exponent_rows(s) -> list:
    """Rows for one gallery scenario; any exception becomes a failing row."""
    rep = Report("gallery", "")
    name = s.name
    try:
        assoc = is_associative(s.algebra)
        rep.check(f"associative [{name}]", "yes" if assoc else "no", "-", assoc)
        d = wedderburn_malcev(s.algebra, s.action)
        v = verify_decomposition(s.algebra, s.action, d)
        first = v.first_failure()
        rep.check(f"decomposition [{name}]", "verified" if first is None else first.name, "-", first is None)
        val = pi_exponent(d)
        rep.check(f"d(A) [{name}]", val, s.expected["d"], val == s.expected["d"])
        for n in range(1, GALLERY_N + 1):
            b = check_bounds(s.algebra, s.action, n)
            expected = s.expected.get(f"c_{n}")
            ok = b.passed and (expected is None or b.c_h_n == expected)
            rep.check(f"c^H_{n} [{name}]", b.c_h_n, expected if expected is not None else s.algebra.dim ** (n + 1), ok)
    except Exception as e:  # failures are rows
        rep.check(f"error [{name}]", type(e).__name__, "-", False)
    return rep.rows


def _gallery_sweedler_rows(s) -> list:
    rep = Report("gallery", "")
    name = s.name
    try:
        assoc = is_associative(s.algebra)
        rep.check(f"associative [{name}]", "yes" if assoc else "no", "-", assoc)
        j, p = radical(s.algebra)
        rep.check(f"dim J [{name}]", j.dim, 2, j.dim == 2)
        v = verify_decomposition(s.algebra, s.action, s.decomposition)
        first = v.first_failure()
        rep.check(f"invariant decomposition [{name}]", "none" if first else "found", "none", first is not None)
        for n in range(1, GALLERY_N + 1):
            c = codimension(s.algebra, s.action, n)
            if n == 1:
                rep.check(f"c^H_1 [{name}]", c, s.expected["c_1"], c == s.expected["c_1"])
            rep.check(f"c^H_{n} <= 4^{n + 1} [{name}]", c, 4 ** (n + 1), c <= 4 ** (n + 1))
        for n in SWEEDLER_WITNESS_N:
            f, args = sweedler_alternating(1, n)
            val = evaluate(f, s.algebra, s.action, args)
            one = vec(s.algebra.unit)
            rep.check(f"alternating witness k=1 n={n} [{name}]", _unit_multiple(val, one), 1, tuple(val) == tuple(one))
    except Exception as e:
        rep.check(f"error [{name}]", type(e).__name__, "-", False)
    return rep.rows


def _unit_multiple(val, one) -> str:
    i = next(k for k, x in enumerate(one) if x != 0)
    lam = val[i] / one[i]
    return str(lam) if all(v == lam * o for v, o in zip(val, one)) else _fmt_vec(val)


def _gallery_task(s) -> list:
    return _gallery_sweedler_rows(s) if s.kind == "hopf" and s.decomposition is not None else _gallery_exponent_rows(s)


def gallery_scenarios() -> list:
    return gal.exponent_gallery() + [gal.sweedler()]


def run_gallery(scenarios=None, jobs: int = 1) -> Report:
    scenarios = gallery_scenarios() if scenarios is None else list(scenarios)
    blob = "".join(emit_scenario(s) for s in scenarios).encode()
    rep = Report("gallery", _digest(blob))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_gallery_task, scenarios))
    else:
        chunks = [_gallery_task(s) for s in scenarios]
    for rows in chunks:
        rep.rows.extend(rows)
    return rep


# --------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pilab", description="PI invariants of finite-dimensional algebras with actions.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("scenario", nargs="?", help="scenario JSON file (all commands except gallery)")
    p.add_argument("--n", type=int, help="degree for codim, cochar and bounds")
    p.add_argument("--poly", help="polynomial file for check-identity")
    p.add_argument("--expect", choices=("identity", "non-identity"), default="identity")
    p.add_argument("--out", choices=("tsv", "text"), default="tsv")
    p.add_argument("--cap", type=int, default=None, help="entry cap for evaluation matrices (PILAB_CAP overrides)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for gallery")
    return p


def run_command(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    t0 = time.perf_counter()
    try:
        if args.command == "gallery":
            rep = run_gallery(jobs=max(1, args.jobs))
        else:
            if not args.scenario:
                raise UsageError(f"{args.command} requires a scenario file")
            with open(args.scenario, "rb") as fh:
                data = fh.read()
            s = parse_scenario(data.decode("utf-8"))
            rep = Report(args.command, _digest(data))
            SCENARIO_COMMANDS[args.command](s, args, rep)
    except UsageError as e:
        print(f"pilab: usage error: {e}", file=stderr)
        return 2
    except (OSError, UnicodeDecodeError) as e:
        print(f"pilab: cannot read input: {e}", file=stderr)
        return 2
    except ParseError as e:
        print(f"pilab: parse error at {e}", file=stderr)
        return 2
    except ValidationError as e:
        print(f"pilab: invalid scenario: {e}", file=stderr)
        return 2
    except PolynomialParseError as e:
        print(f"pilab: polynomial parse error at {e}", file=stderr)
        return 2
    except (ResourceExceeded, FeasibilityLimit, GuardExceeded) as e:
        print(f"pilab: resource limit: {e}", file=stderr)
        return 2
    except (AlgebraError, NonIntegralMultiplicity) as e:
        print(f"pilab: {type(e).__name__}: {e}", file=stderr)
        return 2
    rep.seconds = time.perf_counter() - t0
    stdout.write(rep.tsv() if args.out == "tsv" else rep.text())
    print(f"pilab {args.command}: {rep.seconds:.3f} s", file=stderr)
    return 0 if rep.passed else 1


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()

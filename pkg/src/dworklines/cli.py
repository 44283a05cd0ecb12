"""Command-line entry point: run verification suites and emit certificates.

    dworklines verify [case ...]
    dworklines census [--t T]
    dworklines membership --line JSON [--t T]
    dworklines fiber --w W
    dworklines schubert
    dworklines deformation

Exit status: 0 when every case verifies, 1 when any fails, 2 on usage errors.
Output is deterministic; wall times appear only with --timings.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from . import __version__

__all__ = ["UsageError", "Certificate", "run_suite", "emit_report", "main", "SELECTORS"]

SELECTORS = ("all", "identities", "membership", "deformation", "census", "schubert", "fiber")


class UsageError(ValueError):
    pass


@dataclass
class Certificate:
    suite: str
    cases: list = field(default_factory=list)
    version: dict = field(default_factory=lambda: {"dworklines": __version__,
                                                  "mpmath": mpmath.__version__})

    @property
    def passed(self) -> bool:
        return all(c.get("status") == "verified" for c in self.cases)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "version": dict(self.version),
            "pass": self.passed,
            "summary": {"total": len(self.cases),
                        "verified": sum(c.get("status") == "verified" for c in self.cases),
                        "failed": sum(c.get("status") != "verified" for c in self.cases)},
            "cases": list(self.cases),
        }

    @classmethod
    def from_json(cls, obj) -> "Certificate":
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        cert = cls(obj["suite"], list(obj["cases"]), dict(obj["version"]))
        if cert.passed != obj["pass"]:
            raise ValueError("pass flag disagrees with the cases")
        return cert


def _case(name: str, anchor: str, ok: bool, **details) -> dict:
    out = {"name": name, "anchor": anchor, "status": "verified" if ok else "failed"}
    out.update({k: v for k, v in details.items() if v is not None})
    return out


def _timed(fn, timings: bool):
    t0 = time.perf_counter()
    cases = fn()
    dt = time.perf_counter() - t0
    if timings:
        for c in cases:
            c.setdefault("seconds", round(dt / max(len(cases), 1), 4))
    return cases


# ----------------------------------------------------------------------------
# parameter parsing


def parse_exact(text: str):
    """A rational, or the string 'branch'."""
    text = text.strip()
    if text == "branch":
        return "branch"
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _parse_line(text: str):
    from .lines import ProjLine, line_from_json
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--line is not valid JSON: {exc}") from exc
    try:
        if isinstance(obj, dict) and "span" in obj:
            return line_from_json(obj)
        if isinstance(obj, dict):
            x, y = obj["x"], obj["y"]
        else:
            x, y = obj
        return ProjLine([Fraction(str(c)) for c in x], [Fraction(str(c)) for c in y])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read a line from --line: {exc}") from exc


# ----------------------------------------------------------------------------
# suites


def _identities(names: Sequence[str], jobs: int, timings: bool) -> list:
    """Whole groups by group name, single cases by case name; all by default."""
    from .identities import SUITE, run_identities
    groups = [n for n in names if n in SUITE]
    singles = [n for n in names if n not in SUITE]
    if not names:
        return [c.to_json(timings) for c in run_identities(None, jobs)]
    out = run_identities(groups, jobs) if groups else []
    if singles:
        pool = run_identities(None, jobs)
        byname = {c.name: c for c in pool}
        missing = [n for n in singles if n not in byname]
        if missing:
            raise UsageError(f"unknown case(s): {', '.join(missing)}")
        have = {c.name for c in out}
        out += [byname[n] for n in singles if n not in have]
    return [c.to_json(timings) for c in sorted(out, key=lambda c: c.name)]


def _census(t_text: str | None, prec: int) -> list:
    from . import census as C
    cases = []
    cones, lines = C.enumerate_fermat_lines()
    inc = C.cone_incidence()
    rows = sorted({sum(r) for r in inc})
    cols = sorted({sum(c) for c in zip(*inc)})
    cases.append(_case("cone_count", "fermat_cones", len(cones) == 50, value=len(cones)))
    cases.append(_case("crossing_count", "fermat_crossing_lines", len(lines) == 375, value=len(lines),
                       distinct=len({l.plucker for l in lines})))
    cases.append(_case("cone_incidence", "cone_line_incidence", rows == [15] and cols == [2],
                       lines_per_cone=rows, cones_per_line=cols))
    ok = all(C.crossing_contained(l) for l in lines)
    cases.append(_case("crossing_containment", "crossing_lines_on_every_fiber", ok,
                       witness="all six pullback coefficients vanish in Q(zeta)[t]"))

    t = parse_exact(t_text) if t_text else Fraction(1)
    if t == "branch":
        sols = C.solve_van_geemen(C.branch_t(0), prec)
        cases.append(_case("van_geemen_branch", "van_geemen_branch_solutions", len(sols) == 5,
                           count=len(sols), exact=all(s.exact for s in sols)))
        total = C.orbit_count(sols)
        cases.append(_case("van_geemen_orbit_total_branch", "van_geemen_line_count",
                           total == 2500, value=total))
    else:
        if not t:
            raise UsageError("t must be nonzero")
        sols = C.solve_van_geemen(t, prec)
        bound = 2.0 ** -64
        res = max(s.residual for s in sols)
        cases.append(_case("van_geemen_generic", "van_geemen_solutions", len(sols) == 10 and res < bound,
                           t=str(t), count=len(sols), residual_bound=f"{res:.3e}",
                           root_radius=f"{max(s.root_radius for s in sols):.3e}"))
        total = C.orbit_count(sols)
        cases.append(_case("van_geemen_orbit_total", "van_geemen_line_count", total == 5000, value=total))
        cases.append(_case("phase_action_free", "van_geemen_free_action", C.free_action(sols)))
        bsols = C.solve_van_geemen(C.branch_t(0), prec)
        btotal = C.orbit_count(bsols)
        cases.append(_case("van_geemen_branch", "van_geemen_branch_solutions",
                           len(bsols) == 5 and btotal == 2500, count=len(bsols), orbit_total=btotal))

    items = C.census_arithmetic(strict=False)
    literal = next(it for it in items if it.key == "vii.c")
    for it in items:
        if it is literal:
            continue
        note = None
        if it.key == "vii.b":
            note = f"the displayed form with (g'-1) in place of (2g'-2) would give g' = {literal.lhs}"
        cases.append(_case(f"arith_{it.key}", it.anchor, it.holds, lhs=str(it.lhs), rhs=str(it.rhs),
                           detail=it.detail, note=note))
    chk = C.exceptional_points_check(C.twenty_five_points())
    cases.append(_case("exceptional_25_points", "exceptional_divisor_intersection",
                       all(chk[k] for k in ("sigma0", "sigma5", "linear", "distinct")) and chk["count"] == 25,
                       **{k: v for k, v in chk.items()}))
    return cases


def _schubert() -> list:
    from .schubert import incidence_decomposition, integrate, sigma
    s1 = sigma(1)
    cases = [
        _case("sigma1_squared", "schubert_pieri", s1 * s1 == sigma(1, 1) + sigma(2), value=str(s1 * s1)),
        _case("sigma2_squared", "schubert_pieri", sigma(2) * sigma(2) == sigma(2, 2) + sigma(3, 1),
              value=str(sigma(2) * sigma(2))),
        _case("sigma1_fourth", "schubert_pieri", s1 ** 4 == sigma(2, 2) * 2 + sigma(3, 1) * 3,
              value=str(s1 ** 4)),
    ]
    table = incidence_decomposition(strict=False)
    for k, v in table.classes.items():
        exp = table.expected.get(k)
        cases.append(_case(f"class_{k}", "incidence_decomposition", exp is None or v == exp, value=str(v)))
    cases.append(_case("degree_plucker", "surface_degree_in_plucker_space",
                       table.degrees["plucker"] == 625, value=table.degrees["plucker"]))
    cases.append(_case("degree_threefold", "swept_threefold_degree",
                       table.degrees["threefold"] == 250, value=table.degrees["threefold"]))
    cases.append(_case("point_class", "schubert_integral", integrate(sigma(3, 3)) == 1))
    return cases


def _deformation() -> list:
    from .deformation import all_checks
    out = []
    for c in all_checks():
        comp = c.computed
        comp = comp if isinstance(comp, (int, list, tuple)) else str(comp)
        claim = c.claimed if isinstance(c.claimed, (int, list, tuple)) else str(c.claimed)
        out.append(_case(_slug(c.name), _deformation_anchor(c.name), c.holds,
                         computed=_jsonable(comp), claimed=_jsonable(claim), note=c.note or None))
    return out


def _slug(name: str) -> str:
    return re.sub(r"[^0-9A-Za-z]+", "_", name).strip("_")


def _deformation_anchor(name: str) -> str:
    for prefix, anchor in (("matrix_", "normal_matrix_entries"), ("relative_row", "relative_normal_row"),
                           ("det_", "normal_matrix_determinant"), ("minor_", "normal_matrix_minor"),
                           ("columns_", "normal_matrix_column_dependence"), ("kernel_", "normal_bundle_h0"),
                           ("splitting", "normal_bundle_splitting")):
        if name.startswith(prefix):
            return anchor
    return "normal_bundle"


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, str)):
        return x
    return str(x)


def _membership(line_text: str | None, t_text: str | None) -> list:
    from .dwork import pullback_coefficients
    if not line_text:
        raise UsageError("membership needs --line")
    line = _parse_line(line_text)
    t = "t" if t_text is None else parse_exact(t_text)
    if t == "branch":
        raise UsageError("membership takes a rational --t or none (formal t)")
    coeffs = pullback_coefficients(line, t)
    ok = all(not c for c in coeffs)
    return [_case("line_in_fiber", "pullback_vanishes", ok,
                  t="formal" if t == "t" else str(t), coefficients=[str(c) for c in coeffs])]


def _fiber(w_text: str | None, prec: int) -> list:
    from .dwork import BranchPoint, fiber_factorization, fiber_surface_equation
    if not w_text:
        raise UsageError("fiber needs --w")
    w = parse_exact(w_text)
    eq = fiber_surface_equation(w)
    cases = [_case("fiber_equation_factored_form", "fiber_surface_equivalence", eq.is_equivalent(),
                   w=str(w if w != "branch" else "2^7/3"))]
    try:
        fac = fiber_factorization(w, prec)
        ok = fac.product() == fac.target()
        cases.append(_case("fiber_factorization", "fiber_surface_two_components", ok,
                           monomials=[len(f) for f in fac.factors]))
    except BranchPoint as exc:
        cases.append(_case("fiber_branch_detected", "fiber_surface_two_components", True, note=str(exc)))
    return cases


def run_suite(selector: str, options: argparse.Namespace | None = None) -> Certificate:
    """Run one suite and collect a Certificate."""
    o = options or argparse.Namespace()
    prec = getattr(o, "precision_bits", 128)
    jobs = getattr(o, "jobs", 1)
    timings = getattr(o, "timings", False)
    cases_arg = list(getattr(o, "cases", []) or [])
    if selector not in SELECTORS and not selector.startswith("fiber"):
        raise UsageError(f"unknown suite {selector!r}")
    if selector == "identities":
        cases = _identities(cases_arg, jobs, timings)
    elif selector == "census":
        cases = _timed(lambda: _census(getattr(o, "t", None), prec), timings)
    elif selector == "schubert":
        cases = _timed(_schubert, timings)
    elif selector == "deformation":
        cases = _timed(_deformation, timings)
    elif selector == "membership":
        cases = _timed(lambda: _membership(getattr(o, "line", None), getattr(o, "t", None)), timings)
    elif selector.startswith("fiber"):
        w = getattr(o, "w", None)
        if selector.startswith("fiber(") and selector.endswith(")"):
            w = selector[6:-1]
        cases = _timed(lambda: _fiber(w, prec), timings)
    else:  # all
        cases = []
        for sub in ("identities", "deformation", "census", "schubert"):
            for c in run_suite(sub, o).cases:
                c = dict(c)
                c["name"] = f"{sub}.{c['name']}"
                cases.append(c)
    return Certificate(selector, cases)


def emit_report(cert: Certificate, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(cert.to_json(), indent=2, sort_keys=True) + "\n").encode()
    if fmt != "text":
        raise UsageError(f"unknown format {fmt!r}")
    lines = [f"suite {cert.suite}  (dworklines {cert.version.get('dworklines')})"]
    for c in cert.cases:
        mark = "PASS" if c["status"] == "verified" else "FAIL"
        extra = []
        for k in ("value", "count", "lhs", "computed", "residual_bound", "note"):
            if k in c:
                v = c[k]
                v = v if isinstance(v, str) else json.dumps(v)
                extra.append(f"{k}={v if len(v) < 70 else v[:67] + '...'}")
        if "seconds" in c:
            extra.append(f"{c['seconds']}s")
        lines.append(f"  [{mark}] {c['name']}  <{c['anchor']}>  " + " ".join(extra))
    s = cert.to_json()["summary"]
    lines.append(f"{s['verified']}/{s['total']} verified; overall {'PASS' if cert.passed else 'FAIL'}")
    return ("\n".join(lines) + "\n").encode()


# ----------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=128)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--timings", action="store_true")
    common.add_argument("--output", help="write the report here instead of stdout")
    p = _Parser(prog="dworklines", description="Exact checks for lines on the Dwork pencil.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    v = sub.add_parser("verify", parents=[common], help="identity suite or named cases/suites")
    v.add_argument("cases", nargs="*")
    v.add_argument("--t")
    v.add_argument("--w")
    c = sub.add_parser("census", parents=[common], help="cones, crossing lines, van Geemen lines")
    c.add_argument("--t")
    m = sub.add_parser("membership", parents=[common], help="is a line contained in X_t")
    m.add_argument("--line", required=True)
    m.add_argument("--t")
    f = sub.add_parser("fiber", parents=[common], help="fiber surface factorization")
    f.add_argument("--w", required=True)
    sub.add_parser("schubert", parents=[common], help="classes in G(2,5)")
    sub.add_parser("deformation", parents=[common], help="normal bundle matrices")
    return p


_SUITE_NAMES = ("all", "deformation", "census", "schubert", "membership")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        if args.precision_bits < 64:
            raise UsageError("--precision-bits must be at least 64")
        if args.command == "verify":
            names = list(args.cases)
            suites = [n for n in names if n in _SUITE_NAMES or n.startswith("fiber")]
            if suites and len(suites) != len(names):
                raise UsageError("mix of suite names and identity cases")
            if len(suites) > 1:
                raise UsageError("one suite at a time")
            if suites:
                args.cases = []
                cert = run_suite(suites[0], args)
            else:
                cert = run_suite("identities", args)
        else:
            cert = run_suite(args.command, args)
        data = emit_report(cert, args.format)
    except UsageError as exc:
        print(f"dworklines: {exc}", file=sys.stderr)
        return 2
    if args.output:
        try:
            with open(args.output, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            print(f"dworklines: cannot write {args.output}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0 if cert.passed else 1


if __name__ == "__main__":
    sys.exit(main())

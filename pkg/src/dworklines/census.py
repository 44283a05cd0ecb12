"""Counting: the cones and crossing lines of X_0, van Geemen lines, and the
integer bookkeeping (genera, degrees, Hilbert polynomials, Hurwitz balances).

The crossing line for index sets {i, j}, {k, l} and the remaining index m is

    z_i + mu^p z_j = 0,  z_k + mu^q z_l = 0,  z_m = 0,

which lies on every member of the pencil because z_m divides the product
term.  A van Geemen line is (alpha + xi^2 beta : alpha + xi beta : alpha + beta : a alpha : b alpha)
with a^5 + b^5 = 27 and t a b = 6.
"""
from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath

from .dwork import pullback_coefficients
from .lines import PAIRS, ProjLine, ProjPoint
from .numbers import XI, ComplexApprox, Tower, TowerElement, embed_complex, mu_power, xi_power
from .polyring import SparsePoly, var

__all__ = [
    "ArithmeticMismatch", "ZeroParameter", "ConeDescriptor", "VanGeemenSolution",
    "CurveNumerics", "ArithmeticItem", "enumerate_fermat_lines", "cone_incidence",
    "crossing_contained", "van_geemen_line", "van_geemen_coefficients", "solve_van_geemen",
    "BRANCH_T5", "branch_t", "orbit_count", "free_action", "census_arithmetic",
    "hilbert_genus", "complete_intersection_hilbert", "twenty_five_points",
    "exceptional_points_check", "GW_COUNT",
]

GW_COUNT = 2875
BRANCH_T5 = Fraction(2 ** 7, 3)


class ArithmeticMismatch(AssertionError):
    pass


class ZeroParameter(ValueError):
    pass


# ----------------------------------------------------------------------------
# cones and crossing lines


@dataclass(frozen=True)
class ConeDescriptor:
    """X_0 cut by z_i + mu^phase z_j = 0: a cone over a Fermat curve."""

    pair: tuple
    phase: int

    @property
    def vertex(self) -> ProjPoint:
        i, j = self.pair
        z = [0] * 5
        z[i] = -mu_power(self.phase)
        z[j] = 1
        return ProjPoint(z)

    @property
    def base_curve(self) -> tuple:
        """Indices of the plane z_i = z_j = 0 holding the Fermat quintic curve."""
        return tuple(k for k in range(5) if k not in self.pair)

    def hyperplane(self) -> list:
        i, j = self.pair
        h = [0] * 5
        h[i] = 1
        h[j] = mu_power(self.phase)
        return h

    def contains_line(self, line: ProjLine) -> bool:
        h = self.hyperplane()
        return all(not sum((c * z for c, z in zip(h, p) if c), 0) for p in line.span)

    def label(self) -> str:
        return f"C[{self.pair[0]}{self.pair[1]}, mu^{self.phase}]"


def _crossing(pair1, p, pair2, q) -> ProjLine:
    x = [0] * 5
    y = [0] * 5
    i, j = pair1
    k, l = pair2
    x[i], x[j] = -mu_power(p), 1
    y[k], y[l] = -mu_power(q), 1
    return ProjLine(x, y)


@lru_cache(maxsize=None)
def enumerate_fermat_lines() -> tuple:
    """(50 cones, 375 crossing lines), both in a fixed deterministic order."""
    cones = [ConeDescriptor(pair, ph) for pair in PAIRS for ph in range(5)]
    lines = []
    for m in range(5):
        rest = [k for k in range(5) if k != m]
        a = rest[0]
        for b in rest[1:]:
            pair1 = (a, b)
            pair2 = tuple(k for k in rest if k not in pair1)
            for p, q in itertools.product(range(5), repeat=2):
                lines.append(_crossing(pair1, p, pair2, q))
    return tuple(cones), tuple(lines)


def cone_incidence() -> list:
    """0/1 matrix, rows = cones, columns = crossing lines."""
    cones, lines = enumerate_fermat_lines()
    return [[int(c.contains_line(l)) for l in lines] for c in cones]


def crossing_contained(line: ProjLine) -> bool:
    """All pullback coefficients vanish identically in a formal t."""
    return all(not c for c in pullback_coefficients(line, "t"))


# ----------------------------------------------------------------------------
# van Geemen lines


def branch_t(phase: int = 0) -> TowerElement:
    """mu^phase * (2^7/3)^(1/5) in the tower r^5 = 27/2, as (4/9) r^3."""
    tower = Tower(Fraction(27, 2))
    return tower.r ** 3 * Fraction(4, 9) * mu_power(phase)


def van_geemen_line(a, b) -> ProjLine:
    return ProjLine([1, 1, 1, a, b], [xi_power(2), XI, 1, 0, 0])


@lru_cache(maxsize=None)
def van_geemen_coefficients() -> tuple:
    """Pullback coefficients of the family line, polynomials in a, b, t."""
    line = van_geemen_line(var("a"), var("b"))
    out = []
    for c in pullback_coefficients(line, "t"):
        if isinstance(c, SparsePoly):
            c = c.map_coeffs(lambda x: x.to_fraction() if hasattr(x, "to_fraction") and x.is_rational() else x).prune()
        out.append(c)
    return tuple(out)


@dataclass
class VanGeemenSolution:
    a: object
    b: object
    t: object
    residual: float = 0.0       # rigorous upper bound on |pullback coefficients|
    root_radius: float = 0.0    # a true root of the a-polynomial lies this close
    exact: bool = False

    @property
    def line(self) -> ProjLine:
        return van_geemen_line(self.a, self.b)

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, ComplexApprox):
                with mpmath.workprec(x.prec):
                    return {"re": mpmath.nstr(x.real, 30), "im": mpmath.nstr(x.imag, 30),
                            "rad": mpmath.nstr(x.rad, 5)}
            return str(x)
        return {"a": enc(self.a), "b": enc(self.b), "exact": self.exact,
                "residual": f"{self.residual:.3e}", "root_radius": f"{self.root_radius:.3e}"}


def _ball(x, prec):
    if isinstance(x, ComplexApprox):
        return x
    if isinstance(x, (TowerElement,)):
        return embed_complex(x, 0, prec)
    if isinstance(x, (int, Fraction)):
        return ComplexApprox(Fraction(x), 0, prec)
    return embed_complex(x, 0, prec)


def _evaluate_ball(poly, point: dict, prec: int) -> ComplexApprox:
    if not isinstance(poly, SparsePoly):
        return ComplexApprox(Fraction(poly), 0, prec)
    acc = ComplexApprox(0, 0, prec)
    for exps, c in poly.as_dict().items():
        term = ComplexApprox(Fraction(c), 0, prec)
        for name, e in zip(poly.gens, exps):
            if e:
                term = term * point[name] ** e
        acc = acc + term
    return acc


def solve_van_geemen(t, precision_bits: int = 128) -> list:
    """Van Geemen pairs (a, b) for the fiber X_t.

    ``t`` may be a rational, a ComplexApprox or a TowerElement; at a branch
    value (t^5 = 2^7/3) the five solutions are exact tower elements.
    """
    if not t:
        raise ZeroParameter("t must be nonzero")
    if isinstance(t, TowerElement) and t ** 5 == t.tower.lift(BRANCH_T5):
        return _branch_solutions(t)
    if isinstance(t, (int, Fraction)) and Fraction(t) ** 5 == BRANCH_T5:
        raise ValueError("branch value is irrational; pass it as a tower element")
    return _numeric_solutions(t, precision_bits)


def _branch_solutions(t: TowerElement) -> list:
    tower = t.tower
    out = []
    for a in tower.fifth_roots_of(Fraction(27, 2)):
        b = (t * a).inverse() * 6
        if b ** 5 != tower.lift(Fraction(27, 2)):
            continue
        line = van_geemen_line(a, b)
        ok = all(not c for c in pullback_coefficients(line, t))
        if ok:
            out.append(VanGeemenSolution(a, b, t, 0.0, 0.0, True))
    return out


def _numeric_solutions(t, prec: int) -> list:
    tb = _ball(t, prec)
    work = prec + 32
    with mpmath.workprec(work):
        tm = tb.mid
        c = mpmath.mpf(6) ** 5 / tm ** 5
        disc = mpmath.sqrt(mpmath.mpc(729) - 4 * c)
        zs = [(27 + disc) / 2, (27 - disc) / 2]
        mids = []
        for z in zs:
            r = mpmath.root(z, 5)
            for k in range(5):
                mids.append(r * mpmath.expjpi(mpmath.mpf(2 * k) / 5))
    # certify each a: p(a) = t^5 a^10 - 27 t^5 a^5 + 6^5 has a root within 10|p|/|p'|
    sols = []
    t5 = tb ** 5
    for m in mids:
        a = ComplexApprox(m, 0, prec)
        a5 = a ** 5
        p = t5 * a5 * a5 - t5 * a5 * 27 + 6 ** 5
        dp = t5 * a5 * (a ** 4) * 10 - t5 * (a ** 4) * 135
        with mpmath.workprec(prec):
            lower = abs(dp.mid) - dp.rad
            if lower <= 0:
                raise ArithmeticError("derivative ball contains zero")
            radius = 10 * (abs(p.mid) + p.rad) / lower
        a = ComplexApprox(m, radius, prec)
        b = (tb * a).inverse() * 6
        point = {"a": a, "b": b, "t": tb}
        res = max(float(_evaluate_ball(c, point, prec).abs_upper()) for c in van_geemen_coefficients())
        sols.append(VanGeemenSolution(a, b, tb, res, float(radius), False))
    _assert_disjoint([s.a for s in sols])
    return sols


def _assert_disjoint(balls: Sequence[ComplexApprox]):
    for x, y in itertools.combinations(balls, 2):
        if abs(x.mid - y.mid) <= x.rad + y.rad:
            raise ArithmeticError("root enclosures overlap; raise the precision")


# ----------------------------------------------------------------------------
# orbits under phases (product one) and permutations


def _float_plucker(line_coords) -> tuple:
    x, y = line_coords
    return tuple(x[i] * y[j] - x[j] * y[i] for i, j in PAIRS)


def _normalize(p, digits: int = 9) -> tuple:
    # first clearly nonzero coordinate; equal moduli make argmax ambiguous
    top = max(abs(v) for v in p)
    s = next(v for v in p if abs(v) > 1e-6 * top)
    out = []
    for v in p:
        w = v / s
        out.append((round(w.real, digits) + 0.0, round(w.imag, digits) + 0.0))
    return tuple(out)


def _to_complex(x) -> complex:
    if isinstance(x, ComplexApprox):
        return complex(x.mid)
    if isinstance(x, (int, Fraction)):
        return complex(float(x))
    b = embed_complex(x, 0, 64)
    return complex(b.mid)


def _group_images(coords, perms, phase_vectors):
    x, y = coords
    for perm in perms:
        inv = [0] * 5
        for k, v in enumerate(perm):
            inv[v] = k
        xp = [x[inv[j]] for j in range(5)]
        yp = [y[inv[j]] for j in range(5)]
        for ph in phase_vectors:
            yield ([xp[j] * ph[j] for j in range(5)], [yp[j] * ph[j] for j in range(5)])


def _product_one_phases():
    w = cmath.exp(2j * cmath.pi / 5)
    out = []
    for e in itertools.product(range(5), repeat=4):
        e = (0,) + e
        if sum(e) % 5 == 0:
            out.append([w ** k for k in e])
    return out


def orbit_count(solutions: Sequence[VanGeemenSolution], permutations: bool = True) -> int:
    """Number of distinct lines in the orbits of the given lines.

    The group is the product-one phase group (125 elements modulo scalars)
    together with S_5 when ``permutations`` is set; every element preserves
    the fiber X_t.  Lines are compared by normalized floating Pluecker
    vectors; the enclosures are far tighter than the rounding used.
    """
    phases = _product_one_phases()
    perms = list(itertools.permutations(range(5))) if permutations else [tuple(range(5))]
    seen = set()
    for s in solutions:
        coords = ([_to_complex(c) for c in s.line.x], [_to_complex(c) for c in s.line.y])
        for img in _group_images(coords, perms, phases):
            seen.add(_normalize(_float_plucker(img)))
    return len(seen)


def free_action(solutions: Sequence[VanGeemenSolution]) -> bool:
    """No nontrivial product-one phase fixes any of the lines."""
    phases = _product_one_phases()
    for s in solutions:
        coords = ([_to_complex(c) for c in s.line.x], [_to_complex(c) for c in s.line.y])
        base = _normalize(_float_plucker(coords))
        fixed = sum(1 for img in _group_images(coords, [tuple(range(5))], phases)
                    if _normalize(_float_plucker(img)) == base)
        if fixed != 1:
            return False
    return True


# ----------------------------------------------------------------------------
# bookkeeping


@dataclass(frozen=True)
class CurveNumerics:
    """Curve with Hilbert polynomial a n + b: degree a, arithmetic genus 1 - b."""

    name: str
    slope: int
    constant: int
    components: tuple = ()

    @property
    def degree(self) -> int:
        return self.slope

    @property
    def genus(self) -> int:
        return 1 - self.constant

    def poly(self) -> str:
        sign = "-" if self.constant < 0 else "+"
        return f"{self.slope}n {sign} {abs(self.constant)}"


def hilbert_genus(slope: int, constant: int) -> int:
    return 1 - constant


def complete_intersection_hilbert(degrees: Sequence[int], ambient: int) -> tuple:
    """(degree, constant term) of the Hilbert polynomial of a complete
    intersection curve in P^ambient; 2g - 2 = deg * (sum d_i - ambient - 1)."""
    if len(degrees) != ambient - 1:
        raise ValueError("need ambient - 1 hypersurfaces for a curve")
    deg = 1
    for d in degrees:
        deg *= d
    two_g_minus_2 = deg * (sum(degrees) - ambient - 1)
    g = two_g_minus_2 // 2 + 1
    return deg, 1 - g


@dataclass
class ArithmeticItem:
    key: str
    anchor: str
    lhs: object
    rhs: object
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"key": self.key, "anchor": self.anchor, "lhs": str(self.lhs),
                "rhs": str(self.rhs), "holds": self.holds, "detail": self.detail}


def _linear(slope, const):
    return (slope, const)


def census_arithmetic(strict: bool = True) -> list:
    """Every integer bookkeeping identity, recomputed.  Raises ArithmeticMismatch
    (when ``strict``) if any fails."""
    items = []
    cones, crossings = 50, 375
    # (i) each cone contributes a twice-counted family, each crossing line 5
    items.append(ArithmeticItem("i", "gw_count", cones * 2 * (2 * 6 - 2) + crossings * 5, GW_COUNT,
                                "50*2*(2*6-2) + 375*5"))
    # (ii) 2 (50 (5n - 5) - 375)
    s_poly = (2 * 50 * 5, 2 * (50 * -5 - crossings))
    items.append(ArithmeticItem("ii", "hilbert_surface", s_poly, (500, -1250), "2(50(5n-5) - 375)"))
    # (iii) per-component fiber curve
    fiber = CurveNumerics("fiber component", 250, -625)
    items.append(ArithmeticItem("iii", "fiber_component_genus", (fiber.genus, fiber.degree), (626, 250),
                                "250n - 625"))
    # (iv) complete intersection of type (5,5,5,2) in P^5
    ci = complete_intersection_hilbert((5, 5, 5, 2), 5)
    items.append(ArithmeticItem("iv", "c4_complete_intersection", ci, (250, -1375), "(5,5,5,2) in P^5"))
    # (v) residual curve
    num = (ci[0] - 30 * 5, ci[1] + 75 + 1000 + 30 * 5)
    resid = (num[0] // 2, num[1] // 2) if num[0] % 2 == 0 and num[1] % 2 == 0 else None
    cur = CurveNumerics("residual curve", *resid) if resid else None
    items.append(ArithmeticItem("v", "residual_curve_genus", (resid, cur.genus if cur else None),
                                ((50, -75), 76), "(250n-1375 + 75 + 1000 - 30(5n-5))/2"))
    # (vi) genus balance of the stable limit
    items.append(ArithmeticItem("vi", "stable_limit_balance", 2 * (5 * 75 + 250), 1250, "2(5*75 + 250)"))
    # (vii) Riemann-Hurwitz: 2g - 2 = n (2g' - 2) + ramification
    lhs1, rhs1 = 2 * 6 - 2, 25 * (2 * 0 - 2) + 15 * 4
    items.append(ArithmeticItem("vii.a", "hurwitz_genus_6", lhs1, rhs1, "2*6-2 = 25(2*0-2) + 15*4"))
    g_prime = Fraction(2 * 76 - 2 - 100 * 4, 125) / 2 + 1
    items.append(ArithmeticItem("vii.b", "hurwitz_genus_76", g_prime, 0,
                                "2*76-2 = 125(2g'-2) + 100*4 gives g'"))
    g_displayed = Fraction(2 * (76 - 1) - 100 * 4, 125) + 1
    items.append(ArithmeticItem("vii.c", "hurwitz_genus_76_displayed_form", g_displayed, 0,
                                "2(76-1) = 125(g'-1) + 100*4 read literally; informational"))
    # (viii) intersection with the degree-10 hypersurface
    items.append(ArithmeticItem("viii", "intersection_with_plucker_divisor", (2 * 50 * 5) * 10, 5000,
                                "(2*50*5)*10"))
    # (ix)
    items.append(ArithmeticItem("ix", "surface_degree_split", 500 + 30 * 5 * 5, 1250, "500 + 30*5*5"))
    if strict:
        bad = [it.key for it in items if not it.holds and it.key != "vii.c"]
        if bad:
            raise ArithmeticMismatch(f"failed: {bad}")
    return items


# ----------------------------------------------------------------------------
# the 25 points on the exceptional divisors


def twenty_five_points(xi_exp: int = 1, printed_sign: bool = False) -> list:
    """Points y_3 = y_4 = 0, y_2 = -mu, u_2 = nu, u_3 = -xi^2 nu, u_4 = -xi nu.

    With ``printed_sign`` u_2 = -nu, u_3 = xi^2 nu, u_4 = xi nu instead.
    ``xi_exp`` = 2 exchanges xi and xi^2.
    """
    x1, x2 = xi_power(2 * xi_exp), xi_power(xi_exp)
    pts = []
    for m, n in itertools.product(range(5), repeat=2):
        mu, nu = mu_power(m), mu_power(n)
        s = 1 if printed_sign else -1
        u = (nu * -s, x1 * nu * s, x2 * nu * s)
        y = (-mu, 0, 0)
        pts.append((u, y))
    return pts


def exceptional_points_check(points) -> dict:
    """Which chart equations hold at every point.

    sigma_0 + 1 = sum y_j^5 + 1, sigma_5 + 1 = sum u_j^5 y_j^5 + 1, and the
    linear relation u_2 - u_3 - u_4 = 0.
    """
    res = {"sigma0": True, "sigma5": True, "linear": True, "distinct": True}
    seen = set()
    for u, y in points:
        s0 = sum((c ** 5 for c in y), 0) + 1
        s5 = sum((uu ** 5 * c ** 5 for uu, c in zip(u, y)), 0) + 1
        lin = u[0] - u[1] - u[2]
        res["sigma0"] &= not s0
        res["sigma5"] &= not s5
        res["linear"] &= not lin
        seen.add((tuple(map(str, u)), tuple(map(str, y))))
    res["distinct"] = len(seen) == len(points)
    res["count"] = len(points)
    return res

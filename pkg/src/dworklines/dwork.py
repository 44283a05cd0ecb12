"""The Dwork pencil F_t = sum z_j^5 - 5 t z_0 z_1 z_2 z_3 z_4 and the
membership system for lines.

Conventions
-----------
A line is parametrized as phi(alpha:beta) = alpha*x + beta*y.  The six
pullback coefficients are listed in the basis alpha^5, alpha^4 beta, ...,
beta^5.  In the (u, y) chart, x_j = u_j y_j and the coefficient of
alpha^k beta^(5-k) is

    C(5,k) sigma_k(u,y) - 5 t s_k(u) y_0 y_1 y_2 y_3 y_4,

with sigma_k = sum_j u_j^k y_j^5 and s_k the elementary symmetric functions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

import mpmath

from .lines import DegenerateSpan, ProjLine, ProjPoint, SymmetryElement, _proportional
from .numbers import ComplexApprox, qdiv
from .polyring import (SparsePoly, elementary_symmetric, g_poly, sigma_weighted,
                       vandermonde_delta, var)

__all__ = [
    "SingularVandermonde", "ZeroSector", "BranchPoint", "DegenerateSpan",
    "DworkForm", "ContactReport", "FiberSurfaceEq", "FiberFactorization",
    "Z", "U", "Y", "pullback_coefficients", "chart_coefficients", "augmented_rows",
    "contact_order", "solve_line_system", "system_residual", "reconstruct_line",
    "fiber_surface_equation", "fiber_factorization", "BRANCH_W",
]

Z = tuple(f"z{j}" for j in range(5))
U = tuple(f"u{j}" for j in range(5))
Y = tuple(f"y{j}" for j in range(5))
BRANCH_W = Fraction(2 ** 7, 3)


class SingularVandermonde(ZeroDivisionError):
    pass


class ZeroSector(ValueError):
    """A coordinate y_j^5 vanishes: the solution leaves the chart."""


class BranchPoint(ValueError):
    pass


def _as_t(t):
    if isinstance(t, str):
        return var(t)
    return t


class DworkForm:
    """F_t as a SparsePoly in z0..z4; ``t`` may be a scalar or a generator name."""

    def __init__(self, t="t"):
        self.t = _as_t(t)
        z = [var(n) for n in Z]
        fermat = z[0] ** 5 + z[1] ** 5 + z[2] ** 5 + z[3] ** 5 + z[4] ** 5
        prod = z[0] * z[1] * z[2] * z[3] * z[4]
        self.fermat = fermat
        self.monomial = prod
        self.poly = fermat - prod * self.t * 5

    def gradient(self) -> list:
        return [self.poly.diff(n) for n in Z]

    def d_dt(self) -> SparsePoly:
        """dF/dt = -5 z_0 ... z_4."""
        return self.monomial * (-5)

    def evaluate(self, point: Sequence):
        return self.poly.evaluate(dict(zip(Z, point)))

    def pullback(self, polys: Sequence) -> SparsePoly:
        return self.poly.substitute(dict(zip(Z, polys)))

    def act(self, g: SymmetryElement) -> SparsePoly:
        """F_t(A_g z) as a polynomial in z."""
        images = g.act_point([var(n) for n in Z])
        return self.pullback(images)


def _line_pullback(line: ProjLine, form: SparsePoly) -> list:
    a, b = var("alpha"), var("beta")
    phi = [a * xi + b * yi for xi, yi in zip(line.x, line.y)]
    pulled = form.substitute(dict(zip(Z, phi)))
    parts = pulled.coeffs_in(["alpha", "beta"])
    deg = max((sum(k) for k in parts), default=5)
    out = []
    for m in range(deg + 1):
        c = parts.get((deg - m, m))
        if c is None:
            out.append(0)
        else:
            c = c.prune()
            out.append(c.constant_term() if c.is_constant() else c)
    return out


def pullback_coefficients(line: ProjLine, t="t") -> list:
    """Coefficients of phi^*(F_t) in the basis alpha^5, ..., beta^5.

    Scalars when the line and t are exact numbers, SparsePolys when t or the
    coordinates are formal.  This is a direct expansion and works for every
    line, whatever its position with respect to the coordinate hyperplanes.
    """
    return _line_pullback(line, DworkForm(t).poly)


def chart_coefficients(k: int, t="t") -> SparsePoly:
    """C(5,k) sigma_k(u,y) - 5 t s_k(u) prod y_j as a polynomial in u, y, t."""
    t = _as_t(t)
    prod_y = var("y0") * var("y1") * var("y2") * var("y3") * var("y4")
    return sigma_weighted(k) * comb(5, k) - elementary_symmetric(k, U) * prod_y * t * 5


def augmented_rows() -> list:
    """Rows r_0..r_5 of the linear system in (y_0^5, ..., y_4^5, -5 t prod y).

    Row k has entries u_j^k for the five unknowns and s_k(u) / C(5,k) in the
    last column, so that row k dotted with the unknowns is the k-th chart
    coefficient divided by C(5,k).
    """
    rows = []
    for k in range(6):
        row = [var(uj) ** k for uj in U]
        row.append(elementary_symmetric(k, U) * Fraction(1, comb(5, k)))
        rows.append(row)
    return rows


@dataclass
class ContactReport:
    order: int
    contained: bool
    residual_coefficients: list
    chart_used: bool
    point: tuple = ()

    def to_json(self):
        from .numbers import to_json
        enc = []
        for c in self.residual_coefficients:
            enc.append(c.to_json() if isinstance(c, SparsePoly) else to_json(c))
        return {"order": self.order, "contained": self.contained,
                "chart_used": self.chart_used, "coefficients": enc}


def contact_order(line: ProjLine, y, t) -> ContactReport:
    """Order of contact of the line with X_t at the point y of the line.

    Re-parametrizes the line as alpha*w + beta*y with w a second point, so
    that y sits at alpha = 0; the order is the number of leading vanishing
    coefficients of alpha^0 beta^5, alpha^1 beta^4, ...  All six vanish
    exactly when the line lies in X_t, reported as ``contained`` with order 6.
    When some y_j = 0 the u-chart does not apply; the direct expansion is
    used regardless and ``chart_used`` records which case occurred.
    """
    y = y if isinstance(y, ProjPoint) else ProjPoint(y)
    if not line.contains_point(y):
        raise ValueError("y is not on the line")
    w = line.x if not _proportional(line.x.coords, y.coords) else line.y
    coeffs = pullback_coefficients(ProjLine(w, y), t)
    # reverse to the alpha^0 beta^5 .. alpha^5 order
    rows = list(reversed(coeffs))
    order = 0
    for c in rows:
        if c:
            break
        order += 1
    chart = all(bool(c) for c in y.coords)
    return ContactReport(order, order == 6, coeffs, chart, tuple(y.coords))


def _insert_zero(i: int, u: Sequence) -> list:
    u = list(u.coords if isinstance(u, ProjPoint) else u)
    if len(u) == 4:
        u.insert(i, 0)
    if len(u) != 5:
        raise ValueError("expected 4 chart coordinates or 5 with u_i = 0")
    if u[i]:
        raise ValueError(f"u_{i} must vanish in chart {i}")
    return u


def solve_line_system(i: int, u: Sequence, t=None) -> ProjPoint:
    """(y_0^5 : ... : y_4^5) for the chart point u (u_i = 0).

    Returns Y_j = (-1)^j delta(u^j) g(u^j); the common factor
    5 t prod(y) / (10 delta(u)) is projectively irrelevant and dropped.  The
    parameter ``t`` is accepted for symmetry with the other entry points and
    does not change the projective answer.
    """
    u = _insert_zero(i, u)
    for a in range(5):
        for b in range(a):
            if u[a] == u[b]:
                raise SingularVandermonde(f"u_{b} = u_{a}")
    names = list(U)
    point = dict(zip(names, u))
    out = []
    for j in range(5):
        rest = names[:j] + names[j + 1:]
        dj = vandermonde_delta(rest).evaluate(point)
        gj = g_poly(rest).evaluate(point)
        val = dj * gj
        out.append(-val if j % 2 else val)
    if any(not v for v in out):
        raise ZeroSector("some y_j^5 vanishes")
    return ProjPoint(out)


def reconstruct_line(i: int, u: Sequence, precision_bits: int = 128):
    """A concrete line and parameter t realizing the chart point u.

    Takes principal fifth roots y_j of Y = solve_line_system(i, u) and
    x_j = u_j y_j; the dropped factor 5 t prod(y) / (10 delta(u)) equals 1
    for t = 2 delta(u) / prod(y).  Returns (line, t) over mpmath complex
    numbers at the requested precision.
    """
    uu = _insert_zero(i, u)
    Yv = solve_line_system(i, u)
    delta = vandermonde_delta(U).evaluate(dict(zip(U, uu)))
    with mpmath.workprec(precision_bits):
        ys = [mpmath.root(mpmath.mpc(_to_mp(c)), 5) for c in Yv]
        xs = [_to_mp(uj) * yj for uj, yj in zip(uu, ys)]
        prod = mpmath.fprod(ys)
        t = 2 * _to_mp(delta) / prod
    return ProjLine(xs, ys), t


def _to_mp(c):
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    return mpmath.mpf(c) if isinstance(c, int) else c


def system_residual(u: Sequence, Yv: Sequence) -> list:
    """Check M(u) Y against the right-hand side s_k(u)/C(5,k).

    Returns the 2x2 minors between (sum_j u_j^k Y_j)_k and (s_k/C(5,k))_k,
    all zero exactly when Y solves the system for some normalization of t.
    """
    u = list(u)
    Yv = list(Yv.coords if isinstance(Yv, ProjPoint) else Yv)
    lhs = []
    rhs = []
    point = dict(zip(U, u))
    for k in range(6):
        lhs.append(sum(uj ** k * yj for uj, yj in zip(u, Yv)))
        rhs.append(qdiv(elementary_symmetric(k, U).evaluate(point), comb(5, k)))
    minors = []
    for a in range(6):
        for b in range(a + 1, 6):
            minors.append(lhs[a] * rhs[b] - lhs[b] * rhs[a])
    return minors


# ----------------------------------------------------------------------------
# the fiber surface


@dataclass
class FiberSurfaceEq:
    w: object
    lhs: SparsePoly          # delta^2(u)
    rhs: SparsePoly          # (w / 2^5) prod_j g(u^j)
    factored: SparsePoly     # (1 - 3w/2^7) delta^2 - (w/2^5) P^2

    def difference(self) -> SparsePoly:
        return self.lhs - self.rhs

    def is_equivalent(self) -> bool:
        return self.difference() == self.factored

    def holds_at(self, u: Sequence):
        point = dict(zip(U, u))
        return self.difference().evaluate(point)


def _w_value(w):
    if isinstance(w, str):
        if w == "branch":
            return BRANCH_W
        return var(w)
    return w


def fiber_surface_equation(w="w") -> FiberSurfaceEq:
    from .identities import perfect_square_P
    from .polyring import G_poly
    w = _w_value(w)
    delta = vandermonde_delta(U)
    d2 = delta * delta
    G = G_poly(U)
    P = perfect_square_P()
    rhs = G * w * Fraction(1, 32)
    factored = d2 * (1 - w * Fraction(3, 128)) - P * P * w * Fraction(1, 32)
    return FiberSurfaceEq(w, d2, rhs, factored)


@dataclass
class FiberFactorization:
    """sqrt(A) delta + sqrt(B) P and sqrt(A) delta - sqrt(B) P.

    A = 1 - 3w/2^7 and B = w/2^5.  For exact w the square roots are formal
    symbols ``sqA``, ``sqB`` subject to sqA^2 = A, sqB^2 = B; for numeric w
    they are complex balls.
    """
    w: object
    A: object
    B: object
    factors: tuple
    formal: bool
    relations: dict = field(default_factory=dict)

    def product(self) -> SparsePoly:
        prod = self.factors[0] * self.factors[1]
        if self.formal:
            prod = reduce_squares(prod, self.relations)
        return prod

    def target(self) -> SparsePoly:
        from .identities import perfect_square_P
        delta = vandermonde_delta(U)
        P = perfect_square_P()
        return delta * delta * self.A - P * P * self.B


def reduce_squares(p: SparsePoly, relations: dict) -> SparsePoly:
    """Rewrite s^e as value^(e//2) s^(e%2) for each formal square root s."""
    out = p
    for name, value in relations.items():
        if name not in out.gens:
            continue
        parts = out.coeffs_in([name])
        acc = SparsePoly({}, out.gens, _clean=True)
        for (e,), rest in parts.items():
            term = rest * (value ** (e // 2))
            if e % 2:
                term = term * var(name)
            acc = acc + term
        out = acc
    return out


def _is_numeric(w) -> bool:
    return isinstance(w, (float, complex, ComplexApprox, mpmath.mpf, mpmath.mpc))


def fiber_factorization(w, precision_bits: int = 128) -> FiberFactorization:
    from .identities import perfect_square_P
    w = _w_value(w)
    delta = vandermonde_delta(U)
    P = perfect_square_P()
    if _is_numeric(w):
        wb = w if isinstance(w, ComplexApprox) else ComplexApprox(w, 0, precision_bits)
        A = 1 - wb * Fraction(3, 128)
        B = wb * Fraction(1, 32)
        if A.contains_zero() or B.contains_zero():
            raise BranchPoint("w is within the error ball of a branch value")
        with mpmath.workprec(precision_bits + 10):
            sa = mpmath.sqrt(A.mid)
            sb = mpmath.sqrt(B.mid)
            # |sqrt(z) - sqrt(m)| <= |z - m| / (|sqrt(m)|) for |z - m| < |m|
            ra = 2 * A.rad / abs(sa) + mpmath.ldexp(1, -precision_bits)
            rb = 2 * B.rad / abs(sb) + mpmath.ldexp(1, -precision_bits)
        SA = ComplexApprox(sa, ra, precision_bits)
        SB = ComplexApprox(sb, rb, precision_bits)
        f1 = delta * SA + P * SB
        f2 = delta * SA - P * SB
        return FiberFactorization(w, A, B, (f1, f2), False)
    if isinstance(w, SparsePoly):
        A = 1 - w * Fraction(3, 128)
        B = w * Fraction(1, 32)
    else:
        if not w or w == BRANCH_W:
            raise BranchPoint(f"w = {w}: the two factors coincide up to a scalar")
        A = 1 - w * Fraction(3, 128)
        B = w * Fraction(1, 32)
    sqa, sqb = var("sqA"), var("sqB")
    f1 = delta * sqa + P * sqb
    f2 = delta * sqa - P * sqb
    return FiberFactorization(w, A, B, (f1, f2), True, {"sqA": A, "sqB": B})


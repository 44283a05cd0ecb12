"""Exact certificates for the polynomial identities behind the line geometry.

Every check builds both sides as SparsePolys and compares canonical forms.
Vector and matrix identities, or one identity taken over many index
assignments, are folded into a single polynomial with marker variables
``k0, k1, ...``: component ``key`` is multiplied by prod k_i^key[i].  The
folded difference is zero iff every component is.

Index conventions
-----------------
u^j is u with u_j dropped, u^{0i} drops u_0 and u_i.  delta(v) is the
Vandermonde product prod_{a>b} (v_a - v_b) in the listed order.  In the
construction of P the partial Vandermonde delta(u^{0i}) carries a sign::

    delta(u^{0i}) := delta(u^0) / prod_{j != 0, i} (u_j - u_i)

which is (-1)^(i+1) times the plain Vandermonde of the remaining three
variables.  With the plain product the quantities E_i depend on i.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .numbers import XI
from .polyring import (G_poly, SparsePoly, const, elementary_symmetric, g_poly,
                       vandermonde_delta, var)

__all__ = [
    "IdentityCase", "ConstructionFailed", "fold",
    "verify_row_relation", "verify_vandermonde_inverse", "verify_g_properties",
    "construct_and_verify_P", "perfect_square_P", "verify_vangeemen_locus_identities",
    "verify_component_relations", "reduce_reciprocal", "SUITE", "run_identities",
]

U = tuple(f"u{j}" for j in range(5))


class ConstructionFailed(ArithmeticError):
    pass


@dataclass
class IdentityCase:
    name: str
    anchor: str
    lhs: SparsePoly
    rhs: SparsePoly
    components: int = 1
    failing: list = field(default_factory=list)
    note: str = ""
    seconds: float = 0.0

    @property
    def diff(self) -> SparsePoly:
        return _poly(self.lhs) - _poly(self.rhs)

    @property
    def verified(self) -> bool:
        return self.diff.is_zero()

    @property
    def status(self) -> str:
        return "verified" if self.verified else "failed"

    def to_json(self, timings: bool = False) -> dict:
        d = self.diff
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "components": self.components,
            "monomials": {"lhs": len(_poly(self.lhs)), "rhs": len(_poly(self.rhs)),
                          "difference": len(d)},
        }
        if self.failing:
            out["failing_components"] = [list(k) for k in self.failing]
        if not d.is_zero():
            text = str(d)
            out["difference"] = text if len(text) <= 400 else text[:400] + " ..."
        if self.note:
            out["note"] = self.note
        if timings:
            out["seconds"] = round(self.seconds, 4)
        return out


def _poly(x) -> SparsePoly:
    return x if isinstance(x, SparsePoly) else const(x)


def _marker(key: Sequence[int]) -> SparsePoly:
    m = const(1)
    for i, e in enumerate(key):
        if e:
            m = m * var(f"k{i}") ** e
    return m


def fold(name: str, anchor: str, parts, note: str = "") -> IdentityCase:
    """Fold (key, lhs, rhs) triples into one IdentityCase."""
    lhs, rhs = const(0), const(0)
    failing = []
    n = 0
    for key, a, b in parts:
        n += 1
        a, b = _poly(a), _poly(b)
        if not (a - b).is_zero():
            failing.append(tuple(key))
        m = _marker(key)
        lhs = lhs + a * m
        rhs = rhs + b * m
    return IdentityCase(name, anchor, lhs, rhs, n, failing, note)


def _s(k, vs):
    return elementary_symmetric(k, list(vs))


def _drop(vs, *names):
    return [v for v in vs if v not in names]


# ----------------------------------------------------------------------------
# the membership matrix


def verify_row_relation() -> IdentityCase:
    """r_5 - s_1 r_4 + s_2 r_3 - s_3 r_2 + s_4 r_1 - s_5 r_0 = 0, column by column."""
    rows = []
    for k in range(6):
        row = [var(u) ** k for u in U]
        row.append(_s(k, U) * Fraction(1, comb(5, k)))
        rows.append(row)
    parts = []
    for col in range(6):
        combo = const(0)
        for k in range(6):
            # coefficient of r_k is (-1)^(5-k) s_(5-k)
            combo = combo + rows[k][col] * _s(5 - k, U) * (-1) ** (5 - k)
        parts.append(((col,), combo, 0))
    return fold("row_relation", "row relation of the augmented membership matrix", parts)


def verify_vandermonde_inverse() -> list:
    """Cofactor expansion of the inverse Vandermonde matrix."""
    delta = vandermonde_delta(U)
    expand, diagonal, inverse = [], [], []
    for j in range(5):
        uj = _drop(U, U[j])
        dj = vandermonde_delta(uj)
        for l in range(5):
            ul = var(U[l])
            lhs = const(0)
            for k in range(5):
                lhs = lhs + _s(4 - k, uj) * ul ** k * (-1) ** k
            prod = const(1)
            for h in range(5):
                if h != j:
                    prod = prod * (ul - var(U[h]))
            expand.append(((j, l), lhs, prod))
            # the same sum times delta(u^j) is (-1)^j delta(u) on the diagonal
            diagonal.append(((j, l), lhs * dj, delta * (-1) ** j if j == l else 0))
            # row j of delta(u) M^-1 against column l of M
            entry = const(0)
            for k in range(5):
                entry = entry + dj * _s(4 - k, uj) * ul ** k * (-1) ** (j + k)
            inverse.append(((j, l), entry, delta if j == l else 0))
    return [
        fold("vandermonde_inverse_expansion", "alternating sum of s_(4-k)(u^j) u_l^k", expand),
        fold("vandermonde_inverse_kronecker", "Kronecker form with delta(u)/delta(u^j)", diagonal),
        fold("vandermonde_inverse_product", "delta(u) M^-1 times M is delta(u) I", inverse),
    ]


# ----------------------------------------------------------------------------
# properties of g


def _g_of(vs):
    return g_poly(list(vs))


def verify_g_properties() -> list:
    """The five restriction and derivative properties of g(u^i).

    Run over all 120 assignments of (h, i, j, k, l) to (0..4).  The literal
    derivative-on-the-diagonal statement fails by an overall sign; the
    negated form is certified as a separate case.
    """
    cases = {name: [] for name in ("swap", "diag", "diag_derivative",
                                    "diag_derivative_negated", "second_derivative",
                                    "second_derivative_sum", "second_derivative_diag")}
    for perm in itertools.permutations(range(5)):
        h, i, j, k, l = (U[p] for p in perm)
        H, I, J, K, L = (var(x) for x in (h, i, j, k, l))
        gi = _g_of(_drop(U, i))
        gj = _g_of(_drop(U, j))
        key = perm
        cases["swap"].append((key, gi.substitute({j: I}), gj.substitute({j: I})))
        cases["diag"].append((key, gi.substitute({j: K}),
                              (L - K) ** 2 * (H - K) ** 2))
        d1 = gi.diff(j).substitute({k: J})
        target = (L - J) * (H - J) * (L + H - J * 2)
        cases["diag_derivative"].append((key, d1, target))
        cases["diag_derivative_negated"].append((key, d1, -target))
        d2i = gi.diff(j, 2)
        d2j = gj.diff(i, 2)
        cases["second_derivative"].append((key, d2i, d2j))
        # sum over m not in {i, j}; the other two indices play the roles of h, l
        rest = [x for x in U if x not in (i, j)]
        total = const(0)
        for m in rest:
            a, b = (var(x) for x in rest if x != m)
            total = total + (a - var(m)) * (b - var(m))
        cases["second_derivative_sum"].append((key, d2i, total * 2))
        cases["second_derivative_diag"].append((key, d2i.substitute({k: L}),
                                                (H - L) ** 2 * 2))
    anchors = {
        "swap": "g(u^i) = g(u^j) on u_j = u_i",
        "diag": "g(u^i) on u_j = u_k is (u_l-u_j)^2 (u_h-u_j)^2",
        "diag_derivative": "d g(u^i)/du_j on u_j = u_k, printed sign",
        "diag_derivative_negated": "d g(u^i)/du_j on u_j = u_k, opposite sign",
        "second_derivative": "d^2 g(u^i)/du_j^2 = d^2 g(u^j)/du_i^2",
        "second_derivative_sum": "d^2 g(u^i)/du_j^2 = 2 sum (u_h-u_k)(u_l-u_k)",
        "second_derivative_diag": "d^2 g(u^i)/du_j^2 on u_k = u_l is 2 (u_h-u_k)^2",
    }
    notes = {
        "diag_derivative": "true value is the negative of the printed right side",
        "diag_derivative_negated": "auxiliary: the sign-corrected statement",
    }
    return [fold(f"g_{name}", anchors[name], parts, notes.get(name, ""))
            for name, parts in cases.items()]


# ----------------------------------------------------------------------------
# the perfect square P


def _signed_delta_0i(i: int) -> SparsePoly:
    """Pi_i with delta(u^{0i}) = delta(u^0) / Pi_i."""
    den = const(1)
    for j in range(1, 5):
        if j != i:
            den = den * (var(U[j]) - var(U[i]))
    return den


def _construct():
    u0 = var("u0")
    ui = [var(x) for x in U]
    delta = vandermonde_delta(U)
    rest = list(U[1:])
    d0 = vandermonde_delta(rest)
    g0 = _g_of(rest)
    # delta(u^0)/delta(u^{0i}) is the polynomial Pi_i
    Pi = {i: _signed_delta_0i(i) for i in range(1, 5)}
    # delta(u) / (delta(u^{0i}) (u_0 - u_i)) = (delta / delta0) * Pi_i / (u_0 - u_i)
    dd0 = delta.exact_div(d0)
    S = const(0)
    for i in range(1, 5):
        S = S + g0 * (dd0 * Pi[i]).exact_div(u0 - ui[i])
    # delta0 * E_i with E_i = B_i/(2 a_i) - sum_j a_j/(u_i - u_j)
    E = {}
    for i in range(1, 5):
        e = g0.diff(U[i]) * Pi[i] * Fraction(1, 2)
        for j in range(1, 5):
            if j != i:
                e = e - g0 * Pi[j].exact_div(ui[i] - ui[j])
        E[i] = e
    P = S + dd0 * E[1]
    lead = P.coefficient({"u0": 4, "u1": 3, "u2": 2, "u3": 1})
    if lead < 0:
        P, S, E = -P, -S, {i: -e for i, e in E.items()}
    return P, S, E, g0, d0, delta


@lru_cache(maxsize=1)
def perfect_square_P() -> SparsePoly:
    """The symmetric degree 10 P with prod_j g(u^j) - 3/4 delta^2 = P^2."""
    return _construct()[0]


def construct_and_verify_P(strict: bool = True):
    """Build P from the partial fraction data and certify each step.

    Returns (P, cases) where cases[-1] is the perfect-square identity itself.
    With ``strict`` a failing sub-identity raises ConstructionFailed.
    """
    t0 = time.perf_counter()
    P, S, E, g0, d0, delta = _construct()
    rest = list(U[1:])
    cases = []

    cases.append(fold("P_E_independent", "E_i does not depend on i",
                      [((i,), E[i], E[1]) for i in range(2, 5)]))

    C16 = g0
    for i in range(1, 5):
        C16 = C16 * _g_of(_drop(U, U[i])).diff("u0", 2)
    cases.append(IdentityCase("P_E_squared", "E^2 = C - 3/4 (cleared by delta(u^0)^2)",
                              E[1] * E[1], C16 * Fraction(1, 16) - d0 * d0 * Fraction(3, 4)))

    # double-pole coefficients: G at u_0 = u_i against g^2(u^0) delta^2(u^0) Pi_i^2
    G = G_poly(U)
    parts = []
    for i in range(1, 5):
        ui = var(U[i])
        Pi = _signed_delta_0i(i)
        prod = const(1)
        for j in range(1, 5):
            if j != i:
                prod = prod * (ui - var(U[j]))
        lhs = G.substitute({"u0": ui}) * (d0 * d0).exact_div(Pi * Pi)
        parts.append(((i,), lhs, g0 * g0 * d0 * d0 * prod * prod))
    cases.append(fold("P_double_pole", "A_i = g^2(u^0)/delta^2(u^{0i})", parts))

    # simple-pole coefficients, everything multiplied by delta0^2 prod^2 / Pi^2 ...
    parts = []
    dG = G.diff("u0")
    for i in range(1, 5):
        ui = var(U[i])
        Pi = _signed_delta_0i(i)
        prod = const(1)
        others = [j for j in range(1, 5) if j != i]
        for j in others:
            prod = prod * (ui - var(U[j]))
        # B_i + A_i sum 2/(u_i-u_j) = dG|/(delta0^2 prod^2); multiply by delta0^2 prod^3
        lhs = g0 * g0.diff(U[i]) * Pi * Pi * prod ** 3
        tail = const(0)
        for j in others:
            tail = tail + prod.exact_div(ui - var(U[j])) * 2
        lhs = lhs + g0 * g0 * Pi * Pi * prod * prod * tail
        parts.append(((i,), lhs, dG.substitute({"u0": ui}) * prod))
    cases.append(fold("P_simple_pole", "B_i = g(u^0) dg(u^0)/du_i / delta^2(u^{0i})", parts))

    cases.append(IdentityCase("P_symmetric_degree10",
                              "P symmetric and homogeneous of degree 10",
                              const(int(P.is_symmetric(U) and P.is_homogeneous()
                                        and P.total_degree() == 10)), const(1)))

    main = IdentityCase("P_perfect_square", "prod_j g(u^j) - 3/4 delta^2(u) = P^2",
                        G - delta * delta * Fraction(3, 4), P * P,
                        note=f"P has {len(P)} monomials")
    cases.append(main)
    elapsed = time.perf_counter() - t0
    for c in cases:
        c.seconds = elapsed / len(cases)
    if strict and not all(c.verified for c in cases):
        bad = [c.name for c in cases if not c.verified]
        raise ConstructionFailed("failed: " + ", ".join(bad))
    return P, cases


# ----------------------------------------------------------------------------
# the van Geemen locus


def reduce_reciprocal(p: SparsePoly, pairs: Sequence[tuple]) -> SparsePoly:
    """Reduce modulo u v - 1 for each (u, v) pair of generator names."""
    names = list(p.gens)
    out = {}
    for exps, c in p.as_dict().items():
        e = dict(zip(names, exps))
        for a, b in pairs:
            m = min(e.get(a, 0), e.get(b, 0))
            if m:
                e[a] -= m
                e[b] -= m
        key = tuple(e[n] for n in names)
        out[key] = out.get(key, 0) + c
    return SparsePoly.from_dict(out, names).prune()


def verify_vangeemen_locus_identities() -> list:
    cases = []
    u = ["u2", "u3", "u4"]
    U2, U3, U4 = (var(x) for x in u)
    s1, s2, s3 = (_s(k, u) for k in (1, 2, 3))
    s4 = const(0)  # four-fold products vanish with three variables

    # the last four rows of M(u) with u_0 = u_1 = 0 are dependent
    parts = []
    for j in u:
        for k in range(1, 3):
            x = var(j)
            parts.append(((u.index(j), k),
                          x ** (k + 3) - s1 * x ** (k + 2) + s2 * x ** (k + 1) - s3 * x ** k, 0))
    cases.append(fold("vg_row_dependence", "u_j^(k+3) - s_1 u_j^(k+2) + s_2 u_j^(k+1) - s_3 u_j^k",
                      parts))

    relation = s4 * Fraction(1, 5) - s1 * s3 * Fraction(1, 10) + s2 * s2 * Fraction(1, 10) \
        - s3 * s1 * Fraction(1, 5)
    cases.append(IdentityCase("vg_chart_relation",
                              "compatibility relation reduces to s_2^2 - 3 s_1 s_3",
                              relation * 10, s2 * s2 - s1 * s3 * 3))
    xi2 = XI * XI
    prod = (U3 * U4 + U2 * U4 * XI + U2 * U3 * xi2) * (U3 * U4 + U2 * U4 * xi2 + U2 * U3 * XI)
    cases.append(IdentityCase("vg_locus_factorization",
                              "s_2^2 - 3 s_1 s_3 as a product of two conjugate quadrics",
                              s2 * s2 - s1 * s3 * 3, prod))

    # reciprocal transforms for top = 3, 4, 5
    parts, dparts = [], []
    for top in (3, 4, 5):
        us = [f"u{j}" for j in range(top)]
        vs = [f"v{j}" for j in range(top)]
        pairs = list(zip(us, vs))
        stop = _s(top, vs)
        for k in range(top + 1):
            parts.append(((top, k), reduce_reciprocal(_s(k, us) * stop, pairs), _s(top - k, vs)))
        lhs = reduce_reciprocal(vandermonde_delta(us) * stop ** (top - 1), pairs)
        dparts.append(((top,), lhs, vandermonde_delta(vs) * (-1) ** (top * (top - 1) // 2)))
    cases.append(fold("vg_reciprocal_symmetric",
                      "s_k(u') = s_(top-k)(v')/s_top(v') for u = 1/v", parts))
    cases.append(fold("vg_reciprocal_delta",
                      "delta(u') = (-1)^(top(top-1)/2) delta(v')/s_top(v')^(top-1)", dparts))

    # the displayed delta(v) M^-1 matrix against M^{01}(u) with u = 1/v
    v = ["v2", "v3", "v4"]
    V = {x: var(x) for x in v}
    dv = vandermonde_delta(v)
    D = {}
    for j in (2, 3, 4):
        vj = f"v{j}"
        others = _drop(v, vj)
        for k in range(3):
            D[j, k] = V[vj] ** 3 * vandermonde_delta(others) * _s(k, others) * (-1) ** (j + k)
    parts = []
    for j in (2, 3, 4):
        for jj in (2, 3, 4):
            # sum_k D[j,k] u_jj^(k+1), cleared by v_jj^3
            lhs = const(0)
            for k in range(3):
                lhs = lhs + D[j, k] * V[f"v{jj}"] ** (2 - k)
            rhs = dv * V[f"v{jj}"] ** 3 if j == jj else 0
            parts.append(((j, jj), lhs, rhs))
    cases.append(fold("vg_inverse_matrix",
                      "delta(v) times the inverse of M^{01} in reciprocal coordinates", parts))

    # y_j^5 from the inverse matrix applied to C^{01}(v), cleared by delta(v) s_3(v)
    t1, t2, t3 = (_s(k, v) for k in (1, 2, 3))
    C = [t2, t1 * Fraction(1, 2), const(Fraction(1, 2))]
    parts, simp = [], []
    for j in (2, 3, 4):
        vj = V[f"v{j}"]
        others = _drop(v, f"v{j}")
        lhs = const(0)
        for k in range(3):
            lhs = lhs + D[j, k] * C[k]
        o1, o2 = _s(1, others), _s(2, others)
        rhs = vj ** 3 * vandermonde_delta(others) * (-1) ** j \
            * (t2 - o1 * t1 * Fraction(1, 2) + o2 * Fraction(1, 2))
        parts.append(((j,), lhs, rhs))
        simp.append(((j,), t2 - o1 * t1 * Fraction(1, 2) + o2 * Fraction(1, 2),
                     (t2 * 3 - t1 * t1 + vj * vj) * Fraction(1, 2)))
    cases.append(fold("vg_fifth_powers", "y_j^5 from the inverse matrix", parts))
    cases.append(fold("vg_fifth_powers_simplified",
                      "bracket equals (3 s_2 - s_1^2 + v_j^2)/2", simp))

    V2, V3, V4 = V["v2"], V["v3"], V["v4"]
    cases.append(IdentityCase("vg_plane_factorization",
                              "s_1^2 - 3 s_2 = (v_2+xi v_3+xi^2 v_4)(v_2+xi^2 v_3+xi v_4)",
                              t1 * t1 - t2 * 3,
                              (V2 + V3 * XI + V4 * xi2) * (V2 + V3 * xi2 + V4 * XI)))

    signed = [vandermonde_delta(_drop(v, f"v{j}")) * (-1) ** j for j in (2, 3, 4)]
    cases.append(fold("vg_signed_deltas", "(-1)^j delta(v^{01j}) = (v_4-v_3, v_2-v_4, v_3-v_2)",
                      [((j,), a, b) for j, a, b in zip((2, 3, 4), signed,
                                                       (V4 - V3, V2 - V4, V3 - V2))]))
    on_plane = {"v2": -V3 * XI - V4 * xi2}
    ratio = [x.substitute(on_plane) for x in (V4 - V3, V2 - V4, V3 - V2)]
    target = [const(1), const(XI), const(xi2)]
    parts = []
    for a, b in itertools.combinations(range(3), 2):
        parts.append(((a, b), ratio[a] * target[b], ratio[b] * target[a]))
    cases.append(fold("vg_point_on_plane",
                      "(v_4-v_3 : v_2-v_4 : v_3-v_2) = (1 : xi : xi^2) on the plane", parts))
    return cases


# ----------------------------------------------------------------------------
# boundary components


def _p(names):
    return {n: var(n) for n in names}


def verify_component_relations() -> list:
    cases = []
    xi2 = XI * XI
    p = _p(["p01", "p02", "p03", "p12", "p13", "p23"])
    p31 = -p["p13"]
    X = p["p03"] * p["p12"]
    Yq = p["p02"] * p["p13"]
    lhs = p["p01"] * p["p02"] * p["p03"] * p["p12"] * p["p23"] * p31 \
        * (X + Yq * XI) * (X + Yq * xi2) * 5
    f_a = p["p01"] ** 5 + p["p02"] ** 5 + p["p03"] ** 5
    f_b = -p["p01"] ** 5 + p["p12"] ** 5 + p["p13"] ** 5
    f_c = -p["p02"] ** 5 - p["p12"] ** 5 + p["p23"] ** 5
    Q = p["p01"] * p["p23"] + p["p03"] * p["p12"] + p["p02"] * p31
    rhs = p["p01"] ** 5 * f_c + p["p12"] ** 5 * f_a - p["p02"] ** 5 * f_b \
        - (p["p01"] ** 5 * p["p23"] ** 5 + (X + p["p02"] * p31) ** 5)
    cases.append(IdentityCase("quintic_relation", "quintic relation among the six Pluecker "
                              "coordinates of a hyperplane section", lhs, rhs,
                              note="fails as a pure expansion; holds modulo the quadric"))
    # modulo the quadric: the difference is Q times an explicit cofactor
    cofactor = p["p02"] * p["p03"] * p["p12"] * p31 * (X + Yq * XI) * (X + Yq * xi2) * 5
    cases.append(IdentityCase("quintic_relation_mod_quadric",
                              "quintic relation modulo the Pluecker quadric",
                              lhs - rhs, Q * cofactor))
    cases[-1].note = "difference = Q * 5 p02 p03 p12 p31 (X + xi Y)(X + xi^2 Y)"

    x2, x3, y2, y3 = (var(n) for n in ("x2", "x3", "y2", "y3"))
    A, B = x2 * y3, x3 * y2
    left = x2 ** 5 - y2 ** 5 + (x2 * y3 - x3 * y2) ** 5
    head = x2 ** 5 * (1 + y2 ** 5 + y3 ** 5) - y2 ** 5 * (1 + x2 ** 5 + x3 ** 5)
    cases.append(IdentityCase("affine_relation", "affine form of the quintic relation on p01 != 0",
                              left, head + x2 * x3 * y2 * y3 * (A + B * XI) * (A + B * xi2) * 5,
                              note="fails as printed"))
    cases.append(IdentityCase("affine_relation_corrected",
                              "affine form with the factor -(x2 y3 - x3 y2)",
                              left, head - x2 * x3 * y2 * y3 * (A - B)
                              * (A + B * XI) * (A + B * xi2) * 5))

    # the generators on U_01 and their relations
    xs = {i: var(f"x{i}") for i in (2, 3, 4)}
    ys = {i: var(f"y{i}") for i in (2, 3, 4)}

    def pij(i, j, c=-1):
        return xs[i] * ys[j] + xs[j] * ys[i] * c

    def triple(i, j):
        return pij(i, j) * pij(i, j, XI) * pij(i, j, xi2)

    def g(j, i, k):
        return triple(i, j) * xs[i] * ys[i] - triple(j, k) * xs[k] * ys[k]

    f1 = 1 + xs[2] ** 5 + xs[3] ** 5 + xs[4] ** 5
    f2 = 1 + ys[2] ** 5 + ys[3] ** 5 + ys[4] ** 5

    def fj(j):
        out = xs[j] ** 5 - ys[j] ** 5
        for k in (2, 3, 4):
            if k != j:
                out = out + (xs[j] * ys[k] - xs[k] * ys[j]) ** 5
        return out

    for j in (3, 4):
        others = [k for k in (2, 3, 4) if k != j]
        parts = []
        for i, k in (others, others[::-1]):
            parts.append(((i, k), fj(j),
                          xs[j] * ys[j] * g(j, i, k) * 5 + xs[j] ** 5 * f2 - ys[j] ** 5 * f1))
        cases.append(fold(f"generator_relation_f{j}",
                          f"f_{j} = 5 x_{j} y_{j} g_{j} + x_{j}^5 f_2 - y_{j}^5 f_1", parts,
                          note="both readings of the roles of i and k"))
    # the printed f_4 with the chart values x_0 = 1, x_1 = 0, y_0 = 0, y_1 = 1
    printed_f4 = xs[4] ** 5 * 0 - 0 * ys[4] ** 5 \
        + (xs[4] * ys[2] - xs[2] * ys[4]) ** 5 + (xs[4] * ys[3] - xs[3] * ys[4]) ** 5
    cases.append(IdentityCase("generator_relation_f4_printed",
                              "f_4 with its printed leading terms x_4^5 y_0^5 - x_1^5 y_4^5",
                              printed_f4,
                              xs[4] * ys[4] * g(4, 2, 3) * 5 + xs[4] ** 5 * f2 - ys[4] ** 5 * f1,
                              note="leading terms read as x_4^5 - y_4^5 in the certified case"))

    # blow-up chart: sigma_i = sum u_j^i y_j^5 over j = 2,3,4, restricted to y_4 = 0
    u2, u3 = var("u2"), var("u3")
    uu = ["u2", "u3", "u4"]
    sig = [sum((var(f"u{j}") ** i * var(f"y{j}") ** 5 for j in (2, 3)), const(0))
           for i in range(4)]
    s = [_s(k, uu) for k in range(4)]
    cases.append(IdentityCase("chart_exceptional_identity",
                              "sigma_3 - (u_2+u_3) sigma_2 + u_2 u_3 sigma_1 = 0 on y_4 = 0",
                              sig[3] - (u2 + u3) * sig[2] + u2 * u3 * sig[1], 0))
    # using sigma_2 = s_1 sigma_1 / 2 and sigma_3 = s_2 sigma_1 / 2; u_4 drops out
    reduced = (s[2] * Fraction(1, 2) - (u2 + u3) * s[1] * Fraction(1, 2) + u2 * u3) * sig[1]
    cases.append(IdentityCase("chart_exceptional_reduction",
                              "the same identity reduces to sigma_1 (u_2^2 - u_2 u_3 + u_3^2)",
                              reduced, sig[1] * (u2 * u2 - u2 * u3 + u3 * u3) * Fraction(-1, 2),
                              note="equality holds with the constant -1/2"))
    cases.append(IdentityCase("chart_quadratic_factorization",
                              "u_2^2 - u_2 u_3 + u_3^2 = (u_2 + xi u_3)(u_2 + xi^2 u_3)",
                              u2 * u2 - u2 * u3 + u3 * u3, (u2 + u3 * XI) * (u2 + u3 * xi2)))
    return cases


# ----------------------------------------------------------------------------
# suite


def _perfect_square_cases():
    return construct_and_verify_P(strict=False)[1]


SUITE: dict[str, Callable[[], list]] = {
    "row_relation": lambda: [verify_row_relation()],
    "vandermonde_inverse": verify_vandermonde_inverse,
    "g_properties": verify_g_properties,
    "perfect_square": _perfect_square_cases,
    "van_geemen_locus": verify_vangeemen_locus_identities,
    "component_relations": verify_component_relations,
}


def _run_group(name: str) -> list:
    t0 = time.perf_counter()
    cases = SUITE[name]()
    dt = time.perf_counter() - t0
    for c in cases:
        if not c.seconds:
            c.seconds = dt / len(cases)
    return cases


def run_identities(groups: Sequence[str] | None = None, jobs: int = 1) -> list:
    """Run the named groups (all by default); results sorted by case name."""
    groups = list(groups or SUITE)
    unknown = [g for g in groups if g not in SUITE]
    if unknown:
        raise KeyError(f"unknown identity group(s): {', '.join(unknown)}")
    if jobs > 1 and len(groups) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_group, groups))
    else:
        results = [_run_group(g) for g in groups]
    cases = [c for group in results for c in group]
    return sorted(cases, key=lambda c: c.name)

import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dworklines.numbers import XI
from dworklines.polyring import (NotDivisible, SparsePoly, UnknownVariable, const, determinant,
                                 elementary_symmetric, g_poly, var, vandermonde_delta,
                                 vandermonde_matrix)

NAMES = ("x", "y", "z")


@st.composite
def polys(draw, max_terms=5, max_deg=3):
    n = draw(st.integers(0, max_terms))
    p = const(0)
    for _ in range(n):
        c = draw(st.integers(-4, 4))
        mono = const(c)
        for name in NAMES:
            mono = mono * var(name) ** draw(st.integers(0, max_deg))
        p = p + mono
    return p


@settings(max_examples=500)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert a * 1 == a and (a * 0).is_zero()


def _to_sympy(p: SparsePoly):
    syms = sympy.symbols(p.gens) if p.gens else ()
    expr = sympy.Integer(0)
    for exps, c in p.as_dict().items():
        term = sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
        for s, e in zip(syms if isinstance(syms, tuple) else (syms,), exps):
            term *= s ** e
        expr += term
    return sympy.expand(expr)


@settings(max_examples=60)
@given(polys(), polys())
def test_product_against_sympy(a, b):
    assert sympy.expand(_to_sympy(a * b) - _to_sympy(a) * _to_sympy(b)) == 0


@settings(max_examples=100)
@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2))
def test_exact_division(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_not_divisible():
    x, y = var("x"), var("y")
    with pytest.raises(NotDivisible):
        (x * x + y).exact_div(x + 1)


def test_vandermonde_determinant():
    names = [f"u{i}" for i in range(4)]
    M = vandermonde_matrix(names)
    d = determinant(M)
    assert d == vandermonde_delta(names) or d == -vandermonde_delta(names)
    # sign convention: delta(u) = prod_{i<j} (u_j - u_i)
    point = {n: i for i, n in enumerate(names)}
    assert vandermonde_delta(names).evaluate(point) == 1 * 2 * 3 * 1 * 2 * 1


def test_determinant_against_sympy():
    a, b, t = var("a"), var("b"), var("t")
    M = [[a, b, 1], [t, a * b, 2], [1, t, a]]
    S = sympy.Matrix([[_to_sympy(x) if isinstance(x, SparsePoly) else x for x in row] for row in M])
    assert sympy.expand(_to_sympy(determinant(M)) - S.det()) == 0


def test_elementary_symmetric():
    names = [f"u{i}" for i in range(5)]
    point = {n: i + 1 for i, n in enumerate(names)}
    # prod (1 + u_i x) = sum s_k x^k
    for k in range(6):
        expected = sum(
            __import__("math").prod(c) for c in itertools.combinations(range(1, 6), k))
        assert elementary_symmetric(k, names).evaluate(point) == expected


def test_g_is_symmetric_of_degree_4():
    names = ["u1", "u2", "u3", "u4"]
    g = g_poly(names)
    assert g.is_homogeneous() and g.total_degree() == 4
    assert g.is_symmetric(names)


def test_cyclotomic_coefficients():
    u, v = var("u"), var("v")
    p = (u + v * XI) * (u + v * XI * XI)
    assert p == u * u - u * v + v * v


def test_substitute_and_diff():
    x, y = var("x"), var("y")
    p = x ** 3 * y + 2 * x
    assert p.diff("x") == 3 * x * x * y + 2
    assert p.substitute({"x": y + 1}) == (y + 1) ** 3 * y + 2 * (y + 1)
    assert p.evaluate({"x": 2, "y": Fraction(1, 2)}) == 8


def test_json_round_trip():
    x, y = var("x"), var("y")
    p = x ** 2 * Fraction(3, 5) - y * XI + 7
    assert SparsePoly.from_json(p.to_json()) == p


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        var("x").evaluate({"y": 1})

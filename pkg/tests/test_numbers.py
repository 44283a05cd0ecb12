import cmath
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from dworklines.numbers import (MU, ONE, XI, ZERO, ZETA, ComplexApprox, Cyclo, DivisionByZero,
                                MixedTower, Tower, ZeroRadicand, embed_complex, field_arith,
                                from_json, mu_power, radical_adjoin, to_json, xi_power)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
cyclos = st.lists(small, min_size=8, max_size=8).map(Cyclo.from_fractions)


def test_roots_of_unity():
    assert ZETA ** 15 == ONE
    assert ZETA ** 5 != ONE and ZETA ** 3 != ONE
    assert MU ** 5 == ONE and MU != ONE
    assert XI * XI + XI + 1 == ZERO
    assert sum((mu_power(k) for k in range(5)), ZERO) == ZERO
    assert xi_power(3) == ONE


@settings(max_examples=200)
@given(cyclos, cyclos, cyclos)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=100)
@given(cyclos)
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(DivisionByZero):
            a.inverse()
    else:
        assert a * a.inverse() == ONE
        assert (a.norm() != 0)


def test_embedding_matches_floats():
    z = embed_complex(ZETA, 0, 128)
    assert abs(complex(z.mid) - cmath.exp(2j * cmath.pi / 15)) < 1e-15
    x = embed_complex(XI, 0, 128)
    assert abs(complex(x.mid) - cmath.exp(2j * cmath.pi / 3)) < 1e-15


def test_embedding_is_a_homomorphism():
    a = Cyclo.from_fractions([1, 2, 0, -1, Fraction(1, 3), 0, 0, 5])
    b = Cyclo.from_fractions([0, -1, 1, 0, 2, 0, 1, 0])
    for k in range(8):
        lhs = embed_complex(a * b, k)
        rhs = embed_complex(a, k) * embed_complex(b, k)
        assert (lhs - rhs).contains_zero()


def test_tower():
    T = radical_adjoin(Fraction(27, 2))
    r = T.r
    assert r ** 5 == T.lift(Fraction(27, 2))
    assert r * r.inverse() == T.lift(1)
    roots = T.fifth_roots_of(Fraction(27, 2))
    assert len(roots) == 5
    assert all(x ** 5 == T.lift(Fraction(27, 2)) for x in roots)
    with pytest.raises(ZeroRadicand):
        Tower(0)
    with pytest.raises(MixedTower):
        radical_adjoin(2).r + radical_adjoin(3).r


def test_tower_embedding():
    T = radical_adjoin(2)
    e = embed_complex(T.r, 0, 128)
    with mpmath.workprec(128):
        assert abs(e.mid - mpmath.root(2, 5)) < mpmath.mpf(2) ** -100


def test_ball_encloses_and_negation_keeps_precision():
    with mpmath.workprec(200):
        m = mpmath.root(mpmath.mpc(3, 1), 5)
    a = ComplexApprox(m, 0, 128)
    d = a ** 5 - ComplexApprox(mpmath.mpc(3, 1), 0, 128)
    assert d.contains_zero()
    assert d.abs_upper() < mpmath.mpf(2) ** -100


def test_ball_fraction_input():
    x = ComplexApprox(Fraction(1, 3), 0, 128)
    y = x * 3 - 1
    assert y.contains_zero()
    assert y.error_bound < 2 ** -120


def test_ball_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        ComplexApprox(0, 0, 64).inverse()


def test_json_round_trip():
    a = Cyclo.from_fractions([1, Fraction(-2, 7), 0, 3, 0, 0, 1, 0])
    assert from_json(to_json(a)) == a
    T = radical_adjoin(Fraction(27, 2))
    b = T.r ** 3 * Fraction(4, 9) + XI
    assert from_json(to_json(b)) == b


def test_field_arith_dispatch():
    assert field_arith(1, 2, "add") == Cyclo.from_rational(3)
    assert field_arith(XI, XI, "mul") == xi_power(2)
    with pytest.raises(DivisionByZero):
        field_arith(1, 0, "div")

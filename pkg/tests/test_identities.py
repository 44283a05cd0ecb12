import itertools
import math
from fractions import Fraction

import pytest
import sympy

from dworklines.identities import (SUITE, construct_and_verify_P, perfect_square_P, run_identities,
                                   verify_component_relations, verify_g_properties,
                                   verify_row_relation, verify_vandermonde_inverse)
from dworklines.polyring import elementary_symmetric, g_poly, vandermonde_delta

U = [f"u{i}" for i in range(5)]


def _by_name(cases):
    return {c.name: c for c in cases}


def test_row_relation():
    assert verify_row_relation().verified


def test_vandermonde_inverse_symbolic():
    assert all(c.verified for c in verify_vandermonde_inverse())


def test_vandermonde_inverse_numeric():
    u = [0, 1, 2, 3, 5]
    point = dict(zip(U, u))
    delta = vandermonde_delta(U).evaluate(point)
    inv = []
    for j in range(5):
        rest = U[:j] + U[j + 1:]
        dj = vandermonde_delta(rest).evaluate(point)
        inv.append([Fraction((-1) ** (j + k) * dj * elementary_symmetric(4 - k, rest).evaluate(point),
                             delta) for k in range(5)])
    M = sympy.Matrix([[sympy.Integer(x) ** k for x in u] for k in range(5)])
    oracle = M.inv()
    for j, k in itertools.product(range(5), repeat=2):
        o = oracle[j, k]
        assert inv[j][k] == Fraction(int(o.p), int(o.q))


def test_g_properties():
    cases = _by_name(verify_g_properties())
    assert all(c.components == 120 for c in cases.values())
    for name in ("g_swap", "g_diag", "g_diag_derivative_negated", "g_second_derivative",
                 "g_second_derivative_sum", "g_second_derivative_diag"):
        assert cases[name].verified, name
    # the printed sign of the first derivative on the diagonal is refuted
    assert not cases["g_diag_derivative"].verified
    assert len(cases["g_diag_derivative"].failing) == 120


def test_perfect_square():
    P, cases = construct_and_verify_P(strict=False)
    assert all(c.verified for c in cases)
    assert P.is_homogeneous() and P.total_degree() == 10
    assert P.is_symmetric(U)


def test_perfect_square_at_integer_point():
    point = dict(zip(U, [0, 1, 2, 3, 4]))
    prod = 1
    for j in range(5):
        prod *= g_poly(U[:j] + U[j + 1:]).evaluate(point)
    delta = vandermonde_delta(U).evaluate(point)
    value = prod - Fraction(3, 4) * delta ** 2
    root = perfect_square_P().evaluate(point)
    assert value == root ** 2
    assert Fraction(value).denominator == 1
    assert math.isqrt(int(value)) ** 2 == int(value)


def test_component_relations():
    cases = _by_name(verify_component_relations())
    for name in ("quintic_relation_mod_quadric", "affine_relation_corrected", "generator_relation_f3",
                 "generator_relation_f4", "chart_exceptional_identity", "chart_exceptional_reduction",
                 "chart_quadratic_factorization"):
        assert cases[name].verified, name
    for name in ("quintic_relation", "affine_relation", "generator_relation_f4_printed"):
        assert not cases[name].verified, name


def test_run_identities_parallel_is_deterministic():
    a = [c.to_json() for c in run_identities(["row_relation", "vandermonde_inverse"], jobs=1)]
    b = [c.to_json() for c in run_identities(["row_relation", "vandermonde_inverse"], jobs=2)]
    assert a == b


def test_unknown_group():
    with pytest.raises(KeyError):
        run_identities(["nope"])


def test_van_geemen_locus():
    assert all(c.verified for c in SUITE["van_geemen_locus"]())

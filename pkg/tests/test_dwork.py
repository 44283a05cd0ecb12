import itertools
import random
from fractions import Fraction

import mpmath
import pytest

from dworklines.dwork import (BranchPoint, DworkForm, SingularVandermonde, ZeroSector,
                              contact_order, fiber_factorization, fiber_surface_equation,
                              pullback_coefficients, reconstruct_line, solve_line_system,
                              system_residual)
from dworklines.lines import ProjLine, u_coordinates
from dworklines.polyring import var

L1 = ProjLine([1, 0, -1, 0, 0], [0, 1, 0, -1, 0])


def test_crossing_line_in_every_fiber():
    assert all(not c for c in pullback_coefficients(L1, "t"))
    assert all(not c for c in pullback_coefficients(L1, Fraction(7, 3)))


def test_family_pullback():
    a, b = var("a"), var("b")
    l2 = ProjLine([1, 0, -1, 0, 0], [0, 1, 0, a, b])
    c = pullback_coefficients(l2, "t")
    assert c[:3] == [0, 0, 0] and c[4] == 0
    assert c[3] == 5 * a * b * var("t")
    assert c[5] == a ** 5 + b ** 5 + 1


def test_generic_line_not_contained():
    line = ProjLine([1, 2, 3, 4, 5], [1, -1, 2, 0, 1])
    assert any(pullback_coefficients(line, 1))


def test_contact_order():
    rep = contact_order(L1, [1, 1, -1, -1, 0], 1)
    assert rep.contained and rep.order == 6 and not rep.chart_used
    # a line through a point of X_1 meets it with order at least 1
    z = [1, -1, 0, 0, 0]
    assert DworkForm(1).evaluate(z) == 0
    rep = contact_order(ProjLine(z, [0, 0, 1, 2, 3]), z, 1)
    assert rep.order >= 1 and not rep.contained


def _exact_chart_points(n=20, seed=5):
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        u = [Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(4)]
        u = [0] + u
        if len(set(u)) < 5:
            continue
        try:
            solve_line_system(0, u)
        except ZeroSector:
            continue
        pts.append(u)
    return pts


@pytest.mark.parametrize("u", _exact_chart_points())
def test_round_trip(u):
    Y = solve_line_system(0, u)
    assert all(m == 0 for m in system_residual(u, Y))
    with mpmath.workprec(256):
        line, t = reconstruct_line(0, u, precision_bits=256)
        coeffs = pullback_coefficients(line, t)
        scale = max(abs(c) for c in line.x.coords + line.y.coords) ** 5
        assert max(abs(c) for c in coeffs) < mpmath.mpf(2) ** -200 * scale * 1000
        # the chart recovers u up to a common scale
        y = line.y
        back = u_coordinates(line, y, 0)
        k = next(i for i in range(1, 5) if u[i])
        for i in range(5):
            assert abs(back[i] * u[k] - u[i] * back[k]) < mpmath.mpf(2) ** -180


def test_singular_vandermonde():
    with pytest.raises(SingularVandermonde):
        solve_line_system(0, [0, 1, 1, 2, 3])


def test_fiber_equation_equivalent():
    assert fiber_surface_equation("w").is_equivalent()
    assert fiber_surface_equation(Fraction(1, 3)).is_equivalent()


def test_fiber_factorization_exact():
    f = fiber_factorization(Fraction(1, 3))
    assert f.formal
    assert f.product() == f.target()


def test_fiber_branch():
    with pytest.raises(BranchPoint):
        fiber_factorization("branch")
    with pytest.raises(BranchPoint):
        fiber_factorization(0)

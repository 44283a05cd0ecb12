from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dworklines.dwork import DworkForm
from dworklines.lines import (BasePointOnHyperplane, DegenerateSpan, ProjLine, ProjPoint,
                              SymmetryElement, act_on_plucker, apply_symmetry, full_group,
                              line_from_json, line_to_json, phase_group, plucker_embed,
                              plucker_quadrics, psi_chart, stabilizer, transform_parameter,
                              u_coordinates)
from dworklines.numbers import mu_power
from dworklines.polyring import var

coord = st.fractions(min_value=-9, max_value=9, max_denominator=5)
points = st.lists(coord, min_size=5, max_size=5)


@settings(max_examples=200)
@given(points, points)
def test_plucker_quadrics_vanish(x, y):
    try:
        line = ProjLine(x, y)
    except DegenerateSpan:
        return
    assert all(q == 0 for q in plucker_quadrics(plucker_embed(line)))


def test_plucker_quadrics_formal():
    x = [var(f"x{i}") for i in range(5)]
    y = [var(f"y{i}") for i in range(5)]
    p = ProjLine(x, y).plucker
    assert all(q.is_zero() for q in plucker_quadrics(p))


def test_projective_equality():
    a = ProjLine([1, 0, -1, 0, 0], [0, 1, 0, -1, 0])
    b = ProjLine([2, 3, -2, -3, 0], [1, -1, -1, 1, 0])
    assert a == b
    assert ProjPoint([1, 2, 3, 4, 5]) == ProjPoint([2, 4, 6, 8, 10])
    with pytest.raises(DegenerateSpan):
        ProjLine([1, 2, 3, 4, 5], [2, 4, 6, 8, 10])


def test_symmetry_on_plucker_matches_points():
    line = ProjLine([1, 2, 0, -1, 3], [0, 1, 5, 2, -2])
    g = SymmetryElement((0, 1, 3, 2, 4), (2, 0, 1, 4, 3))
    assert ProjLine(*apply_symmetry(g, line).span).plucker == act_on_plucker(g, line.plucker)


def test_transform_parameter():
    t = var("t")
    g = SymmetryElement((0, 1, 1, 0, 2))
    z = [var(f"z{i}") for i in range(5)]
    lhs = DworkForm(t).poly.substitute(dict(zip((f"z{i}" for i in range(5)), g.act_point(z))))
    # F_t(A_g z) = F_{mu t}(z); equivalently A_g maps X_t onto X_{t / mu}
    mu = g.product_phase
    assert lhs == DworkForm(t * mu).poly
    assert transform_parameter(g, t) == t * mu_power(-g.product_exponent)


def test_group_sizes():
    assert sum(1 for _ in phase_group()) == 625
    assert sum(1 for _ in full_group(product_one=True)) == 125 * 120


def test_group_composition():
    g = SymmetryElement((0, 1, 2, 3, 4), (1, 2, 0, 4, 3))
    h = SymmetryElement((0, 4, 0, 1, 1), (4, 3, 2, 1, 0))
    z = [1, 2, 3, 5, 7]
    assert ProjPoint((g * h).act_point(z)) == ProjPoint(g.act_point(h.act_point(z)))


def test_crossing_line_stabilizer():
    line = ProjLine([1, 0, -1, 0, 0], [0, 1, 0, -1, 0])
    st_ = stabilizer(line)
    # phases fixing z_0 + z_2 = 0 = z_1 + z_3 as a set: e_2 = e_0, e_3 = e_1, e_4 free
    assert len(st_) == 25


def test_u_coordinates_and_chart():
    line = ProjLine([1, 2, 3, 4, 5], [2, 1, 1, 3, 7])
    y = line.point(1, 1)
    u = u_coordinates(line, y, 0)
    assert u[0] == 0
    x = [ui * yi for ui, yi in zip(u, y)]
    assert line.contains_point(x)
    chart = psi_chart(0, line, y)
    assert len(chart) == 4
    with pytest.raises(BasePointOnHyperplane):
        u_coordinates(ProjLine([1, 0, -1, 0, 0], [0, 1, 0, -1, 0]), [1, 1, -1, -1, 0], 0)


def test_line_json_round_trip():
    line = ProjLine([1, Fraction(1, 2), mu_power(2), 0, -3], [0, 1, 1, 1, 1])
    assert line_from_json(line_to_json(line)) == line

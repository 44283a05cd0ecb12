from fractions import Fraction

import pytest

from dworklines.census import (ZeroParameter, branch_t, census_arithmetic, complete_intersection_hilbert,
                               cone_incidence, crossing_contained, enumerate_fermat_lines,
                               exceptional_points_check, free_action, orbit_count, solve_van_geemen,
                               twenty_five_points)
from dworklines.lines import ProjLine
from dworklines.numbers import mu_power


def test_counts_and_incidence():
    cones, lines = enumerate_fermat_lines()
    assert len(cones) == 50 and len(lines) == 375
    assert len({l.plucker for l in lines}) == 375
    inc = cone_incidence()
    assert all(sum(r) == 15 for r in inc)
    assert all(sum(c) == 2 for c in zip(*inc))


def test_cone_pairs_disjoint():
    cones, lines = enumerate_fermat_lines()
    for j, line in enumerate(lines[:60]):
        pair = [c.pair for c in cones if c.contains_line(line)]
        assert len(pair) == 2 and not set(pair[0]) & set(pair[1])


def test_l1_among_crossings():
    _, lines = enumerate_fermat_lines()
    assert ProjLine([1, 0, -1, 0, 0], [0, 1, 0, -1, 0]) in lines


def test_containment_formal_t():
    _, lines = enumerate_fermat_lines()
    assert all(crossing_contained(l) for l in lines)


def test_van_geemen_generic():
    sols = solve_van_geemen(1)
    assert len(sols) == 10
    assert max(s.residual for s in sols) < 2.0 ** -64
    assert orbit_count(sols) == 5000
    assert free_action(sols)


def test_van_geemen_other_t():
    sols = solve_van_geemen(Fraction(-3, 2))
    assert len(sols) == 10 and max(s.residual for s in sols) < 2.0 ** -64


def test_van_geemen_branch_exact():
    t = branch_t(1)
    assert t ** 5 == t.tower.lift(Fraction(128, 3))
    sols = solve_van_geemen(t)
    assert len(sols) == 5 and all(s.exact for s in sols)
    for s in sols:
        assert s.a ** 5 == s.b ** 5 == s.a.tower.lift(Fraction(27, 2))
    assert orbit_count(solve_van_geemen(branch_t(0))) == 2500


def test_zero_parameter():
    with pytest.raises(ZeroParameter):
        solve_van_geemen(0)


def test_arithmetic():
    items = {it.key: it for it in census_arithmetic()}
    assert items["i"].lhs == 2875
    assert items["v"].lhs == ((50, -75), 76)
    assert items["vii.b"].lhs == 0
    assert not items["vii.c"].holds   # literal displayed Hurwitz form


def test_complete_intersection():
    assert complete_intersection_hilbert((5,), 2) == (5, -5)        # plane quintic, genus 6
    assert complete_intersection_hilbert((5, 5, 5, 2), 5) == (250, -1375)


def test_twenty_five_points():
    ok = exceptional_points_check(twenty_five_points())
    assert ok["count"] == 25 and all(ok[k] for k in ("sigma0", "sigma5", "linear", "distinct"))
    printed = exceptional_points_check(twenty_five_points(printed_sign=True))
    assert not printed["sigma5"]
    assert exceptional_points_check(twenty_five_points(xi_exp=2))["sigma5"]

import pytest

from dworklines.deformation import (ConstraintViolated, Inconsistent, PRINTED_KERNELS,
                                    branch_specialization, column_dependency_l3,
                                    compare_printed_matrix, compare_relative_row,
                                    determinant_check_l2, kernel_table, minor_check_l3,
                                    normal_matrix, relative_normal_matrix, splitting_table,
                                    splitting_type)
from dworklines.polyring import var


def test_l1_matrix():
    m = normal_matrix("l1")
    assert m.shape == (6, 6)
    t = var("t")
    assert m.normalized()[4][2] == -t and m.normalized()[5][3] == -t


def test_printed_matrices_match():
    assert compare_printed_matrix("l2").holds
    assert compare_printed_matrix("l3").holds


def test_relative_rows_up_to_scalar():
    r = relative_normal_matrix("l1")
    assert r.shape == (7, 6)
    assert compare_relative_row("l1").holds
    c2 = compare_relative_row("l2")
    c3 = compare_relative_row("l3")
    assert c2.holds and "-5" in c2.note
    assert c3.holds and "5" in c3.note


def test_kernel_dimensions():
    assert kernel_table() == PRINTED_KERNELS


def test_branch_specialization_satisfies_constraints():
    v = branch_specialization(0, 2)
    assert v["a"] ** 5 == v["b"] ** 5
    assert v["t"] * v["a"] * v["b"] == v["t"].tower.lift(6)
    m = normal_matrix("l3").specialize(v)
    assert m.kernel_dim() == 2


def test_constraint_violations():
    with pytest.raises(ConstraintViolated):
        normal_matrix("l2").specialize({"a": 1, "b": 1, "t": 0})
    with pytest.raises(ConstraintViolated):
        normal_matrix("l3", 1)


def test_l2_determinant():
    printed, corrected = determinant_check_l2()
    assert corrected.holds
    assert not printed.holds


def test_l3_minor():
    checks = {c.name: c for c in minor_check_l3()}
    assert checks["minor_l3_squared"].holds
    assert not checks["minor_l3_printed_27"].holds


def test_l3_columns_dependent():
    c = column_dependency_l3()
    assert c.holds and c.computed == 10


def test_witness_minor():
    m = normal_matrix("l3")
    rows, cols, v = m.witness_minor()
    assert len(rows) == 5 and v


@pytest.mark.parametrize("h0, rank, expected", [(2, 2, (1, -3)), (0, 2, (-1, -1)), (1, 2, (0, -2))])
def test_splitting_rank_two(h0, rank, expected):
    assert splitting_type(h0, rank).degrees == expected


def test_splitting_rank_three():
    assert splitting_type(3, 3, (1, -3), (0,)).degrees == (1, 0, -3)
    assert splitting_type(2, 3, (0, -2), (0,)).degrees == (0, 0, -2)
    # a sub-bundle O(1) forces a summand of degree at least 1
    assert splitting_type(2, 3, (1, -3), (0,)).degrees == (1, -1, -2)
    with pytest.raises(Inconsistent):
        splitting_type(5, 3, (1, -3), (0,))


def test_splitting_table_sums():
    for st in splitting_table().values():
        assert sum(st.degrees) == -2
        assert list(st.degrees) == sorted(st.degrees, reverse=True)

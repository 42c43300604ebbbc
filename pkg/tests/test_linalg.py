from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liegraph.linalg import (Matrix, Subspace, nullspace, rank, rref, solve,
                             subspace_ops)

F = Fraction


def mat(rows):
    return Matrix.from_rows([[F(x) for x in r] for r in rows])


class TestRref:
    def test_identity_is_fixed(self):
        m = Matrix.identity(2)
        r, pivots = rref(m)
        assert r == m
        assert pivots == [0, 1]

    def test_proportional_rows_collapse(self):
        r, pivots = rref(mat([[2, 4], [1, 2]]))
        assert r == mat([[1, 2], [0, 0]])
        assert pivots == [0]

    def test_row_swap(self):
        r, pivots = rref(mat([[0, 1], [1, 0]]))
        assert r == Matrix.identity(2)
        assert pivots == [0, 1]

    def test_pivots_strictly_increasing(self):
        _, pivots = rref(mat([[0, 1, 3], [1, 2, 0], [1, 3, 3]]))
        assert pivots == sorted(set(pivots))


class TestNullspace:
    def test_zero_matrix_full_kernel(self):
        ns = nullspace(Matrix.zero(2, 2))
        assert ns == Subspace.full(2)

    def test_identity_trivial_kernel(self):
        assert nullspace(Matrix.identity(2)).dim == 0

    def test_single_equation(self):
        # x + 2y = 0 by hand: kernel spanned by (-2, 1), canonically (1, -1/2)
        ns = nullspace(mat([[1, 2]]))
        assert ns.dim == 1
        (v,) = ns.basis_vectors()
        assert v[0] + 2 * v[1] == 0 and any(v)


class TestSolve:
    def test_identity(self):
        assert solve(Matrix.identity(3), [1, 2, 3]) == (F(1), F(2), F(3))

    def test_free_variable_zeroed(self):
        assert solve(mat([[1, 1]]), [2]) == (F(2), F(0))

    def test_inconsistent_returns_none(self):
        assert solve(mat([[1], [1]]), [1, 2]) is None

    def test_rhs_length_checked(self):
        with pytest.raises(ValueError):
            solve(Matrix.identity(2), [1, 2, 3])


class TestSubspaceOps:
    def test_same_space(self):
        a = Subspace.from_rows(2, [[1, 1]])
        ops = subspace_ops(a, a)
        assert ops["equal"] and ops["contains"]
        assert ops["sum"] == a and ops["intersection"] == a

    def test_complementary_lines(self):
        a = Subspace.from_rows(2, [[1, 0]])
        b = Subspace.from_rows(2, [[0, 1]])
        ops = subspace_ops(a, b)
        assert not ops["equal"]
        assert ops["sum"] == Subspace.full(2)
        assert ops["intersection"].dim == 0

    def test_containment_of_line_in_plane(self):
        a = Subspace.from_rows(2, [[1, 1], [1, -1]])
        b = Subspace.from_rows(2, [[1, 0]])
        assert subspace_ops(a, b)["contains"]

    def test_ambient_mismatch_raises(self):
        with pytest.raises(ValueError):
            subspace_ops(Subspace.full(2), Subspace.full(3))


entries = st.builds(F, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def matrices(draw, max_dim=8):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    e = draw(st.lists(entries, min_size=r * c, max_size=r * c))
    return Matrix(r, c, e)


@given(matrices())
@settings(max_examples=120, deadline=None)
def test_rref_idempotent(m):
    r, _ = rref(m)
    assert rref(r)[0] == r


@given(matrices())
@settings(max_examples=120, deadline=None)
def test_rank_nullity(m):
    assert rank(m) + nullspace(m).dim == m.cols


@given(matrices())
@settings(max_examples=120, deadline=None)
def test_nullspace_vectors_are_killed(m):
    for v in nullspace(m).basis_vectors():
        assert not any(m.apply(v))


@given(matrices(max_dim=5), matrices(max_dim=5))
@settings(max_examples=80, deadline=None)
def test_equality_agrees_with_mutual_containment(m1, m2):
    d = min(m1.cols, m2.cols)
    a = Subspace.from_rows(d, [r[:d] for r in m1.row_list()])
    b = Subspace.from_rows(d, [r[:d] for r in m2.row_list()])
    assert (a == b) == (a.contains(b) and b.contains(a))


@given(matrices(max_dim=5), matrices(max_dim=5))
@settings(max_examples=80, deadline=None)
def test_sum_intersection_dimension_formula(m1, m2):
    d = min(m1.cols, m2.cols)
    a = Subspace.from_rows(d, [r[:d] for r in m1.row_list()])
    b = Subspace.from_rows(d, [r[:d] for r in m2.row_list()])
    ops = subspace_ops(a, b)
    assert ops["sum"].dim + ops["intersection"].dim == a.dim + b.dim
    assert ops["sum"].contains(a) and ops["sum"].contains(b)
    assert a.contains(ops["intersection"]) and b.contains(ops["intersection"])

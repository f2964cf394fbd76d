from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spin9lab.exact_core import (Matrix, ModpEchelon, Q, Subspace, common_kernel, intersect,
                                 kernel, primitive, rank_mod_p, restricted_kernel, rref,
                                 SparseMatrix, span_rank)

small = st.integers(-4, 4)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


def test_q_refuses_floats():
    with pytest.raises(TypeError):
        Q(0.5)
    assert Q("3/4") == Fraction(3, 4)


def test_matrix_basic_ops():
    a = Matrix([[1, 2], [3, 4]])
    assert a @ Matrix.identity(2) == a
    assert a.T == Matrix([[1, 3], [2, 4]])
    assert a.trace() == 5
    assert a @ a.inverse() == Matrix.identity(2)
    h = Matrix([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    assert h @ h == Matrix([[Fraction(1, 4), 0], [0, Fraction(1, 9)]])


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(rows):
    m = SparseMatrix.from_dense(rows)
    r, _, _ = rref(m)
    k = kernel(m)
    assert r + k.dim == m.ncols
    for v in k.basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in rows)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(rows):
    m = SparseMatrix.from_dense(rows)
    _, _, red = rref(m)
    assert rref(red)[2] == red


@settings(max_examples=40, deadline=None)
@given(matrices(cols=st.just(4)), matrices(cols=st.just(4)))
def test_intersection_inside_both(a, b):
    A = Subspace(4, a)
    B = Subspace(4, b)
    C = intersect(A, B)
    assert all(A.contains(v) and B.contains(v) for v in C.basis)
    assert C.dim + A.sum(B).dim == A.dim + B.dim


def test_intersect_ambient_mismatch():
    with pytest.raises(ValueError):
        intersect(Subspace(3, [[1, 0, 0]]), Subspace(4, [[1, 0, 0, 0]]))


def test_primitive_normalization():
    assert primitive({3: Fraction(-2, 3), 5: Fraction(4, 3)}) == {3: 1, 5: -2}


def test_restricted_and_common_kernel():
    basis = [{0: 1}, {1: 1}, {2: 1}]

    def op(v):   # x0 - x1
        return {"r": v.get(0, 0) - v.get(1, 0)} if v.get(0, 0) != v.get(1, 0) else {}

    ker = restricted_kernel(basis, op)
    assert span_rank(ker) == 2

    def op2(v):  # x2
        return {"s": v[2]} if v.get(2) else {}

    both = common_kernel(basis, [op, op2])
    assert span_rank(both) == 1


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_mod_p_rank_bounds_rational_rank(rows):
    vecs = [{j: x for j, x in enumerate(r) if x} for r in rows]
    exact = Matrix(rows).rank()
    assert rank_mod_p(vecs) == exact   # small integers: no reduction accidents
    ech = ModpEchelon(len(rows[0]))
    ech.add_rows(rows)
    assert ech.rank == exact

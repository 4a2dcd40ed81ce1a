"""Exact linear algebra: rref, rank, kernel, image, subspaces."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homcyc.linalg import (Matrix, NotASubspaceError, Subspace, image, kernel,
                           quotient_dim, rank, reduce_mod, rref,
                           scalar_from_string, scalar_to_string,
                           solve_homogeneous)

F = Fraction


def small_matrices(max_dim=5, max_num=6):
    shapes = st.tuples(st.integers(1, max_dim), st.integers(1, max_dim))
    return shapes.flatmap(
        lambda s: st.lists(
            st.lists(st.fractions(min_value=-max_num, max_value=max_num,
                                  max_denominator=4),
                     min_size=s[1], max_size=s[1]),
            min_size=s[0], max_size=s[0]).map(Matrix.from_rows))


def test_scalar_round_trip():
    for s in ["0", "1", "-3", "2/7", "-11/4"]:
        assert scalar_to_string(scalar_from_string(s)) == s


def test_matrix_basic_ops():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.identity(2)
    assert a @ b == a
    assert (a - a).is_zero()
    assert a.transpose().transpose() == a
    assert a.apply((F(1), F(0))) == (F(1), F(3))
    assert (a + (-a)).is_zero()
    assert a.scale(2)[0, 1] == F(4)


def test_matmul_shape_mismatch():
    with pytest.raises(ValueError):
        Matrix.identity(2) @ Matrix.identity(3)


def test_rref_known():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    r, pivots, rk = rref(m)
    assert rk == 2
    assert pivots == (0, 1)
    assert r.row(0) == (F(1), F(0), F(-1))
    assert r.row(1) == (F(0), F(1), F(2))


def test_kernel_known():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
    k = kernel(m)
    assert k.dim == 2
    for v in k.basis:
        assert not any(m.apply(v))


def test_image_known():
    m = Matrix.from_rows([[1, 0], [0, 0], [2, 0]])
    im = image(m)
    assert im.dim == 1
    assert im.contains((F(1), F(0), F(2)))
    assert not im.contains((F(0), F(1), F(0)))


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rref_idempotent(m):
    r1, p1, k1 = rref(m)
    r2, p2, k2 = rref(r1)
    assert (r1, p1, k1) == (r2, p2, k2)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_kernel_vectors_annihilated(m):
    for v in kernel(m).basis:
        assert not any(m.apply(v))


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_image_contains_columns(m):
    im = image(m)
    assert im.dim == rank(m)
    for j in range(m.cols):
        assert im.contains(m.col(j))


@settings(max_examples=40, deadline=None)
@given(small_matrices(max_dim=4))
def test_reduce_mod_is_canonical(m):
    im = image(m)
    for j in range(m.cols):
        assert not any(reduce_mod(im, m.col(j)))


def test_subspace_coordinates_round_trip():
    s = Subspace.from_vectors(3, [(F(1), F(2), F(0)), (F(0), F(0), F(1))])
    v = (F(2), F(4), F(-5))
    coords = s.coordinates(v)
    rebuilt = [F(0)] * 3
    for c, b in zip(coords, s.basis):
        rebuilt = [r + c * x for r, x in zip(rebuilt, b)]
    assert tuple(rebuilt) == v
    with pytest.raises(NotASubspaceError):
        s.coordinates((F(0), F(1), F(0)))


def test_quotient_dim():
    small = Subspace.from_vectors(3, [(F(1), F(0), F(0))])
    big = Subspace.from_vectors(3, [(F(1), F(0), F(0)), (F(0), F(1), F(0))])
    assert quotient_dim(small, big) == 1
    with pytest.raises(NotASubspaceError):
        quotient_dim(big, small)


def test_solve_homogeneous():
    sol = solve_homogeneous([[F(1), F(-1), F(0)]], 3)
    assert sol.dim == 2
    assert sol.contains((F(1), F(1), F(0)))
    assert solve_homogeneous([], 3).dim == 3


def test_zero_and_degenerate_shapes():
    z = Matrix.zero(0, 3)
    assert kernel(z).dim == 3
    z2 = Matrix.zero(3, 0)
    assert image(z2).dim == 0
    assert rank(Matrix.zero(2, 2)) == 0

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import kernel_dim_bounds, nullspace_fraction, rank_fraction, rank_mod_p
from qtwogroup import GF, QQ, SubspaceBasis, compose, identity, inverse, kernel_basis, kron, rank, solve, subspace_equal
from qtwogroup.linalg import DimensionMismatch, SingularMap, flip, from_dense, permute_factors, ravel, unravel

small = st.integers(-3, 3)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


@given(matrices())
def test_rank_matches_textbook_elimination(rows):
    assert rank(from_dense(rows, QQ)) == rank_fraction(rows)


@given(matrices(), st.sampled_from([2, 3, 7]))
def test_rank_mod_p_matches_numpy_oracle(rows, p):
    F = GF(p)
    assert rank(from_dense([[x % p for x in r] for r in rows], F)) == rank_mod_p(np.array(rows), p)


@given(matrices())
def test_kernel_basis(rows):
    A = from_dense(rows, QQ)
    K = kernel_basis(A)
    assert K.dim == len(rows[0]) - rank_fraction(rows)
    for v in K.vectors:
        assert not A.apply(v)
    ref = SubspaceBasis.span(
        [{i: x for i, x in enumerate(v) if x} for v in nullspace_fraction(rows, len(rows[0]))], len(rows[0]), QQ
    )
    assert subspace_equal(K, ref)
    assert kernel_dim_bounds(rows, len(rows[0]), None) == K.dim


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve(rows, x):
    A = from_dense(rows, QQ)
    b = A.apply({i: v for i, v in enumerate(x[: A.cols]) if v})
    sol = solve(A, b)
    assert sol is not None and A.apply(sol) == b


def test_solve_infeasible():
    A = from_dense([[1, 1], [2, 2]], QQ)
    assert solve(A, {0: 1}) is None


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse(rows):
    A = from_dense(rows, QQ)
    if rank_fraction(rows) < len(rows):
        with pytest.raises(SingularMap):
            inverse(A)
    else:
        assert compose(inverse(A), A) == identity(len(rows), QQ)


def test_kron_is_row_major():
    a = from_dense([[1, 2], [3, 4]], QQ)
    b = from_dense([[0, 1], [1, 0]], QQ)
    assert kron(a, b).to_dense() == np.kron(np.array([[1, 2], [3, 4]]), np.array([[0, 1], [1, 0]])).tolist()


@given(st.integers(1, 4), st.integers(1, 4))
def test_flip_is_involution(n, m):
    assert compose(flip(m, n, QQ), flip(n, m, QQ)) == identity(n * m, QQ)


def test_permute_factors():
    dims = (2, 3, 4)
    P = permute_factors(dims, (2, 0, 1), QQ)
    j = ravel((1, 2, 3), dims)
    (tgt,) = P.col(j)
    assert sorted(unravel(tgt, (4, 2, 3))) == [1, 2, 3]


def test_subspace_equality_is_basis_independent():
    a = SubspaceBasis.span([{0: 1, 1: 1}, {1: 1}], 3, QQ)
    b = SubspaceBasis.span([{0: 2}, {0: Fraction(1, 3), 1: 5}], 3, QQ)
    assert subspace_equal(a, b) and a.dim == 2
    assert not subspace_equal(a, SubspaceBasis.span([{2: 1}], 3, QQ))
    with pytest.raises(DimensionMismatch):
        subspace_equal(a, SubspaceBasis.span([], 4, QQ))


def test_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(identity(2, QQ), identity(3, QQ))

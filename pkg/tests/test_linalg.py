from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symtaut.linalg import (
    RatMatrix,
    SingularMatrixError,
    Subspace,
    kernel_basis,
    orthogonal_complement,
    rank,
    solve,
)


def test_rank_identity_and_zero():
    assert rank(RatMatrix.identity(2)) == 2
    assert rank(RatMatrix([[0, 0, 0], [0, 0, 0], [0, 0, 0]])) == 0


def test_rank_full_hankel():
    # determinant -36 by cofactor expansion, hence full rank
    assert rank(RatMatrix([[1, 3, 6], [3, 6, 6], [6, 6, 0]])) == 3


def test_kernel_basis_examples():
    assert kernel_basis(RatMatrix.identity(3)) == []
    basis = kernel_basis(RatMatrix([[1, 1]]))
    assert len(basis) == 1
    v = basis[0]
    assert v[0] + v[1] == 0 and v != (0, 0)
    assert len(kernel_basis(RatMatrix([[1, 2], [2, 4]]))) == 1


def test_solve_examples():
    assert solve(RatMatrix.identity(2), [5, 7]) == (5, 7)
    assert solve(RatMatrix([[1, 2], [2, 2]]), [2, 0]) == (-2, 2)
    assert solve(RatMatrix([[1, 3], [3, 6]]), [3, 0]) == (-6, 3)


def test_solve_singular():
    with pytest.raises(SingularMatrixError):
        solve(RatMatrix([[1, 2], [2, 4]]), [1, 1])
    with pytest.raises(SingularMatrixError):
        solve(RatMatrix([[1, 2, 3], [4, 5, 6]]), [1, 1])


def test_orthogonal_complement_examples():
    form = RatMatrix([[1, 3, 6], [3, 6, 6], [6, 6, 0]])
    assert orthogonal_complement(RatMatrix.identity(3), form) == []
    full = orthogonal_complement(RatMatrix([]), form)
    assert Subspace(3, full) == Subspace.full(3)
    # span(e_2) under the Hankel form: single condition 6v0 + 6v1 = 0
    basis = orthogonal_complement(RatMatrix([[0, 0, 1]]), form)
    space = Subspace(3, basis)
    assert space.dim == 2
    assert all(6 * v[0] + 6 * v[1] == 0 for v in basis)


def test_subspace_canonical_equality():
    a = Subspace(3, [[1, 1, 0], [0, 1, 1]])
    b = Subspace(3, [[1, 0, -1], [2, 3, 1]])
    assert a == b
    assert a.contains([1, 2, 1])
    assert not a.contains([0, 0, 1])
    assert Subspace.full(3).contains_subspace(a)
    assert a.contains_subspace(Subspace.zero(3))


small_ints = st.integers(min_value=-9, max_value=9)


def matrices(max_dim=5):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda n: st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda m: st.lists(
                st.lists(small_ints, min_size=m, max_size=m), min_size=n, max_size=n
            )
        )
    )


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_transpose(entries):
    matrix = RatMatrix(entries)
    assert rank(matrix) == rank(matrix.transpose())


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(entries):
    matrix = RatMatrix(entries)
    assert rank(matrix) + len(kernel_basis(matrix)) == matrix.cols


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(small_ints, min_size=n, max_size=n),
    )
))
def test_solve_roundtrip(data):
    entries, x = data
    matrix = RatMatrix(entries)
    if rank(matrix) < matrix.rows:
        with pytest.raises(SingularMatrixError):
            solve(matrix, [0] * matrix.rows)
        return
    assert solve(matrix, matrix.mat_vec(x)) == tuple(Fraction(v) for v in x)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=1, max_size=n),
    )
))
def test_double_complement_involution(data):
    form_entries, vectors = data
    n = len(form_entries)
    # symmetrize so that left and right orthogonality agree
    sym = [[form_entries[i][j] + form_entries[j][i] for j in range(n)] for i in range(n)]
    form = RatMatrix(sym)
    if rank(form) < n:
        return
    span = Subspace(n, vectors)
    once = orthogonal_complement(RatMatrix(vectors), form)
    twice = orthogonal_complement(RatMatrix(once) if once else RatMatrix([]), form)
    assert Subspace(n, twice) == span

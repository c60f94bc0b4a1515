import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affsemi.errors import ContainmentViolation
from affsemi.intlin import (
    det,
    hnf,
    kernel_basis,
    matmul,
    pivots,
    rank,
    rational_solve,
    snf,
    snf_quotient,
    solve_integral,
    vecmat,
)

from conftest import EX_A, EX_B

small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def is_hnf(H):
    last = -1
    for i, j in pivots(H):
        if j <= last or H[i][j] <= 0:
            return False
        for k in range(i):
            if not 0 <= H[k][j] < H[i][j]:
                return False
        last = j
    nonzero = [i for i, row in enumerate(H) if any(row)]
    return nonzero == list(range(len(nonzero)))


def test_hnf_identity():
    I = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert hnf(I) == (I, I)


def test_hnf_two_by_two():
    H, U = hnf([[2, 4], [6, 8]])
    assert matmul(U, [[2, 4], [6, 8]]) == H
    assert abs(det(U)) == 1
    assert [H[i][j] for i, j in pivots(H)] == [2, 4]
    assert abs(det(H)) == 8


def test_rank_of_small_generator_set():
    assert rank(EX_A) == 3


@settings(max_examples=80, deadline=None)
@given(small_matrices)
def test_hnf_properties(M):
    H, U = hnf(M)
    assert matmul(U, M) == H
    assert abs(det(U)) == 1
    assert is_hnf(H)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_snf_properties(M):
    D, U, V = snf(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_quotient_trivial():
    Q = snf_quotient(EX_B, EX_B)
    assert Q.order == 1


def test_quotient_example_order_and_labels():
    Q = snf_quotient(EX_A, EX_B)
    assert Q.order == 2
    assert Q.project((0, 0, 0)) == Q.project((2, 4, 4))
    assert Q.project((1, 2, 2)) == Q.project((3, 6, 6))
    assert Q.project((0, 0, 0)) != Q.project((1, 2, 2))


def test_quotient_index_four():
    assert snf_quotient([(2, 0), (0, 2)], [(1, 0), (0, 1)]).order == 4


def test_quotient_containment_violation():
    with pytest.raises(ContainmentViolation):
        snf_quotient([(1, 0)], [(2, 0), (0, 2)])


def test_projection_constant_on_cosets():
    rng = random.Random(3)
    Q = snf_quotient(EX_A, EX_B)
    for _ in range(50):
        v = vecmat([rng.randint(-3, 3) for _ in EX_B], EX_B, 3)
        a = vecmat([rng.randint(-3, 3) for _ in EX_A], EX_A, 3)
        assert Q.project(v) == Q.project(tuple(x + y for x, y in zip(v, a)))


def test_solve_identity():
    I = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert solve_integral(I, (3, -1, 7)) == (3, -1, 7)


def test_solve_example_vector():
    x = solve_integral(EX_A, (2, 4, 4))
    assert x == (-1, 1, 2, 0)
    assert vecmat(x, EX_A, 3) == (2, 4, 4)


def test_solve_parity_obstruction():
    assert solve_integral([(2, 0), (0, 2)], (1, 1)) is None


@settings(max_examples=60, deadline=None)
@given(small_matrices, st.data())
def test_solve_sound_and_complete(M, data):
    ncols = len(M[0])
    v = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=ncols, max_size=ncols)))
    x = solve_integral(M, v)
    if x is not None:
        assert vecmat(x, M, ncols) == v
        return
    # exhaustive search in a box must not find a solution either
    for c in itertools.product(range(-4, 5), repeat=len(M)):
        assert vecmat(c, M, ncols) != v


def test_kernel_basis():
    K = kernel_basis(EX_A)
    assert K == [[3, -2, -3, 2]]
    assert vecmat(K[0], EX_A, 3) == (0, 0, 0)


def test_rational_solve():
    x = rational_solve([(4, 0), (0, 4)], (3, 1))
    assert x is not None and [str(v) for v in x] == ["3/4", "1/4"]
    assert rational_solve([(1, 0)], (0, 1)) is None

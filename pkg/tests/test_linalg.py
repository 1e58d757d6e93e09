import random

from abellab.field import ONE, ZERO, rational
from abellab.linalg import Matrix, kernel_basis, rank, rref, solve, span_rref


def mat(rows):
    return Matrix.from_rows([[rational(e) for e in r] for r in rows])


def is_zero_vec(v):
    return all(not x for x in v)


def test_rank_one_kernel():
    M = mat([[1, 1], [2, 2]])
    basis = kernel_basis(M)
    assert len(basis) == 1
    assert is_zero_vec(M.mul_vector(basis[0]))
    # the kernel is spanned by (1, -1)
    v = basis[0]
    assert v[0] == -v[1]


def test_identity_kernel_empty():
    M = mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert kernel_basis(M) == []


def test_single_row_kernel_matches_hand_elimination():
    M = mat([[1, 2, 3]])
    basis = kernel_basis(M)
    assert len(basis) == 2
    assert basis[0] == [rational(-2), ONE, ZERO]
    assert basis[1] == [rational(-3), ZERO, ONE]


def test_kernel_plus_rank_on_random_matrices():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        M = mat([[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)])
        basis = kernel_basis(M)
        for v in basis:
            assert is_zero_vec(M.mul_vector(v))
        # independent rank: count pivots of the transpose reduction
        t_rows = [[M[i, j] for i in range(M.rows)] for j in range(M.cols)]
        _, pivots = rref(t_rows)
        assert len(basis) + len(pivots) == M.cols
        assert rank(M) == len(pivots)


def test_solve_consistent_and_inconsistent():
    M = mat([[1, 2], [3, 4]])
    x = solve(M, [rational(5), rational(11)])
    assert M.mul_vector(x) == [rational(5), rational(11)]
    M2 = mat([[1, 1], [2, 2]])
    assert solve(M2, [rational(1), rational(3)]) is None


def test_span_rref_is_canonical():
    a = [[rational(1), rational(2), rational(0)], [rational(0), rational(0), rational(1)]]
    b = [[rational(2), rational(4), rational(2)], [rational(0), rational(0), rational(-3)]]
    assert span_rref(a) == span_rref(b)


def test_entry_count_validation():
    try:
        Matrix(2, 2, [ONE, ZERO, ONE])
    except ValueError:
        return
    raise AssertionError("expected a dimension error")

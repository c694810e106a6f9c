import random
from fractions import Fraction

from wcit.field import QQ, PrimeField
from wcit.linalg import (
    Echelon,
    StackedKernel,
    identity_matrix,
    in_span,
    kernel_of_matrix,
    mat_mul,
    mat_sub,
    matrix_rank,
)

from oracle import dense_rank


def test_rank_simple():
    rows = [
        [QQ(1), QQ(2), QQ(3)],
        [QQ(2), QQ(4), QQ(6)],
        [QQ(0), QQ(1), QQ(1)],
    ]
    assert matrix_rank(rows, QQ) == 2


def test_kernel_simple():
    # x + y + z = 0, y - z = 0  -> kernel spanned by (-2, 1, 1)
    rows = [[QQ(1), QQ(1), QQ(1)], [QQ(0), QQ(1), QQ(-1)]]
    kernel = kernel_of_matrix(rows, 3, QQ)
    assert len(kernel) == 1
    v = kernel[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_rank_matches_dense_oracle_randomized():
    rng = random.Random(20240801)
    for _ in range(200):
        nrows = rng.randrange(1, 7)
        ncols = rng.randrange(1, 7)
        rows = [
            [Fraction(rng.randrange(-3, 4)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        assert matrix_rank(rows, QQ) == dense_rank(rows)


def test_kernel_vectors_annihilate_randomized():
    rng = random.Random(6)
    for _ in range(200):
        nrows = rng.randrange(1, 6)
        ncols = rng.randrange(1, 6)
        rows = [
            [Fraction(rng.randrange(-3, 4)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        kernel = kernel_of_matrix(rows, ncols, QQ)
        assert len(kernel) == ncols - matrix_rank(rows, QQ)
        for v in kernel:
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0


def test_echelon_rank_over_prime_field():
    F = PrimeField(65537)
    e = Echelon(3, F)
    assert e.insert({0: F(2), 1: F(4)})
    assert not e.insert({0: F(1), 1: F(2)})
    assert e.insert({2: F(5)})
    assert e.rank == 2


def test_stacked_kernel_and_restriction():
    # M_0 = [[1,0],[0,1]], M_1 = [[1,0],[0,1]] scaled: map c -> c0*M0 + c1*M1
    m0 = [[QQ(1), QQ(0)], [QQ(0), QQ(1)]]
    m1 = [[QQ(-1), QQ(0)], [QQ(0), QQ(-1)]]
    stack = StackedKernel(2, QQ, restrictions={"first": [[QQ(1), QQ(0)]]})
    stack.add_block([m0, m1])
    assert stack.rank == 1
    kernel = stack.kernel_basis()
    assert len(kernel) == 1 and kernel[0][0] == kernel[0][1]
    assert stack.restriction_rank("first") == 1  # injective on span(e0)


def test_in_span():
    vectors = [[QQ(1), QQ(0), QQ(1)], [QQ(0), QQ(1), QQ(1)]]
    assert in_span(vectors, [QQ(1), QQ(1), QQ(2)], QQ)
    assert not in_span(vectors, [QQ(0), QQ(0), QQ(1)], QQ)
    assert in_span([], [QQ(0), QQ(0)], QQ)


def test_mat_helpers():
    a = [[QQ(1), QQ(2)], [QQ(3), QQ(4)]]
    identity = identity_matrix(2, QQ)
    assert mat_mul(a, identity, QQ) == a
    assert mat_sub(a, a) == [[QQ(0), QQ(0)], [QQ(0), QQ(0)]]

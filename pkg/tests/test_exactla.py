import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from monoidquiver.exactla import contains_span, kernel_basis, rank, row_space_basis, same_span, span_product


def identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matvec(M, v):
    return [sum(Fraction(a) * b for a, b in zip(row, v)) for row in M]


def test_rank_examples():
    assert rank(identity(4)) == 4
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1


def test_kernel_examples():
    assert kernel_basis(identity(3)) == []
    assert len(kernel_basis([[0] * 3 for _ in range(3)])) == 3
    (v,) = kernel_basis([[1, 1]])
    assert same_span([v], [[1, -1]])


def test_rank_nullity_random():
    rng = random.Random(100)
    for _ in range(100):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        M = [[rng.randint(-2, 2) * rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        K = kernel_basis(M)
        assert rank(M) + len(K) == cols
        assert all(x == 0 for v in K for x in matvec(M, v))
        assert rank(K) == len(K) if K else True


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_row_space_is_deterministic_and_spans(M):
    B = row_space_basis(M)
    assert B == row_space_basis(M)
    assert len(B) == rank(M)
    assert contains_span(B, M) and contains_span(M, B)


def test_span_product_trivial_cases():
    # complex numbers as a 2-dim algebra with basis 1, i
    def mult(u, v):
        return [u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0]]

    assert span_product([], [[1, 0]], mult) == []
    V = [[1, 2], [2, 4]]
    assert same_span(span_product([[1, 0]], V, mult), V)

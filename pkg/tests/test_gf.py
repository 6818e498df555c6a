"""Field arithmetic and linear algebra, checked against exhaustive oracles."""

import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secnetcomp.errors import DegenerateInput, DivisionByZero, FieldMismatch, ShapeError
from secnetcomp.gf import (
    FieldMatrix,
    PrimeField,
    intersect_spans,
    inverse,
    is_mds,
    is_prime,
    kronecker,
    left_kernel,
    rank,
    rref,
    right_kernel,
    solve_membership,
    span_members,
    vandermonde,
)


def random_matrix(rng, q, rows, cols):
    return FieldMatrix(q, [[rng.randrange(q) for _ in range(cols)] for _ in range(rows)])


# -- field ops ---------------------------------------------------------------


def test_prime_validation():
    PrimeField(2)
    PrimeField(1297)
    for bad in (0, 1, 4, 9, 1296):
        with pytest.raises(DegenerateInput):
            PrimeField(bad)
    assert is_prime(1297)


def test_additive_identity():
    f = PrimeField(5)
    for x in f.elements():
        assert f.add(0, x) == x


def test_negative_two_is_three_mod_five():
    f = PrimeField(5)
    assert f.neg(2) == 3
    assert f.sub(0, 2) == 3


def test_inverse_table_matches_brute_force():
    f = PrimeField(7)
    for b in range(1, 7):
        expected = next(x for x in range(1, 7) if (b * x) % 7 == 1)
        assert f.inv(b) == expected
        assert f.mul(b, f.inv(b)) == 1
    with pytest.raises(DivisionByZero):
        f.inv(0)


# -- rref / rank -------------------------------------------------------------


def test_rref_identity():
    m = FieldMatrix.identity(5, 3)
    red, rk, pivots = rref(m)
    assert rk == 3
    assert red == m
    assert pivots == (0, 1, 2)


def test_rref_example2_coefficient_matrix():
    # columns of G span a 2-dimensional space over F_5
    g = FieldMatrix(5, [[1, 0], [0, 1], [1, 1], [1, 0]])
    assert rank(g) == 2


def largest_nonsingular_minor(m):
    best = 0
    for k in range(1, min(m.rows, m.cols) + 1):
        for rows_idx in combinations(range(m.rows), k):
            for cols_idx in combinations(range(m.cols), k):
                sub = m.take_rows(rows_idx).take_cols(cols_idx)
                if rank(sub) == k:
                    best = max(best, k)
    return best


def test_rank_matches_minor_enumeration():
    rng = random.Random(7)
    for _ in range(10):
        m = random_matrix(rng, 3, 4, 6)
        assert rank(m) == largest_nonsingular_minor(m)


# -- kernels -----------------------------------------------------------------


def test_left_kernel_of_identity_is_empty():
    k = left_kernel(FieldMatrix.identity(5, 4))
    assert k.rows == 0


def test_left_kernel_of_full_row_rank_source_block():
    # source-edge block [I_3 | 0 ; 2x6 Vandermonde] over F_7 has full row rank
    top = FieldMatrix.identity(7, 3).hstack(FieldMatrix.zeros(7, 3, 3))
    bottom = vandermonde(7, [1, 2, 3, 4, 5, 6], 2)
    block = top.vstack(bottom)
    assert left_kernel(block).rows == 0
    assert rank(block) == 5


def test_left_kernel_matches_vector_enumeration():
    rng = random.Random(11)
    for _ in range(8):
        m = random_matrix(rng, 3, 3, 5)
        k = left_kernel(m)
        assert (k.mul(m)).is_zero
        # enumerate all 27 row vectors
        annihilators = {
            v for v in product(range(3), repeat=3)
            if all(x == 0 for x in m.row_vector_mul(v))
        }
        assert len(annihilators) == 3 ** k.rows
        span = {m2 for m2 in span_members(k.transpose())}
        assert span == annihilators


# -- span intersection -------------------------------------------------------


def test_self_intersection_spans_whole_space():
    a = FieldMatrix(5, [[1, 2], [3, 4], [0, 1]])
    inter = intersect_spans(a, a)
    assert inter.cols == rank(a)
    assert span_members(inter) == span_members(a)


def test_intersection_dimension_one_over_f7():
    f = FieldMatrix(7, [[1, 0], [1, 1], [2, 1]])
    g = FieldMatrix(7, [[1], [0], [1]])
    inter = intersect_spans(f, g)
    assert inter.cols == 1
    # independent check: solve for membership of (1,0,1) in the span of f
    assert solve_membership((1, 0, 1), f) is not None


def test_intersection_example3_dimension_two():
    q = 1297
    f = FieldMatrix(q, [[1, 2, 0], [2, 1, 2], [0, 1, 1]])
    g = FieldMatrix(q, [[1, 2], [2, 1], [0, 1]])
    inter = intersect_spans(f, g)
    f1 = FieldMatrix(q, [[1, 2], [2, 1], [0, 1]])
    assert inter.cols == rank(f1) == 2


def test_intersection_shape_error():
    a = FieldMatrix(5, [[1], [2]])
    b = FieldMatrix(5, [[1]])
    with pytest.raises(ShapeError):
        intersect_spans(a, b)


def test_intersection_dimension_identity_against_enumeration():
    rng = random.Random(3)
    for q in (2, 3):
        for _ in range(12):
            rows_n = rng.randrange(1, 5)
            a = random_matrix(rng, q, rows_n, rng.randrange(1, 4))
            b = random_matrix(rng, q, rows_n, rng.randrange(1, 4))
            inter = intersect_spans(a, b)
            expected = rank(a) + rank(b) - rank(a.hstack(b))
            assert inter.cols == expected
            common = span_members(a) & span_members(b)
            assert len(common) == q ** inter.cols
            assert span_members(inter) == common


# -- kronecker ---------------------------------------------------------------


def test_kronecker_with_identity_one():
    a = FieldMatrix(5, [[1, 2], [3, 4]])
    assert kronecker(a, FieldMatrix.identity(5, 1)) == a


def test_kronecker_shape_law():
    a = FieldMatrix.zeros(3, 2, 3)
    b = FieldMatrix.zeros(3, 4, 5)
    k = kronecker(a, b)
    assert (k.rows, k.cols) == (8, 15)


def test_kronecker_field_mismatch():
    with pytest.raises(FieldMismatch):
        kronecker(FieldMatrix.identity(3, 1), FieldMatrix.identity(5, 1))


def test_kronecker_mixed_product_law():
    rng = random.Random(5)
    for _ in range(10):
        q = rng.choice([2, 3, 5])
        a = random_matrix(rng, q, 2, 3)
        c = random_matrix(rng, q, 3, 2)
        b = random_matrix(rng, q, 2, 2)
        d = random_matrix(rng, q, 2, 3)
        lhs = kronecker(a, b).mul(kronecker(c, d))
        rhs = kronecker(a.mul(c), b.mul(d))
        assert lhs == rhs


# -- MDS / Vandermonde -------------------------------------------------------


def mds_by_minor_enumeration(m):
    return all(
        rank(m.take_cols(cols)) == m.rows
        for cols in combinations(range(m.cols), m.rows)
    )


def test_single_row_mds():
    assert is_mds(FieldMatrix(5, [[1, 2, 3, 4]]))
    assert not is_mds(FieldMatrix(5, [[1, 0, 3]]))


def test_parity_matrix_over_f2():
    # truth recomputed by minor enumeration: every 2x2 minor of [I | 1] is nonsingular
    m = FieldMatrix(2, [[1, 0, 1], [0, 1, 1]])
    assert is_mds(m) == mds_by_minor_enumeration(m)
    assert is_mds(m)


def test_vandermonde_rows():
    assert vandermonde(7, [3, 5], 1) == FieldMatrix(7, [[1, 1]])
    v = vandermonde(7, [1, 2, 3, 4, 5, 6], 2)
    assert v == FieldMatrix(7, [[1, 1, 1, 1, 1, 1], [1, 2, 3, 4, 5, 6]])


def test_square_vandermonde_nonsingular():
    rng = random.Random(9)
    for _ in range(10):
        q = rng.choice([7, 11, 13])
        k = rng.randrange(2, 5)
        points = rng.sample(range(1, q), k)
        v = vandermonde(q, points, k)
        det_product = 1
        for i in range(k):
            for j in range(i + 1, k):
                det_product = det_product * (points[j] - points[i]) % q
        assert (rank(v) == k) == (det_product != 0)
        assert rank(v) == k


def test_vandermonde_mds_property():
    rng = random.Random(13)
    for _ in range(20):
        q = rng.choice([7, 11, 13])
        npts = rng.randrange(2, min(q - 1, 6) + 1)
        points = rng.sample(range(1, q), npts)
        rows_n = rng.randrange(1, npts + 1)
        assert is_mds(vandermonde(q, points, rows_n))


def test_vandermonde_duplicate_points():
    with pytest.raises(DegenerateInput):
        vandermonde(7, [1, 1, 2], 2)


def test_is_mds_shape_error():
    with pytest.raises(ShapeError):
        is_mds(FieldMatrix(5, [[1], [2]]))


# -- membership --------------------------------------------------------------


def test_membership_first_column():
    a = FieldMatrix(7, [[1, 3], [2, 4], [5, 6]])
    x = solve_membership(a.col(0), a)
    assert x is not None
    assert a.mul(FieldMatrix.column(7, x)) == FieldMatrix.column(7, a.col(0))


def test_membership_branch_vector():
    f = FieldMatrix(7, [[1, 0], [1, 1], [2, 1]])
    x = solve_membership((1, 0, 1), f)
    assert x is not None
    assert f.mul(FieldMatrix.column(7, x)) == FieldMatrix.column(7, (1, 0, 1))


def test_membership_outside_zero_span():
    a = FieldMatrix.zeros(5, 3, 2)
    assert solve_membership((1, 0, 0), a) is None


# -- misc hygiene ------------------------------------------------------------


def test_all_entries_reduced():
    m = FieldMatrix(5, [[7, -3], [10, 4]])
    assert m.data == ((2, 2), (0, 4))


def test_inverse_roundtrip():
    rng = random.Random(17)
    q = 5
    while True:
        m = random_matrix(rng, q, 3, 3)
        if rank(m) == 3:
            break
    assert m.mul(inverse(m)) == FieldMatrix.identity(q, 3)


def test_empty_matrices():
    e = FieldMatrix.zeros(5, 0, 3)
    assert rank(e) == 0
    assert left_kernel(FieldMatrix.zeros(5, 3, 0)).rows == 3
    z = FieldMatrix.zeros(5, 3, 0)
    assert intersect_spans(z, FieldMatrix.identity(5, 3)).cols == 0


@settings(max_examples=60, deadline=None)
@given(
    q=st.sampled_from([2, 3, 5]),
    rows=st.integers(1, 4),
    cols=st.integers(1, 4),
    seed=st.integers(0, 10**6),
)
def test_kernel_dimension_property(q, rows, cols, seed):
    rng = random.Random(seed)
    m = random_matrix(rng, q, rows, cols)
    k = left_kernel(m)
    assert k.rows == rows - rank(m)
    assert k.mul(m).is_zero


@settings(max_examples=60, deadline=None)
@given(
    q=st.sampled_from([2, 3]),
    n=st.integers(1, 4),
    seed=st.integers(0, 10**6),
)
def test_intersection_rank_identity_property(q, n, seed):
    rng = random.Random(seed)
    a = random_matrix(rng, q, n, rng.randrange(1, 4))
    b = random_matrix(rng, q, n, rng.randrange(1, 4))
    assert intersect_spans(a, b).cols == rank(a) + rank(b) - rank(a.hstack(b))

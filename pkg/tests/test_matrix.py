import itertools

import numpy as np
import pytest

from hamdet.gf2k import get_field
from hamdet.matrix import (
    EvaluationTable,
    determinant,
    eval_poly,
    lagrange_coefficient,
    mat_mul,
    mat_pow,
)


def brute_permanent(ctx, m):
    n = m.shape[0]
    total = 0
    for sigma in itertools.permutations(range(n)):
        prod = 1
        for i in range(n):
            prod = ctx.mul(prod, int(m[i, sigma[i]]))
        total ^= prod
    return total


def test_determinant_identity(f8):
    for n in (1, 3, 5):
        assert determinant(f8, np.eye(n, dtype=np.uint64)) == 1


def test_determinant_equal_rows_is_zero(f8, rng):
    m = rng.integers(0, 256, (4, 4), dtype=np.uint64)
    m[2] = m[0]
    assert determinant(f8, m) == 0


def test_determinant_matches_permanent(f8, rng):
    for _ in range(120):
        n = int(rng.integers(1, 6))
        m = rng.integers(0, 256, (n, n), dtype=np.uint64)
        assert determinant(f8, m) == brute_permanent(f8, m)


def test_determinant_multiplicative(f8, rng):
    for _ in range(100):
        n = int(rng.integers(1, 5))
        a = rng.integers(0, 256, (n, n), dtype=np.uint64)
        b = rng.integers(0, 256, (n, n), dtype=np.uint64)
        lhs = determinant(f8, mat_mul(f8, a, b))
        rhs = f8.mul(determinant(f8, a), determinant(f8, b))
        assert lhs == rhs


def test_row_swap_keeps_determinant(f8, rng):
    m = rng.integers(0, 256, (5, 5), dtype=np.uint64)
    swapped = m.copy()
    swapped[[0, 3]] = swapped[[3, 0]]
    assert determinant(f8, m) == determinant(f8, swapped)


def test_mat_mul_identity_and_zero(f8, rng):
    b = rng.integers(0, 256, (3, 4), dtype=np.uint64)
    eye = np.eye(3, dtype=np.uint64)
    assert np.array_equal(mat_mul(f8, eye, b), b)
    assert not mat_mul(f8, np.zeros((3, 3), np.uint64), b).any()


def test_mat_mul_definitional(rng):
    ctx = get_field(4)
    a = rng.integers(0, 16, (2, 2), dtype=np.uint64)
    b = rng.integers(0, 16, (2, 2), dtype=np.uint64)
    prod = mat_mul(ctx, a, b)
    for i in range(2):
        for j in range(2):
            want = ctx.mul(int(a[i, 0]), int(b[0, j])) ^ ctx.mul(int(a[i, 1]), int(b[1, j]))
            assert int(prod[i, j]) == want


def test_mat_mul_dimension_mismatch(f8):
    with pytest.raises(ValueError):
        mat_mul(f8, np.zeros((2, 3), np.uint64), np.zeros((2, 2), np.uint64))


def test_mat_pow(f8):
    tri = np.zeros((3, 3), np.uint64)
    for u, v in [(0, 1), (1, 2), (2, 0)]:
        tri[u, v] = tri[v, u] = 1
    assert np.array_equal(mat_pow(f8, tri, 0), np.eye(3, dtype=np.uint64))
    assert np.array_equal(mat_pow(f8, tri, 1), tri)
    cube = mat_pow(f8, tri, 3)
    # two closed triangle walks from each vertex cancel mod 2
    assert all(int(cube[i, i]) == 0 for i in range(3))


def test_lagrange_constant(f8):
    table = EvaluationTable((1, 2, 3), (0x2A, 0x2A, 0x2A))
    assert lagrange_coefficient(f8, table, 0) == 0x2A
    assert lagrange_coefficient(f8, table, 1) == 0
    assert lagrange_coefficient(f8, table, 2) == 0


def test_lagrange_planted_sparse(f8, rng):
    c3, c1 = int(rng.integers(1, 256)), int(rng.integers(1, 256))
    pts = (1, 2, 3, 4, 5)
    vals = tuple(f8.mul(c3, f8.pow(p, 3)) ^ f8.mul(c1, p) for p in pts)
    table = EvaluationTable(pts, vals)
    assert lagrange_coefficient(f8, table, 3) == c3
    assert lagrange_coefficient(f8, table, 1) == c1
    assert lagrange_coefficient(f8, table, 2) == 0
    assert lagrange_coefficient(f8, table, 4) == 0  # beyond the table degree


def test_lagrange_roundtrip_degree_20(f16, rng):
    for _ in range(10):
        deg = int(rng.integers(1, 21))
        coeffs = [int(c) for c in rng.integers(0, 1 << 16, deg + 1)]
        pts = tuple(f16.pow(f16.generator, i) for i in range(deg + 1))
        vals = tuple(eval_poly(f16, coeffs, p) for p in pts)
        table = EvaluationTable(pts, vals)
        for d, c in enumerate(coeffs):
            assert lagrange_coefficient(f16, table, d) == c


def test_lagrange_duplicate_points(f8):
    with pytest.raises(ValueError):
        lagrange_coefficient(f8, EvaluationTable((1, 1, 2), (0, 0, 0)), 0)

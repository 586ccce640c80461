"""Dense linear algebra over GF(2^k) on numpy uint64 arrays: determinants by
exact Gaussian elimination, products, powers, and coefficient extraction from
univariate interpolation tables.

Matrices are plain (n, n) or (r, c) uint64 arrays interpreted in a given
FieldContext; all functions are pure.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .gf2k import FieldContext, FieldElement


class EvaluationTable(NamedTuple):
    """Distinct sample points and the polynomial values taken there."""

    points: tuple
    values: tuple


def as_matrix(entries, n: int | None = None, cols: int | None = None) -> np.ndarray:
    a = np.asarray(entries, np.uint64)
    if n is not None:
        a = a.reshape(n, cols if cols is not None else n)
    return a


def determinant(ctx: FieldContext, m: np.ndarray) -> FieldElement:
    """Determinant (= permanent, characteristic two); 0 for singular input."""
    m = np.asarray(m, np.uint64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    if m.shape[0] == 0:
        return 1
    return int(kernels.det_batch(m[None, :, :], *ctx.kernel_params())[0])


def det_batch(ctx: FieldContext, stack: np.ndarray) -> np.ndarray:
    """Determinants of a (B, n, n) stack."""
    return kernels.det_batch(np.asarray(stack, np.uint64), *ctx.kernel_params())


def mat_mul(ctx: FieldContext, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, np.uint64)
    b = np.asarray(b, np.uint64)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    return kernels.mat_mul(np.ascontiguousarray(a), np.ascontiguousarray(b),
                           *ctx.kernel_params())


def mat_pow(ctx: FieldContext, a: np.ndarray, l: int) -> np.ndarray:
    """a^l by iterated multiplication (exponents here never exceed n)."""
    a = np.asarray(a, np.uint64)
    if l < 0:
        raise ValueError("negative matrix power")
    out = np.eye(a.shape[0], dtype=np.uint64)
    for _ in range(l):
        out = mat_mul(ctx, out, a)
    return out


def _check_distinct(points: Sequence[int]) -> None:
    if len(set(points)) != len(points):
        raise ValueError("interpolation points must be pairwise distinct")


@lru_cache(maxsize=512)
def _coefficient_weights(k: int, points: tuple, target_degree: int) -> np.ndarray:
    """Weights w with [x^target] interpolant = xor_i mul(w[i], values[i]).

    Computed from the master polynomial M(x) = prod (x + x_i): dividing out
    (x + x_i) gives the numerator of the i-th Lagrange basis polynomial, and
    scaling by 1/N_i(x_i) normalizes it.  O(d^2) once per point set; cached
    because the evaluation ladders g^0, g^1, ... recur constantly.
    """
    from .gf2k import get_field

    ctx = get_field(k)
    d = len(points) - 1
    # master[j] = coefficient of x^j in prod_i (x + x_i)
    master = [0] * (d + 2)
    master[0] = 1
    deg = 0
    for x in points:
        for j in range(deg + 1, -1, -1):
            c = master[j]
            master[j] = ctx.mul(c, x) ^ (master[j - 1] if j else 0)
        deg += 1
    weights = np.zeros(d + 1, np.uint64)
    if target_degree > d:
        return weights
    for i, x in enumerate(points):
        # synthetic division of master by (x + x_i), highest degree first
        num = [0] * (d + 1)
        carry = master[d + 1]
        for j in range(d, -1, -1):
            num[j] = carry
            carry = master[j] ^ ctx.mul(carry, x)
        denom = 0
        xp = 1
        for j in range(d + 1):
            denom ^= ctx.mul(num[j], xp)
            xp = ctx.mul(xp, x)
        weights[i] = ctx.mul(num[target_degree], ctx.inv(denom))
    return weights


def lagrange_coefficient(
    ctx: FieldContext, table: EvaluationTable, target_degree: int
) -> FieldElement:
    """Coefficient of x^target_degree in the unique polynomial of degree
    < len(points) passing through every (point, value) pair."""
    points = tuple(int(p) for p in table.points)
    values = np.asarray(table.values, np.uint64)
    if len(points) != len(values):
        raise ValueError("points and values must have equal length")
    if target_degree < 0:
        raise ValueError("target degree must be nonnegative")
    _check_distinct(points)
    weights = _coefficient_weights(ctx.k, points, target_degree)
    prods = ctx.mul_arrays(weights, values)
    return int(np.bitwise_xor.reduce(prods))


def eval_poly(ctx: FieldContext, coeffs: Sequence[int], x: int) -> FieldElement:
    """Horner evaluation; coeffs[j] multiplies x^j."""
    acc = 0
    for c in reversed(list(coeffs)):
        acc = ctx.mul(acc, x) ^ c
    return acc

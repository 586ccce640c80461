"""Streaming (polynomial-space) evaluation of the cycle cover sum.

Instead of tabulating path polynomials over all 2^|part2| interiors and
zeta-transforming a 2^L stack of matrices, each subset Y of the labels gets
its inner matrix built on the fly: hops through part2 are replaced by walk
sums (counting repeats), evaluated through powers of the restricted adjacency
matrix, B A^(l-1) B^T.  Walks that are not simple paths carry the wrong
power of the degree-tracking scalar r, so they never land in the coefficient
being extracted - the value at any single r differs from the table engine,
but the extracted coefficient agrees bit for bit.

Peak memory is a handful of n x n matrices per worker, never a 2^L table.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .assignment import VariableAssignment
from .errors import FieldTooSmallError
from .general import Partition, label_edges
from .gf2k import FieldElement
from .graphs import Graph
from .matrix import EvaluationTable, lagrange_coefficient, mat_mul


def walk_matrices(
    g: Graph, part: Partition, members, point: VariableAssignment
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """A: edge values among the chosen part2 vertices; B: edge values leaving
    part1 into them; C: edge values returning into part1.  B and C transpose
    each other except in the row/column of the special vertex, whose two
    directions carry independent values.  Entries are zero off the edges."""
    xmat = point.edge_matrix()
    mem = np.array(sorted(members), np.int64)
    v1 = np.array(part.part1, np.int64)
    a = xmat[np.ix_(mem, mem)] if mem.size else np.zeros((0, 0), np.uint64)
    b = xmat[np.ix_(v1, mem)] if mem.size else np.zeros((len(v1), 0), np.uint64)
    c = xmat[np.ix_(mem, v1)] if mem.size else np.zeros((0, len(v1)), np.uint64)
    return a, b, c


def _xd_stack(g: Graph, part: Partition, m: int, point: VariableAssignment) -> np.ndarray:
    h = len(part.part1)
    pos = {v: i for i, v in enumerate(part.part1)}
    xd = np.zeros((m, h, h), np.uint64)
    for d in range(m):
        for u, v in label_edges(g, part):
            xd[d, pos[u], pos[v]] = point.xd(u, v, d)
            xd[d, pos[v], pos[u]] = point.xd(v, u, d)
    return xd


def inner_sum_matrix(
    g: Graph,
    part: Partition,
    m: int,
    y_mask: int,
    r: FieldElement,
    point: VariableAssignment,
) -> np.ndarray:
    """Sum of the walk-based matrices over all subsets of the label set Y:
    the part2 half collapses to r^l-weighted walk counts of every length l up
    to n, the extra-label half adds r * x(u, v, d) on part1 edges."""
    ctx = point.ctx
    h = len(part.part1)
    p2c = len(part.part2)
    x1 = [part.part2[i] for i in range(p2c) if y_mask & (1 << i)]
    x2 = [d for d in range(m) if y_mask & (1 << (p2c + d))]
    out = np.zeros((h, h), np.uint64)
    if x1:
        a, b, c = walk_matrices(g, part, x1, point)
        cur = b
        rl = r
        for step in range(1, g.n + 1):
            term = ctx.mul_arrays(np.uint64(rl), mat_mul(ctx, cur, c))
            np.fill_diagonal(term, 0)
            out ^= term
            if step < g.n:
                cur = mat_mul(ctx, cur, a)
                rl = ctx.mul(rl, r)
    if x2:
        xd = _xd_stack(g, part, m, point)
        for d in x2:
            out ^= ctx.mul_arrays(np.uint64(r), xd[d])
    return out


def eval_q_at(
    g: Graph,
    part: Partition,
    m: int,
    r: FieldElement,
    point: VariableAssignment,
) -> FieldElement:
    """Streamed determinant sum at a single scalar r."""
    values = _stream_points(g, part, m, np.array([r], np.uint64), point)
    return int(values[0])


def _stream_points(
    g: Graph,
    part: Partition,
    m: int,
    rpoints: np.ndarray,
    point: VariableAssignment,
) -> np.ndarray:
    xmat = point.edge_matrix()
    v1 = np.array(part.part1, np.int64)
    v2 = np.array(part.part2, np.int64)
    xd = _xd_stack(g, part, m, point)
    return kernels.eval_points_stream(
        xmat, xd, v1, v2, g.n, rpoints, *point.ctx.kernel_params()
    )


def lambda_polyspace(
    g: Graph, part: Partition, m: int, point: VariableAssignment
) -> FieldElement:
    """The cycle cover sum for one (partition, m, point), computed in
    polynomial space; equals the table engine's value exactly."""
    ctx = point.ctx
    n_base = len(part.part1)
    labels = len(part.part2) + m
    if (1 << ctx.k) <= labels * n_base:
        raise FieldTooSmallError(
            f"need 2^k > labels*n = {labels * n_base}, have k = {ctx.k}"
        )
    # walk entries carry degrees up to n, so the determinant sum has degree
    # at most n_base * n
    degree = n_base * g.n
    npts = degree + 1
    if npts > ctx.order:
        raise FieldTooSmallError(
            f"need {npts} distinct points, field has {ctx.order} nonzero"
        )
    pts = np.empty(npts, np.uint64)
    val = 1
    for i in range(npts):
        pts[i] = val
        val = ctx.mul(val, ctx.generator)
    values = _stream_points(g, part, m, pts, point)
    table = EvaluationTable(tuple(int(p) for p in pts), tuple(int(v) for v in values))
    return lagrange_coefficient(ctx, table, labels)

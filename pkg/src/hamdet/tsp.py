"""Minimum-weight Hamiltonian tours for positive integer edge weights.

Every edge value is premultiplied by y^(edge weight) for an extra scalar y,
so each tour's monomial carries y raised to the tour's total weight.  The
detection sum is evaluated at y = g^l for every power of a generator g, and
the discrete inverse transform over the multiplicative group recovers the
coefficient of each y^j exactly:  t(j) != 0 certifies a tour of weight
exactly j (one-sided, like detection), and the smallest such j over enough
random partitions is the optimum with high probability.

The field must be big enough that no tour weight reaches 2^k - 1, or
coefficients would wrap around the group order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import kernels
from .assignment import VariableAssignment, draw_assignment, run_rng
from .config import DetectionConfig, auto_k, run_until_hit
from .errors import FieldTooSmallError
from .gf2k import MAX_K, FieldContext, FieldElement, get_field
from .general import (
    Partition,
    build_general_lcc,
    crossing_edges,
    label_edges,
    sample_partition,
    tabulate_pathpoly,
)
from .graphs import WeightedGraph
from .lcc import lcc_sum


class WeightSpectrum(NamedTuple):
    """values[j] = recovered coefficient of y^j, j = 0..2^k-2; a nonzero
    entry certifies a tour of total weight j."""

    values: np.ndarray

    def min_weight(self) -> int | None:
        nz = np.nonzero(self.values)[0]
        return int(nz[0]) if nz.size else None


def inverse_transform(T: np.ndarray, ctx: FieldContext) -> WeightSpectrum:
    """Exact coefficient recovery from values on all of GF(2^k)*:
    out[j] = xor over l of g^(-j l) T(l).  T must have 2^k - 1 entries."""
    T = np.asarray(T, np.uint64)
    if T.shape != (ctx.order,):
        raise ValueError(
            f"need exactly {ctx.order} values (all nonzero field points), got {T.shape}"
        )
    out = kernels.inverse_transform(
        T, np.uint64(ctx.generator), *ctx.kernel_params()
    )
    return WeightSpectrum(out)


def weight_degree_bound(wg: WeightedGraph) -> int:
    """Upper bound on any tour's total weight: a tour uses exactly n edges,
    so the n heaviest edges bound it (and never exceed the total weight)."""
    ws = sorted(wg.weights.values(), reverse=True)
    return sum(ws[: wg.n])


def tsp_field_bits(wg: WeightedGraph, m_max: int) -> int:
    """Smallest k such that no tour weight can wrap (2^k >= bound + 2) that
    also satisfies the interpolation constraint 2^k > labels * n_base."""
    bound = weight_degree_bound(wg)
    k = max(1, (bound + 1).bit_length())  # 2^k >= bound + 2
    n_base = (wg.n + 1) // 2
    labels = wg.n // 2 + m_max
    while (1 << k) <= labels * n_base:
        k += 1
    if k > MAX_K:
        raise FieldTooSmallError(
            f"total weight needs k = {k} > {MAX_K}; reduce the weights"
        )
    return k


def build_fy_lcc(
    wg: WeightedGraph,
    part: Partition,
    m: int,
    y_value: FieldElement,
    point: VariableAssignment,
):
    """General-reduction instance with every edge value scaled by
    y_value^(edge weight); at y_value = 1 it coincides with the unweighted
    instance at the same point."""
    ctx = point.ctx
    scaled = point.scaled(_weight_factors(wg, ctx, y_value))
    table = tabulate_pathpoly(wg.graph, part, scaled)
    return build_general_lcc(wg.graph, part, m, scaled, table)


def _weight_factors(wg: WeightedGraph, ctx: FieldContext, y: FieldElement) -> np.ndarray:
    maxw = max(wg.weights.values(), default=0)
    ypow = [1] * (maxw + 1)
    for j in range(1, maxw + 1):
        ypow[j] = ctx.mul(ypow[j - 1], y)
    fac = np.ones((wg.n, wg.n), np.uint64)
    for (u, v), w in wg.weights.items():
        fac[u, v] = fac[v, u] = ypow[w]
    return fac


@dataclass
class TspRunReport:
    run_index: int
    part1: tuple
    part2: tuple
    best_weight: int | None

    @property
    def hit(self) -> bool:
        # runs are never cut short: a later partition may reach a lighter tour
        return False


@dataclass
class TspResult:
    weight: int | None
    runs: list
    resolved: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0


def solve_tsp(wg: WeightedGraph, cfg: DetectionConfig | None = None) -> TspResult:
    """Weight of the lightest tour, or None when no tour was certified.
    Any returned weight is the weight of a real tour; it is the minimum with
    probability approaching one in the number of runs."""
    cfg = cfg or DetectionConfig()
    n = wg.n
    start = time.perf_counter()
    resolved = {"seed": cfg.seed, "engine": "table", "threads": cfg.threads}
    if n < 3 or len(wg.graph.edges) < n:
        resolved.update({"k": 0, "runs": 0, "m_max": 0})
        return TspResult(None, [], resolved, (time.perf_counter() - start) * 1e3)
    m_max = cfg.m_max if cfg.m_max is not None else -(-n // 4)
    runs = cfg.runs if cfg.runs is not None else n
    k = cfg.k if cfg.k is not None else tsp_field_bits(wg, m_max)
    ctx = get_field(k)
    order = ctx.order

    def one_run(idx: int) -> TspRunReport:
        rng = run_rng(cfg.seed, idx)
        part = sample_partition(n, rng)
        point = draw_assignment(
            ctx, wg.graph, part.s, rng,
            edge_subset=crossing_edges(wg.graph, part),
            label_edges=label_edges(wg.graph, part),
            label_count=m_max,
        )
        T = np.zeros(order, np.uint64)
        y = 1  # g^l, stepped once per l
        for l in range(order):
            factors = _weight_factors(wg, ctx, y)
            scaled = point.scaled(factors)
            table = tabulate_pathpoly(wg.graph, part, scaled)
            acc = 0
            for m in range(m_max + 1):
                acc ^= lcc_sum(build_general_lcc(wg.graph, part, m, scaled, table))
            T[l] = acc
            y = ctx.mul(y, ctx.generator)
        best = inverse_transform(T, ctx).min_weight()
        return TspRunReport(idx, part.part1, part.part2, best)

    reports = run_until_hit(runs, cfg.threads, one_run)
    weights = [r.best_weight for r in reports if r.best_weight is not None]
    best = min(weights) if weights else None
    resolved.update({"k": k, "runs": runs, "m_max": m_max})
    return TspResult(best, reports, resolved, (time.perf_counter() - start) * 1e3)

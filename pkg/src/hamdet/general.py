"""Hamiltonicity of arbitrary undirected graphs.

The vertex set is split at random into halves V1 and V2.  A Hamiltonian
cycle, read along its arcs, alternates "hops" that dip into V2 (handled by a
path polynomial summed over simple paths with a prescribed interior) and arcs
that stay inside V1 (each consumes one of m extra labels).  For each m up to
a budget, the instance on V1 with labels V2 + m extras is evaluated at a
random point; any nonzero value certifies a Hamiltonian cycle with exactly m
inside-V1 arcs.  Repetition over fresh partitions covers the randomness of
the split.

With a known independent set as V2 the partition is fixed and the budget
drops to n - 2|V2|, since every independent vertex forces two crossing arcs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .assignment import VariableAssignment, draw_assignment, run_rng
from .config import (
    VERDICT_HAM,
    VERDICT_NONE,
    DetectionConfig,
    DetectionResult,
    RunReport,
    auto_k,
    general_m_max,
    general_runs,
    run_until_hit,
)
from .errors import NotIndependentError
from .gf2k import FieldContext, get_field
from .graphs import Graph
from .lcc import ArcSet, LccInstance, lcc_sum

MAX_PART2 = 24


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of the vertex set; part1 carries the folded graph and
    part2 the labels."""

    part1: tuple
    part2: tuple

    @property
    def s(self) -> int:
        return self.part1[0]

    def __post_init__(self):
        p1, p2 = set(self.part1), set(self.part2)
        if p1 & p2:
            raise ValueError("parts overlap")
        if p1 | p2 != set(range(len(p1) + len(p2))):
            raise ValueError("parts must cover 0..n-1")


def sample_partition(n: int, rng: np.random.Generator) -> Partition:
    """Uniform partition with |part1| = ceil(n/2)."""
    perm = rng.permutation(n)
    h = (n + 1) // 2
    return Partition(tuple(sorted(int(v) for v in perm[:h])),
                     tuple(sorted(int(v) for v in perm[h:])))


@dataclass
class PathPolyTable:
    """table[X, u, j]: sum over simple paths from u to part1[j] with interior
    exactly the subset X of part2, of the product of edge values."""

    part1: tuple
    part2: tuple
    table: np.ndarray  # (2^|part2|, n, |part1|) uint64

    def value(self, u: int, v: int, subset_mask: int) -> int:
        j = self.part1.index(v)
        return int(self.table[subset_mask, u, j])


def tabulate_pathpoly(
    g: Graph, part: Partition, point: VariableAssignment
) -> PathPolyTable:
    """Bottom-up tabulation over subsets of part2 (peel the interior vertex
    adjacent to the path's start)."""
    if len(part.part2) > MAX_PART2:
        raise ValueError(f"part2 size {len(part.part2)} exceeds {MAX_PART2}")
    xmat = point.edge_matrix()
    v1 = np.array(part.part1, np.int64)
    v2 = np.array(part.part2, np.int64)
    dp = kernels.pathpoly_table(xmat, v2, v1, *point.ctx.kernel_params())
    return PathPolyTable(part.part1, part.part2, dp)


def label_edges(g: Graph, part: Partition) -> list[tuple[int, int]]:
    """Edges of the induced graph on part1 (the ones that can go unlabeled)."""
    p1 = set(part.part1)
    return [e for e in g.sorted_edges() if e[0] in p1 and e[1] in p1]


def crossing_edges(g: Graph, part: Partition) -> list[tuple[int, int]]:
    """Edges with at least one endpoint in part2 (the ones with x values)."""
    p2 = set(part.part2)
    return [e for e in g.sorted_edges() if e[0] in p2 or e[1] in p2]


def build_general_lcc(
    g: Graph,
    part: Partition,
    m: int,
    point: VariableAssignment,
    table: PathPolyTable,
) -> LccInstance:
    """Complete bidirected base on part1; labels are part2 plus m extras.
    f on a part2 subset comes from the path table; f on an extra singleton d
    places the per-(edge, d) value on arcs that are edges inside part1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    p1 = list(part.part1)
    h = len(p1)
    p2c = len(part.part2)
    ctx = point.ctx
    v1 = np.array(p1, np.int64)
    cols = np.arange(h)
    f_mats = {}
    for mask in range(1, 1 << p2c):
        mat = table.table[mask][np.ix_(v1, cols)]
        if mat.any():
            f_mats[mask] = mat
    for d in range(m):
        mat = np.zeros((h, h), np.uint64)
        for u, v in label_edges(g, part):
            i, j = p1.index(u), p1.index(v)
            mat[i, j] = point.xd(u, v, d)
            mat[j, i] = point.xd(v, u, d)
        if mat.any():
            f_mats[1 << (p2c + d)] = mat
    base = ArcSet.complete_bidirected(h)
    return LccInstance(base, p2c + m, f_mats, ctx)


def _lambda_for_m(
    g: Graph,
    part: Partition,
    m: int,
    point: VariableAssignment,
    table: PathPolyTable | None,
    engine: str,
) -> int:
    if engine == "streaming":
        from .polyspace import lambda_polyspace

        return lambda_polyspace(g, part, m, point)
    assert table is not None
    return lcc_sum(build_general_lcc(g, part, m, point, table))


def _detection_runs(
    g: Graph,
    cfg: DetectionConfig,
    ctx: FieldContext,
    runs: int,
    m_max: int,
    fixed_part: Partition | None,
) -> list[RunReport]:
    def one_run(idx: int) -> RunReport:
        rng = run_rng(cfg.seed, idx)
        part = fixed_part if fixed_part is not None else sample_partition(g.n, rng)
        point = draw_assignment(
            ctx, g, part.s, rng,
            edge_subset=crossing_edges(g, part),
            label_edges=label_edges(g, part),
            label_count=m_max,
        )
        table = None
        if cfg.engine == "table":
            table = tabulate_pathpoly(g, part, point)
        ms, fps = [], []
        for m in range(m_max + 1):
            val = _lambda_for_m(g, part, m, point, table, cfg.engine)
            ms.append(m)
            fps.append(val)
            if val != 0:
                break
        return RunReport(idx, part.part1, part.part2, ms, fps)

    return run_until_hit(runs, cfg.threads, one_run)


def detect_general(g: Graph, cfg: DetectionConfig | None = None) -> DetectionResult:
    """Monte Carlo Hamiltonicity for arbitrary graphs; no false positives."""
    cfg = cfg or DetectionConfig()
    n = g.n
    start = time.perf_counter()
    if n < 3:
        return DetectionResult(VERDICT_NONE, [], {"seed": cfg.seed, "k": 0,
                                                  "runs": 0, "m_max": 0,
                                                  "engine": cfg.engine,
                                                  "threads": cfg.threads})
    m_max = cfg.m_max if cfg.m_max is not None else general_m_max(n, cfg.preset)
    runs = cfg.runs if cfg.runs is not None else general_runs(n, cfg.preset)
    labels_max = n // 2 + m_max
    k = cfg.k if cfg.k is not None else auto_k(n, labels_max)
    ctx = get_field(k)
    reports = _detection_runs(g, cfg, ctx, runs, m_max, None)
    verdict = VERDICT_HAM if any(r.hit for r in reports) else VERDICT_NONE
    resolved = {
        "seed": cfg.seed,
        "k": k,
        "runs": runs,
        "m_max": m_max,
        "engine": cfg.engine,
        "threads": cfg.threads,
    }
    return DetectionResult(
        verdict, reports, resolved, (time.perf_counter() - start) * 1e3
    )


def detect_with_independent_set(
    g: Graph, indep, cfg: DetectionConfig | None = None
) -> DetectionResult:
    """Hamiltonicity with a known independent set fixed as the label side.
    Sets larger than n/2 rule the graph out immediately."""
    cfg = cfg or DetectionConfig()
    indep = sorted(set(indep))
    if not g.is_independent(indep):
        raise NotIndependentError(f"vertex set {indep} is not independent")
    n = g.n
    i = len(indep)
    start = time.perf_counter()
    if 2 * i > n:
        # each independent vertex needs two private cycle arcs
        return DetectionResult(
            VERDICT_NONE, [],
            {"seed": cfg.seed, "k": 0, "runs": 0, "m_max": 0,
             "engine": cfg.engine, "threads": cfg.threads,
             "reason": "independent set larger than n/2"},
            (time.perf_counter() - start) * 1e3,
        )
    if n < 3:
        return DetectionResult(VERDICT_NONE, [], {"seed": cfg.seed, "k": 0,
                                                  "runs": 0, "m_max": 0,
                                                  "engine": cfg.engine,
                                                  "threads": cfg.threads})
    part = Partition(tuple(v for v in range(n) if v not in set(indep)),
                     tuple(indep))
    m_max = cfg.m_max if cfg.m_max is not None else n - 2 * i
    runs = cfg.runs if cfg.runs is not None else n
    k = cfg.k if cfg.k is not None else auto_k(n, i + m_max)
    ctx = get_field(k)
    reports = _detection_runs(g, cfg, ctx, runs, m_max, part)
    verdict = VERDICT_HAM if any(r.hit for r in reports) else VERDICT_NONE
    resolved = {
        "seed": cfg.seed,
        "k": k,
        "runs": runs,
        "m_max": m_max,
        "engine": cfg.engine,
        "threads": cfg.threads,
    }
    return DetectionResult(
        verdict, reports, resolved, (time.perf_counter() - start) * 1e3
    )


def success_probability_lower_bound(n: int, m: int) -> Fraction:
    """Exact lower bound on the chance that a uniform balanced partition
    leaves some Hamiltonian cycle with exactly m arcs inside part1:
    C(n/2-1, m-1)^2 / C(n, n/2).  Defined for even n and 1 <= m <= n/2."""
    if n % 2:
        raise ValueError("bound is stated for even n")
    if not 1 <= m <= n // 2:
        raise ValueError(f"m must be in 1..{n // 2}, got {m}")
    h = n // 2
    return Fraction(math.comb(h - 1, m - 1) ** 2, math.comb(n, h))

"""Core engine: sums over arc-labeled cycle covers of a directed graph.

An instance assigns to every arc and nonempty label subset a field value
f(arc, Z).  The quantity computed here sums, over all cycle covers C and all
ways to split the label set into nonempty parts carried by the arcs of C, the
product of the f values.  It is evaluated without enumerating cycle covers:
for a scalar r, the subset-indexed determinant sum

    p(r) = xor over Y of det( xor over Z subseteq Y of r^|Z| * M(Z) ),

with M(Z)[i, j] = f(ij, Z), has the wanted sum as its coefficient of
r^(number of labels).  Each evaluation tabulates the inner sums with a fast
zeta transform over the 2^L subset lattice and takes 2^L determinants; the
coefficient is then extracted by interpolation on a ladder of generator
powers.

A factorial-time reference evaluator over explicit cycle covers is provided
for cross-checking tiny instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import FieldTooSmallError
from .gf2k import FieldContext, FieldElement
from .matrix import EvaluationTable, lagrange_coefficient

# label sets beyond this make the 2^L lattice unreasonable on a desk machine
MAX_LABELS = 24


@dataclass(frozen=True)
class ArcSet:
    """Directed arcs on vertices 0..n_base-1, no loops."""

    n_base: int
    arcs: frozenset

    @staticmethod
    def from_pairs(n_base: int, pairs) -> "ArcSet":
        arcs = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop arc at {u}")
            if not (0 <= u < n_base and 0 <= v < n_base):
                raise ValueError(f"arc ({u}, {v}) out of range")
            arcs.add((u, v))
        return ArcSet(n_base, frozenset(arcs))

    @staticmethod
    def complete_bidirected(n_base: int) -> "ArcSet":
        return ArcSet(
            n_base,
            frozenset((u, v) for u in range(n_base) for v in range(n_base) if u != v),
        )

    def is_bidirected(self) -> bool:
        return all((v, u) in self.arcs for u, v in self.arcs)

    def arc_matrix(self) -> np.ndarray:
        m = np.zeros((self.n_base, self.n_base), bool)
        for u, v in self.arcs:
            m[u, v] = True
        return m


@dataclass
class LccInstance:
    """A directed base graph, a label count, and the function f stored as one
    n x n matrix per label subset (absent subsets are identically zero)."""

    base: ArcSet
    label_count: int
    f_mats: dict  # subset bitmask (nonzero) -> (n, n) uint64 matrix
    ctx: FieldContext

    def __post_init__(self):
        if not 0 <= self.label_count <= MAX_LABELS:
            raise ValueError(f"label count {self.label_count} outside 0..{MAX_LABELS}")
        n = self.base.n_base
        arc_ok = self.base.arc_matrix()
        clean = {}
        for mask, mat in self.f_mats.items():
            if not 1 <= mask < (1 << self.label_count):
                raise ValueError(f"label subset mask {mask} out of range")
            mat = np.asarray(mat, np.uint64)
            if mat.shape != (n, n):
                raise ValueError(f"matrix for subset {mask} has shape {mat.shape}")
            if mat[~arc_ok].any():
                raise ValueError(f"subset {mask} has a value on a missing arc")
            if mat.any():
                clean[mask] = mat
        self.f_mats = clean

    def f(self, u: int, v: int, mask: int) -> FieldElement:
        mat = self.f_mats.get(mask)
        return int(mat[u, v]) if mat is not None else 0

    def max_support_size(self) -> int:
        return max((m.bit_count() for m in self.f_mats), default=0)

    def base_stack(self) -> np.ndarray:
        """(2^L, n, n) array with M(Z) at index Z."""
        n = self.base.n_base
        stack = np.zeros((1 << self.label_count, n, n), np.uint64)
        for mask in sorted(self.f_mats):
            stack[mask] = self.f_mats[mask]
        return stack


def build_mf(inst: LccInstance, subset_mask: int) -> np.ndarray:
    """The matrix M(Z) for one nonempty label subset."""
    if subset_mask == 0:
        raise ValueError("label subset must be nonempty")
    if not subset_mask < (1 << inst.label_count):
        raise ValueError(f"subset mask {subset_mask} out of range")
    mat = inst.f_mats.get(subset_mask)
    n = inst.base.n_base
    return mat.copy() if mat is not None else np.zeros((n, n), np.uint64)


def _check_field(inst: LccInstance, extra_points: int = 0) -> None:
    need = inst.label_count * inst.base.n_base
    if (1 << inst.ctx.k) <= need:
        raise FieldTooSmallError(
            f"need 2^k > labels*n = {need}, have k = {inst.ctx.k}"
        )
    if extra_points > inst.ctx.order:
        raise FieldTooSmallError(
            f"need {extra_points} distinct points, field has {inst.ctx.order} nonzero"
        )


_POPCOUNT_CACHE: dict[int, np.ndarray] = {}


def _popcounts(size: int) -> np.ndarray:
    cached = _POPCOUNT_CACHE.get(size)
    if cached is None:
        cached = np.bitwise_count(np.arange(size, dtype=np.uint64)).astype(np.int64)
        _POPCOUNT_CACHE[size] = cached
    return cached


def eval_p_at(inst: LccInstance, r: FieldElement) -> FieldElement:
    """The determinant sum p at a single scalar r."""
    _check_field(inst)
    stack = inst.base_stack()
    values = kernels.eval_points_table(
        stack,
        _popcounts(stack.shape[0]),
        np.array([r], np.uint64),
        inst.label_count,
        *inst.ctx.kernel_params(),
    )
    return int(values[0])


def interpolation_points(inst: LccInstance) -> np.ndarray:
    """Generator-power ladder g^0, g^1, ... long enough to pin down p exactly.

    Every entry of the transformed matrices has degree at most the largest
    label-subset size in f's support, so p has degree at most n_base times
    that; degree+1 samples make the interpolation exact.
    """
    ctx = inst.ctx
    degree = inst.base.n_base * inst.max_support_size()
    npts = degree + 1
    pts = np.empty(npts, np.uint64)
    val = 1
    for i in range(npts):
        pts[i] = val
        val = ctx.mul(val, ctx.generator)
    return pts


def lcc_sum(inst: LccInstance) -> FieldElement:
    """The labeled cycle cover sum of the instance, exactly."""
    _check_field(inst)
    degree = inst.base.n_base * inst.max_support_size()
    if degree < inst.label_count:
        return 0  # no term can reach the full label count
    pts = interpolation_points(inst)
    _check_field(inst, extra_points=len(pts))
    stack = inst.base_stack()
    values = kernels.eval_points_table(
        stack,
        _popcounts(stack.shape[0]),
        pts,
        inst.label_count,
        *inst.ctx.kernel_params(),
    )
    table = EvaluationTable(tuple(int(p) for p in pts), tuple(int(v) for v in values))
    return lagrange_coefficient(inst.ctx, table, inst.label_count)


def _cycle_covers(base: ArcSet):
    """All cycle covers as arc lists, via permutations without fixed points."""
    n = base.n_base
    arcs = base.arcs
    for perm in itertools.permutations(range(n)):
        if any(perm[v] == v for v in range(n)):
            continue
        if all((v, perm[v]) in arcs for v in range(n)):
            yield [(v, perm[v]) for v in range(n)]


def lcc_sum_bruteforce(inst: LccInstance) -> FieldElement:
    """Definitional evaluation: enumerate cycle covers and all surjective
    label placements.  Factorial time; guarded to tiny instances."""
    n = inst.base.n_base
    L = inst.label_count
    if n > 6 or L > 6:
        raise ValueError("brute force restricted to n_base <= 6 and labels <= 6")
    ctx = inst.ctx
    total = 0
    for cover in _cycle_covers(inst.base):
        narcs = len(cover)
        for placing in itertools.product(range(narcs), repeat=L):
            masks = [0] * narcs
            for lab, arc_i in enumerate(placing):
                masks[arc_i] |= 1 << lab
            if any(m == 0 for m in masks):
                continue  # not surjective: some arc got no label
            prod = 1
            for (u, v), mask in zip(cover, masks):
                prod = ctx.mul(prod, inst.f(u, v, mask))
                if prod == 0:
                    break
            total ^= prod
    return total

"""Random evaluation points for the edge polynomials.

Each edge uv owns one value x[u][v] queried by ordered pair; querying the
reverse pair returns the same value unless one endpoint is the special vertex
s, in which case both directions get independent values.  That one-vertex
asymmetry keeps the two orientations of a Hamiltonian cycle from canceling
each other, while every other reversal cancels in characteristic two.

A second family x[u][v][d] plays the same game for the extra labels carried
by edges whose endpoints both avoid the label half of the partition.

Values are drawn in a fixed canonical order (sorted edges, then label index)
from a counter-keyed stream, so the same (seed, run) always yields the same
point regardless of backend, engine, or thread count.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gf2k import FieldContext
from .graphs import Graph


def run_rng(seed: int, run_index: int) -> np.random.Generator:
    """Independent, reproducible stream for one run of a seeded experiment."""
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, run_index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


@dataclass
class VariableAssignment:
    """Field values for edge variables, mirror-identified except at s."""

    ctx: FieldContext
    n: int
    s: int
    edge_values: dict = field(default_factory=dict)   # (u, v) -> value
    label_values: dict = field(default_factory=dict)  # (u, v, d) -> value

    def set_edge(self, u: int, v: int, value: int, reverse: int | None = None) -> None:
        self.edge_values[(u, v)] = value
        if self.s in (u, v):
            if reverse is None:
                raise ValueError("edges at s need both direction values")
            self.edge_values[(v, u)] = reverse
        else:
            self.edge_values[(v, u)] = value

    def set_label_edge(self, u: int, v: int, d: int, value: int,
                       reverse: int | None = None) -> None:
        self.label_values[(u, v, d)] = value
        if self.s in (u, v):
            if reverse is None:
                raise ValueError("edges at s need both direction values")
            self.label_values[(v, u, d)] = reverse
        else:
            self.label_values[(v, u, d)] = value

    def x(self, u: int, v: int) -> int:
        return self.edge_values.get((u, v), 0)

    def xd(self, u: int, v: int, d: int) -> int:
        return self.label_values.get((u, v, d), 0)

    def edge_matrix(self) -> np.ndarray:
        """xmat[u, v] = x(u, v); zero where no value was drawn."""
        m = np.zeros((self.n, self.n), np.uint64)
        for (u, v), val in self.edge_values.items():
            m[u, v] = val
        return m

    def scaled(self, factors: np.ndarray) -> "VariableAssignment":
        """Copy with every directed value (u, v) multiplied by factors[u, v];
        label values for (u, v, d) are scaled by the same factor."""
        out = VariableAssignment(self.ctx, self.n, self.s)
        for (u, v), val in self.edge_values.items():
            out.edge_values[(u, v)] = self.ctx.mul(val, int(factors[u, v]))
        for (u, v, d), val in self.label_values.items():
            out.label_values[(u, v, d)] = self.ctx.mul(val, int(factors[u, v]))
        return out


def draw_assignment(
    ctx: FieldContext,
    g: Graph,
    s: int,
    rng: np.random.Generator,
    edge_subset: list[tuple[int, int]] | None = None,
    label_edges: list[tuple[int, int]] | None = None,
    label_count: int = 0,
) -> VariableAssignment:
    """Uniform values over GF(2^k) for the given edges, in canonical order.

    edge_subset defaults to every edge of g; label_edges get one extra value
    per label index d in 0..label_count-1.
    """
    point = VariableAssignment(ctx, g.n, s)
    size = 1 << ctx.k
    edges = sorted(edge_subset if edge_subset is not None else g.sorted_edges())
    at_s = [e for e in edges if s in e]
    vals = rng.integers(0, size, size=len(edges), dtype=np.uint64)
    revs = rng.integers(0, size, size=len(at_s), dtype=np.uint64)
    rev_iter = iter(revs)
    for (u, v), val in zip(edges, vals):
        rev = int(next(rev_iter)) if s in (u, v) else None
        point.set_edge(u, v, int(val), rev)
    lab = sorted(label_edges or [])
    lab_at_s = [e for e in lab if s in e]
    for d in range(label_count):
        vals = rng.integers(0, size, size=len(lab), dtype=np.uint64)
        revs = rng.integers(0, size, size=len(lab_at_s), dtype=np.uint64)
        rev_iter = iter(revs)
        for (u, v), val in zip(lab, vals):
            rev = int(next(rev_iter)) if s in (u, v) else None
            point.set_label_edge(u, v, d, int(val), rev)
    return point

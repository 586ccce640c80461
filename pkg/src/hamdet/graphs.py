"""Simple undirected graphs on vertices 0..n-1, weighted variants, edge-list
parsing, and the generator families used by the benchmark harness.

Edge-list format (text): a header line ``n m`` followed by m lines ``u v`` or
``u v weight`` (0-indexed, consistent arity throughout).  Self-loops and
duplicate edges are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Iterable, Union

import numpy as np

from .errors import GraphFormatError, NonBipartiteError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges stored as sorted (u, v) pairs, u < v."""

    n: int
    edges: frozenset

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in edge ({u}, {v})")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise GraphFormatError(f"duplicate edge {e}")
            norm.add(e)
        return Graph(n, frozenset(norm))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency_bitmasks(self) -> np.ndarray:
        """nbr[v] has bit u set iff uv is an edge (n <= 63)."""
        nbr = np.zeros(self.n, np.int64)
        for u, v in self.edges:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        return nbr

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def bipartition(self) -> tuple[list[int], list[int]]:
        """2-coloring by BFS; raises NonBipartiteError on an odd cycle.
        Isolated vertices are assigned to the smaller side."""
        color = [-1] * self.n
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        pending = []
        for start in range(self.n):
            if color[start] >= 0:
                continue
            if not nbrs[start]:
                pending.append(start)
                continue
            color[start] = 0
            queue = [start]
            while queue:
                u = queue.pop()
                for w in nbrs[u]:
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        raise NonBipartiteError("graph contains an odd cycle")
        part = [[v for v in range(self.n) if color[v] == c] for c in (0, 1)]
        for v in pending:
            part[0 if len(part[0]) <= len(part[1]) else 1].append(v)
        return sorted(part[0]), sorted(part[1])

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return not any(u in vs and v in vs for u, v in self.edges)


@dataclass(frozen=True)
class WeightedGraph:
    """Graph with positive integer edge weights."""

    graph: Graph
    weights: dict = field(compare=False)

    def __post_init__(self):
        for e, w in self.weights.items():
            if e not in self.graph.edges:
                raise GraphFormatError(f"weight given for missing edge {e}")
            if w < 1:
                raise GraphFormatError(f"weight of edge {e} must be >= 1, got {w}")
        if set(self.weights) != set(self.graph.edges):
            raise GraphFormatError("every edge needs a weight")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())

    def weight(self, u: int, v: int) -> int:
        return self.weights[(min(u, v), max(u, v))]

    def weight_matrix(self, inf: int) -> np.ndarray:
        w = np.full((self.n, self.n), inf, np.int64)
        for (u, v), wt in self.weights.items():
            w[u, v] = w[v, u] = wt
        return w


def parse_graph(stream: Union[IO, str]) -> Union[Graph, WeightedGraph]:
    """Parse the edge-list format; returns WeightedGraph iff weights appear."""
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream.read().splitlines()
    rows = [ln.split("#", 1)[0].strip() for ln in lines]
    rows = [r for r in rows if r]
    if not rows:
        raise GraphFormatError("empty input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"header must be two integers, got {rows[0]!r}")
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be nonnegative")
    if len(rows) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    weights = {}
    weighted = None
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise GraphFormatError(f"malformed edge line {ln!r}")
        if weighted is None:
            weighted = len(parts) == 3
        elif weighted != (len(parts) == 3):
            raise GraphFormatError("mix of weighted and unweighted edge lines")
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"malformed edge line {ln!r}")
        u, v = vals[0], vals[1]
        edges.append((u, v))
        if weighted:
            weights[(min(u, v), max(u, v))] = vals[2]
    g = Graph.from_edges(n, edges)
    if weighted:
        return WeightedGraph(g, weights)
    return g


def format_graph(g: Union[Graph, WeightedGraph]) -> str:
    """Inverse of parse_graph."""
    if isinstance(g, WeightedGraph):
        lines = [f"{g.n} {len(g.graph.edges)}"]
        lines += [f"{u} {v} {g.weights[(u, v)]}" for u, v in g.graph.sorted_edges()]
    else:
        lines = [f"{g.n} {len(g.edges)}"]
        lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- generator families -------------------------------------------------------


def gnp_random(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p)."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def planted_hamiltonian(n: int, extra_p: float, rng: np.random.Generator) -> Graph:
    """Random Hamiltonian cycle plus G(n, extra_p) noise edges."""
    order = rng.permutation(n)
    edges = {
        (min(int(order[i]), int(order[(i + 1) % n])),
         max(int(order[i]), int(order[(i + 1) % n])))
        for i in range(n)
    }
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def random_bipartite(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Balanced bipartite G(n/2, n/2, p); parts are the low and high halves."""
    if n % 2:
        raise ValueError("balanced bipartite graph needs even n")
    h = n // 2
    edges = [
        (u, v) for u in range(h) for v in range(h, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def planted_bipartite(n: int, extra_p: float, rng: np.random.Generator) -> Graph:
    """Balanced bipartite graph containing a Hamiltonian cycle plus noise."""
    if n % 2:
        raise ValueError("balanced bipartite graph needs even n")
    h = n // 2
    lo = rng.permutation(h)
    hi = rng.permutation(h) + h
    edges = set()
    for i in range(h):
        edges.add((int(lo[i]), int(hi[i])))
        edges.add((int(lo[(i + 1) % h]), int(hi[i])))
    for u in range(h):
        for v in range(h, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def hypercube(dim: int) -> Graph:
    """dim-dimensional hypercube graph on 2^dim vertices."""
    n = 1 << dim
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(dim) if u < u ^ (1 << b)]
    return Graph.from_edges(n, edges)

"""Ground-truth engines for testing the randomized detectors.

Everything here is exact and slow on purpose: permutation/DFS enumeration of
Hamiltonian cycles, the classic bitmask tour DP, alternating-sign walk
counting on induced subgraphs with arbitrary-precision integers, and a tiny
symbolic evaluator for the labeled cycle cover sum over GF(2)-coefficient
polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graphs import Graph, WeightedGraph
from .lcc import ArcSet

_HK_INF = 1 << 40


def ham_bruteforce(g: Graph) -> tuple[bool, int]:
    """(is_hamiltonian, number of oriented Hamiltonian cycles).

    Enumerates the vertex orders fixing vertex 0 (pruned as a DFS over
    partial paths, which visits exactly the orders whose prefixes are paths);
    the oriented count is twice the undirected count.
    """
    if g.n > 11:
        raise ValueError("brute force limited to n <= 11")
    if g.n < 3:
        return False, 0
    count = int(kernels.ham_count(g.adjacency_bitmasks()))
    return count > 0, count


def hamiltonian_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All undirected Hamiltonian cycles as vertex orders starting at 0,
    one orientation each (second vertex smaller than the last)."""
    if g.n > 11:
        raise ValueError("enumeration limited to n <= 11")
    n = g.n
    if n < 3:
        return []
    nbr = [set() for _ in range(n)]
    for u, v in g.edges:
        nbr[u].add(v)
        nbr[v].add(u)
    out = []

    def extend(path, seen):
        v = path[-1]
        if len(path) == n:
            if 0 in nbr[v] and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in sorted(nbr[v]):
            if w not in seen:
                path.append(w)
                seen.add(w)
                extend(path, seen)
                seen.remove(w)
                path.pop()

    extend([0], {0})
    return out


def held_karp(wg: WeightedGraph) -> int | None:
    """Exact minimum tour weight by subset DP; None when no tour exists."""
    if wg.n > 20:
        raise ValueError("tour DP limited to n <= 20")
    best = int(kernels.held_karp(wg.weight_matrix(_HK_INF), _HK_INF))
    return None if best < 0 else best


def is_hamiltonian(g: Graph) -> bool:
    """Tour DP on unit weights: Hamiltonian iff a weight-n tour exists."""
    weights = {e: 1 for e in g.edges}
    if not weights:
        return False
    return held_karp(WeightedGraph(g, weights)) == g.n


def ie_walk_count(g: Graph, s: int = 0) -> int:
    """Alternating inclusion-exclusion sum of closed n-walk counts through s
    over the induced subgraphs containing s.  Walks that miss a vertex cancel
    between sign classes, leaving the number of directed Hamiltonian cycles
    (exact integers; counts grow like n^n)."""
    if g.n > 16:
        raise ValueError("walk counting limited to n <= 16")
    n = g.n
    if n < 3:
        return 0
    nbr = [[] for _ in range(n)]
    for u, v in g.edges:
        nbr[u].append(v)
        nbr[v].append(u)
    others = [v for v in range(n) if v != s]
    total = 0
    for mask in range(1 << (n - 1)):
        verts = [s] + [others[i] for i in range(n - 1) if mask & (1 << i)]
        missing = n - len(verts)
        total += (-1) ** missing * _closed_walks(nbr, verts, s, n)
    return total


def _closed_walks(nbr, verts, s: int, length: int) -> int:
    """(A[verts]^length)_{s,s} with exact integers, by iterated row updates."""
    idx = {v: i for i, v in enumerate(verts)}
    adj = [[0] * len(verts) for _ in verts]
    for v in verts:
        for w in nbr[v]:
            if w in idx:
                adj[idx[v]][idx[w]] = 1
    row = [0] * len(verts)
    row[idx[s]] = 1
    for _ in range(length):
        row = [
            sum(row[i] for i in range(len(verts)) if adj[i][j])
            for j in range(len(verts))
        ]
    return row[idx[s]]


# -- symbolic evaluation ------------------------------------------------------


class SymbolicPolynomial:
    """Multivariate polynomial with GF(2) coefficients: a set of monomials,
    each a sorted tuple of variable names (with multiplicity).  Addition is
    symmetric difference; zero-coefficient monomials vanish on their own."""

    __slots__ = ("monomials",)

    def __init__(self, monomials=()):
        self.monomials = frozenset(monomials)

    @staticmethod
    def zero() -> "SymbolicPolynomial":
        return SymbolicPolynomial()

    @staticmethod
    def one() -> "SymbolicPolynomial":
        return SymbolicPolynomial({()})

    @staticmethod
    def var(name) -> "SymbolicPolynomial":
        return SymbolicPolynomial({(name,)})

    def __add__(self, other):
        return SymbolicPolynomial(self.monomials ^ other.monomials)

    def __mul__(self, other):
        acc = set()
        for a in self.monomials:
            for b in other.monomials:
                m = tuple(sorted(a + b))
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
        return SymbolicPolynomial(acc)

    def is_zero(self) -> bool:
        return not self.monomials

    def __eq__(self, other):
        return isinstance(other, SymbolicPolynomial) and self.monomials == other.monomials

    def __hash__(self):
        return hash(self.monomials)

    def __repr__(self):
        if not self.monomials:
            return "0"
        terms = sorted("*".join(map(str, m)) if m else "1" for m in self.monomials)
        return " + ".join(terms)


@dataclass
class SymbolicLcc:
    """Cycle cover sum instance whose f values are symbolic polynomials;
    f maps (u, v, label subset mask) to a SymbolicPolynomial, default zero."""

    base: ArcSet
    label_count: int
    f: dict


def symbolic_lambda(inst: SymbolicLcc) -> SymbolicPolynomial:
    """Definitional labeled cycle cover sum carried out symbolically."""
    if inst.base.n_base > 4 or inst.label_count > 4:
        raise ValueError("symbolic evaluation limited to n_base <= 4, labels <= 4")
    zero = SymbolicPolynomial.zero()
    total = SymbolicPolynomial.zero()
    n = inst.base.n_base
    arcs = inst.base.arcs
    for perm in itertools.permutations(range(n)):
        if any(perm[v] == v for v in range(n)):
            continue
        if not all((v, perm[v]) in arcs for v in range(n)):
            continue
        cover = [(v, perm[v]) for v in range(n)]
        for placing in itertools.product(range(len(cover)), repeat=inst.label_count):
            masks = [0] * len(cover)
            for lab, arc_i in enumerate(placing):
                masks[arc_i] |= 1 << lab
            if any(mk == 0 for mk in masks):
                continue
            prod = SymbolicPolynomial.one()
            for (u, v), mk in zip(cover, masks):
                fv = inst.f.get((u, v, mk), zero)
                if fv.is_zero():
                    prod = zero
                    break
                prod = prod * fv
            total = total + prod
    return total


def mirror_var(s: int, u: int, v: int):
    """Canonical symbolic name for the edge value x(u, v): one shared name
    per undirected edge except at s, where each direction is its own."""
    if s in (u, v):
        return ("xs", u, v)
    return ("x", min(u, v), max(u, v))

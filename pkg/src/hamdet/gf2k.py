"""Arithmetic in the binary fields GF(2^k), 1 <= k <= 32.

Field elements are plain Python ints (k-bit values) whose binary digits are
the coefficients of a polynomial over GF(2); arithmetic is done modulo a fixed
irreducible polynomial of degree k.  Addition is xor, so every element is its
own additive inverse.  No wrapper object is used for single elements; bulk
operations act on numpy uint64 arrays through the kernel backends.

One reduction polynomial is hard-coded per degree (the numerically smallest
irreducible with nonzero constant term) together with the smallest generator
of the multiplicative group, so results are reproducible across builds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from . import kernels

# FieldElement: a k-bit int.  Zero and one are literally 0 and 1.
FieldElement = int

MAX_K = 32

# Smallest irreducible polynomial of degree k over GF(2) with nonzero
# constant term, encoded as a (k+1)-bit mask (x^4+x+1 -> 0x13).
_REDUCTION_POLY = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
    17: 0x20009,
    18: 0x40009,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001B,
    25: 0x2000009,
    26: 0x400001B,
    27: 0x8000027,
    28: 0x10000003,
    29: 0x20000005,
    30: 0x40000003,
    31: 0x80000009,
    32: 0x10000008D,
}

# Smallest element of multiplicative order 2^k - 1 for the polynomial above.
_GENERATOR = {
    1: 0x1,
    2: 0x2,
    3: 0x2,
    4: 0x2,
    5: 0x2,
    6: 0x2,
    7: 0x2,
    8: 0x3,
    9: 0x7,
    10: 0x2,
    11: 0x2,
    12: 0x3,
    13: 0x2,
    14: 0x7,
    15: 0x2,
    16: 0x3,
    17: 0x2,
    18: 0xA,
    19: 0x2,
    20: 0x2,
    21: 0x2,
    22: 0x2,
    23: 0x2,
    24: 0x2,
    25: 0x2,
    26: 0x3,
    27: 0x2,
    28: 0x7,
    29: 0x2,
    30: 0x13,
    31: 0x2,
    32: 0x3,
}

# Log/antilog tables are kept only up to this bit width (table size 2^k).
_TABLE_MAX_K = 16


def _clmul(a: int, b: int) -> int:
    """Carryless (GF(2)[x]) product of two ints."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
    return r


def _pmod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldContext:
    """Immutable description of GF(2^k): bit width, reduction polynomial,
    multiplicative generator, and (for k <= 16) log/antilog tables.

    All operations are pure functions of their arguments; a context can be
    shared freely between threads.
    """

    k: int
    reduction_poly: int
    generator: int
    log_table: np.ndarray = field(repr=False, compare=False)
    alog_table: np.ndarray = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        """Number of nonzero elements, 2^k - 1."""
        return (1 << self.k) - 1

    @property
    def use_table(self) -> bool:
        return self.log_table.size > 0

    def kernel_params(self) -> tuple:
        """Field parameters in the form every kernel expects."""
        return (
            self.k,
            np.uint64(self.reduction_poly),
            self.log_table,
            self.alog_table,
            self.use_table,
        )

    # -- scalar operations ------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """a + b (xor; characteristic two)."""
        return a ^ b

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """Product modulo the reduction polynomial."""
        if a == 0 or b == 0:
            return 0
        if self.use_table:
            lg = self._log_list
            return self._alog_list[lg[a] + lg[b]]
        return _pmod(_clmul(a, b), self.reduction_poly)

    def inv(self, a: FieldElement) -> FieldElement:
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^k)")
        if self.use_table:
            return self._alog_list[self.order - self._log_list[a]]
        return self.pow(a, self.order - 1)

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        """a^e by square-and-multiply; negative e goes through inv."""
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        base = a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    # -- bulk operations on uint64 arrays ---------------------------------

    def mul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of two broadcastable uint64 arrays."""
        a, b = np.broadcast_arrays(np.asarray(a, np.uint64), np.asarray(b, np.uint64))
        shape = a.shape
        out = kernels.mul_arrays(
            np.ascontiguousarray(a).ravel(),
            np.ascontiguousarray(b).ravel(),
            *self.kernel_params(),
        )
        return out.reshape(shape)

    def pow_array(self, a: FieldElement, exps: np.ndarray) -> np.ndarray:
        """a^e for each exponent e >= 0 in exps."""
        return np.array([self.pow(a, int(e)) for e in exps], dtype=np.uint64)

    # -- internals ---------------------------------------------------------

    @property
    def _log_list(self) -> list[int]:
        return self._scalar_tables()[0]

    @property
    def _alog_list(self) -> list[int]:
        return self._scalar_tables()[1]

    def _scalar_tables(self) -> Tuple[list, list]:
        # plain-int copies of the tables; cached on first use
        cached = _SCALAR_TABLE_CACHE.get(self.k)
        if cached is None:
            cached = (self.log_table.tolist(), self.alog_table.tolist())
            _SCALAR_TABLE_CACHE[self.k] = cached
        return cached


_SCALAR_TABLE_CACHE: dict[int, Tuple[list, list]] = {}
_CONTEXT_CACHE: dict[int, FieldContext] = {}


def _build_tables(k: int, poly: int, g: int) -> Tuple[np.ndarray, np.ndarray]:
    order = (1 << k) - 1
    log = np.zeros(1 << k, dtype=np.int64)
    alog = np.zeros(2 * order + 2, dtype=np.uint64)
    val = 1
    for i in range(order):
        alog[i] = val
        log[val] = i
        val = _pmod(_clmul(val, g), poly)
    alog[order : 2 * order] = alog[:order]
    return log, alog


def get_field(k: int) -> FieldContext:
    """Shared context for GF(2^k); contexts are cached per k."""
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in 1..{MAX_K}, got {k}")
    ctx = _CONTEXT_CACHE.get(k)
    if ctx is None:
        poly = _REDUCTION_POLY[k]
        g = _GENERATOR[k]
        if k <= _TABLE_MAX_K:
            log, alog = _build_tables(k, poly, g)
        else:
            log = np.empty(0, dtype=np.int64)
            alog = np.empty(0, dtype=np.uint64)
        ctx = FieldContext(k, poly, g, log, alog)
        _CONTEXT_CACHE[k] = ctx
    return ctx


def find_generator(ctx: FieldContext) -> FieldElement:
    """Smallest element of multiplicative order 2^k - 1, found by checking
    candidates against the prime factorization of the group order."""
    order = ctx.order
    if order == 1:
        return 1
    factors = _prime_factors(order)
    for cand in range(2, 1 << ctx.k):
        if all(ctx.pow(cand, order // q) != 1 for q in factors):
            return cand
    raise AssertionError("multiplicative group of a finite field is cyclic")


def element_order(ctx: FieldContext, a: FieldElement) -> int:
    """Multiplicative order of a nonzero element."""
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    order = ctx.order
    result = order
    for q in _prime_factors(order):
        while result % q == 0 and ctx.pow(a, result // q) == 1:
            result //= q
    return result

"""Backend selection for the hot numeric kernels.

Every heavy inner loop (batched determinants, subset-lattice zeta transform,
path-polynomial tabulation, streaming walk sums, oracles) has two
interchangeable implementations:

* ``numba_backend`` - @njit compiled loops (the default when numba imports),
* ``numpy_backend``  - a pure-numpy fallback with identical semantics.

The active backend is chosen once at import time from the ``HAMDET_BACKEND``
environment variable ("numba" or "numpy"); without it, numba is used when
available.  Both backends are exact integer code paths and produce
bit-identical outputs; ``hamdet.bench`` compares their speed.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np

from . import numpy_backend

_BACKENDS = {"numpy": numpy_backend}
_default = "numpy"
try:
    from . import numba_backend

    _BACKENDS["numba"] = numba_backend
    _default = "numba"
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_backend = None

_env = os.environ.get("HAMDET_BACKEND", "").strip().lower()
if _env:
    if _env not in _BACKENDS:
        raise ImportError(
            f"HAMDET_BACKEND={_env!r} not available; choices: {sorted(_BACKENDS)}"
        )
    _active = _env
else:
    _active = _default


def active_name() -> str:
    """Name of the backend currently in use."""
    return _active


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def get_backend(name: str | None = None):
    """Backend module by name (default: the active one)."""
    return _BACKENDS[name if name is not None else _active]


@contextmanager
def use_backend(name: str):
    """Temporarily switch the active backend (not thread-safe; intended for
    tests and the backend benchmark)."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choices: {sorted(_BACKENDS)}")
    prev = _active
    _active = name
    try:
        yield _BACKENDS[name]
    finally:
        _active = prev


# -- delegating wrappers ----------------------------------------------------


def mul_arrays(a, b, k, poly, log, alog, use_table):
    """Elementwise GF(2^k) product of two equal-length uint64 vectors."""
    return _BACKENDS[_active].mul_arrays(a, b, k, poly, log, alog, use_table)


def mat_mul(a, b, k, poly, log, alog, use_table):
    """Matrix product over GF(2^k); a is (r, m), b is (m, c)."""
    return _BACKENDS[_active].mat_mul(a, b, k, poly, log, alog, use_table)


def det_batch(stack, k, poly, log, alog, use_table):
    """Determinants of a (B, n, n) stack of matrices over GF(2^k)."""
    return _BACKENDS[_active].det_batch(stack, k, poly, log, alog, use_table)


def zeta_in_place(stack, nlabels):
    """In-place subset-sum (zeta) transform over the first axis: after the
    call, stack[Y] = xor of the original stack[Z] over all Z subseteq Y."""
    return _BACKENDS[_active].zeta_in_place(stack, nlabels)


# budget (in uint64 elements) for splitting the stack into per-popcount
# classes, so the zeta transform runs once instead of once per point
CLASS_ELEMENT_LIMIT = 4_000_000


def eval_points_table(base, popcnt, rpoints, nlabels, k, poly, log, alog, use_table,
                      class_limit=None):
    """For each point r: scale base[Z] by r^popcnt[Z], zeta-transform, take
    all determinants and xor them.  Returns one field value per point.
    When the per-size-class split fits in class_limit uint64 elements, the
    zeta transform is hoisted out of the point loop (same results)."""
    limit = CLASS_ELEMENT_LIMIT if class_limit is None else class_limit
    return _BACKENDS[_active].eval_points_table(
        base, popcnt, rpoints, nlabels, k, poly, log, alog, use_table, limit
    )


def pathpoly_table(xmat, v2, v1, k, poly, log, alog, use_table):
    """Subset DP over v2: table[X, u, j] sums, over simple paths from u to
    v1[j] whose interior is exactly the subset X of v2, the product of the
    edge values in xmat."""
    return _BACKENDS[_active].pathpoly_table(xmat, v2, v1, k, poly, log, alog, use_table)


def eval_points_stream(xmat, xd, v1, v2, cap, rpoints, k, poly, log, alog, use_table):
    """Streaming evaluation over all label subsets: per point r, xor of
    determinants of walk-sum matrices built on the fly (no 2^L table)."""
    return _BACKENDS[_active].eval_points_stream(
        xmat, xd, v1, v2, cap, rpoints, k, poly, log, alog, use_table
    )


def ham_count(nbr):
    """Number of directed Hamiltonian cycles (sequences starting at vertex 0)
    for an adjacency-bitmask array."""
    return _BACKENDS[_active].ham_count(nbr)


def held_karp(wmat, inf):
    """Minimum Hamiltonian tour weight by bitmask DP; -1 when no tour.
    wmat[i, j] = edge weight or inf."""
    return _BACKENDS[_active].held_karp(wmat, inf)


def inverse_transform(values, g, k, poly, log, alog, use_table):
    """out[j] = xor over l of g^(-j*l) * values[l], for l, j in 0..2^k-2."""
    return _BACKENDS[_active].inverse_transform(values, g, k, poly, log, alog, use_table)


def warmup() -> None:
    """Run every kernel once on tiny inputs (forces JIT compilation so later
    timing is steady)."""
    k, poly = 4, np.uint64(0x13)
    log = np.zeros(16, np.int64)
    alog = np.zeros(32, np.uint64)
    val = 1
    for i in range(15):
        alog[i] = val
        log[val] = i
        val <<= 1
        if val & 0x10:
            val ^= 0x13
    alog[15:30] = alog[:15]
    params = (k, poly, log, alog, True)
    a = np.array([3, 5, 9], np.uint64)
    mul_arrays(a, a, *params)
    m = np.array([[[1, 2], [3, 4]]], np.uint64)
    det_batch(m, *params)
    mat_mul(m[0], m[0], *params)
    stack = np.zeros((4, 2, 2), np.uint64)
    stack[1, 0, 1] = 2
    zeta_in_place(stack, 2)
    eval_points_table(stack, np.array([0, 1, 1, 2], np.int64), a, 2, *params, 4_000_000)
    eval_points_table(stack, np.array([0, 1, 1, 2], np.int64), a, 2, *params, 0)
    xmat = np.zeros((4, 4), np.uint64)
    xmat[0, 2] = xmat[2, 0] = 3
    xmat[1, 2] = xmat[2, 1] = 5
    v1 = np.array([0, 1], np.int64)
    v2 = np.array([2, 3], np.int64)
    pathpoly_table(xmat, v2, v1, *params)
    xd = np.zeros((1, 2, 2), np.uint64)
    eval_points_stream(xmat, xd, v1, v2, 4, a, *params)
    ham_count(np.array([6, 5, 3], np.int64))
    held_karp(np.array([[10**9, 1, 1], [1, 10**9, 1], [1, 1, 10**9]], np.int64), 10**9)
    inverse_transform(np.arange(15, dtype=np.uint64), np.uint64(2), *params)

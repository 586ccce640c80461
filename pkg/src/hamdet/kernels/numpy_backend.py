"""Pure-numpy fallback implementations of the hot kernels.

Semantically identical to the numba backend (bit-for-bit), vectorized where
numpy allows: the batched determinant eliminates whole stacks per pivot
column, the zeta transform xors strided slices, and multiplication is either
a table gather or a vectorized carryless product.  Subset enumerations that
resist vectorization fall back to Python loops; this backend trades speed
for having no compiled dependency.
"""

from __future__ import annotations

import numpy as np

_U1 = np.uint64(1)


def _mul_vec(a, b, k, poly, log, alog, use_table):
    """Elementwise product of broadcastable uint64 arrays."""
    a, b = np.broadcast_arrays(a, b)
    if use_table:
        out = np.zeros(a.shape, np.uint64)
        nz = (a != 0) & (b != 0)
        if nz.any():
            out[nz] = alog[log[a[nz]] + log[b[nz]]]
        return out
    res = np.zeros(a.shape, np.uint64)
    for i in range(k):
        bit = (b >> np.uint64(i)) & _U1
        res ^= (np.uint64(0) - bit) & (a << np.uint64(i))
    for i in range(2 * k - 2, k - 1, -1):
        bit = (res >> np.uint64(i)) & _U1
        res ^= (np.uint64(0) - bit) & np.uint64(int(poly) << (i - k))
    return res


def _inv_vec(a, k, poly, log, alog, use_table):
    """Elementwise inverse of an all-nonzero uint64 array."""
    if use_table:
        n = (1 << k) - 1
        return alog[n - log[a]].astype(np.uint64)
    out = np.ones(a.shape, np.uint64)
    base = a.copy()
    e = (1 << k) - 2
    while e:
        if e & 1:
            out = _mul_vec(out, base, k, poly, log, alog, use_table)
        base = _mul_vec(base, base, k, poly, log, alog, use_table)
        e >>= 1
    return out


def _mul_scalar(a, b, k, poly, log, alog, use_table):
    return int(
        _mul_vec(
            np.array([a], np.uint64), np.array([b], np.uint64),
            k, poly, log, alog, use_table,
        )[0]
    )


def mul_arrays(a, b, k, poly, log, alog, use_table):
    return _mul_vec(
        np.asarray(a, np.uint64), np.asarray(b, np.uint64),
        k, poly, log, alog, use_table,
    )


def mat_mul(a, b, k, poly, log, alog, use_table):
    a = np.asarray(a, np.uint64)
    b = np.asarray(b, np.uint64)
    prod = _mul_vec(
        np.broadcast_to(a[:, :, None], (a.shape[0], a.shape[1], b.shape[1])),
        np.broadcast_to(b[None, :, :], (a.shape[0], b.shape[0], b.shape[1])),
        k, poly, log, alog, use_table,
    )
    return np.bitwise_xor.reduce(prod, axis=1)


def det_batch(stack, k, poly, log, alog, use_table):
    work = np.array(stack, np.uint64, copy=True)
    nmat, n, _ = work.shape
    det = np.ones(nmat, np.uint64)
    alive = np.ones(nmat, bool)
    bidx = np.arange(nmat)
    for col in range(n):
        nz = work[:, col:, col] != 0
        has = nz.any(axis=1)
        det[alive & ~has] = 0
        alive &= has
        piv = np.argmax(nz, axis=1)  # offset of first nonzero below the diagonal
        swap = alive & (piv > 0)
        if swap.any():
            rows = piv[swap] + col
            sel = bidx[swap]
            tmp = work[sel, rows, :].copy()
            work[sel, rows, :] = work[sel, col, :]
            work[sel, col, :] = tmp
        pvals = work[:, col, col].copy()
        pvals[~alive] = 1  # keep the inverse defined for dead batches
        det[alive] = _mul_vec(det, pvals, k, poly, log, alog, use_table)[alive]
        if col + 1 < n:
            ipv = _inv_vec(pvals, k, poly, log, alog, use_table)
            f = _mul_vec(
                work[:, col + 1 :, col], ipv[:, None],
                k, poly, log, alog, use_table,
            )
            delta = _mul_vec(
                np.broadcast_to(
                    f[:, :, None], (nmat, n - col - 1, n - col)
                ),
                np.broadcast_to(
                    work[:, col, None, col:], (nmat, n - col - 1, n - col)
                ),
                k, poly, log, alog, use_table,
            )
            work[:, col + 1 :, col:] ^= delta
    return det


def zeta_in_place(stack, nlabels):
    size = stack.shape[0]
    idx = np.arange(size)
    for bit in range(nlabels):
        step = 1 << bit
        sel = (idx & step) != 0
        stack[sel] ^= stack[idx[sel] ^ step]


def _rpow_ladder(r, maxpop, k, poly, log, alog, use_table):
    rpow = np.empty(maxpop + 1, np.uint64)
    rpow[0] = 1
    for j in range(1, maxpop + 1):
        rpow[j] = _mul_scalar(int(rpow[j - 1]), int(r), k, poly, log, alog, use_table)
    return rpow


def eval_points_table(base, popcnt, rpoints, nlabels, k, poly, log, alog, use_table,
                      class_limit):
    size = base.shape[0]
    n = base.shape[1]
    npts = rpoints.shape[0]
    out = np.empty(npts, np.uint64)
    maxpop = int(popcnt.max()) if size else 0
    if 0 < maxpop * size * n * n <= class_limit:
        # subset sums commute with splitting by subset size: transform each
        # size class once, then each point only recombines with r powers
        classes = np.zeros((maxpop, size, n, n), np.uint64)
        nonzero = popcnt > 0
        classes[popcnt[nonzero] - 1, np.arange(size)[nonzero]] = base[nonzero]
        for cls in range(maxpop):
            zeta_in_place(classes[cls], nlabels)
        for p in range(npts):
            rpow = _rpow_ladder(rpoints[p], maxpop, k, poly, log, alog, use_table)
            work = np.zeros((size, n, n), np.uint64)
            for cls in range(maxpop):
                work ^= _mul_vec(
                    np.broadcast_to(rpow[cls + 1], classes[cls].shape),
                    classes[cls], k, poly, log, alog, use_table,
                )
            dets = det_batch(work, k, poly, log, alog, use_table)
            out[p] = np.bitwise_xor.reduce(dets)
        return out
    for p in range(npts):
        rpow = _rpow_ladder(rpoints[p], maxpop, k, poly, log, alog, use_table)
        factors = rpow[popcnt]
        work = _mul_vec(
            np.broadcast_to(factors[:, None, None], base.shape),
            base, k, poly, log, alog, use_table,
        )
        zeta_in_place(work, nlabels)
        dets = det_batch(work, k, poly, log, alog, use_table)
        out[p] = np.bitwise_xor.reduce(dets)
    return out


def pathpoly_table(xmat, v2, v1, k, poly, log, alog, use_table):
    n = xmat.shape[0]
    p2 = v2.shape[0]
    h = v1.shape[0]
    size = 1 << p2
    dp = np.zeros((size, n, h), np.uint64)
    dp[0] = xmat[:, v1]
    dp[0][v1, np.arange(h)] = 0
    for mask in range(1, size):
        acc = np.zeros((n, h), np.uint64)
        for wi in range(p2):
            if mask & (1 << wi):
                w = int(v2[wi])
                sub = mask ^ (1 << wi)
                acc ^= _mul_vec(
                    np.broadcast_to(xmat[:, w][:, None], (n, h)),
                    np.broadcast_to(dp[sub, w][None, :], (n, h)),
                    k, poly, log, alog, use_table,
                )
        for wi in range(p2):
            if mask & (1 << wi):
                acc[v2[wi]] = 0
        acc[v1, np.arange(h)] = 0
        dp[mask] = acc
    return dp


def eval_points_stream(xmat, xd, v1, v2, cap, rpoints, k, poly, log, alog, use_table):
    h = v1.shape[0]
    p2 = v2.shape[0]
    m = xd.shape[0]
    nlabels = p2 + m
    size = 1 << nlabels
    npts = rpoints.shape[0]
    params = (k, poly, log, alog, use_table)
    out = np.empty(npts, np.uint64)
    offdiag = ~np.eye(h, dtype=bool)
    for p in range(npts):
        r = int(rpoints[p])
        acc = np.uint64(0)
        for y in range(size):
            members = v2[[wi for wi in range(p2) if y & (1 << wi)]]
            inner = np.zeros((h, h), np.uint64)
            if members.size:
                amat = xmat[np.ix_(members, members)]
                bmat = xmat[np.ix_(v1, members)]
                cmat = xmat[np.ix_(members, v1)]  # closing edge directed into v1
                cur = bmat
                rl = r
                for step in range(1, cap + 1):
                    term = mat_mul(cur, cmat, *params)
                    term = _mul_vec(
                        np.broadcast_to(np.uint64(rl), term.shape), term, *params
                    )
                    inner ^= np.where(offdiag, term, np.uint64(0))
                    if step < cap:
                        cur = mat_mul(cur, amat, *params)
                        rl = _mul_scalar(rl, r, *params)
            for d in range(m):
                if y & (1 << (p2 + d)):
                    inner ^= _mul_vec(
                        np.broadcast_to(np.uint64(r), (h, h)), xd[d], *params
                    )
            acc ^= det_batch(inner[None, :, :], *params)[0]
        out[p] = acc
    return out


def ham_count(nbr):
    n = nbr.shape[0]
    if n < 3:
        return 0
    adj = [int(x) for x in nbr]
    count = 0

    def visit(v, visited, depth):
        nonlocal count
        if depth == n - 1:
            if adj[v] & 1:
                count += 1
            return
        cand = adj[v] & ~visited
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            visit(w, visited | (1 << w), depth + 1)

    visit(0, 1, 0)
    return count


def held_karp(wmat, inf):
    n = wmat.shape[0]
    if n < 3:
        return -1
    full = 1 << n
    dp = np.full((full, n), inf, np.int64)
    for t in range(1, n):
        if wmat[0, t] < inf:
            dp[1 | (1 << t), t] = wmat[0, t]
    for mask in range(1, full, 2):
        row = dp[mask]
        active = np.nonzero(row < inf)[0]
        for t in active:
            if not mask & (1 << t):
                continue
            cur = row[t]
            for u in range(1, n):
                if mask & (1 << u):
                    continue
                w = wmat[t, u]
                if w < inf:
                    nm = mask | (1 << u)
                    tot = cur + w
                    if tot < dp[nm, u]:
                        dp[nm, u] = tot
    closing = wmat[:, 0]
    last = dp[full - 1]
    ok = (last < inf) & (closing < inf)
    ok[0] = False
    if not ok.any():
        return -1
    return int((last[ok] + closing[ok]).min())


def inverse_transform(values, g, k, poly, log, alog, use_table):
    nvals = values.shape[0]
    values = np.asarray(values, np.uint64)
    out = np.empty(nvals, np.uint64)
    ginv = int(_inv_vec(np.array([g], np.uint64), k, poly, log, alog, use_table)[0])
    # geom[l] = ginv^l; row j of the transform multiplies by geom^j
    geom = np.empty(nvals, np.uint64)
    geom[0] = 1
    for l in range(1, nvals):
        geom[l] = _mul_scalar(int(geom[l - 1]), ginv, k, poly, log, alog, use_table)
    cur = np.ones(nvals, np.uint64)
    for j in range(nvals):
        out[j] = np.bitwise_xor.reduce(
            _mul_vec(cur, values, k, poly, log, alog, use_table)
        )
        cur = _mul_vec(cur, geom, k, poly, log, alog, use_table)
    return out

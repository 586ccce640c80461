"""numba @njit implementations of the hot kernels.

All field values travel as uint64.  Multiplication uses log/antilog tables
when they are supplied (k <= 16) and a carryless shift-xor product with
modular reduction otherwise.  Every kernel releases the GIL so run-level
thread pools get real parallelism.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U0 = np.uint64(0)
U1 = np.uint64(1)


@njit(inline="always", nogil=True)
def _mul(a, b, k, poly, log, alog, use_table):
    if a == U0 or b == U0:
        return U0
    if use_table:
        return alog[log[a] + log[b]]
    r = U0
    aa = a
    bb = b
    while bb != U0:
        if bb & U1 != U0:
            r ^= aa
        aa = aa << U1
        bb = bb >> U1
    i = 2 * k - 2
    while i >= k:
        if (r >> np.uint64(i)) & U1 != U0:
            r ^= poly << np.uint64(i - k)
        i -= 1
    return r


@njit(inline="always", nogil=True)
def _inv(a, k, poly, log, alog, use_table):
    if use_table:
        n = (1 << k) - 1
        return alog[n - log[a]]
    r = U1
    base = a
    e = (1 << k) - 2
    while e:
        if e & 1:
            r = _mul(r, base, k, poly, log, alog, use_table)
        base = _mul(base, base, k, poly, log, alog, use_table)
        e >>= 1
    return r


@njit(cache=True, nogil=True)
def mul_arrays(a, b, k, poly, log, alog, use_table):
    out = np.empty(a.shape[0], np.uint64)
    for i in range(a.shape[0]):
        out[i] = _mul(a[i], b[i], k, poly, log, alog, use_table)
    return out


@njit(cache=True, nogil=True)
def mat_mul(a, b, k, poly, log, alog, use_table):
    r = a.shape[0]
    m = a.shape[1]
    c = b.shape[1]
    out = np.zeros((r, c), np.uint64)
    for i in range(r):
        for t in range(m):
            av = a[i, t]
            if av != U0:
                for j in range(c):
                    bv = b[t, j]
                    if bv != U0:
                        out[i, j] ^= _mul(av, bv, k, poly, log, alog, use_table)
    return out


@njit(nogil=True)
def _det_in_place(w, k, poly, log, alog, use_table):
    # Gaussian elimination, pivot = first nonzero entry in the column.
    # Destroys w; returns the determinant (0 when singular).
    n = w.shape[0]
    det = U1
    for col in range(n):
        piv = -1
        for row in range(col, n):
            if w[row, col] != U0:
                piv = row
                break
        if piv < 0:
            return U0
        if piv != col:
            for j in range(col, n):
                tmp = w[col, j]
                w[col, j] = w[piv, j]
                w[piv, j] = tmp
        pval = w[col, col]
        det = _mul(det, pval, k, poly, log, alog, use_table)
        ipv = _inv(pval, k, poly, log, alog, use_table)
        for row in range(col + 1, n):
            f = w[row, col]
            if f != U0:
                f = _mul(f, ipv, k, poly, log, alog, use_table)
                w[row, col] = U0
                for j in range(col + 1, n):
                    v = w[col, j]
                    if v != U0:
                        w[row, j] ^= _mul(f, v, k, poly, log, alog, use_table)
    return det


@njit(cache=True, nogil=True)
def det_batch(stack, k, poly, log, alog, use_table):
    nmat = stack.shape[0]
    n = stack.shape[1]
    out = np.empty(nmat, np.uint64)
    work = np.empty((n, n), np.uint64)
    for b in range(nmat):
        for i in range(n):
            for j in range(n):
                work[i, j] = stack[b, i, j]
        out[b] = _det_in_place(work, k, poly, log, alog, use_table)
    return out


@njit(cache=True, nogil=True)
def zeta_in_place(stack, nlabels):
    size = stack.shape[0]
    n = stack.shape[1]
    m = stack.shape[2]
    for bit in range(nlabels):
        step = 1 << bit
        for y in range(size):
            if y & step:
                src = y ^ step
                for i in range(n):
                    for j in range(m):
                        stack[y, i, j] ^= stack[src, i, j]


@njit(cache=True, nogil=True)
def eval_points_table(base, popcnt, rpoints, nlabels, k, poly, log, alog, use_table,
                      class_limit):
    size = base.shape[0]
    n = base.shape[1]
    npts = rpoints.shape[0]
    out = np.empty(npts, np.uint64)
    scratch = np.empty((n, n), np.uint64)
    maxpop = 0
    for s in range(size):
        if popcnt[s] > maxpop:
            maxpop = popcnt[s]
    rpow = np.empty(maxpop + 1, np.uint64)
    if maxpop * size * n * n <= class_limit:
        # subset sums commute with splitting by subset size: transform each
        # size class once, then each point only recombines with r powers
        classes = np.zeros((maxpop, size, n, n), np.uint64)
        for s in range(size):
            if popcnt[s] > 0:
                for i in range(n):
                    for j in range(n):
                        classes[popcnt[s] - 1, s, i, j] = base[s, i, j]
        for cls in range(maxpop):
            zeta_in_place(classes[cls], nlabels)
        for p in range(npts):
            r = rpoints[p]
            rpow[0] = U1
            for j in range(1, maxpop + 1):
                rpow[j] = _mul(rpow[j - 1], r, k, poly, log, alog, use_table)
            acc = U0
            for s in range(size):
                for i in range(n):
                    for j in range(n):
                        v = U0
                        for cls in range(maxpop):
                            bv = classes[cls, s, i, j]
                            if bv != U0:
                                v ^= _mul(
                                    rpow[cls + 1], bv, k, poly, log, alog, use_table
                                )
                        scratch[i, j] = v
                acc ^= _det_in_place(scratch, k, poly, log, alog, use_table)
            out[p] = acc
        return out
    work = np.empty((size, n, n), np.uint64)
    for p in range(npts):
        r = rpoints[p]
        rpow[0] = U1
        for j in range(1, maxpop + 1):
            rpow[j] = _mul(rpow[j - 1], r, k, poly, log, alog, use_table)
        for s in range(size):
            c = rpow[popcnt[s]]
            for i in range(n):
                for j in range(n):
                    work[s, i, j] = _mul(c, base[s, i, j], k, poly, log, alog, use_table)
        zeta_in_place(work, nlabels)
        acc = U0
        for s in range(size):
            for i in range(n):
                for j in range(n):
                    scratch[i, j] = work[s, i, j]
            acc ^= _det_in_place(scratch, k, poly, log, alog, use_table)
        out[p] = acc
    return out


@njit(cache=True, nogil=True)
def pathpoly_table(xmat, v2, v1, k, poly, log, alog, use_table):
    n = xmat.shape[0]
    p2 = v2.shape[0]
    h = v1.shape[0]
    size = 1 << p2
    dp = np.zeros((size, n, h), np.uint64)
    for u in range(n):
        for j in range(h):
            if u != v1[j]:
                dp[0, u, j] = xmat[u, v1[j]]
    for mask in range(1, size):
        for wi in range(p2):
            if mask & (1 << wi):
                sub = mask ^ (1 << wi)
                w = v2[wi]
                for u in range(n):
                    xu = xmat[u, w]
                    if xu != U0:
                        for j in range(h):
                            dv = dp[sub, w, j]
                            if dv != U0:
                                dp[mask, u, j] ^= _mul(
                                    xu, dv, k, poly, log, alog, use_table
                                )
        # a simple path cannot start inside its own interior
        for wi in range(p2):
            if mask & (1 << wi):
                w = v2[wi]
                for j in range(h):
                    dp[mask, w, j] = U0
        for j in range(h):
            dp[mask, v1[j], j] = U0
    return dp


@njit(cache=True, nogil=True)
def eval_points_stream(xmat, xd, v1, v2, cap, rpoints, k, poly, log, alog, use_table):
    h = v1.shape[0]
    p2 = v2.shape[0]
    m = xd.shape[0]
    nlabels = p2 + m
    size = 1 << nlabels
    npts = rpoints.shape[0]
    out = np.empty(npts, np.uint64)
    members = np.empty(p2, np.int64)
    amat = np.empty((p2, p2), np.uint64)
    bmat = np.empty((h, p2), np.uint64)
    cmat = np.empty((p2, h), np.uint64)
    cur = np.empty((h, p2), np.uint64)
    nxt = np.empty((h, p2), np.uint64)
    inner = np.empty((h, h), np.uint64)
    for p in range(npts):
        r = rpoints[p]
        acc = U0
        for y in range(size):
            sz = 0
            for wi in range(p2):
                if y & (1 << wi):
                    members[sz] = v2[wi]
                    sz += 1
            for i in range(h):
                for j in range(h):
                    inner[i, j] = U0
            if sz > 0:
                for i in range(sz):
                    for j in range(sz):
                        amat[i, j] = xmat[members[i], members[j]]
                for i in range(h):
                    for j in range(sz):
                        bmat[i, j] = xmat[v1[i], members[j]]
                        cur[i, j] = bmat[i, j]
                for i in range(sz):
                    for j in range(h):
                        # the closing edge is directed into v1[j]
                        cmat[i, j] = xmat[members[i], v1[j]]
                rl = r
                for step in range(1, cap + 1):
                    # inner += r^step * cur @ cmat, diagonal forced to zero
                    for i in range(h):
                        for j in range(h):
                            if i != j:
                                s = U0
                                for t in range(sz):
                                    s ^= _mul(
                                        cur[i, t], cmat[t, j],
                                        k, poly, log, alog, use_table,
                                    )
                                if s != U0:
                                    inner[i, j] ^= _mul(
                                        rl, s, k, poly, log, alog, use_table
                                    )
                    if step < cap:
                        for i in range(h):
                            for j in range(sz):
                                s = U0
                                for t in range(sz):
                                    s ^= _mul(
                                        cur[i, t], amat[t, j],
                                        k, poly, log, alog, use_table,
                                    )
                                nxt[i, j] = s
                        for i in range(h):
                            for j in range(sz):
                                cur[i, j] = nxt[i, j]
                        rl = _mul(rl, r, k, poly, log, alog, use_table)
            for d in range(m):
                if y & (1 << (p2 + d)):
                    for i in range(h):
                        for j in range(h):
                            v = xd[d, i, j]
                            if v != U0:
                                inner[i, j] ^= _mul(
                                    r, v, k, poly, log, alog, use_table
                                )
            acc ^= _det_in_place(inner, k, poly, log, alog, use_table)
        out[p] = acc
    return out


@njit(cache=True, nogil=True)
def ham_count(nbr):
    n = nbr.shape[0]
    if n < 3:
        return 0
    count = 0
    path = np.empty(n, np.int64)
    cursor = np.zeros(n, np.int64)
    path[0] = 0
    visited = 1
    depth = 0
    while depth >= 0:
        if depth == n - 1:
            if (nbr[path[depth]] & 1) != 0:
                count += 1
            visited ^= 1 << path[depth]
            depth -= 1
            continue
        v = path[depth]
        c = cursor[depth]
        nxt = -1
        while c < n:
            if ((nbr[v] >> c) & 1) != 0 and ((visited >> c) & 1) == 0:
                nxt = c
                break
            c += 1
        if nxt >= 0:
            cursor[depth] = nxt + 1
            depth += 1
            path[depth] = nxt
            cursor[depth] = 0
            visited |= 1 << nxt
        else:
            cursor[depth] = 0
            visited ^= 1 << v
            depth -= 1
    return count


@njit(cache=True, nogil=True)
def held_karp(wmat, inf):
    n = wmat.shape[0]
    if n < 3:
        return -1
    full = 1 << n
    dp = np.full((full, n), inf, np.int64)
    for t in range(1, n):
        if wmat[0, t] < inf:
            dp[1 | (1 << t), t] = wmat[0, t]
    for mask in range(full):
        if mask & 1 == 0:
            continue
        for t in range(1, n):
            if mask & (1 << t) == 0:
                continue
            cur = dp[mask, t]
            if cur >= inf:
                continue
            for u in range(1, n):
                if mask & (1 << u):
                    continue
                w = wmat[t, u]
                if w < inf:
                    nm = mask | (1 << u)
                    tot = cur + w
                    if tot < dp[nm, u]:
                        dp[nm, u] = tot
    best = inf
    for t in range(1, n):
        if dp[full - 1, t] < inf and wmat[t, 0] < inf:
            tot = dp[full - 1, t] + wmat[t, 0]
            if tot < best:
                best = tot
    if best >= inf:
        return -1
    return best


@njit(cache=True, nogil=True)
def inverse_transform(values, g, k, poly, log, alog, use_table):
    nvals = values.shape[0]
    out = np.empty(nvals, np.uint64)
    ginv = _inv(g, k, poly, log, alog, use_table)
    ej = U1  # ginv^j
    for j in range(nvals):
        cur = U1  # ej^l
        acc = U0
        for l in range(nvals):
            v = values[l]
            if v != U0:
                acc ^= _mul(cur, v, k, poly, log, alog, use_table)
            cur = _mul(cur, ej, k, poly, log, alog, use_table)
        out[j] = acc
        ej = _mul(ej, ginv, k, poly, log, alog, use_table)
    return out

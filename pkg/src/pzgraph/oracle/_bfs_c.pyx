# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled twin of ``_bfs_py.bfs_field``; same arguments, same distances."""

import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    cdef i64 q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline void ext_gcd(i64 a, i64 b, i64* g, i64* s, i64* t) nogil:
    cdef i64 old_r = a, r = b, old_s = 1, s_ = 0, old_t = 0, t_ = 1, q, tmp
    while r != 0:
        q = floordiv(old_r, r)
        tmp = old_r - q * r; old_r = r; r = tmp
        tmp = old_s - q * s_; old_s = s_; s_ = tmp
        tmp = old_t - q * t_; old_t = t_; t_ = tmp
    g[0] = old_r
    s[0] = old_s
    t[0] = old_t


cdef inline void n_range(i64 lo, i64 hi, i64 start, i64 step, i64* nmin, i64* nmax) nogil:
    if step > 0:
        nmin[0] = -floordiv(start - lo, step)
        nmax[0] = floordiv(hi - start, step)
    else:
        step = -step
        nmin[0] = -floordiv(hi - start, step)
        nmax[0] = floordiv(start - lo, step)


def bfs_field(long long xa, long long xb, long long M, long long ta=0, long long tb=0,
              bint stop_at_target=False):
    if M <= 0 or M > (1 << 20):
        raise ValueError("window size out of range for the compiled kernel")
    cdef i64 W = 2 * M + 1
    dist_arr = np.full(W * W, -1, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef i64[::1] cur = np.empty(2 * W * W, dtype=np.int64)
    cdef i64[::1] nxt = np.empty(2 * W * W, dtype=np.int64)
    cdef i64[::1] swap
    cdef i64 ncur = 1, nnext, i, a, b, g, s, t, u0, v0, lo, hi, nlo, nhi, n, u, v, idx
    cdef i64 target = (ta + M) * W + tb + M
    cdef int level = 0
    if ta < -M or ta > M or tb < -M or tb > M:
        stop_at_target = False
    dist[(xa + M) * W + xb + M] = 0
    cur[0] = xa
    cur[1] = xb
    with nogil:
        while ncur > 0:
            if stop_at_target and dist[target] >= 0:
                break
            level += 1
            nnext = 0
            for i in range(ncur):
                a = cur[2 * i]
                b = cur[2 * i + 1]
                ext_gcd(a, -b, &g, &s, &t)
                v0 = s * g
                u0 = t * g
                nlo = -(1LL << 62)
                nhi = 1LL << 62
                if a != 0:
                    n_range(-M, M, u0, a, &lo, &hi)
                    if lo > nlo: nlo = lo
                    if hi < nhi: nhi = hi
                elif u0 > M or u0 < -M:
                    continue
                if b != 0:
                    n_range(-M, M, v0, b, &lo, &hi)
                    if lo > nlo: nlo = lo
                    if hi < nhi: nhi = hi
                elif v0 > M or v0 < -M:
                    continue
                n = nlo
                while n <= nhi:
                    u = u0 + n * a
                    v = v0 + n * b
                    if v < 0 or (v == 0 and u < 0):
                        u = -u
                        v = -v
                    idx = (u + M) * W + v + M
                    if dist[idx] < 0:
                        dist[idx] = level
                        nxt[2 * nnext] = u
                        nxt[2 * nnext + 1] = v
                        nnext += 1
                    n += 1
            swap = cur
            cur = nxt
            nxt = swap
            ncur = nnext
    return dist_arr

"""Pure-Python breadth-first search over a bounded window of the distant graph.

The window holds the canonical unimodular pairs with both coordinates in
``[-M, M]``.  Distances are stored in a flat list indexed by
``(a + M) * (2M + 1) + (b + M)``; -1 marks unvisited cells.
"""


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _floor_div_range(lo, hi, start, step):
    """Integers n with lo <= start + n*step <= hi (step != 0), as (n_min, n_max)."""
    if step > 0:
        return -((start - lo) // step), (hi - start) // step
    step = -step
    return -((hi - start) // step), (start - lo) // step


def bounded_neighbors(a, b, M):
    """Canonical neighbours of ``(a, b)`` with both coordinates in ``[-M, M]``."""
    g, s, t = _ext_gcd(a, -b)
    v0, u0 = s * g, t * g  # a*v0 - b*u0 = 1
    n_lo, n_hi = -(1 << 62), 1 << 62
    if a:
        lo, hi = _floor_div_range(-M, M, u0, a)
        n_lo, n_hi = max(n_lo, lo), min(n_hi, hi)
    elif abs(u0) > M:
        return []
    if b:
        lo, hi = _floor_div_range(-M, M, v0, b)
        n_lo, n_hi = max(n_lo, lo), min(n_hi, hi)
    elif abs(v0) > M:
        return []
    out = []
    for n in range(n_lo, n_hi + 1):
        u, v = u0 + n * a, v0 + n * b
        if v < 0 or (v == 0 and u < 0):
            u, v = -u, -v
        out.append((u, v))
    return out


def bfs_field(xa, xb, M, ta=0, tb=0, stop_at_target=False):
    """Layered BFS from ``(xa, xb)``; returns the flat distance list.

    With ``stop_at_target`` the search ends once the layer containing the
    target ``(ta, tb)`` is complete, so every distance up to the target's is
    final.
    """
    W = 2 * M + 1
    dist = [-1] * (W * W)
    dist[(xa + M) * W + xb + M] = 0
    target = (ta + M) * W + tb + M
    if max(abs(ta), abs(tb)) > M:
        stop_at_target = False
    frontier = [(xa, xb)]
    level = 0
    while frontier:
        if stop_at_target and dist[target] >= 0:
            break
        level += 1
        nxt = []
        for a, b in frontier:
            for u, v in bounded_neighbors(a, b, M):
                i = (u + M) * W + v + M
                if dist[i] < 0:
                    dist[i] = level
                    nxt.append((u, v))
        frontier = nxt
    return dist

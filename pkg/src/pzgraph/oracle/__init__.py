"""Ground truth by brute force: breadth-first search in a bounded window.

Nothing here uses the transition algorithm.  Neighbours are generated from
the extended Euclidean algorithm and clipped to the window, and geodesics are
recovered by walking back through the BFS layers.

The layer computation runs in a compiled kernel when the extension is built
and falls back to pure Python otherwise; ``KERNEL`` names the one in use.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from ..core import DistantGraphError, ProjPoint, is_distant, point
from . import _bfs_py

try:
    if os.environ.get("PZGRAPH_PURE_PYTHON"):
        raise ImportError
    from . import _bfs_c as _kernel

    KERNEL = "cython"
except ImportError:  # extension not built
    _kernel = _bfs_py
    KERNEL = "python"

bounded_neighbors = _bfs_py.bounded_neighbors


class OutOfBound(DistantGraphError):
    pass


class Unreachable(DistantGraphError):
    pass


def default_bound(x, y) -> int:
    return max(64, 4 * max(abs(x[0]), abs(x[1]), abs(y[0]), abs(y[1])))


@dataclass(frozen=True)
class BoundedGraphView:
    bound: int

    def __contains__(self, p) -> bool:
        return max(abs(p[0]), abs(p[1])) <= self.bound

    def neighbors(self, p) -> list[ProjPoint]:
        return [ProjPoint(u, v) for u, v in bounded_neighbors(p[0], p[1], self.bound)]

    def vertices(self):
        M = self.bound
        for a in range(-M, M + 1):
            for b in range(0, M + 1):
                if (b > 0 or a == 1) and gcd(a, b) == 1:
                    yield ProjPoint(a, b)


class _Field:
    """Distances from one source, final up to the target's layer."""

    def __init__(self, x: ProjPoint, y: ProjPoint, M: int, kernel=None):
        kernel = kernel or _kernel
        self.M = M
        self.W = 2 * M + 1
        self.dist = kernel.bfs_field(x[0], x[1], M, y[0], y[1], True)

    def __getitem__(self, p) -> int:
        return int(self.dist[(p[0] + self.M) * self.W + p[1] + self.M])


def _check(x, y, M):
    x, y = point(x), point(y)
    view = BoundedGraphView(M)
    if x not in view or y not in view:
        raise OutOfBound(f"{x} or {y} lies outside the window of size {M}")
    return x, y, view


@lru_cache(maxsize=4)
def _field(x: ProjPoint, y: ProjPoint, M: int) -> _Field:
    return _Field(x, y, M)


def bfs_distance(x, y, M: int | None = None) -> int:
    if M is None:
        M = default_bound(x, y)
    x, y, _ = _check(x, y, M)
    d = _field(x, y, M)[y]
    if d < 0:
        raise Unreachable(f"{y} is not reachable from {x} inside the window {M}")
    return d


def _predecessors(field: _Field, view: BoundedGraphView, v):
    d = field[v]
    return [w for w in view.neighbors(v) if field[w] == d - 1]


def geodesic_dag(x, y, M: int | None = None) -> dict[ProjPoint, list[ProjPoint]]:
    """Map each vertex lying on some geodesic to its predecessors (sorted)."""
    if M is None:
        M = default_bound(x, y)
    x, y, view = _check(x, y, M)
    field = _field(x, y, M)
    if field[y] < 0:
        raise Unreachable(f"{y} is not reachable from {x} inside the window {M}")
    dag: dict[ProjPoint, list[ProjPoint]] = {}
    stack = [y]
    while stack:
        v = stack.pop()
        if v in dag:
            continue
        preds = sorted(_predecessors(field, view, v)) if v != x else []
        dag[v] = preds
        stack.extend(preds)
    return dag


def bfs_geodesic_count(x, y, M: int | None = None) -> int:
    x, y = point(x), point(y)
    dag = geodesic_dag(x, y, M)

    @lru_cache(maxsize=None)
    def count(v):
        return 1 if v == x else sum(count(w) for w in dag[v])

    return count(y)


def bfs_geodesics(x, y, M: int | None = None) -> list[list[ProjPoint]]:
    """All shortest paths inside the window, in lexicographic vertex order."""
    x, y = point(x), point(y)
    dag = geodesic_dag(x, y, M)
    out = []

    def back(suffix):
        v = suffix[-1]
        if v == x:
            out.append(suffix[::-1])
            return
        for w in dag[v]:
            back(suffix + [w])

    back([y])
    return sorted(out)


def geodesic_vertices(x, y, M: int | None = None) -> set[ProjPoint]:
    return set(geodesic_dag(x, y, M))


__all__ = [
    "KERNEL",
    "BoundedGraphView",
    "OutOfBound",
    "Unreachable",
    "bfs_distance",
    "bfs_geodesic_count",
    "bfs_geodesics",
    "bounded_neighbors",
    "default_bound",
    "geodesic_dag",
    "geodesic_vertices",
    "is_distant",
]

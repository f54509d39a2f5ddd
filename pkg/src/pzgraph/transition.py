"""The transition algorithm between two non-adjacent points, and its graphs.

Representatives ``x`` and ``y`` are fixed with ``det[x, y] > 0``.  Every
vector ``c`` with ``det[x, c] = 1`` then lies in the upper half plane with
respect to the axes ``x`` and ``y``; the sign of ``det[c, y]`` tells the first
quadrant (positive) from the second (negative).  The algorithm starts from the
unique consecutive pair ``c_n0, c_n0 - x`` straddling ``y`` and repeatedly adds
the two current vectors, keeping the sum on its own side, until the sum is
``y``.

The side that receives the first sum is called the *e* side (orientation
``TR`` when that is the first quadrant, ``TL`` otherwise); run lengths on the
e side are the coefficients ``a``, on the f side ``b``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .core import (
    IVec2,
    ProjPoint,
    TrivialPair,
    det2,
    is_distant,
    neighbor_seed,
    point,
)

TR = "TR"
TL = "TL"


@dataclass(frozen=True)
class TransitionData:
    x: ProjPoint
    y: ProjPoint
    orientation: str
    e_seq: tuple[ProjPoint, ...]
    f_seq: tuple[ProjPoint, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    A: tuple[int, ...]  # A_0 .. A_{r+1}
    B: tuple[int, ...]  # B_0 .. B_{l+1}
    r: int
    l: int
    # signed lifts, with det[x_vec, y_vec] > 0
    x_vec: IVec2 = field(repr=False, compare=False)
    y_vec: IVec2 = field(repr=False, compare=False)
    e_vecs: tuple[IVec2, ...] = field(repr=False, compare=False)
    f_vecs: tuple[IVec2, ...] = field(repr=False, compare=False)

    def e(self, k: int) -> ProjPoint:
        """``e_k`` with 1-based indexing; index ``A_{r+1}`` is ``y``."""
        return self.y if k == len(self.e_seq) + 1 else self.e_seq[k - 1]

    def f(self, k: int) -> ProjPoint:
        return self.y if k == len(self.f_seq) + 1 else self.f_seq[k - 1]

    def e_corner(self, k: int) -> ProjPoint:
        return self.e(self.A[k])

    def f_corner(self, k: int) -> ProjPoint:
        return self.f(self.B[k])

    @property
    def e_corners(self) -> tuple[ProjPoint, ...]:
        return tuple(self.e_corner(k) for k in range(self.r + 1))

    @property
    def f_corners(self) -> tuple[ProjPoint, ...]:
        return tuple(self.f_corner(k) for k in range(self.l + 1))

    @property
    def d_a(self) -> int:
        return 1 + self.A[self.r]

    @property
    def d_b(self) -> int:
        return 1 + self.B[self.l]

    @property
    def coefficients(self) -> tuple[int, ...]:
        """The interleaved sequence ``(a_1, b_1, a_2, b_2, ...)``."""
        c = []
        for k in range(self.r):
            c.append(self.a[k])
            if k < self.l:
                c.append(self.b[k])
        return tuple(c)

    def to_dict(self) -> dict:
        return {
            "x": str(self.x),
            "y": str(self.y),
            "orientation": self.orientation,
            "e_seq": [str(p) for p in self.e_seq],
            "f_seq": [str(p) for p in self.f_seq],
            "a": list(self.a),
            "b": list(self.b),
            "A": list(self.A),
            "B": list(self.B),
            "r": self.r,
            "l": self.l,
        }


def _partial_sums(coeffs) -> tuple[int, ...]:
    out = [1]
    for c in coeffs:
        out.append(out[-1] + c)
    out.append(out[-1] + 1)
    return tuple(out)


def transition(x, y) -> TransitionData:
    x, y = point(x), point(y)
    if x == y or is_distant(x, y):
        raise TrivialPair(f"{x} and {y} are equal or adjacent")
    xv, yv = IVec2(*x), IVec2(*y)
    D = det2(xv, yv)
    if D < 0:
        yv, D = -yv, -D

    c0 = neighbor_seed(x)
    # det[c0 - n*x, y] = det[c0, y] - n*D; pick the last n with a positive value
    n0 = (det2(c0, yv) - 1) // D
    first = c0 - xv.scale(n0)
    second = first - xv

    g2 = first + second
    if g2 == yv or det2(g2, yv) > 0:
        orientation, e, f = TR, first, second
    else:
        orientation, e, f = TL, second, first
    e_side = det2(e, yv) > 0

    e_vecs, f_vecs = [e], [f]
    runs: list[list] = []
    while True:
        s = e + f
        if s == yv:
            break
        if (det2(s, yv) > 0) == e_side:
            e = s
            e_vecs.append(s)
            tag = "e"
        else:
            f = s
            f_vecs.append(s)
            tag = "f"
        if runs and runs[-1][0] == tag:
            runs[-1][1] += 1
        else:
            runs.append([tag, 1])

    a = tuple(n for tag, n in runs if tag == "e")
    b = tuple(n for tag, n in runs if tag == "f")
    return TransitionData(
        x=x,
        y=y,
        orientation=orientation,
        e_seq=tuple(point(v) for v in e_vecs),
        f_seq=tuple(point(v) for v in f_vecs),
        a=a,
        b=b,
        A=_partial_sums(a),
        B=_partial_sums(b),
        r=len(a),
        l=len(b),
        x_vec=xv,
        y_vec=yv,
        e_vecs=tuple(e_vecs),
        f_vecs=tuple(f_vecs),
    )


def realize(x, a, b) -> ProjPoint:
    """Find ``y`` whose transition from ``x`` has coefficients ``a`` and ``b``.

    ``len(a) - len(b)`` must be 0 or 1 and every coefficient positive.  The
    runs are played forward from ``x`` and ``y`` closes the last triangle.
    """
    a, b = list(a), list(b)
    if len(a) - len(b) not in (0, 1) or any(c < 1 for c in a + b):
        raise ValueError("need positive coefficients with len(a) - len(b) in {0, 1}")
    x = point(x)
    f = neighbor_seed(x)
    e = f + IVec2(*x)
    for k in range(len(a)):
        for _ in range(a[k]):
            e = e + f
        if k < len(b):
            for _ in range(b[k]):
                f = f + e
    return point(e + f)


@dataclass(frozen=True)
class KleinGraph:
    vertices: tuple[ProjPoint, ...]
    edges: frozenset[frozenset[ProjPoint]]
    corners: frozenset[ProjPoint] = frozenset()

    def adjacency(self) -> dict[ProjPoint, list[ProjPoint]]:
        adj: dict[ProjPoint, list[ProjPoint]] = {v: [] for v in self.vertices}
        order = {v: i for i, v in enumerate(self.vertices)}
        for edge in self.edges:
            p, q = tuple(edge)
            adj[p].append(q)
            adj[q].append(p)
        for v in adj:
            adj[v].sort(key=order.__getitem__)
        return adj

    def has_edge(self, p, q) -> bool:
        return frozenset((point(p), point(q))) in self.edges

    def sorted_edges(self) -> list[tuple[ProjPoint, ProjPoint]]:
        order = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=order.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda pq: (order[pq[0]], order[pq[1]]))

    def to_dot(self, name: str = "klein") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            attr = ", corner=true, style=filled" if v in self.corners else ""
            lines.append(f'  "{v}" [label="{v}"{attr}];')
        for p, q in self.sorted_edges():
            lines.append(f'  "{p}" -- "{q}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "corners": [str(v) for v in self.vertices if v in self.corners],
            "edges": [[str(p), str(q)] for p, q in self.sorted_edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


CornerGraph = KleinGraph


def _induced(vertices) -> frozenset:
    return frozenset(
        frozenset((p, q)) for p, q in combinations(vertices, 2) if is_distant(p, q)
    )


def corner_vertices(td: TransitionData) -> frozenset[ProjPoint]:
    return frozenset(td.e_corners + td.f_corners)


def klein_graph(td: TransitionData) -> KleinGraph:
    seen: dict[ProjPoint, None] = {}
    for v in (td.x, *td.e_seq, *td.f_seq, td.y):
        seen.setdefault(v)
    vertices = tuple(seen)
    return KleinGraph(vertices, _induced(vertices), corner_vertices(td))


def corner_graph(kg: KleinGraph, td: TransitionData) -> CornerGraph:
    keep = corner_vertices(td) | {td.x, td.y}
    vertices = tuple(v for v in kg.vertices if v in keep)
    edges = frozenset(e for e in kg.edges if e <= keep)
    return KleinGraph(vertices, edges, corner_vertices(td))


def _ray_end(v: IVec2, bound: int) -> IVec2 | None:
    k = bound // max(abs(v.u), abs(v.v))
    return v.scale(k) if k >= 2 else None


def sails(x, y, bound: int | None = None) -> list[list[IVec2]]:
    """Boundary polylines of the four quadrants cut out by the lines of ``x`` and ``y``.

    Each polyline lists every lattice point of the sail from the ``x`` line to
    the ``y`` line, extended along both lines to the clipping ``bound``
    (default: ten times the largest endpoint coordinate).  Quadrants are the
    cones over ``(x, y)``, ``(-x, y)``, ``(-x, -y)`` and ``(x, -y)`` with
    ``det[x, y] > 0``.
    """
    x, y = point(x), point(y)
    if x == y:
        raise TrivialPair("sails need two distinct points")
    xv, yv = IVec2(*x), IVec2(*y)
    if det2(xv, yv) < 0:
        yv = -yv
    if bound is None:
        bound = 10 * max(abs(xv.u), abs(xv.v), abs(yv.u), abs(yv.v))

    if is_distant(x, y):
        q1, q2 = [], []
    else:
        td = transition(x, y)
        pts = list(td.e_vecs) + list(td.f_vecs)
        q1 = [v for v in pts if det2(v, yv) > 0]
        q2 = [v for v in pts if det2(v, yv) < 0]
        # along each sail the coordinate on the y axis grows monotonically
        q1.sort(key=lambda v: det2(xv, v))
        q2.sort(key=lambda v: det2(xv, v))

    def polyline(start: IVec2, middle, end: IVec2) -> list[IVec2]:
        line = [start, *middle, end]
        head, tail = _ray_end(start, bound), _ray_end(end, bound)
        if head is not None:
            line.insert(0, head)
        if tail is not None:
            line.append(tail)
        return line

    return [
        polyline(xv, q1, yv),
        polyline(-xv, q2, yv),
        polyline(-xv, [-v for v in q1], -yv),
        polyline(xv, [-v for v in q2], -yv),
    ]


def sails_svg(x, y, bound: int | None = None, size: int = 400) -> str:
    """Minimal standalone SVG of the four sails and the two axis lines."""
    lines = sails(x, y, bound)
    extent = max(max(abs(p.u), abs(p.v)) for line in lines for p in line)
    scale = (size / 2 - 10) / extent
    c = size / 2

    def xy(p) -> tuple[float, float]:
        return c + p[0] * scale, c - p[1] * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    xv, yv = IVec2(*point(x)), IVec2(*point(y))
    for v in (xv, yv):
        k = extent / max(abs(v.u), abs(v.v))
        (x0, y0), (x1, y1) = xy((-k * v.u, -k * v.v)), xy((k * v.u, k * v.v))
        out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" stroke="gray"/>')
    for line in lines:
        pts = " ".join("%.2f,%.2f" % xy(p) for p in line)
        out.append(f'<polyline points="{pts}" fill="none" stroke="black"/>')
        for p in line:
            px, py = xy(p)
            out.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Shortest, consistent and standard paths in the distant graph.

Corner vertices are written ``E_k = e_{A_k}`` (right side) and ``F_k =
f_{B_k}`` (left side).  The standard path zig-zags ``x, F_0, E_1, F_1, ...``
through all corners; a coefficient equal to one lets a walk stay on its side
and skip a corner, which is where every saving comes from.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import product

from .core import (
    DistantGraphError,
    IVec2,
    ProjPoint,
    TrivialPair,
    cone_sign,
    is_distant,
    neighbor_seed,
    point,
)
from .transition import TransitionData, klein_graph, realize, transition


class InvalidSplit(DistantGraphError):
    pass


@dataclass(frozen=True)
class Path:
    vertices: tuple[ProjPoint, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(set(vs)) != len(vs):
            raise ValueError("a path may not repeat a vertex")
        for p, q in zip(vs, vs[1:]):
            if not is_distant(p, q):
                raise ValueError(f"{p} and {q} are not adjacent")

    def __len__(self) -> int:
        return len(self.vertices) - 1

    def __iter__(self):
        return iter(self.vertices)

    def to_list(self) -> list[str]:
        return [str(v) for v in self.vertices]

    def to_json(self) -> str:
        return json.dumps(self.to_list())


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[ProjPoint, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError("a cycle needs at least three distinct vertices")
        for p, q in zip(vs, vs[1:] + vs[:1]):
            if not is_distant(p, q):
                raise ValueError(f"{p} and {q} are not adjacent")

    def __len__(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {"vertices": [str(v) for v in self.vertices], "closed": True}


def _path(*vertices) -> Path:
    return Path(tuple(vertices))


def consistent_paths(td: TransitionData) -> tuple[Path, Path]:
    """The unique shortest consistent path on each side (lengths ``d_a``, ``d_b``)."""
    return _path(td.x, *td.e_seq, td.y), _path(td.x, *td.f_seq, td.y)


def is_consistent(path, x, y) -> bool:
    inner = list(path)[1:-1]
    return all(cone_sign(x, y, inner[0], v) > 0 for v in inner[1:])


def standard_path(td: TransitionData) -> Path:
    r, l = td.r, td.l
    vs = [td.x, td.f_corner(0)]
    for k in range(1, l + 1):
        vs.append(td.e_corner(k))
        if k < l or r == l + 1:
            vs.append(td.f_corner(k))
    vs.append(td.y)
    return _path(*vs)


@dataclass(frozen=True)
class ShorteningAnalysis:
    s: tuple[int, ...]  # s_1 .. s_l
    t: tuple[int, ...]
    a_tilde: tuple[int, ...]
    b_tilde: tuple[int, ...]
    D: frozenset[int]

    def summand(self, k: int) -> int:
        """``floor((floor(1/a~_k) + floor(1/b~_k)) / 2 + 1/2)``, i.e. 1 iff either is 1."""
        ones = (self.a_tilde[k - 1] == 1) + (self.b_tilde[k - 1] == 1)
        return (ones + 1) // 2

    @property
    def saving(self) -> int:
        return sum(self.summand(k) for k in self.D)


def _trailing_ones(ext: list[int], k: int, floor: int) -> int:
    """Length of the run of ones ending at ``ext[k - 1]`` and not passing below ``floor``."""
    j = 0
    while k - 1 - j >= floor and ext[k - 1 - j] == 1:
        j += 1
    return j


def shortening(td: TransitionData) -> ShorteningAnalysis:
    """Per-index data deciding which ones shorten the standard path.

    The walk always starts at ``F_0`` and never visits ``E_0``, so the run of
    ones counted in ``s_k`` may reach the sentinel ``b_0`` while the one in
    ``t_k`` stops at ``a_1``.  With that convention ``s_k <= t_k`` holds
    exactly when the walk reaches ``E_{k-1}``.
    """
    r, l = td.r, td.l
    if l == 0:
        raise TrivialPair("shortening analysis needs l > 0")
    ext_a = [1, *td.a, 1]
    ext_b = [1, *td.b, 1]
    s = tuple(_trailing_ones(ext_b, k, 0) for k in range(1, l + 1))
    t = tuple(_trailing_ones(ext_a, k, 1) for k in range(1, l + 1))
    a_tilde = tuple(max(ext_a[k], 2) if k == 1 else ext_a[k] for k in range(1, l + 1))
    if r == l:
        b_tilde = tuple(max(ext_b[k], 2) if k == l else ext_b[k] for k in range(1, l + 1))
    else:
        b_tilde = tuple(ext_b[1 : l + 1])
    D = frozenset(
        k
        for k in range(1, l + 1)
        if not (b_tilde[k - 1] > 1 and ext_a[k] == 1 and s[k - 1] > t[k - 1])
    )
    return ShorteningAnalysis(s, t, a_tilde, b_tilde, D)


def distance_from_transition(td: TransitionData) -> int:
    if td.l == 0:
        return 2
    return td.r + td.l + 1 - shortening(td).saving


def distance(x, y) -> int:
    x, y = point(x), point(y)
    if x == y:
        return 0
    if is_distant(x, y):
        return 1
    return distance_from_transition(transition(x, y))


def _walk(td: TransitionData, start: tuple[str, int]) -> list[ProjPoint]:
    """Follow the shortcut recipe from a corner until ``y``."""
    r, l = td.r, td.l
    ext_a = [1, *td.a, 1]
    ext_b = [1, *td.b, 1]
    side, k = start
    out = []
    while True:
        out.append(td.e_corner(k) if side == "E" else td.f_corner(k))
        if (side, k) in (("E", r), ("F", l)):
            break
        if side == "E":
            side, k = ("E", k + 1) if ext_a[k + 1] == 1 else ("F", k)
        else:
            side, k = ("F", k + 1) if ext_b[k + 1] == 1 else ("E", k + 1)
    return out + [td.y]


def standard_shortest_path(td: TransitionData) -> Path:
    """Walk the standard path, staying on one side while the coefficients met are 1.

    At ``E_k`` the coefficient met is ``a_{k+1}``, at ``F_k`` it is ``b_{k+1}``.
    """
    return _path(td.x, *_walk(td, ("F", 0)))


def is_unique_shortest(td: TransitionData) -> bool:
    """True when exactly one shortest path joins the endpoints.

    Non-uniqueness comes from overlapping blocks of ones in the two
    coefficient sequences, from an all-ones configuration with ``r == l``,
    or from a well placed 2.
    """
    r, l = td.r, td.l
    if l == 0:
        return r == 1
    if all(c == 1 for c in td.a + td.b):
        return r != l
    if _blocks_overlap(td.a, td.b, r, l):
        return False
    return not _split_by_two(td)


def _one_blocks(ext: list[int]) -> list[tuple[int, int]]:
    """Maximal runs ``(i, j)`` with ``ext[i..j]`` all equal to one."""
    out = []
    i, n = 0, len(ext)
    while i < n:
        if ext[i] != 1:
            i += 1
            continue
        j = i
        while j + 1 < n and ext[j + 1] == 1:
            j += 1
        out.append((i, j))
        i = j + 1
    return out


def _blocks_overlap(a, b, r: int, l: int) -> bool:
    ext_a = [1, *a, 1]
    ext_b = [1, *b, 1]
    for (l1, l2), (r1, r2) in product(_one_blocks(ext_b), _one_blocks(ext_a)):
        if l1 < r1 <= l2 + 1 <= r2 and (r != l + 1 or l2 < l + 1):
            return True
        if l1 < r1 <= l2 == r2 == r + 1 == l + 1:
            return True
        if 0 == r1 == l1 <= l2 < r2:
            return True
        if r1 <= l1 <= r2 <= l2 and l1 != 0 and (r != l or r2 < r + 1):
            return True
        if r1 <= l1 <= l2 < r2 == r + 1 and r == l + 1:
            return True
    return False


def _split_by_two(td: TransitionData) -> bool:
    l = td.l
    ext_a = [1, *td.a, 1]
    ext_b = [1, *td.b, 1]
    if ext_b[1] == 2 and ext_a[2] > 1:
        return True
    sa = shortening(td)
    for k in range(2, l + 1):
        if ext_b[k] == 2 and ext_a[k] > 1 and ext_a[k + 1] > 1:
            return True
        if ext_a[k] == 2 and ext_b[k] > 1 and sa.s[k - 1] <= sa.t[k - 1]:
            return True
    return False


def _side_key(td: TransitionData):
    rank = {td.x: (0, 0), td.y: (2, 0)}
    for i, v in enumerate(td.f_seq):
        rank.setdefault(v, (1, 2 * i))
    for i, v in enumerate(td.e_seq):
        rank.setdefault(v, (1, 2 * i + 1))
    return lambda path: [rank[v] for v in path.vertices]


def all_shortest_paths(x, y) -> list[Path]:
    """Every geodesic from ``x`` to ``y``, found inside the Klein graph.

    Paths are ordered by their side choices, the left (f) side first.
    """
    x, y = point(x), point(y)
    if x == y:
        raise TrivialPair("endpoints coincide")
    if is_distant(x, y):
        return [_path(x, y)]
    td = transition(x, y)
    adj = klein_graph(td).adjacency()

    dist = {y: 0}
    queue = deque([y])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)

    out: list[Path] = []

    def extend(prefix: list[ProjPoint]):
        v = prefix[-1]
        if v == y:
            out.append(Path(tuple(prefix)))
            return
        for w in adj[v]:
            if dist[w] == dist[v] - 1:
                prefix.append(w)
                extend(prefix)
                prefix.pop()

    extend([x])
    return sorted(out, key=_side_key(td))


def count_shortest_paths(x, y) -> int:
    """Number of geodesics, counted without listing them."""
    x, y = point(x), point(y)
    if x == y or is_distant(x, y):
        return 1
    adj = klein_graph(transition(x, y)).adjacency()
    dist = {x: 0}
    count = {x: 1}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                count[w] = 0
                queue.append(w)
            if dist[w] == dist[v] + 1:
                count[w] += count[v]
    return count[y]


def hamiltonian_cycle(x, d_a: int, d_b: int) -> Cycle:
    """A cycle through ``x`` made of two consistent paths of lengths ``d_a`` and ``d_b``.

    For ``d_a, d_b >= 2`` the far endpoint ``y`` is chosen so that these are
    exactly the two consistent distances from ``x``; a part of length 1 makes
    ``y`` adjacent to ``x`` and the other part a fan around ``y``.
    """
    if d_a < 1 or d_b < 1 or d_a + d_b <= 2:
        raise InvalidSplit(f"cannot split a cycle of length {d_a + d_b} as {d_a} + {d_b}")
    x = point(x)
    if min(d_a, d_b) == 1:
        y = point(neighbor_seed(x))
        xv, yv = IVec2(*x), IVec2(*neighbor_seed(x))
        fan = [point(xv + yv.scale(j)) for j in range(1, max(d_a, d_b))]
        long_side = [x, *fan, y]
        cycle = long_side if d_a > 1 else [x, y, *reversed(fan)]
        return Cycle(tuple(cycle))

    sa, sb = d_a - 2, d_b - 2
    if sa - sb in (0, 1) or sb - sa in (0, 1):
        # runs of single steps, alternating sides
        swap = sa < sb
        a, b = [1] * max(sa, sb), [1] * min(sa, sb)
    else:
        swap = d_a < d_b
        big, small = max(d_a, d_b), min(d_a, d_b)
        a, b = [big - 2], ([small - 2] if small > 2 else [])
    td = transition(x, realize(x, a, b))
    first, second = (td.f_seq, td.e_seq) if swap else (td.e_seq, td.f_seq)
    return Cycle((x, *first, td.y, *reversed(second)))

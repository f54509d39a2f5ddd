"""Points of the projective line over the integers and the distant relation.

A point is the cyclic module generated by a unimodular pair ``(a, b)``.  It is
stored through one fixed representative: ``b > 0``, or ``b == 0`` and
``a == 1``.  Two points are *distant* (adjacent in the distant graph) when the
2x2 matrix of their representatives has determinant +1 or -1.

Python integers are arbitrary precision, so no overflow handling is needed.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, NamedTuple


class DistantGraphError(ValueError):
    """Base class for domain errors raised by this package."""


class ZeroVector(DistantGraphError):
    pass


class NonUnimodular(DistantGraphError):
    pass


class DegenerateArguments(DistantGraphError):
    pass


class NotDistant(DistantGraphError):
    pass


class TrivialPair(DistantGraphError):
    """Raised when an operation needs two distinct, non-adjacent points."""


class IVec2(NamedTuple):
    u: int
    v: int

    def __add__(self, other):  # type: ignore[override]
        return IVec2(self.u + other[0], self.v + other[1])

    def __sub__(self, other):
        return IVec2(self.u - other[0], self.v - other[1])

    def __neg__(self):
        return IVec2(-self.u, -self.v)

    def scale(self, k: int) -> "IVec2":
        return IVec2(k * self.u, k * self.v)


class ProjPoint(NamedTuple):
    """Canonical representative of a point of P(Z).

    Build instances with :func:`canonicalize` (or :func:`parse_point`); the
    constructor itself does not check the invariants.
    """

    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a}:{self.b}"


def canonicalize(a: int, b: int) -> ProjPoint:
    """Return the canonical representative of ``Z(a, b)``.

    >>> canonicalize(-1, 0)
    ProjPoint(a=1, b=0)
    >>> canonicalize(3, -4)
    ProjPoint(a=-3, b=4)
    """
    a, b = int(a), int(b)
    if a == 0 and b == 0:
        raise ZeroVector("(0, 0) does not represent a point")
    if gcd(a, b) != 1:
        raise NonUnimodular(f"({a}, {b}) is not a unimodular pair")
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    return ProjPoint(a, b)


def point(v) -> ProjPoint:
    """Canonicalize anything indexable as a pair."""
    return canonicalize(v[0], v[1])


def parse_point(text: str) -> ProjPoint:
    """Parse the ``a:b`` syntax used on the command line."""
    parts = text.strip().split(":")
    if len(parts) != 2:
        raise ValueError(f"expected a point written as a:b, got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected integer coordinates in {text!r}") from None
    return canonicalize(a, b)


def det2(u, v) -> int:
    """Determinant of the matrix with columns ``u`` and ``v``."""
    return u[0] * v[1] - u[1] * v[0]


def is_distant(p, q) -> bool:
    return abs(det2(p, q)) == 1


def neighbor_seed(p) -> IVec2:
    """The solution ``c`` of ``det[p, c] = 1`` used to start the neighbour sequence.

    For ``a != 0`` the first coordinate is reduced into ``[0, |a|)``; for the
    axis point ``(0, 1)`` the second coordinate is reduced to 0.
    """
    a, b = p
    if a == 0:
        # det[(0, b), (u, v)] = -b*u = 1 with b = +-1
        return IVec2(-b, 0)
    g, s, t = _ext_gcd(a, -b)  # s*a + t*(-b) = g = +-1
    v, u = s * g, t * g  # a*v - b*u = 1
    shift, u = divmod(u, abs(a))
    # c_n = c_0 - n*p moves u by -n*a; undo the reduction consistently on v
    n = shift if a > 0 else -shift
    v -= n * b
    return IVec2(u, v)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b)`` up to sign."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


class NeighborSequence(NamedTuple):
    """The bi-infinite sequence ``c_n = seed + n*step`` of vectors with ``det[base, c_n] = 1``."""

    base: ProjPoint
    seed: IVec2
    step: IVec2

    def vector(self, n: int) -> IVec2:
        return self.seed + self.step.scale(n)

    def __getitem__(self, n: int) -> ProjPoint:
        return point(self.vector(n))


def neighbor_sequence(p: ProjPoint) -> NeighborSequence:
    return NeighborSequence(p, neighbor_seed(p), IVec2(-p[0], -p[1]))


def neighbors(p: ProjPoint, window: Iterable[int]) -> list[ProjPoint]:
    """Points ``c_n`` adjacent to ``p`` for ``n`` in ``window``.

    Consecutive members of the sequence form a triangle together with ``p``.
    """
    seq = neighbor_sequence(p)
    return [seq[n] for n in window]


def cone_coordinates(x, y, u) -> tuple[int, int, int]:
    """Integer numerators and denominator of ``u`` in the basis ``(x, y)``.

    ``u * denom == alpha_num * x + beta_num * y``.
    """
    return det2(u, y), det2(x, u), det2(x, y)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def cone_class(x, y, u) -> int:
    """+1 if ``u`` projects from the cone ``{s*x + t*y : s*t > 0}``, else -1."""
    alpha, beta, _ = cone_coordinates(x, y, u)
    s = _sign(alpha) * _sign(beta)
    if s == 0:
        raise DegenerateArguments(f"{u} lies on the line of {x} or {y}")
    return s


def cone_sign(x, y, u, v) -> int:
    """+1 if ``u`` and ``v`` fall in the same class of the cone relation of ``{x, y}``.

    The two classes are the projections of the open cones ``s*x + t*y`` with
    ``s*t > 0`` and ``s*t < 0``.  Only integer determinants are used, and every
    vector enters an even number of times, so the answer does not depend on
    the chosen representatives.
    """
    if det2(x, y) == 0:
        raise DegenerateArguments("x and y must be distinct points")
    return cone_class(x, y, u) * cone_class(x, y, v)


def maximal_cliques(p: ProjPoint, q: ProjPoint) -> tuple[tuple[ProjPoint, ...], tuple[ProjPoint, ...]]:
    """The two triangles of the distant graph containing the edge ``{p, q}``."""
    if not is_distant(p, q):
        raise NotDistant(f"{p} and {q} are not distant")
    s = point((p[0] + q[0], p[1] + q[1]))
    d = point((p[0] - q[0], p[1] - q[1]))
    return (p, q, s), (p, q, d)
